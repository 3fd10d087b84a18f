#include "context.hpp"

namespace eqnorm::cli {

namespace {

std::vector<std::string> generator_cycles(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<std::string> out;
  for (Element e : gens) out.push_back(g.element(e).to_cycle_string());
  return out;
}

std::string tuple(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

int cmd_group_list(Context& c, std::ostream& out) {
  Json arr = Json::array();
  std::vector<std::vector<std::string>> rows{{"name", "order", "degree", "generators"}};
  for (const auto& name : group_preset_names()) {
    GroupPtr g = preset_group(name);
    std::vector<std::string> gens;
    for (const auto& p : g->generators()) gens.push_back(p.to_cycle_string());
    rows.push_back({name, std::to_string(g->order()), std::to_string(g->degree()), join(gens, " ")});
    arr.push_back({{"name", name}, {"order", g->order()}, {"degree", g->degree()}, {"generators", gens}});
  }
  Json aliases = Json::object();
  for (const char* a : {"Cp", "Cp2", "Cp3"}) aliases[a] = canonical_group_preset(a);
  if (c.opts().json) {
    out << dump(Json{{"groups", arr}, {"aliases", aliases}});
  } else {
    out << format_table(rows);
    out << "aliases: Cp = C3, Cp2 = C9, Cp3 = C27\n";
  }
  return kOk;
}

int cmd_group_subgroups(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const SubgroupLattice& lat = *g.lattice;
  const FiniteGroup& grp = *g.group;
  if (c.opts().json) {
    Json subs = Json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      SubgroupId id{static_cast<std::uint32_t>(i)};
      auto m = lat.members(id);
      subs.push_back({{"id", i},
                      {"name", lat.name(id)},
                      {"label", lat.label(id)},
                      {"order", lat.order(id)},
                      {"class", lat.class_index(id)},
                      {"normal", lat.is_normal(id)},
                      {"members", std::vector<Element>(m.begin(), m.end())},
                      {"generators", generator_cycles(grp, lat.generators(id))}});
    }
    Json classes = Json::array();
    for (const auto& cl : lat.classes()) {
      Json ids = Json::array();
      for (SubgroupId s : cl) ids.push_back(lat.name(s));
      classes.push_back(ids);
    }
    out << dump(Json{{"group", group_to_json(grp)}, {"order", grp.order()}, {"subgroups", subs},
                     {"classes", classes}});
    return kOk;
  }
  out << "group " << grp.name() << ", order " << grp.order() << ": " << lat.size() << " subgroups in "
      << lat.classes().size() << " conjugacy classes\n";
  std::vector<std::vector<std::string>> rows{{"id", "name", "label", "order", "class", "normal", "generators"}};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    SubgroupId id{static_cast<std::uint32_t>(i)};
    rows.push_back({std::to_string(i), lat.name(id), lat.label(id), std::to_string(lat.order(id)),
                    std::to_string(lat.class_index(id)), yes_no(lat.is_normal(id)),
                    join(generator_cycles(grp, lat.generators(id)), " ")});
  }
  out << format_table(rows);
  return kOk;
}

int cmd_group_marks(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const SubgroupLattice& lat = *g.lattice;
  if (c.opts().gset.empty()) {
    std::vector<std::string> names;
    for (SubgroupId s : g.marks.classes) names.push_back(lat.name(s));
    if (c.opts().json) {
      out << dump(Json{{"group", g.group->name()}, {"subgroups", names}, {"table", g.marks.rows}});
      return kOk;
    }
    out << "table of marks of " << g.group->name() << " (row G/K, column J: fixed points of J)\n";
    std::vector<std::vector<std::string>> rows{{"G/K"}};
    for (const auto& n : names) rows[0].push_back(n);
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::vector<std::string> row{"G/" + names[i]};
      for (auto v : g.marks.rows[i]) row.push_back(std::to_string(v));
      rows.push_back(row);
    }
    out << format_table(rows);
    return kOk;
  }
  std::optional<SubgroupId> hint;
  if (!c.opts().at.empty()) hint = lat.parse_name(c.opts().at);
  GSet t = parse_gset(c.opts().gset, g.lattice, hint);
  MarkVector m = marks(t);
  if (c.opts().json) {
    Json j = marks_to_json(m);
    j["gset"] = gset_to_json(t);
    out << dump(j);
    return kOk;
  }
  out << "marks of " << t.to_string() << " at " << t.level().name() << "\n";
  std::vector<std::vector<std::string>> rows{{"J"}, {"|T^J|"}};
  for (std::size_t i = 0; i < m.subgroups.size(); ++i) {
    rows[0].push_back(lat.name(m.subgroups[i]));
    rows[1].push_back(std::to_string(m.entries[i]));
  }
  out << format_table(rows);
  out << "marks: " << tuple(m.entries) << "\n";
  return kOk;
}

int cmd_group_doublecosets(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const SubgroupLattice& lat = *g.lattice;
  if (c.opts().left.empty() || c.opts().right.empty())
    throw InputError("doublecosets needs --left K and --right H");
  Subgroup k = c.subgroup(g, c.opts().left);
  Subgroup h = c.subgroup(g, c.opts().right);
  Subgroup amb = c.subgroup(g, c.opts().ambient, lat.whole());
  DoubleCosetDecomposition d = double_cosets(k, h, amb);
  if (c.opts().json) {
    Json reps = Json::array();
    for (std::size_t i = 0; i < d.representatives.size(); ++i)
      reps.push_back({{"element", d.representatives[i]},
                      {"permutation", g.group->element(d.representatives[i]).to_cycle_string()},
                      {"size", d.sizes[i]}});
    out << dump(Json{{"left", k.name()}, {"right", h.name()}, {"ambient", amb.name()}, {"double_cosets", reps}});
    return kOk;
  }
  out << "double cosets K g H in " << amb.name() << " with K = " << k.name() << ", H = " << h.name()
      << ": " << d.representatives.size() << "\n";
  std::vector<std::vector<std::string>> rows{{"element", "permutation", "size"}};
  for (std::size_t i = 0; i < d.representatives.size(); ++i)
    rows.push_back({std::to_string(d.representatives[i]),
                    g.group->element(d.representatives[i]).to_cycle_string(), std::to_string(d.sizes[i])});
  out << format_table(rows);
  return kOk;
}

}  // namespace eqnorm::cli
