#include "context.hpp"

namespace eqnorm::cli {

namespace {

IndexingSystem load_system(Context& c, const GroupContext& g, const std::string& path, const char* role) {
  if (path.empty()) throw InputError(std::string("missing ") + role + " indexing-system file");
  return indexing_from_json(c.read_json(path, role), g.lattice);
}

Json system_summary(const IndexingSystem& ix) {
  Json j = indexing_to_json(ix);
  j["size"] = ix.size();
  return j;
}

}  // namespace

int cmd_indexing_validate(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  std::string path = !c.opts().positional.empty() ? c.opts().positional.front() : c.opts().ix_file;
  IndexingSystem ix = load_system(c, g, path, "indexing");
  ValidationReport rep = validate(ix);
  if (c.opts().json) {
    Json axioms = Json::array();
    for (const auto& r : rep.results) {
      Json a{{"axiom", std::string(axiom_name(r.axiom))}, {"passed", r.passed}};
      if (!r.passed) a["counterexample"] = r.counterexample;
      axioms.push_back(a);
    }
    out << dump(Json{{"group", g.group->name()}, {"valid", rep.passed()}, {"axioms", axioms}});
  } else {
    std::vector<std::vector<std::string>> rows{{"axiom", "result", "counterexample"}};
    for (const auto& r : rep.results)
      rows.push_back({std::string(axiom_name(r.axiom)), r.passed ? "pass" : "fail", r.counterexample});
    out << format_table(rows);
    out << "valid: " << yes_no(rep.passed()) << "\n";
  }
  return rep.passed() ? kOk : kNegative;
}

int cmd_indexing_generate(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const SubgroupLattice& lat = *g.lattice;
  std::vector<NormPair> declared;
  for (const auto& d : c.opts().declare) {
    GSet t = parse_gset(d, g.lattice);
    for (const auto& o : t.orbits()) declared.emplace_back(t.level().id(), o.stabilizer);
  }
  IndexingSystem ix = c.opts().ix_file.empty() ? generate(g.lattice, declared)
                                               : generate_from(load_system(c, g, c.opts().ix_file, "indexing"), declared);
  if (c.opts().json) {
    out << dump(indexing_to_json(ix));
    return kOk;
  }
  std::vector<std::string> names;
  for (const auto& [h, k] : declared) names.push_back(lat.name(h) + "/" + lat.name(k));
  out << "generated from " << (names.empty() ? std::string("nothing") : join(names, ", ")) << ": "
      << ix.size() << " admissible orbits\n";
  out << indexing_table(ix);
  return kOk;
}

int cmd_indexing_enumerate(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  std::vector<IndexingSystem> all = enumerate_all(g.lattice);
  if (c.opts().json) {
    Json arr = Json::array();
    for (const auto& ix : all) arr.push_back(system_summary(ix));
    out << dump(Json{{"group", g.group->name()}, {"count", all.size()}, {"systems", arr}});
    return kOk;
  }
  out << all.size() << " indexing systems for " << g.group->name() << "\n";
  std::vector<std::vector<std::string>> rows{{"system", "size", "nontrivial admissible orbits"}};
  for (const auto& ix : all) rows.push_back({ix.name(), std::to_string(ix.size()), nontrivial_orbits(ix)});
  out << format_table(rows);
  return kOk;
}

int cmd_indexing_compare(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  IndexingSystem a = load_system(c, g, c.opts().left, "left");
  IndexingSystem b = load_system(c, g, c.opts().right, "right");
  bool ab = leq(a, b), ba = leq(b, a);
  IndexingSystem m = meet(a, b), j = join(a, b);
  if (c.opts().json) {
    out << dump(Json{{"left_leq_right", ab},
                     {"right_leq_left", ba},
                     {"equal", a == b},
                     {"meet", system_summary(m)},
                     {"join", system_summary(j)}});
    return kOk;
  }
  out << "left <= right: " << yes_no(ab) << "\n";
  out << "right <= left: " << yes_no(ba) << "\n";
  out << "equal: " << yes_no(a == b) << "\n";
  out << "meet (" << m.size() << "): " << nontrivial_orbits(m) << "\n";
  out << "join (" << j.size() << "): " << nontrivial_orbits(j) << "\n";
  return kOk;
}

}  // namespace eqnorm::cli
