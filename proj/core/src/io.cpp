#include "eqnorm/io.hpp"

#include <fstream>
#include <sstream>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::string subgroup_name(const SubgroupLattice& lat, SubgroupId id) { return lat.name(id); }

SubgroupId subgroup_id(const SubgroupLattice& lat, const Json& j) {
  return lat.parse_name(j.get<std::string>());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("matrix entry " + j.dump() + " is not a rational written as an integer or \"p/q\"");
}

void require_group(const Json& j, const SubgroupLattice& lat, const char* what) {
  if (!j.contains("group")) return;
  const Json& g = j.at("group");
  std::string name = g.is_object() ? g.at("name").get<std::string>() : g.get<std::string>();
  if (name != lat.group().name())
    throw InputError(std::string(what) + " is for group '" + name + "', not '" + lat.group().name() + "'");
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + origin + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!(out << text)) throw InputError("cannot write '" + path.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot write '" + path.string() + "': " + ec.message());
}

Json read_json_file(const std::filesystem::path& path) {
  return parse_json(read_text_file(path), path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json group_to_json(const FiniteGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  return Json{{"name", g.name()}, {"degree", g.degree()}, {"generators", gens}};
}

GroupPtr group_from_json(const Json& j, GroupLimits limits) {
  return guarded("group definition", [&] {
    std::string name = j.at("name").get<std::string>();
    std::size_t degree = j.at("degree").get<std::size_t>();
    if (degree == 0) throw InputError("group degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      auto images = g.get<std::vector<long long>>();
      std::vector<Point> pts;
      for (long long v : images) {
        if (v < 0 || static_cast<std::size_t>(v) >= degree)
          throw InputError("generator image " + std::to_string(v) + " out of range");
        pts.push_back(static_cast<Point>(v));
      }
      if (pts.size() != degree) throw InputError("generator has the wrong degree");
      gens.emplace_back(std::move(pts));
    }
    return FiniteGroup::make(degree, std::move(gens), name, limits);
  });
}

Json lattice_to_json(const SubgroupLattice& lat) {
  Json subs = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto m = lat.members(SubgroupId{static_cast<std::uint32_t>(i)});
    subs.push_back(std::vector<Element>(m.begin(), m.end()));
  }
  return Json{{"group", group_to_json(lat.group())}, {"subgroups", subs}};
}

LatticePtr lattice_from_json(const Json& j, GroupPtr group) {
  return guarded("lattice cache", [&] {
    if (j.at("group") != group_to_json(*group)) throw InputError("lattice cache is for another group");
    auto lists = j.at("subgroups").get<std::vector<std::vector<Element>>>();
    for (const auto& l : lists)
      for (Element e : l)
        if (e >= group->order()) throw InputError("lattice cache names a missing element");
    return SubgroupLattice::from_member_lists(std::move(group), std::move(lists));
  });
}

Json gset_to_json(const GSet& t) {
  const SubgroupLattice& lat = t.lattice();
  Json orbits = Json::array();
  for (const auto& o : t.orbits())
    orbits.push_back({{"stabilizer", subgroup_name(lat, o.stabilizer)}, {"multiplicity", o.multiplicity}});
  return Json{{"level", subgroup_name(lat, t.level().id())}, {"orbits", orbits}, {"text", t.to_string()}};
}

GSet gset_from_json(const Json& j, const LatticePtr& lattice) {
  return guarded("G-set", [&] {
    if (j.is_string()) return parse_gset(j.get<std::string>(), lattice);
    const SubgroupLattice& lat = *lattice;
    SubgroupId level = subgroup_id(lat, j.at("level"));
    std::vector<OrbitTerm> terms;
    for (const auto& o : j.at("orbits"))
      terms.push_back({subgroup_id(lat, o.at("stabilizer")), o.value("multiplicity", std::size_t{1})});
    return GSet(lat.subgroup(level), std::move(terms));
  });
}

Json marks_to_json(const MarkVector& m) {
  const SubgroupLattice& lat = m.level.lattice();
  Json cols = Json::array();
  for (SubgroupId s : m.subgroups) cols.push_back(subgroup_name(lat, s));
  return Json{{"level", subgroup_name(lat, m.level.id())}, {"subgroups", cols}, {"marks", m.entries}};
}

Json indexing_to_json(const IndexingSystem& ix) {
  const SubgroupLattice& lat = ix.lattice();
  Json adm = Json::object();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    SubgroupId h{static_cast<std::uint32_t>(i)};
    Json ks = Json::array();
    for (SubgroupId k : ix.admissible_stabilizers(h)) ks.push_back(subgroup_name(lat, k));
    adm[subgroup_name(lat, h)] = ks;
  }
  Json out{{"group", lat.group().name()}};
  if (!ix.name().empty()) out["name"] = ix.name();
  out["admissible"] = adm;
  return out;
}

IndexingSystem indexing_from_json(const Json& j, const LatticePtr& lattice) {
  return guarded("indexing system", [&] {
    const SubgroupLattice& lat = *lattice;
    require_group(j, lat, "indexing system");
    IndexingSystem ix(lattice, j.value("name", std::string{}));
    for (std::size_t i = 0; i < lat.size(); ++i) {
      SubgroupId h{static_cast<std::uint32_t>(i)};
      ix.set(h, h, false);
    }
    for (const auto& [hname, ks] : j.at("admissible").items()) {
      SubgroupId h = lat.parse_name(hname);
      for (const auto& k : ks) {
        SubgroupId kid = subgroup_id(lat, k);
        if (!lat.is_subgroup_of(kid, h))
          throw InputError(lat.name(kid) + " is not a subgroup of " + hname);
        ix.set(h, kid, true);
      }
    }
    return ix;
  });
}

Json universe_to_json(const Universe& u) {
  Json gens = Json::array();
  for (const Rep& r : u.generators()) {
    Json mats = Json::array();
    const FiniteGroup& g = u.lattice().group();
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      const Matrix& m = r.matrix(g.generator_element(s));
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    gens.push_back({{"kind", "matrix"}, {"dimension", r.dimension()}, {"matrices", mats}});
  }
  Json out{{"group", u.lattice().group().name()}};
  if (!u.name().empty()) out["name"] = u.name();
  out["generators"] = gens;
  return out;
}

Universe universe_from_json(const Json& j, const LatticePtr& lattice) {
  return guarded("universe", [&] {
    const SubgroupLattice& lat = *lattice;
    require_group(j, lat, "universe");
    const FiniteGroup& g = lat.group();
    std::vector<Rep> reps;
    for (const auto& gen : j.at("generators")) {
      std::string kind = gen.at("kind").get<std::string>();
      if (kind == "perm") {
        GSet t = gset_from_json(gen.at("gset"), lattice);
        if (t.level().id() != lat.whole()) throw InputError("perm generator must be a G-set");
        reps.push_back(perm_rep(t));
      } else if (kind == "matrix") {
        std::size_t dim = gen.at("dimension").get<std::size_t>();
        const Json& mats = gen.at("matrices");
        if (mats.size() != g.generators().size())
          throw InputError("matrix generator needs one matrix per group generator");
        std::vector<Matrix> ms;
        for (const auto& mj : mats) {
          if (mj.size() != dim) throw InputError("matrix has the wrong number of rows");
          Matrix m(dim, dim);
          for (std::size_t r = 0; r < dim; ++r) {
            if (mj.at(r).size() != dim) throw InputError("matrix row has the wrong length");
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = rational_from_json(mj.at(r).at(c));
          }
          ms.push_back(std::move(m));
        }
        reps.push_back(Rep::from_group_generators(lattice, ms));
      } else {
        throw InputError("unknown universe generator kind '" + kind + "'");
      }
    }
    return Universe(lattice, std::move(reps), j.value("name", std::string{}));
  });
}

Json realization_to_json(const Realization& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json::array({p.orbit, p.representative}));
  return Json{{"gset", gset_to_json(r.gset)}, {"points", pts}};
}

RealizationPtr realization_from_json(const Json& j, const LatticePtr& lattice) {
  return guarded("realization", [&] {
    GSet t = gset_from_json(j.at("gset"), lattice);
    auto r = std::make_shared<const Realization>(realize(t));
    if (j.contains("points")) {
      const Json& pts = j.at("points");
      if (pts.size() != r->size()) throw InputError("realization point list has the wrong size");
      for (std::size_t x = 0; x < r->size(); ++x)
        if (pts.at(x).at(0).get<std::size_t>() != r->points[x].orbit ||
            pts.at(x).at(1).get<Element>() != r->points[x].representative)
          throw InputError("realization points are not in canonical order");
    }
    return r;
  });
}

Json span_to_json(const Span& s) {
  return Json{{"apex", realization_to_json(*s.apex())},
              {"source", realization_to_json(*s.source())},
              {"target", realization_to_json(*s.target())},
              {"left", s.left.assignment},
              {"right", s.right.assignment}};
}

Span span_from_json(const Json& j, const LatticePtr& lattice, const IndexingSystem* ix) {
  return guarded("span", [&] {
    auto apex = realization_from_json(j.at("apex"), lattice);
    auto src = realization_from_json(j.at("source"), lattice);
    auto tgt = realization_from_json(j.at("target"), lattice);
    auto left = j.at("left").get<std::vector<Point>>();
    auto right = j.at("right").get<std::vector<Point>>();
    if (left.size() != apex->size() || right.size() != apex->size())
      throw InputError("span leg has the wrong length");
    for (Point p : left)
      if (p >= src->size()) throw InputError("left leg leaves the source");
    for (Point p : right)
      if (p >= tgt->size()) throw InputError("right leg leaves the target");
    return make_span(GMap{apex, src, left}, GMap{apex, tgt, right}, ix);
  });
}

Json form_to_json(const CanonicalForm& f) {
  const SubgroupLattice& lat = f.level.lattice();
  Json ex = Json::object();
  for (const auto& [sym, t] : f.exponents) ex[sym] = gset_to_json(t);
  return Json{{"level", subgroup_name(lat, f.level.id())}, {"exponents", ex}};
}

Json trace_to_json(const RewriteTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"rule", std::string(rule_name(s.rule))},
                     {"identity", std::string(rule_identity(s.rule))},
                     {"path", s.path},
                     {"before", s.before},
                     {"after", s.after}});
  return Json{{"input", t.input}, {"steps", steps}, {"output", t.output}};
}

RewriteTrace trace_from_json(const Json& j) {
  return guarded("rewrite trace", [&] {
    RewriteTrace t;
    t.input = j.at("input").get<std::string>();
    t.output = j.at("output").get<std::string>();
    for (const auto& s : j.at("steps"))
      t.steps.push_back({parse_rule(s.at("rule").get<std::string>()),
                         s.at("path").get<std::vector<std::size_t>>(), s.at("before").get<std::string>(),
                         s.at("after").get<std::string>()});
    return t;
  });
}

}  // namespace eqnorm
