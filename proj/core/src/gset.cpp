#include "eqnorm/gset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

#include "eqnorm/errors.hpp"

namespace eqnorm {

GSet::GSet(Subgroup level, std::vector<OrbitTerm> orbits) : level_(std::move(level)) {
  const SubgroupLattice& lat = level_.lattice();
  std::map<SubgroupId, std::size_t> merged;
  for (const auto& term : orbits) {
    if (term.multiplicity == 0) continue;
    if (!lat.is_subgroup_of(term.stabilizer, level_.id())) {
      throw PreconditionError("stabilizer " + lat.name(term.stabilizer) +
                              " is not a subgroup of level " + lat.name(level_.id()));
    }
    merged[lat.rep_within(level_.id(), term.stabilizer)] += term.multiplicity;
  }
  for (const auto& [stab, mult] : merged) orbits_.push_back({stab, mult});
}

GSet GSet::point(Subgroup level) {
  SubgroupId id = level.id();
  return GSet(std::move(level), {{id, 1}});
}

GSet GSet::orbit(Subgroup level, SubgroupId stabilizer, std::size_t multiplicity) {
  return GSet(std::move(level), {{stabilizer, multiplicity}});
}

std::size_t GSet::cardinality() const {
  std::size_t n = 0;
  for (const auto& t : orbits_) n += t.multiplicity * (level_.order() / lattice().order(t.stabilizer));
  return n;
}

std::size_t GSet::orbit_count() const {
  std::size_t n = 0;
  for (const auto& t : orbits_) n += t.multiplicity;
  return n;
}

std::string GSet::to_string() const {
  if (orbits_.empty()) return "0";
  const SubgroupLattice& lat = lattice();
  std::string out;
  for (const auto& t : orbits_) {
    if (!out.empty()) out += ",";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "*";
    out += lat.name(level_.id()) + "/" + lat.name(t.stabilizer);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Resolves a subgroup name to a subgroup of `level`. A label naming a G-class
// is moved into the level when its conjugates inside the level form a single
// level-class.
SubgroupId resolve_within(const SubgroupLattice& lat, SubgroupId level, std::string_view text) {
  SubgroupId k = lat.parse_name(text);
  if (lat.is_subgroup_of(k, level)) return k;
  if (text.empty() || text.front() == '#') {
    throw PreconditionError("subgroup " + std::string(text) + " is not contained in " +
                            lat.name(level));
  }
  std::vector<SubgroupId> reps;
  for (SubgroupId c : lat.classes()[lat.class_index(k)]) {
    if (!lat.is_subgroup_of(c, level)) continue;
    SubgroupId r = lat.rep_within(level, c);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  if (reps.size() == 1) return reps.front();
  if (reps.empty()) {
    throw PreconditionError("no conjugate of " + std::string(text) + " is contained in " +
                            lat.name(level));
  }
  throw InputError("subgroup " + std::string(text) + " is ambiguous inside " + lat.name(level) +
                   "; use a #k id");
}

}  // namespace

GSet parse_gset(std::string_view text, const LatticePtr& lattice,
                std::optional<SubgroupId> level_hint) {
  const SubgroupLattice& lat = *lattice;
  text = trim(text);
  if (text == "0" || text == "\xE2\x88\x85") {
    if (!level_hint) throw InputError("empty G-set literal needs a contextual level");
    return GSet::empty(lat.subgroup(*level_hint));
  }
  std::optional<SubgroupId> level;
  std::vector<OrbitTerm> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view term = trim(text.substr(start, comma - start));
    start = comma + 1;
    if (term.empty()) throw InputError("empty term in G-set literal '" + std::string(text) + "'");
    std::size_t mult = 1;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits > 0) {
      std::from_chars(term.data(), term.data() + digits, mult);
      term.remove_prefix(digits);
      term = trim(term);
      if (!term.empty() && term.front() == '*') term = trim(term.substr(1));
    }
    std::size_t slash = term.find('/');
    if (slash == std::string_view::npos)
      throw InputError("G-set term '" + std::string(term) + "' is not of the form L/K");
    std::string_view lname = trim(term.substr(0, slash));
    std::string_view kname = trim(term.substr(slash + 1));
    SubgroupId l;
    if (lname == "H") {
      if (!level_hint) throw InputError("level placeholder H needs a contextual level");
      l = *level_hint;
    } else {
      l = lat.parse_name(lname);
    }
    if (level && *level != l) throw InputError("G-set literal mixes levels");
    if (level_hint && l != *level_hint) {
      throw TypeError("G-set literal has level " + lat.name(l) + ", expected " +
                      lat.name(*level_hint));
    }
    level = l;
    SubgroupId k = (kname == "H") ? l : resolve_within(lat, l, kname);
    terms.push_back({k, mult});
    if (comma == text.size()) break;
  }
  return GSet(lat.subgroup(*level), std::move(terms));
}

Point Realization::act(Element g, Point x) const { return action[position_of(g)][x]; }

std::size_t Realization::position_of(Element g) const {
  auto it = std::lower_bound(level_elements.begin(), level_elements.end(), g);
  if (it == level_elements.end() || *it != g)
    throw PreconditionError("element does not belong to the acting level");
  return static_cast<std::size_t>(it - level_elements.begin());
}

Realization realize(const GSet& t) {
  const SubgroupLattice& lat = t.lattice();
  const FiniteGroup& g = lat.group();
  Realization r;
  r.gset = t;
  auto members = t.level().members();
  r.level_elements.assign(members.begin(), members.end());

  // Per orbit copy: coset index of each level element.
  std::vector<std::vector<std::size_t>> coset_maps;
  std::vector<std::size_t> copy_offset;
  std::size_t copy = 0;
  for (const auto& term : t.orbits()) {
    std::vector<std::size_t> coset_of(g.order(), static_cast<std::size_t>(-1));
    std::vector<Element> reps;
    for (Element h : members) {
      if (coset_of[h] != static_cast<std::size_t>(-1)) continue;
      for (Element k : lat.members(term.stabilizer)) coset_of[g.mul(h, k)] = reps.size();
      reps.push_back(h);
    }
    for (std::size_t m = 0; m < term.multiplicity; ++m, ++copy) {
      r.orbit_starts.push_back(r.points.size());
      copy_offset.push_back(r.points.size());
      coset_maps.push_back(coset_of);
      for (Element rep : reps) r.points.push_back({copy, term.stabilizer, rep});
    }
  }
  r.action.assign(members.size(), std::vector<Point>(r.points.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t x = 0; x < r.points.size(); ++x) {
      const auto& p = r.points[x];
      Element y = g.mul(members[i], p.representative);
      r.action[i][x] = static_cast<Point>(copy_offset[p.orbit] + coset_maps[p.orbit][y]);
    }
  }
  return r;
}

Decomposition decompose_action(const Subgroup& level,
                               const std::vector<std::vector<Point>>& action) {
  const SubgroupLattice& lat = level.lattice();
  auto members = level.members();
  if (action.size() != members.size()) throw PreconditionError("action table size mismatch");
  const std::size_t n = action.empty() ? 0 : action.front().size();
  std::vector<bool> seen(n, false);
  struct Found {
    SubgroupId stab;
    Point base;
  };
  std::vector<Found> found;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> stab;
    for (std::size_t i = 0; i < members.size(); ++i) {
      seen[action[i][x]] = true;
      if (action[i][x] == x) stab.push_back(members[i]);
    }
    auto sid = lat.find(stab);
    if (!sid) throw std::logic_error("stabilizer is not a subgroup; action is not a group action");
    Element c = lat.rep_witness_within(level.id(), *sid);
    std::size_t pos = static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), c) - members.begin());
    found.push_back({lat.rep_within(level.id(), *sid), action[pos][x]});
  }
  std::vector<OrbitTerm> terms;
  for (const auto& f : found) terms.push_back({f.stab, 1});
  Decomposition d{GSet(level, terms), {}};
  Realization canon = realize(d.gset);
  // Copies of one stabilizer appear in discovery order.
  std::stable_sort(found.begin(), found.end(),
                   [](const Found& a, const Found& b) { return a.stab < b.stab; });
  d.iso.resize(canon.size());
  for (std::size_t p = 0; p < canon.size(); ++p) {
    const auto& cp = canon.points[p];
    Point base = found[cp.orbit].base;
    d.iso[p] = action[canon.position_of(cp.representative)][base];
  }
  return d;
}

GSet restrict(const GSet& t, const Subgroup& k) {
  const SubgroupLattice& lat = t.lattice();
  if (!k.is_subgroup_of(t.level())) {
    throw PreconditionError("restrict: " + lat.name(k.id()) + " is not a subgroup of " +
                            lat.name(t.level().id()));
  }
  const FiniteGroup& g = lat.group();
  std::vector<OrbitTerm> terms;
  for (const auto& term : t.orbits()) {
    auto dc = double_cosets(k, lat.subgroup(term.stabilizer), t.level());
    for (Element x : dc.representatives) {
      SubgroupId stab = lat.intersect(k.id(), lat.conjugate(term.stabilizer, x));
      terms.push_back({stab, term.multiplicity});
    }
    (void)g;
  }
  return GSet(k, std::move(terms));
}

GSet induce(const GSet& t, const Subgroup& h) {
  const SubgroupLattice& lat = t.lattice();
  if (!t.level().is_subgroup_of(h)) {
    throw PreconditionError("induce: " + lat.name(t.level().id()) + " is not a subgroup of " +
                            lat.name(h.id()));
  }
  return GSet(h, t.orbits());
}

GSet product(const GSet& s, const GSet& t) {
  if (!(s.level() == t.level())) throw TypeError("product: level mismatch");
  const SubgroupLattice& lat = s.lattice();
  std::vector<OrbitTerm> terms;
  for (const auto& a : s.orbits()) {
    for (const auto& b : t.orbits()) {
      auto dc = double_cosets(lat.subgroup(a.stabilizer), lat.subgroup(b.stabilizer), s.level());
      for (Element x : dc.representatives) {
        SubgroupId stab = lat.intersect(a.stabilizer, lat.conjugate(b.stabilizer, x));
        terms.push_back({stab, a.multiplicity * b.multiplicity});
      }
    }
  }
  return GSet(s.level(), std::move(terms));
}

GSet coproduct(const GSet& s, const GSet& t) {
  if (!(s.level() == t.level())) throw TypeError("coproduct: level mismatch");
  std::vector<OrbitTerm> terms = s.orbits();
  terms.insert(terms.end(), t.orbits().begin(), t.orbits().end());
  return GSet(s.level(), std::move(terms));
}

GSet conjugate(const GSet& t, Element g) {
  const SubgroupLattice& lat = t.lattice();
  std::vector<OrbitTerm> terms;
  for (const auto& term : t.orbits()) terms.push_back({lat.conjugate(term.stabilizer, g), term.multiplicity});
  return GSet(lat.subgroup(lat.conjugate(t.level().id(), g)), std::move(terms));
}

MarkVector marks(const GSet& t) {
  const SubgroupLattice& lat = t.lattice();
  const FiniteGroup& g = lat.group();
  MarkVector mv{t.level(), lat.class_reps_within(t.level().id()), {}};
  for (SubgroupId j : mv.subgroups) {
    std::size_t total = 0;
    for (const auto& term : t.orbits()) {
      std::size_t hits = 0;
      for (Element h : t.level().members())
        if (lat.is_subgroup_of(lat.conjugate(j, g.inv(h)), term.stabilizer)) ++hits;
      total += term.multiplicity * (hits / lat.order(term.stabilizer));
    }
    mv.entries.push_back(total);
  }
  return mv;
}

TableOfMarks table_of_marks(const LatticePtr& lattice) {
  const SubgroupLattice& lat = *lattice;
  Subgroup whole = lat.subgroup(lat.whole());
  TableOfMarks out;
  out.classes = lat.class_reps_within(lat.whole());
  for (SubgroupId k : out.classes) out.rows.push_back(marks(GSet::orbit(whole, k)).entries);
  return out;
}

bool is_isomorphic(const GSet& s, const GSet& t) {
  if (!(s.level() == t.level())) throw TypeError("is_isomorphic: level mismatch");
  bool by_marks = marks(s) == marks(t);
  bool by_orbits = s.orbits() == t.orbits();
  if (by_marks != by_orbits) throw std::logic_error("mark vector and orbit multiset disagree");
  return by_marks;
}

std::vector<GSet> sub_gsets(const GSet& t) {
  std::vector<GSet> out;
  const auto& orbits = t.orbits();
  std::vector<std::size_t> counter(orbits.size(), 0);
  while (true) {
    std::vector<OrbitTerm> terms;
    for (std::size_t i = 0; i < orbits.size(); ++i) terms.push_back({orbits[i].stabilizer, counter[i]});
    out.emplace_back(t.level(), std::move(terms));
    std::size_t i = 0;
    while (i < orbits.size() && counter[i] == orbits[i].multiplicity) counter[i++] = 0;
    if (i == orbits.size()) break;
    ++counter[i];
  }
  return out;
}

bool GMap::is_mono() const {
  std::vector<bool> hit(target->size(), false);
  for (Point y : assignment) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool GMap::is_epi() const {
  std::vector<bool> hit(target->size(), false);
  for (Point y : assignment) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool GMap::is_equivariant() const {
  if (source->level_elements != target->level_elements) return false;
  if (assignment.size() != source->size()) return false;
  for (std::size_t i = 0; i < source->level_elements.size(); ++i)
    for (std::size_t x = 0; x < source->size(); ++x)
      if (assignment[source->action[i][x]] != target->action[i][assignment[x]]) return false;
  return true;
}

std::vector<GMap> gmaps(const GSet& s, const GSet& t, GMapLimits limits) {
  if (!(s.level() == t.level())) throw TypeError("gmaps: level mismatch");
  const SubgroupLattice& lat = s.lattice();
  auto src = std::make_shared<const Realization>(realize(s));
  auto tgt = std::make_shared<const Realization>(realize(t));
  const std::size_t copies = src->orbit_starts.size();
  std::vector<std::vector<Point>> candidates(copies);
  std::size_t total = 1;
  for (std::size_t j = 0; j < copies; ++j) {
    SubgroupId k = src->points[src->orbit_starts[j]].stabilizer;
    for (Point y = 0; y < tgt->size(); ++y) {
      bool fixed = true;
      for (Element x : lat.generators(k))
        if (tgt->act(x, y) != y) {
          fixed = false;
          break;
        }
      if (fixed) candidates[j].push_back(y);
    }
    total *= candidates[j].size();
    if (total > limits.max_maps)
      throw CapExceeded("gmaps: more than " + std::to_string(limits.max_maps) + " maps");
  }
  std::vector<GMap> out;
  if (total == 0) return out;
  std::vector<std::size_t> choice(copies, 0);
  while (true) {
    GMap f{src, tgt, std::vector<Point>(src->size())};
    for (std::size_t x = 0; x < src->size(); ++x) {
      const auto& p = src->points[x];
      f.assignment[x] = tgt->act(p.representative, candidates[p.orbit][choice[p.orbit]]);
    }
    out.push_back(std::move(f));
    std::size_t j = 0;
    while (j < copies && choice[j] + 1 == candidates[j].size()) choice[j++] = 0;
    if (j == copies) break;
    ++choice[j];
  }
  return out;
}

GMap identity_map(const RealizationPtr& t) {
  GMap f{t, t, std::vector<Point>(t->size())};
  for (std::size_t x = 0; x < t->size(); ++x) f.assignment[x] = static_cast<Point>(x);
  return f;
}

GMap compose(const GMap& g, const GMap& f) {
  if (f.target != g.source && !(f.target->gset == g.source->gset))
    throw PreconditionError("compose: maps are not composable");
  GMap out{f.source, g.target, std::vector<Point>(f.source->size())};
  for (std::size_t x = 0; x < f.source->size(); ++x) out.assignment[x] = g.assignment[f.assignment[x]];
  return out;
}

std::vector<GSet> enumerate_gsets(const Subgroup& level, std::size_t max_cardinality,
                                  std::optional<std::vector<SubgroupId>> allowed) {
  const SubgroupLattice& lat = level.lattice();
  std::vector<SubgroupId> reps = allowed ? *allowed : lat.class_reps_within(level.id());
  std::vector<GSet> out;
  std::vector<OrbitTerm> terms;
  auto rec = [&](auto&& self, std::size_t i, std::size_t budget) -> void {
    if (i == reps.size()) {
      out.emplace_back(level, terms);
      return;
    }
    std::size_t size = level.order() / lat.order(reps[i]);
    for (std::size_t m = 0; m * size <= budget; ++m) {
      if (m > 0) terms.push_back({reps[i], m});
      self(self, i + 1, budget - m * size);
      if (m > 0) terms.pop_back();
    }
  };
  rec(rec, 0, max_cardinality);
  std::sort(out.begin(), out.end(), [](const GSet& a, const GSet& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.to_string() < b.to_string();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace eqnorm
