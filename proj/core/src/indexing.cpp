#include "eqnorm/indexing.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "eqnorm/errors.hpp"

namespace eqnorm {

IndexingSystem::IndexingSystem(LatticePtr lattice, std::string name)
    : lattice_(std::move(lattice)), name_(std::move(name)) {
  const std::size_t n = lattice_->size();
  admissible_.assign(n, std::vector<bool>(n, false));
  for (std::size_t h = 0; h < n; ++h) admissible_[h][h] = true;
}

IndexingSystem IndexingSystem::trivial(LatticePtr lattice) {
  return IndexingSystem(std::move(lattice), "trivial");
}

IndexingSystem IndexingSystem::complete(LatticePtr lattice) {
  IndexingSystem ix(std::move(lattice), "complete");
  for (std::size_t h = 0; h < ix.lattice_->size(); ++h)
    for (SubgroupId k : ix.lattice_->class_reps_within(SubgroupId{static_cast<std::uint32_t>(h)}))
      ix.admissible_[h][k.value] = true;
  return ix;
}

bool IndexingSystem::admits(SubgroupId h, SubgroupId k) const {
  return admissible_[h.value][lattice_->rep_within(h, k).value];
}

bool IndexingSystem::admits(const GSet& t) const {
  if (t.level().lattice_ptr() != lattice_) throw InputError("G-set and indexing system differ in group");
  for (const auto& term : t.orbits())
    if (!admissible_[t.level().id().value][term.stabilizer.value]) return false;
  return true;
}

void IndexingSystem::set(SubgroupId h, SubgroupId k, bool admissible) {
  admissible_[h.value][lattice_->rep_within(h, k).value] = admissible;
}

std::vector<SubgroupId> IndexingSystem::admissible_stabilizers(SubgroupId h) const {
  std::vector<SubgroupId> out;
  for (SubgroupId k : lattice_->class_reps_within(h))
    if (admissible_[h.value][k.value]) out.push_back(k);
  return out;
}

std::size_t IndexingSystem::size() const {
  std::size_t n = 0;
  for (const auto& row : admissible_) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return n;
}

std::vector<bool> IndexingSystem::flattened() const {
  std::vector<bool> out;
  for (const auto& row : admissible_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::TrivialSets: return "trivial-sets";
    case Axiom::Truncation: return "truncation";
    case Axiom::CoproductClosure: return "coproduct-closure";
    case Axiom::RestrictionFunctoriality: return "restriction-functoriality";
    case Axiom::Conjugation: return "conjugation";
    case Axiom::SelfInduction: return "self-induction";
    case Axiom::CartesianProduct: return "cartesian-product";
  }
  return "unknown";
}

bool ValidationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& ValidationReport::result(Axiom a) const {
  for (const auto& r : results)
    if (r.axiom == a) return r;
  throw std::logic_error("axiom missing from report");
}

namespace {

SubgroupId sid(std::size_t i) { return SubgroupId{static_cast<std::uint32_t>(i)}; }

std::vector<SubgroupId> all_ids(const SubgroupLattice& lat) {
  std::vector<SubgroupId> out;
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(sid(i));
  return out;
}

std::string orbit_text(const SubgroupLattice& lat, SubgroupId h, SubgroupId k) {
  return lat.name(h) + "/" + lat.name(k);
}

}  // namespace

ValidationReport validate(const IndexingSystem& ix) {
  const LatticePtr& lp = ix.lattice_ptr();
  const SubgroupLattice& lat = *lp;
  const FiniteGroup& g = lat.group();
  ValidationReport report;
  auto fail = [](AxiomResult& r, std::string why) {
    if (r.passed) {
      r.passed = false;
      r.counterexample = std::move(why);
    }
  };

  AxiomResult trivial{Axiom::TrivialSets, true, {}};
  for (SubgroupId h : all_ids(lat))
    if (!ix.admits(h, h)) fail(trivial, "H=" + lat.name(h) + ": " + orbit_text(lat, h, h) + " not admissible");

  AxiomResult truncation{Axiom::Truncation, true, {}};
  AxiomResult coproduct_r{Axiom::CoproductClosure, true, {}};
  AxiomResult restriction{Axiom::RestrictionFunctoriality, true, {}};
  AxiomResult conjugation{Axiom::Conjugation, true, {}};
  AxiomResult induction{Axiom::SelfInduction, true, {}};
  AxiomResult products{Axiom::CartesianProduct, true, {}};

  for (SubgroupId h : all_ids(lat)) {
    Subgroup hs = lat.subgroup(h);
    auto adm = ix.admissible_stabilizers(h);
    for (SubgroupId a : adm) {
      GSet ta = GSet::orbit(hs, a);
      for (SubgroupId b : adm) {
        GSet tb = GSet::orbit(hs, b);
        GSet sum = coproduct(ta, tb);
        if (!ix.admits(sum))
          fail(coproduct_r, "H=" + lat.name(h) + ": " + sum.to_string() + " not admissible");
        for (const GSet& sub : sub_gsets(sum))
          if (!ix.admits(sub))
            fail(truncation, "H=" + lat.name(h) + ": subobject " + sub.to_string() + " of " +
                                 sum.to_string() + " not admissible");
        GSet prod = product(ta, tb);
        if (!ix.admits(prod))
          fail(products, "H=" + lat.name(h) + ": " + ta.to_string() + " x " + tb.to_string() +
                             " = " + prod.to_string() + " not admissible");
      }
      for (SubgroupId l : lat.subgroups_of(h)) {
        GSet r = restrict(ta, lat.subgroup(l));
        if (!ix.admits(r))
          fail(restriction, "H=" + lat.name(h) + ", T=" + ta.to_string() + ", K=" + lat.name(l) +
                                ": restrict(T,K) = " + r.to_string() + " not admissible");
      }
      for (Element x = 0; x < g.order(); ++x) {
        SubgroupId ch = lat.conjugate(h, x), ck = lat.conjugate(a, x);
        if (!ix.admits(ch, ck))
          fail(conjugation, orbit_text(lat, h, a) + " admissible but conjugate " +
                                orbit_text(lat, ch, ck) + " (by " + g.element(x).to_cycle_string() +
                                ") is not");
      }
    }
    for (SubgroupId k : lat.subgroups_of(h)) {
      if (!ix.admits(h, k)) continue;
      for (SubgroupId j : ix.admissible_stabilizers(k)) {
        GSet ind = induce(GSet::orbit(lat.subgroup(k), j), hs);
        if (!ix.admits(ind))
          fail(induction, orbit_text(lat, h, k) + " and " + orbit_text(lat, k, j) +
                              " admissible but " + ind.to_string() + " is not");
      }
    }
  }
  report.results = {trivial, truncation, coproduct_r, restriction, conjugation, induction, products};
  return report;
}

namespace {

bool apply_closure(IndexingSystem& ix, Closure step) {
  const LatticePtr& lp = ix.lattice_ptr();
  const SubgroupLattice& lat = *lp;
  const FiniteGroup& g = lat.group();
  bool changed = false;
  auto add = [&](SubgroupId h, SubgroupId k) {
    if (!ix.admits(h, k)) {
      ix.set(h, k);
      changed = true;
    }
  };
  auto add_all = [&](const GSet& t) {
    for (const auto& term : t.orbits()) add(t.level().id(), term.stabilizer);
  };
  for (std::size_t hi = 0; hi < lat.size(); ++hi) {
    SubgroupId h = sid(hi);
    Subgroup hs = lat.subgroup(h);
    auto adm = ix.admissible_stabilizers(h);
    switch (step) {
      case Closure::Conjugation:
        for (SubgroupId k : adm)
          for (Element x = 0; x < g.order(); ++x) add(lat.conjugate(h, x), lat.conjugate(k, x));
        break;
      case Closure::Restriction:
        for (SubgroupId k : adm)
          for (SubgroupId l : lat.subgroups_of(h)) add_all(restrict(GSet::orbit(hs, k), lat.subgroup(l)));
        break;
      case Closure::Truncation:
        for (SubgroupId k : adm)
          for (const GSet& sub : sub_gsets(GSet::orbit(hs, k))) add_all(sub);
        break;
      case Closure::SelfInduction:
        for (SubgroupId k : lat.subgroups_of(h)) {
          if (!ix.admits(h, k)) continue;
          for (SubgroupId j : ix.admissible_stabilizers(k)) add(h, j);
        }
        break;
      case Closure::Product:
        for (SubgroupId a : adm)
          for (SubgroupId b : adm) add_all(product(GSet::orbit(hs, a), GSet::orbit(hs, b)));
        break;
    }
  }
  return changed;
}

void close_system(IndexingSystem& ix, const std::vector<Closure>& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Closure c : order) changed = apply_closure(ix, c) || changed;
  }
}

}  // namespace

IndexingSystem generate_from(const IndexingSystem& ix, const std::vector<NormPair>& declared,
                             const std::vector<Closure>& order) {
  const SubgroupLattice& lat = ix.lattice();
  IndexingSystem out = ix;
  out.set_name({});
  for (const auto& [h, k] : declared) {
    if (!lat.is_subgroup_of(k, h))
      throw PreconditionError("declared norm " + lat.name(h) + "/" + lat.name(k) + ": not a subgroup");
    out.set(h, k);
  }
  close_system(out, order);
  return out;
}

IndexingSystem generate(const LatticePtr& lattice, const std::vector<NormPair>& declared,
                        const std::vector<Closure>& order) {
  return generate_from(IndexingSystem(lattice), declared, order);
}

std::vector<IndexingSystem> enumerate_all(const LatticePtr& lattice, EnumerationLimits limits) {
  const SubgroupLattice& lat = *lattice;
  if (lat.classes().size() > limits.max_conjugacy_classes) {
    throw CapExceeded("enumerate_all: " + std::to_string(lat.classes().size()) +
                      " subgroup conjugacy classes exceed the cap of " +
                      std::to_string(limits.max_conjugacy_classes));
  }
  std::set<std::vector<bool>> seen;
  std::vector<IndexingSystem> found;
  std::deque<IndexingSystem> queue;
  IndexingSystem start = IndexingSystem::trivial(lattice);
  seen.insert(start.flattened());
  queue.push_back(start);
  while (!queue.empty()) {
    IndexingSystem cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& cls : lat.classes()) {
      SubgroupId h = cls.front();
      for (SubgroupId k : lat.class_reps_within(h)) {
        if (cur.admits(h, k)) continue;
        IndexingSystem next = generate_from(cur, {{h, k}});
        if (seen.insert(next.flattened()).second) queue.push_back(next);
      }
    }
    found.push_back(std::move(cur));
  }
  std::sort(found.begin(), found.end(), [](const IndexingSystem& a, const IndexingSystem& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.flattened() < b.flattened();
  });
  for (std::size_t i = 0; i < found.size(); ++i) found[i].set_name("#" + std::to_string(i));
  return found;
}

namespace {
void require_same(const IndexingSystem& a, const IndexingSystem& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) throw InputError("indexing systems are over different groups");
}
}  // namespace

IndexingSystem meet(const IndexingSystem& a, const IndexingSystem& b) {
  require_same(a, b);
  IndexingSystem out(a.lattice_ptr());
  const SubgroupLattice& lat = a.lattice();
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (SubgroupId k : lat.class_reps_within(sid(h)))
      out.set(sid(h), k, a.admits(sid(h), k) && b.admits(sid(h), k));
  return out;
}

IndexingSystem join(const IndexingSystem& a, const IndexingSystem& b) {
  require_same(a, b);
  std::vector<NormPair> pairs;
  const SubgroupLattice& lat = a.lattice();
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (SubgroupId k : b.admissible_stabilizers(sid(h))) pairs.emplace_back(sid(h), k);
  return generate_from(a, pairs);
}

bool leq(const IndexingSystem& a, const IndexingSystem& b) {
  require_same(a, b);
  const SubgroupLattice& lat = a.lattice();
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (SubgroupId k : a.admissible_stabilizers(sid(h)))
      if (!b.admits(sid(h), k)) return false;
  return true;
}

bool GraphSubgroup::meets_symmetric_trivially() const {
  for (const auto& [h, sigma] : members)
    if (h == 0 && !sigma.is_identity()) return false;
  return true;
}

GraphSubgroup graph_subgroup(const Subgroup& h, const GSet& t, const IndexingSystem* ix) {
  if (!(t.level() == h)) throw TypeError("graph_subgroup: G-set is not at level " + h.name());
  if (ix && !ix->admits(t)) throw InadmissibleError("graph_subgroup: " + t.to_string() + " is not admissible");
  Realization r = realize(t);
  GraphSubgroup out{h, t, r.size(), {}};
  for (std::size_t i = 0; i < r.level_elements.size(); ++i)
    out.members.emplace_back(r.level_elements[i], Permutation(r.action[i]));
  return out;
}

std::vector<GraphSubgroup> family_of(const IndexingSystem& ix, std::size_t n) {
  const SubgroupLattice& lat = ix.lattice();
  std::vector<GraphSubgroup> out;
  for (const auto& cls : lat.classes()) {
    Subgroup h = lat.subgroup(cls.front());
    for (const GSet& t : enumerate_gsets(h, n, ix.admissible_stabilizers(h.id()))) {
      if (t.cardinality() != n) continue;
      out.push_back(graph_subgroup(h, t, &ix));
    }
  }
  return out;
}

}  // namespace eqnorm
