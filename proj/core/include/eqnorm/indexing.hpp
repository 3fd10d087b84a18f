#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqnorm/gset.hpp"

namespace eqnorm {

/// Per-subgroup admissible orbits H/K. A general H-set is admissible iff all
/// of its orbits are; that is derived, never stored.
class IndexingSystem {
 public:
  /// The trivial system: only H/H at every H.
  explicit IndexingSystem(LatticePtr lattice, std::string name = {});
  static IndexingSystem trivial(LatticePtr lattice);
  static IndexingSystem complete(LatticePtr lattice);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Is H/K admissible as an H-set? K must be a subgroup of H.
  bool admits(SubgroupId h, SubgroupId k) const;
  bool admits(const GSet& t) const;
  /// Marks H/K (normalized to the H-class of K) admissible or not.
  void set(SubgroupId h, SubgroupId k, bool admissible = true);
  /// H-class representatives K with H/K admissible.
  std::vector<SubgroupId> admissible_stabilizers(SubgroupId h) const;
  /// Number of admissible (H, H-class of K) pairs over all subgroups H.
  std::size_t size() const;

  std::vector<bool> flattened() const;

  friend bool operator==(const IndexingSystem& a, const IndexingSystem& b) {
    return a.lattice_ == b.lattice_ && a.admissible_ == b.admissible_;
  }

 private:
  LatticePtr lattice_;
  std::string name_;
  // admissible_[h][k] for k an h-class representative.
  std::vector<std::vector<bool>> admissible_;
};

enum class Axiom {
  TrivialSets,
  Truncation,
  CoproductClosure,
  RestrictionFunctoriality,
  Conjugation,
  SelfInduction,
  CartesianProduct,
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::TrivialSets,  Axiom::Truncation,    Axiom::CoproductClosure,
    Axiom::RestrictionFunctoriality, Axiom::Conjugation, Axiom::SelfInduction,
    Axiom::CartesianProduct};

std::string_view axiom_name(Axiom a);

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  std::string counterexample;
};

struct ValidationReport {
  std::vector<AxiomResult> results;  // one per axiom, in kAllAxioms order
  bool passed() const;
  const AxiomResult& result(Axiom a) const;
};

ValidationReport validate(const IndexingSystem& ix);

/// Closure steps applied by generate(); any order reaches the same fixed point.
enum class Closure { Conjugation, Restriction, Truncation, SelfInduction, Product };

inline const std::vector<Closure> kDefaultClosureOrder = {
    Closure::Conjugation, Closure::Restriction, Closure::Truncation, Closure::SelfInduction,
    Closure::Product};

/// Declared admissible orbit H/K as (H, K).
using NormPair = std::pair<SubgroupId, SubgroupId>;

/// Least indexing system admitting every declared H/K.
IndexingSystem generate(const LatticePtr& lattice, const std::vector<NormPair>& declared,
                        const std::vector<Closure>& order = kDefaultClosureOrder);
/// Least indexing system containing ix and the declared orbits.
IndexingSystem generate_from(const IndexingSystem& ix, const std::vector<NormPair>& declared,
                             const std::vector<Closure>& order = kDefaultClosureOrder);

struct EnumerationLimits {
  std::size_t max_conjugacy_classes = 12;
};

/// All indexing systems, sorted by size then by flattened admissibility.
std::vector<IndexingSystem> enumerate_all(const LatticePtr& lattice,
                                          EnumerationLimits limits = {});

IndexingSystem meet(const IndexingSystem& a, const IndexingSystem& b);
IndexingSystem join(const IndexingSystem& a, const IndexingSystem& b);
/// a <= b: every orbit admissible in a is admissible in b.
bool leq(const IndexingSystem& a, const IndexingSystem& b);

/// The graph {(h, sigma_h)} of the homomorphism H -> Sigma_n given by an
/// ordered H-set (ordering: realize(T)).
struct GraphSubgroup {
  Subgroup level;
  GSet gset;
  std::size_t degree = 0;
  std::vector<std::pair<Element, Permutation>> members;

  /// Gamma intersected with {1} x Sigma_n is trivial.
  bool meets_symmetric_trivially() const;
};

/// Throws InadmissibleError when ix is given and T is not admissible at H.
GraphSubgroup graph_subgroup(const Subgroup& h, const GSet& t,
                             const IndexingSystem* ix = nullptr);

/// One graph subgroup per conjugacy class in G x Sigma_n: H over G-class
/// representatives, T over admissible H-sets of cardinality n up to
/// isomorphism.
std::vector<GraphSubgroup> family_of(const IndexingSystem& ix, std::size_t n);

}  // namespace eqnorm
