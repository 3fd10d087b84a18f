#pragma once

// Brute-force reference implementations used to check the library. They work
// on raw permutation image lists and share no algorithms with eqnorm.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eqnorm/eqnorm.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Elems = std::vector<std::size_t>;  // sorted oracle element indices

/// Naive closure of the generators; elements sorted by image list.
struct Group {
  std::vector<Perm> elems;
  std::map<Perm, std::size_t> index;

  explicit Group(const eqnorm::FiniteGroup& g);
  std::size_t order() const { return elems.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t identity() const;
  /// Oracle index of a library element.
  std::size_t from_library(const eqnorm::FiniteGroup& g, eqnorm::Element e) const;
  Elems from_library(const eqnorm::FiniteGroup& g, std::span<const eqnorm::Element> es) const;
  bool is_subgroup(const Elems& s) const;
};

/// All subgroups: every subset tested for closure when |G| <= 12, otherwise
/// closures of all element pairs joined until stable.
std::vector<Elems> all_subgroups(const Group& g);

/// Explicit action of a subgroup `level` (sorted elements) on points 0..n-1.
struct Action {
  Elems level;
  std::vector<std::vector<std::uint32_t>> act;  // act[i][x] for level[i]
  std::size_t size() const { return act.empty() ? 0 : act[0].size(); }
};

Action point(const Group& g, const Elems& level);
Action empty(const Elems& level);
/// level acting on the left cosets of k.
Action cosets(const Group& g, const Elems& level, const Elems& k);
Action disjoint_union(const Action& a, const Action& b);
Action product(const Group& g, const Action& a, const Action& b);
Action restrict_to(const Group& g, const Action& a, const Elems& k);
/// level x_k X for an action of k.
Action induce(const Group& g, const Action& a, const Elems& level);
/// Element-level model of a library G-set.
Action from_gset(const Group& g, const eqnorm::GSet& t);

std::size_t orbit_count(const Action& a);
std::size_t fixed_points(const Group& g, const Action& a, const Elems& j);
/// Sorted multiset of point stabilizers, one per orbit, each replaced by the
/// least conjugate under the level. Equal keys iff isomorphic actions.
std::vector<Elems> iso_key(const Group& g, const Action& a);
bool isomorphic(const Group& g, const Action& a, const Action& b);

/// Exponent of every variable of e, evaluated element by element.
std::map<std::string, Action> exponents(const Group& g, const eqnorm::NormExpr& e);

/// Every single-variable expression with at most max_depth operator nodes
/// on a path: restrictions and norms to any subgroup, binary smashes at a
/// common level, and internal norms over nonempty sets of at most
/// max_npow_cardinality points. Duplicates by printed form are dropped.
std::vector<eqnorm::NormExpr> all_expressions(const eqnorm::LatticePtr& lattice, std::size_t max_depth,
                                              std::size_t max_npow_cardinality = 2);

/// Transfer-system check of a candidate set of admissible pairs: the relation
/// K -> H (H/K admissible) over all subgroups must contain equality and be
/// transitive, conjugation invariant and closed under restriction.
bool is_transfer_system(const Group& g, const std::vector<Elems>& subs,
                        const std::vector<std::vector<bool>>& rel);

}  // namespace oracle
