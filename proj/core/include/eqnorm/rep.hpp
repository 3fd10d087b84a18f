#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqnorm/gset.hpp"
#include "eqnorm/indexing.hpp"
#include "eqnorm/rational.hpp"

namespace eqnorm {

/// A rational matrix representation of a subgroup. Matrices are kept for
/// every member (member order) and checked to form a homomorphism.
class Rep {
 public:
  Rep() = default;
  /// One matrix per lattice generator of `group` (SubgroupLattice::generators).
  static Rep from_generator_matrices(Subgroup group, const std::vector<Matrix>& generators);
  /// One matrix per defining generator of the whole group.
  static Rep from_group_generators(const LatticePtr& lattice, const std::vector<Matrix>& generators);
  static Rep from_element_matrices(Subgroup group, std::vector<Matrix> matrices);
  static Rep trivial(Subgroup group, std::size_t dimension = 1);

  const Subgroup& group() const { return group_; }
  std::size_t dimension() const { return dimension_; }
  const Matrix& matrix(Element g) const;
  const std::vector<Matrix>& element_matrices() const { return matrices_; }
  std::vector<Matrix> generator_matrices() const;

 private:
  void validate() const;
  Subgroup group_;
  std::size_t dimension_ = 0;
  std::vector<Matrix> matrices_;
};

/// R{T}: basis indexed by realize(T), permutation matrices.
Rep perm_rep(const GSet& t);
Rep tensor(const Rep& v, const Rep& w);
Rep direct_sum(const Rep& v, const Rep& w);
Rep restrict_rep(const Rep& v, const Subgroup& k);

/// Dimension of {M : M rho_V(g) = rho_W(g) M for every generator g}.
std::size_t hom_dim(const Rep& v, const Rep& w);
/// A basis of the equivariant maps V -> W (dim W x dim V matrices).
std::vector<Matrix> hom_basis(const Rep& v, const Rep& w);

/// Answer to "is every constituent of V a constituent of W?" with a
/// certificate that can be re-checked without the solver.
struct ConstituentRelation {
  bool contained = false;
  /// On containment: equivariant maps W -> V whose images span V.
  std::vector<Matrix> spanning_maps;
  /// On failure: z in Q[H] (coefficient per member of the acting group)
  /// with rho_W(z) = 0, and v with rho_V(z) v != 0. Every equivariant image
  /// lies in ker rho_V(z), so v is outside their span.
  std::vector<Rational> annihilator;
  std::vector<Rational> outside_vector;
};

/// Traces of the member matrices, in member order.
std::vector<Rational> character(const Rep& v);

/// Decision only: every constituent of V occurs in W. A central element of
/// Q[H] vanishing on W must vanish on V; vanishing is detected through the
/// trace form, so only characters are needed.
bool contains_constituents(const Rep& v, const Rep& w);
bool character_constituents_contained(const Subgroup& h, const std::vector<Rational>& chi_v,
                                      const std::vector<Rational>& chi_w);
ConstituentRelation constituents_contained(const Rep& v, const Rep& w);
/// Independent re-check of a certificate by direct matrix products.
bool verify_certificate(const ConstituentRelation& rel, const Rep& v, const Rep& w);

/// Finitely many rational representations of G, each taken with infinite
/// multiplicity. The trivial 1-dimensional representation is always present.
class Universe {
 public:
  Universe(LatticePtr lattice, std::vector<Rep> generators, std::string name = {});

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::string& name() const { return name_; }
  const std::vector<Rep>& generators() const { return generators_; }
  /// One copy of each generator.
  const Rep& finite_witness() const { return witness_; }
  /// Character of the finite witness on the elements of G.
  const std::vector<Rational>& character() const { return character_; }

 private:
  LatticePtr lattice_;
  std::string name_;
  std::vector<Rep> generators_;
  Rep witness_;
  std::vector<Rational> character_;
};

/// T (nonempty, at level H) is admissible iff every constituent of
/// R{T} (x) U_fin restricted to H occurs in U_fin restricted to H.
bool admissible_for_universe(const Universe& u, const Subgroup& h, const GSet& t);
/// Full relation with certificate, for reporting.
ConstituentRelation admissibility_certificate(const Universe& u, const Subgroup& h, const GSet& t);
IndexingSystem indexing_system_of_universe(const Universe& u);
/// Mutual constituent containment of R{T} (x) U and U at H; T must be a
/// nonempty admissible H-set.
bool unisum_check(const Universe& u, const Subgroup& h, const GSet& t);

}  // namespace eqnorm
