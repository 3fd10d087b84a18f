#include "eqnorm/rep.hpp"

#include <algorithm>
#include <optional>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {

std::size_t position(const Subgroup& h, Element g) {
  auto m = h.members();
  auto it = std::lower_bound(m.begin(), m.end(), g);
  if (it == m.end() || *it != g) throw PreconditionError("element is not in the acting subgroup");
  return static_cast<std::size_t>(it - m.begin());
}

void require_square(const std::vector<Matrix>& mats, std::size_t& dim) {
  if (mats.empty()) return;
  dim = mats.front().rows();
  for (const auto& m : mats)
    if (m.rows() != dim || m.cols() != dim)
      throw InputError("representation matrices must be square of a common dimension");
}

// Conjugacy classes of elements of H under H, as lists of member positions.
std::vector<std::vector<std::size_t>> element_classes(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  auto members = h.members();
  std::vector<std::size_t> cls(members.size(), members.size());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (cls[i] != members.size()) continue;
    std::vector<std::size_t> c;
    for (Element x : members) {
      std::size_t p = position(h, g.conjugate(x, members[i]));
      if (cls[p] == members.size()) {
        cls[p] = out.size();
        c.push_back(p);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

void require_same_group(const Rep& v, const Rep& w) {
  if (!(v.group() == w.group())) throw TypeError("representations are over different groups");
}

Matrix class_sum(const Rep& v, const std::vector<std::size_t>& cls) {
  Matrix s(v.dimension(), v.dimension());
  for (std::size_t p : cls) s += v.element_matrices()[p];
  return s;
}

// Rows g, columns element classes c: sum_{x in c} chi(x g). For a central
// z = sum_c lambda_c C_c, rho(z) = 0 iff this matrix kills lambda, because the
// trace form of a faithful representation of a semisimple algebra is
// nondegenerate over Q.
Matrix class_trace_system(const Subgroup& h, const std::vector<std::vector<std::size_t>>& classes,
                          const std::vector<Rational>& chi) {
  const FiniteGroup& g = h.group();
  auto members = h.members();
  Matrix a(members.size(), classes.size());
  for (std::size_t r = 0; r < members.size(); ++r)
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t p : classes[c]) a(r, c) += chi[position(h, g.mul(members[p], members[r]))];
  return a;
}

bool kills(const Matrix& a, const std::vector<Rational>& lambda) {
  auto image = a.apply(lambda);
  return std::all_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) == 0; });
}

struct Obstruction {
  std::vector<Rational> class_coefficients;
  Matrix action_on_v;
};

std::optional<Obstruction> find_obstruction(const Rep& v, const Rep& w,
                                            const std::vector<std::vector<std::size_t>>& classes) {
  const Subgroup& h = v.group();
  Matrix aw = class_trace_system(h, classes, character(w));
  Matrix av = class_trace_system(h, classes, character(v));
  for (auto& lambda : nullspace(aw)) {
    if (kills(av, lambda)) continue;
    Matrix z(v.dimension(), v.dimension());
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (sgn(lambda[c]) != 0) z += class_sum(v, classes[c]).scaled(lambda[c]);
    if (z.is_zero()) throw std::logic_error("trace test and class sums disagree");
    return Obstruction{std::move(lambda), std::move(z)};
  }
  return std::nullopt;
}

}  // namespace

Rep Rep::from_element_matrices(Subgroup group, std::vector<Matrix> matrices) {
  if (matrices.size() != group.order())
    throw InputError("need one matrix per element of the acting subgroup");
  Rep r;
  r.group_ = std::move(group);
  require_square(matrices, r.dimension_);
  r.matrices_ = std::move(matrices);
  r.validate();
  return r;
}

Rep Rep::from_generator_matrices(Subgroup group, const std::vector<Matrix>& generators) {
  const SubgroupLattice& lat = group.lattice();
  const auto& gens = lat.generators(group.id());
  if (generators.size() != gens.size())
    throw InputError("need one matrix per generator (" + std::to_string(gens.size()) + ")");
  std::size_t dim = 1;
  require_square(generators, dim);
  const FiniteGroup& g = group.group();
  std::vector<std::optional<Matrix>> mats(group.order());
  std::vector<Element> order{g.identity()};
  mats[position(group, g.identity())] = Matrix::identity(dim);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element y = g.mul(gens[s], order[i]);
      std::size_t p = position(group, y);
      if (mats[p]) continue;
      mats[p] = generators[s] * *mats[position(group, order[i])];
      order.push_back(y);
    }
  }
  std::vector<Matrix> out;
  for (auto& m : mats) out.push_back(std::move(*m));
  return from_element_matrices(std::move(group), std::move(out));
}

Rep Rep::from_group_generators(const LatticePtr& lattice, const std::vector<Matrix>& generators) {
  const FiniteGroup& g = lattice->group();
  if (generators.size() != g.generators().size())
    throw InputError("need one matrix per group generator (" + std::to_string(g.generators().size()) + ")");
  std::size_t dim = 1;
  require_square(generators, dim);
  std::vector<Matrix> mats;
  mats.reserve(g.order());
  for (Element e = 0; e < g.order(); ++e) {
    Matrix m = Matrix::identity(dim);
    for (std::size_t s : g.word(e)) m = m * generators[s];
    mats.push_back(std::move(m));
  }
  for (std::size_t s = 0; s < generators.size(); ++s)
    for (Element x = 0; x < g.order(); ++x)
      if (!(generators[s] * mats[x] == mats[g.mul(g.generator_element(s), x)]))
        throw InputError("matrices do not satisfy the defining relations of " + g.name());
  return from_element_matrices(lattice->subgroup(lattice->whole()), std::move(mats));
}

Rep Rep::trivial(Subgroup group, std::size_t dimension) {
  std::vector<Matrix> mats(group.order(), Matrix::identity(dimension));
  Rep r;
  r.group_ = std::move(group);
  r.dimension_ = dimension;
  r.matrices_ = std::move(mats);
  return r;
}

void Rep::validate() const {
  const FiniteGroup& g = group_.group();
  if (!(matrix(g.identity()) == Matrix::identity(dimension_)))
    throw InputError("identity does not act as the identity matrix");
  for (Element s : group_.lattice().generators(group_.id()))
    for (Element x : group_.members())
      if (!(matrix(s) * matrix(x) == matrix(g.mul(s, x))))
        throw InputError("matrices do not form a representation");
}

const Matrix& Rep::matrix(Element g) const { return matrices_[position(group_, g)]; }

std::vector<Matrix> Rep::generator_matrices() const {
  std::vector<Matrix> out;
  for (Element s : group_.lattice().generators(group_.id())) out.push_back(matrix(s));
  return out;
}

Rep perm_rep(const GSet& t) {
  Realization r = realize(t);
  std::vector<Matrix> mats;
  for (const auto& row : r.action) {
    Matrix m(r.size(), r.size());
    for (std::size_t x = 0; x < r.size(); ++x) m(row[x], x) = 1;
    mats.push_back(std::move(m));
  }
  Rep out = Rep::from_element_matrices(t.level(), std::move(mats));
  return out;
}

Rep tensor(const Rep& v, const Rep& w) {
  require_same_group(v, w);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < v.element_matrices().size(); ++i)
    mats.push_back(kronecker(v.element_matrices()[i], w.element_matrices()[i]));
  return Rep::from_element_matrices(v.group(), std::move(mats));
}

Rep direct_sum(const Rep& v, const Rep& w) {
  require_same_group(v, w);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < v.element_matrices().size(); ++i)
    mats.push_back(block_sum(v.element_matrices()[i], w.element_matrices()[i]));
  return Rep::from_element_matrices(v.group(), std::move(mats));
}

Rep restrict_rep(const Rep& v, const Subgroup& k) {
  if (!k.is_subgroup_of(v.group())) throw PreconditionError("restrict_rep: not a subgroup");
  std::vector<Matrix> gens;
  for (Element s : k.lattice().generators(k.id())) gens.push_back(v.matrix(s));
  return Rep::from_generator_matrices(k, gens);
}

std::vector<Matrix> hom_basis(const Rep& v, const Rep& w) {
  require_same_group(v, w);
  const std::size_t n = v.dimension(), m = w.dimension();
  const auto& gens = v.group().lattice().generators(v.group().id());
  Matrix system(gens.size() * m * n, m * n);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const Matrix& vs = v.matrix(gens[s]);
    const Matrix& ws = w.matrix(gens[s]);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t row = (s * m + a) * n + c;
        for (std::size_t b = 0; b < n; ++b)
          if (sgn(vs(b, c)) != 0) system(row, a * n + b) += vs(b, c);
        for (std::size_t d = 0; d < m; ++d)
          if (sgn(ws(a, d)) != 0) system(row, d * n + c) -= ws(a, d);
      }
  }
  std::vector<Matrix> out;
  for (const auto& x : nullspace(std::move(system))) {
    Matrix map(m, n);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b) map(a, b) = x[a * n + b];
    out.push_back(std::move(map));
  }
  return out;
}

std::size_t hom_dim(const Rep& v, const Rep& w) { return hom_basis(v, w).size(); }

bool contains_constituents(const Rep& v, const Rep& w) {
  require_same_group(v, w);
  return character_constituents_contained(v.group(), character(v), character(w));
}

bool character_constituents_contained(const Subgroup& h, const std::vector<Rational>& chi_v,
                                      const std::vector<Rational>& chi_w) {
  if (chi_v.size() != h.order() || chi_w.size() != h.order())
    throw PreconditionError("character length differs from the group order");
  if (sgn(chi_v[0]) == 0) return true;
  auto classes = element_classes(h);
  Matrix aw = class_trace_system(h, classes, chi_w);
  Matrix av = class_trace_system(h, classes, chi_v);
  for (const auto& lambda : nullspace(aw))
    if (!kills(av, lambda)) return false;
  return true;
}

std::vector<Rational> character(const Rep& v) {
  std::vector<Rational> chi;
  chi.reserve(v.element_matrices().size());
  for (const auto& m : v.element_matrices()) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    chi.push_back(t);
  }
  return chi;
}

ConstituentRelation constituents_contained(const Rep& v, const Rep& w) {
  require_same_group(v, w);
  ConstituentRelation rel;
  const Subgroup& h = v.group();
  const FiniteGroup& g = h.group();
  const std::size_t n = v.dimension(), m = w.dimension();
  if (n == 0) {
    rel.contained = true;
    return rel;
  }
  auto classes = element_classes(h);
  std::optional<Obstruction> obstruction;
  if (m == 0) {
    // z = identity kills the zero representation.
    std::vector<Rational> lambda(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].front() == 0) lambda[c] = 1;
    obstruction = Obstruction{lambda, Matrix::identity(n)};
  } else {
    obstruction = find_obstruction(v, w, classes);
  }
  if (obstruction) {
    rel.contained = false;
    rel.annihilator.assign(h.order(), Rational(0));
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t p : classes[c]) rel.annihilator[p] = obstruction->class_coefficients[c];
    // A nonzero central element acts invertibly on each isotypic piece it
    // does not kill, so z^2 has a nonzero column j and z e_j works.
    const Matrix& z = obstruction->action_on_v;
    Matrix z2 = z * z;
    for (std::size_t j = 0; j < n; ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < n && !nonzero; ++i) nonzero = sgn(z2(i, j)) != 0;
      if (!nonzero) continue;
      rel.outside_vector.resize(n);
      for (std::size_t i = 0; i < n; ++i) rel.outside_vector[i] = z(i, j);
      break;
    }
    if (rel.outside_vector.empty()) throw std::logic_error("central obstruction is nilpotent");
    return rel;
  }

  // Containment: averaged rank-one maps P(E_ij) = sum_g rho_V(g) E_ij rho_W(g)^{-1}.
  rel.contained = true;
  EchelonBasis span(n);
  auto members = h.members();
  for (std::size_t i = 0; i < n && span.rank() < n; ++i) {
    std::vector<Rational> ei(n);
    ei[i] = 1;
    if (span.contains(ei)) continue;
    for (std::size_t j = 0; j < m && span.rank() < n; ++j) {
      Matrix map(n, m);
      for (std::size_t p = 0; p < members.size(); ++p) {
        const Matrix& vg = v.element_matrices()[p];
        const Matrix& wginv = w.matrix(g.inv(members[p]));
        for (std::size_t a = 0; a < n; ++a) {
          if (sgn(vg(a, i)) == 0) continue;
          for (std::size_t b = 0; b < m; ++b)
            if (sgn(wginv(j, b)) != 0) map(a, b) += vg(a, i) * wginv(j, b);
        }
      }
      bool grew = false;
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<Rational> col(n);
        for (std::size_t a = 0; a < n; ++a) col[a] = map(a, b);
        grew = span.insert(std::move(col)) || grew;
      }
      if (grew) rel.spanning_maps.push_back(std::move(map));
    }
  }
  if (span.rank() < n) throw std::logic_error("equivariant images fail to span despite containment");
  return rel;
}

bool verify_certificate(const ConstituentRelation& rel, const Rep& v, const Rep& w) {
  require_same_group(v, w);
  const Subgroup& h = v.group();
  const std::size_t n = v.dimension(), m = w.dimension();
  if (rel.contained) {
    if (n == 0) return true;
    Matrix images(n, m * rel.spanning_maps.size());
    for (std::size_t k = 0; k < rel.spanning_maps.size(); ++k) {
      const Matrix& map = rel.spanning_maps[k];
      if (map.rows() != n || map.cols() != m) return false;
      for (Element s : h.lattice().generators(h.id()))
        if (!(map * w.matrix(s) == v.matrix(s) * map)) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) images(a, k * m + b) = map(a, b);
    }
    return rank(std::move(images)) == n;
  }
  if (rel.annihilator.size() != h.order() || rel.outside_vector.size() != n) return false;
  Matrix zw(m, m), zv(n, n);
  auto members = h.members();
  for (std::size_t p = 0; p < members.size(); ++p) {
    if (sgn(rel.annihilator[p]) == 0) continue;
    zw += w.matrix(members[p]).scaled(rel.annihilator[p]);
    zv += v.matrix(members[p]).scaled(rel.annihilator[p]);
  }
  if (!zw.is_zero()) return false;
  auto image = zv.apply(rel.outside_vector);
  return std::any_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) != 0; });
}

Universe::Universe(LatticePtr lattice, std::vector<Rep> generators, std::string name)
    : lattice_(std::move(lattice)), name_(std::move(name)) {
  Subgroup whole = lattice_->subgroup(lattice_->whole());
  bool has_trivial = false;
  for (const auto& r : generators) {
    if (!(r.group() == whole)) throw InputError("universe generators must be representations of G");
    if (r.dimension() == 1) {
      bool trivial = true;
      for (const auto& m : r.element_matrices()) trivial = trivial && m == Matrix::identity(1);
      has_trivial = has_trivial || trivial;
    }
  }
  if (!has_trivial) generators.insert(generators.begin(), Rep::trivial(whole));
  generators_ = std::move(generators);
  witness_ = generators_.front();
  for (std::size_t i = 1; i < generators_.size(); ++i) witness_ = direct_sum(witness_, generators_[i]);
  character_ = eqnorm::character(witness_);
}

namespace {
void require_nonempty_at(const Subgroup& h, const GSet& t) {
  if (!(t.level() == h)) throw TypeError("G-set is not at level " + h.name());
  if (t.is_empty())
    throw PreconditionError("admissibility of the empty set is a convention, not a constituent test");
}
}  // namespace

namespace {

// Characters at H of U_fin and of R{T} (x) U_fin.
std::pair<std::vector<Rational>, std::vector<Rational>> characters_at(const Universe& u,
                                                                      const Subgroup& h,
                                                                      const GSet& t) {
  Realization r = realize(t);
  auto members = h.members();
  std::vector<Rational> chi_w, chi_v;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < r.size(); ++x) fixed += r.action[i][x] == x;
    chi_w.push_back(u.character()[members[i]]);
    chi_v.push_back(chi_w.back() * static_cast<unsigned long>(fixed));
  }
  return {std::move(chi_v), std::move(chi_w)};
}

}  // namespace

bool admissible_for_universe(const Universe& u, const Subgroup& h, const GSet& t) {
  require_nonempty_at(h, t);
  auto [chi_v, chi_w] = characters_at(u, h, t);
  return character_constituents_contained(h, chi_v, chi_w);
}

ConstituentRelation admissibility_certificate(const Universe& u, const Subgroup& h, const GSet& t) {
  require_nonempty_at(h, t);
  Rep w = restrict_rep(u.finite_witness(), h);
  Rep v = tensor(perm_rep(t), w);
  ConstituentRelation rel = constituents_contained(v, w);
  if (!verify_certificate(rel, v, w)) throw std::logic_error("admissibility certificate failed to verify");
  return rel;
}

IndexingSystem indexing_system_of_universe(const Universe& u) {
  const SubgroupLattice& lat = u.lattice();
  IndexingSystem ix(u.lattice_ptr(), u.name());
  for (std::size_t hi = 0; hi < lat.size(); ++hi) {
    SubgroupId h{static_cast<std::uint32_t>(hi)};
    Subgroup hs = lat.subgroup(h);
    for (SubgroupId k : lat.class_reps_within(h)) {
      if (k == h) continue;
      auto [chi_v, chi_w] = characters_at(u, hs, GSet::orbit(hs, k));
      ix.set(h, k, character_constituents_contained(hs, chi_v, chi_w));
    }
  }
  return ix;
}

bool unisum_check(const Universe& u, const Subgroup& h, const GSet& t) {
  require_nonempty_at(h, t);
  auto [chi_v, chi_w] = characters_at(u, h, t);
  if (!character_constituents_contained(h, chi_v, chi_w))
    throw PreconditionError("unisum_check: T is not admissible");
  return character_constituents_contained(h, chi_w, chi_v);
}

}  // namespace eqnorm
