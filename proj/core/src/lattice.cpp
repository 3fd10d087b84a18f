#include "eqnorm/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "eqnorm/errors.hpp"

namespace eqnorm {

const FiniteGroup& Subgroup::group() const { return lattice_->group(); }
std::span<const Element> Subgroup::members() const { return lattice_->members(id_); }
std::size_t Subgroup::order() const { return lattice_->order(id_); }
bool Subgroup::contains(Element g) const { return lattice_->contains(id_, g); }
bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return lattice_ == other.lattice_ && lattice_->is_subgroup_of(id_, other.id_);
}
std::string Subgroup::name() const { return lattice_->name(id_); }

namespace {

std::string structural_label(const FiniteGroup& g, std::span<const Element> members) {
  const std::size_t n = members.size();
  if (n == 1) return "e";
  std::size_t max_order = 1, involutions = 0;
  bool has4 = false, has6 = false;
  for (Element x : members) {
    std::size_t o = g.element_order(x);
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
    if (o == 4) has4 = true;
    if (o == 6) has6 = true;
  }
  if (max_order == n) return "C" + std::to_string(n);
  bool abelian = true;
  for (Element a : members)
    for (Element b : members)
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  switch (n) {
    case 4: return "V4";
    case 6: return "S3";
    case 8:
      if (abelian) return max_order == 4 ? "C4xC2" : "C2^3";
      return involutions == 5 ? "D4" : "Q8";
    case 9: return "C3xC3";
    case 12:
      if (abelian) return "C6xC2";
      if (has6) return "D6";
      if (has4) return "Dic3";
      return "A4";
    case 24:
      if (!abelian && max_order == 4 && involutions == 9) return "S4";
      break;
    default: break;
  }
  return (abelian ? "Ab" : "H") + std::to_string(n);
}

}  // namespace

std::vector<Element> SubgroupLattice::close(std::vector<Element> seeds) const {
  const FiniteGroup& g = *group_;
  std::vector<bool> in(g.order(), false);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : seeds) {
      Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticePtr SubgroupLattice::build(GroupPtr group, LatticeLimits limits) {
  if (group->order() > limits.max_group_order) {
    throw CapExceeded("group order " + std::to_string(group->order()) +
                      " exceeds subgroup-lattice cap " +
                      std::to_string(limits.max_group_order));
  }
  auto lattice = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lattice->group_ = std::move(group);
  const FiniteGroup& g = *lattice->group_;

  std::set<std::vector<Element>> found;
  for (Element x = 0; x < g.order(); ++x) found.insert(lattice->close({x}));
  std::vector<std::vector<Element>> work(found.begin(), found.end());
  // Join closure: every subgroup is a join of cyclic subgroups.
  std::vector<std::vector<Element>> cyclic = work;
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& c : cyclic) {
      if (std::includes(work[i].begin(), work[i].end(), c.begin(), c.end())) continue;
      std::vector<Element> seeds = c;
      seeds.insert(seeds.end(), work[i].begin(), work[i].end());
      auto joined = lattice->close(std::move(seeds));
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  lattice->finish(std::move(work));
  return lattice;
}

LatticePtr SubgroupLattice::from_member_lists(GroupPtr group,
                                              std::vector<std::vector<Element>> lists) {
  auto lattice = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lattice->group_ = std::move(group);
  const FiniteGroup& g = *lattice->group_;
  std::set<std::vector<Element>> seen;
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    for (Element x : list)
      if (x >= g.order()) throw InputError("cached subgroup member out of range");
    if (lattice->close(list) != list) throw InputError("cached member list is not a subgroup");
    seen.insert(list);
  }
  for (Element x = 0; x < g.order(); ++x)
    if (!seen.contains(lattice->close({x})))
      throw InputError("cached lattice is missing a cyclic subgroup");
  lattice->finish(std::vector<std::vector<Element>>(seen.begin(), seen.end()));
  // Completeness: closed under joins.
  for (std::size_t a = 0; a < lattice->size(); ++a)
    for (std::size_t b = a + 1; b < lattice->size(); ++b) {
      std::vector<Element> seeds(lattice->members_[a]);
      seeds.insert(seeds.end(), lattice->members_[b].begin(), lattice->members_[b].end());
      if (!lattice->find(lattice->close(seeds)))
        throw InputError("cached lattice is not closed under joins");
    }
  return lattice;
}

void SubgroupLattice::finish(std::vector<std::vector<Element>> lists) {
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  members_ = std::move(lists);
  const FiniteGroup& g = *group_;
  const std::size_t n = members_.size();

  membership_.assign(n, std::vector<bool>(g.order(), false));
  for (std::size_t i = 0; i < n; ++i)
    for (Element x : members_[i]) membership_[i][x] = true;

  inclusion_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (members_[a].size() > members_[b].size() ||
          members_[b].size() % members_[a].size() != 0)
        continue;
      bool sub = true;
      for (Element x : members_[a])
        if (!membership_[b][x]) {
          sub = false;
          break;
        }
      inclusion_[a * n + b] = sub;
    }

  std::map<std::vector<Element>, std::uint32_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(members_[i], static_cast<std::uint32_t>(i));
  conj_.resize(g.order() * n);
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Element> c;
      c.reserve(members_[a].size());
      for (Element y : members_[a]) c.push_back(g.conjugate(x, y));
      std::sort(c.begin(), c.end());
      conj_[x * n + a] = SubgroupId{index.at(c)};
    }
  }

  class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != n) continue;
    std::set<SubgroupId> cls;
    for (Element x = 0; x < g.order(); ++x) cls.insert(conj_[x * n + a]);
    for (SubgroupId b : cls) class_of_[b.value] = classes_.size();
    classes_.emplace_back(cls.begin(), cls.end());
  }

  below_.assign(n, {});
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      if (inclusion_[k * n + h]) below_[h].push_back(SubgroupId{static_cast<std::uint32_t>(k)});

  rep_within_.assign(n * n, SubgroupId{static_cast<std::uint32_t>(n)});
  reps_within_.assign(n, {});
  for (std::size_t h = 0; h < n; ++h) {
    std::set<SubgroupId> reps;
    for (SubgroupId k : below_[h]) {
      SubgroupId best = k;
      for (Element x : members_[h]) best = std::min(best, conj_[x * n + k.value]);
      rep_within_[h * n + k.value] = best;
      reps.insert(best);
    }
    reps_within_[h].assign(reps.begin(), reps.end());
  }

  generators_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Element> gens;
    std::vector<Element> span{g.identity()};
    for (Element x : members_[i]) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      span = close(gens);
    }
    generators_[i] = std::move(gens);
  }

  labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) labels_[i] = structural_label(g, members_[i]);
}

std::optional<SubgroupId> SubgroupLattice::find(std::span<const Element> sorted_members) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), sorted_members, [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it == members_.end() || !std::equal(it->begin(), it->end(), sorted_members.begin(),
                                          sorted_members.end()))
    return std::nullopt;
  return SubgroupId{static_cast<std::uint32_t>(it - members_.begin())};
}

SubgroupId SubgroupLattice::closure(std::span<const Element> elements) const {
  auto c = close(std::vector<Element>(elements.begin(), elements.end()));
  return *find(c);
}

SubgroupId SubgroupLattice::intersect(SubgroupId a, SubgroupId b) const {
  std::vector<Element> out;
  for (Element x : members_[a.value])
    if (membership_[b.value][x]) out.push_back(x);
  return *find(out);
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  std::vector<Element> seeds(generators_[a.value]);
  seeds.insert(seeds.end(), generators_[b.value].begin(), generators_[b.value].end());
  return closure(seeds);
}

std::optional<Element> SubgroupLattice::conjugation_witness(SubgroupId a, SubgroupId b) const {
  for (Element x = 0; x < group_->order(); ++x)
    if (conjugate(a, x) == b) return x;
  return std::nullopt;
}

std::optional<Element> SubgroupLattice::subconjugacy_witness(SubgroupId k, SubgroupId h) const {
  for (Element x = 0; x < group_->order(); ++x)
    if (is_subgroup_of(conjugate(k, x), h)) return x;
  return std::nullopt;
}

SubgroupId SubgroupLattice::rep_within(SubgroupId h, SubgroupId k) const {
  SubgroupId r = rep_within_[h.value * size() + k.value];
  if (r.value >= size()) {
    throw PreconditionError("subgroup " + name(k) + " is not contained in " + name(h));
  }
  return r;
}

Element SubgroupLattice::rep_witness_within(SubgroupId h, SubgroupId k) const {
  SubgroupId r = rep_within(h, k);
  for (Element x : members_[h.value])
    if (conjugate(k, x) == r) return x;
  throw std::logic_error("rep_witness_within: no witness");
}

SubgroupId SubgroupLattice::normalizer(SubgroupId h) const {
  std::vector<Element> out;
  for (Element x = 0; x < group_->order(); ++x)
    if (conjugate(h, x) == h) out.push_back(x);
  return *find(out);
}

std::string SubgroupLattice::name(SubgroupId id) const {
  if (id == trivial()) return "e";
  const std::string& l = labels_[id.value];
  std::size_t count = 0;
  bool is_rep = false;
  for (const auto& cls : classes_) {
    if (labels_[cls.front().value] != l) continue;
    ++count;
    if (cls.front() == id) is_rep = true;
  }
  if (count == 1 && is_rep) return l;
  return "#" + std::to_string(id.value);
}

SubgroupId SubgroupLattice::parse_name(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "e" || text == "1") return trivial();
  if (text == "G") return whole();
  if (!text.empty() && text.front() == '#') {
    std::uint32_t k = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size() || k >= size())
      throw InputError("unknown subgroup id '" + std::string(text) + "'");
    return SubgroupId{k};
  }
  std::vector<SubgroupId> hits;
  for (const auto& cls : classes_)
    if (labels_[cls.front().value] == text) hits.push_back(cls.front());
  if (hits.empty()) throw InputError("unknown subgroup id '" + std::string(text) + "'");
  if (hits.size() > 1) {
    std::string msg = "ambiguous subgroup id '" + std::string(text) + "'; use one of";
    for (SubgroupId h : hits) msg += " #" + std::to_string(h.value);
    throw InputError(msg);
  }
  return hits.front();
}

LatticePtr subgroups(GroupPtr group, LatticeLimits limits) {
  return SubgroupLattice::build(std::move(group), limits);
}

DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h) {
  return double_cosets(k, h, k.lattice().subgroup(k.lattice().whole()));
}

DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h,
                                       const Subgroup& ambient) {
  if (k.lattice_ptr() != h.lattice_ptr() || k.lattice_ptr() != ambient.lattice_ptr())
    throw InputError("double_cosets: subgroups belong to different groups");
  if (!k.is_subgroup_of(ambient) || !h.is_subgroup_of(ambient))
    throw PreconditionError("double_cosets: subgroups are not contained in the ambient group");
  const FiniteGroup& g = k.group();
  DoubleCosetDecomposition out{k, h, ambient, {}, {}};
  std::vector<bool> covered(g.order(), false);
  for (Element a : ambient.members()) {
    if (covered[a]) continue;
    std::size_t size = 0;
    for (Element x : k.members()) {
      Element xa = g.mul(x, a);
      for (Element y : h.members()) {
        Element z = g.mul(xa, y);
        if (!covered[z]) {
          covered[z] = true;
          ++size;
        }
      }
    }
    out.representatives.push_back(a);
    out.sizes.push_back(size);
  }
  return out;
}

std::optional<Element> is_subconjugate(const Subgroup& k, const Subgroup& h) {
  if (k.lattice_ptr() != h.lattice_ptr())
    throw InputError("is_subconjugate: subgroups belong to different groups");
  return k.lattice().subconjugacy_witness(k.id(), h.id());
}

Subgroup normalizer(const Subgroup& h) {
  return h.lattice().subgroup(h.lattice().normalizer(h.id()));
}

std::size_t weyl_order(const Subgroup& h) { return h.lattice().weyl_order(h.id()); }

}  // namespace eqnorm
