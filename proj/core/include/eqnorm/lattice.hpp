#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqnorm/group.hpp"

namespace eqnorm {

/// Position of a subgroup in its lattice. Lattice positions are sorted by
/// (order, canonical member list), so the trivial subgroup is 0 and the
/// whole group is last.
struct SubgroupId {
  std::uint32_t value = 0;
  friend auto operator<=>(const SubgroupId&, const SubgroupId&) = default;
};

struct LatticeLimits {
  std::size_t max_group_order = 48;
};

class SubgroupLattice;
using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Handle to one subgroup of a lattice.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(LatticePtr lattice, SubgroupId id) : lattice_(std::move(lattice)), id_(id) {}

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  SubgroupId id() const { return id_; }
  const FiniteGroup& group() const;

  /// Sorted element indices; this list is the canonical id.
  std::span<const Element> members() const;
  std::size_t order() const;
  bool contains(Element g) const;
  bool is_subgroup_of(const Subgroup& other) const;
  std::string name() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.lattice_ == b.lattice_ && a.id_ == b.id_;
  }

 private:
  LatticePtr lattice_;
  SubgroupId id_;
};

/// All subgroups of a finite group together with inclusion, conjugation and
/// relative conjugacy data. Immutable after construction.
class SubgroupLattice : public std::enable_shared_from_this<SubgroupLattice> {
 public:
  /// Enumerates subgroups by closing the cyclic subgroups under pairwise
  /// joins. Throws CapExceeded if |G| > limits.max_group_order.
  static LatticePtr build(GroupPtr group, LatticeLimits limits = {});
  /// Rebuilds a lattice from previously enumerated member lists (cache load).
  /// Every list is re-verified as a subgroup; the set must be complete.
  static LatticePtr from_member_lists(GroupPtr group,
                                      std::vector<std::vector<Element>> member_lists);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return members_.size(); }

  Subgroup subgroup(SubgroupId id) const { return Subgroup(shared_from_this(), id); }
  SubgroupId trivial() const { return SubgroupId{0}; }
  SubgroupId whole() const { return SubgroupId{static_cast<std::uint32_t>(size() - 1)}; }

  std::span<const Element> members(SubgroupId id) const { return members_[id.value]; }
  std::size_t order(SubgroupId id) const { return members_[id.value].size(); }
  bool contains(SubgroupId id, Element g) const {
    return membership_[id.value][g];
  }
  /// a <= b.
  bool is_subgroup_of(SubgroupId a, SubgroupId b) const {
    return inclusion_[a.value * size() + b.value];
  }
  std::optional<SubgroupId> find(std::span<const Element> sorted_members) const;
  /// The subgroup generated by the given elements.
  SubgroupId closure(std::span<const Element> elements) const;
  SubgroupId intersect(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  /// Deterministic generating set: scan members in order, keep any element
  /// not in the span of those kept so far.
  const std::vector<Element>& generators(SubgroupId id) const { return generators_[id.value]; }

  /// g A g^{-1}.
  SubgroupId conjugate(SubgroupId a, Element g) const {
    return conj_[static_cast<std::size_t>(g) * size() + a.value];
  }
  /// Least g with g A g^{-1} = B, if any.
  std::optional<Element> conjugation_witness(SubgroupId a, SubgroupId b) const;
  /// Least g with g K g^{-1} <= H, if any.
  std::optional<Element> subconjugacy_witness(SubgroupId k, SubgroupId h) const;

  /// G-conjugacy classes; each class is sorted and its first entry is the
  /// representative.
  const std::vector<std::vector<SubgroupId>>& classes() const { return classes_; }
  std::size_t class_index(SubgroupId id) const { return class_of_[id.value]; }
  SubgroupId class_rep(SubgroupId id) const { return classes_[class_of_[id.value]].front(); }
  bool is_normal(SubgroupId id) const { return classes_[class_of_[id.value]].size() == 1; }

  /// Subgroups contained in H, in lattice order.
  const std::vector<SubgroupId>& subgroups_of(SubgroupId h) const { return below_[h.value]; }
  /// Representative of the H-conjugacy class of K (K <= H).
  SubgroupId rep_within(SubgroupId h, SubgroupId k) const;
  /// Representatives of the H-conjugacy classes of subgroups of H.
  const std::vector<SubgroupId>& class_reps_within(SubgroupId h) const {
    return reps_within_[h.value];
  }
  /// Least h in H with h K h^{-1} = rep_within(H, K).
  Element rep_witness_within(SubgroupId h, SubgroupId k) const;

  SubgroupId normalizer(SubgroupId h) const;
  std::size_t weyl_order(SubgroupId h) const { return order(normalizer(h)) / order(h); }

  /// Structural label such as "C4", "V4", "S3", "D4", "Q8", "A4".
  const std::string& label(SubgroupId id) const { return labels_[id.value]; }
  /// Printable id: the label when it names a unique conjugacy class and id
  /// is that class's representative, "e" for the trivial subgroup, else "#k".
  std::string name(SubgroupId id) const;
  /// Inverse of name(); also accepts "G", "1", "#k" and any label naming a
  /// unique conjugacy class (resolved to the representative).
  SubgroupId parse_name(std::string_view text) const;

 private:
  SubgroupLattice() = default;
  void finish(std::vector<std::vector<Element>> member_lists);
  std::vector<Element> close(std::vector<Element> seeds) const;

  GroupPtr group_;
  std::vector<std::vector<Element>> members_;
  std::vector<std::vector<bool>> membership_;
  std::vector<bool> inclusion_;
  std::vector<SubgroupId> conj_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<SubgroupId>> below_;
  std::vector<SubgroupId> rep_within_;  // [h * size + k]
  std::vector<std::vector<SubgroupId>> reps_within_;
  std::vector<std::vector<Element>> generators_;
  std::vector<std::string> labels_;
};

/// Representatives g of the double cosets K g H inside an ambient subgroup
/// containing both (default: the whole group). Representatives are the least
/// element index not yet covered.
struct DoubleCosetDecomposition {
  Subgroup left;
  Subgroup right;
  Subgroup ambient;
  std::vector<Element> representatives;
  std::vector<std::size_t> sizes;
};

LatticePtr subgroups(GroupPtr group, LatticeLimits limits = {});
DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h);
DoubleCosetDecomposition double_cosets(const Subgroup& k, const Subgroup& h,
                                       const Subgroup& ambient);
std::optional<Element> is_subconjugate(const Subgroup& k, const Subgroup& h);
Subgroup normalizer(const Subgroup& h);
std::size_t weyl_order(const Subgroup& h);

}  // namespace eqnorm
