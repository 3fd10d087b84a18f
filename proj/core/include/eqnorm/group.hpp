#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqnorm {

using Point = std::uint32_t;
/// Index of an element in a FiniteGroup's element list. The identity is 0.
using Element = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Composition is right-to-left:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}} for (0 1 2).
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

struct GroupLimits {
  std::size_t max_elements = 10000;
};

/// A finite permutation group with an explicit, deterministically ordered
/// element list. Elements are ordered breadth-first from the identity
/// (layers by word length in the generators), lexicographically by image
/// list within a layer.
class FiniteGroup {
 public:
  /// Closes the generators under composition. Throws InputError for a
  /// generator of the wrong degree and CapExceeded when the closure grows
  /// beyond limits.max_elements.
  static std::shared_ptr<const FiniteGroup> make(
      std::size_t degree, std::vector<Permutation> generators, std::string name,
      GroupLimits limits = {});

  /// Converts a Cayley table (table[a][b] = index of a*b) to the right
  /// regular permutation representation x -> x * g^{-1}.
  static std::shared_ptr<const FiniteGroup> from_cayley_table(
      const std::vector<std::vector<std::size_t>>& table, std::string name,
      GroupLimits limits = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Element index of the k-th generator.
  Element generator_element(std::size_t k) const { return generator_elements_[k]; }

  const Permutation& element(Element e) const { return elements_[e]; }
  std::optional<Element> index_of(const Permutation& p) const;

  Element identity() const { return 0; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const { return inverses_[a]; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(Element a) const { return element_orders_[a]; }

  /// Generator indices w_1 ... w_k with element == gen[w_1] * ... * gen[w_k].
  std::vector<std::size_t> word(Element e) const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Element> generator_elements_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> element_orders_;
  // parent_[e] = (p, s) with element(e) = gen[s] * element(p); root has s = npos.
  std::vector<std::pair<Element, std::size_t>> parent_;
  std::vector<Element> table_;  // dense multiplication table if small enough
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace eqnorm
