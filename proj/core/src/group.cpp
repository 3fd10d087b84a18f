#include "eqnorm/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {
constexpr std::size_t kDenseTableLimit = 2048;
constexpr std::size_t kNoGenerator = std::numeric_limits<std::size_t>::max();
}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("permutation images are not a bijection on 0.." +
                       std::to_string(images_.size() == 0 ? 0 : images_.size() - 1));
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x]) throw InputError("invalid cycle notation");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("permutation degree mismatch");
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[rhs.images_[x]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[images_[x]] = static_cast<Point>(x);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    out << '(';
    Point y = static_cast<Point>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << y;
      first = false;
      y = images_[y];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

GroupPtr FiniteGroup::make(std::size_t degree, std::vector<Permutation> generators,
                           std::string name, GroupLimits limits) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree));
    }
  }
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->name_ = std::move(name);
  group->degree_ = degree;
  group->generators_ = std::move(generators);

  // Breadth-first layers; each layer sorted lexicographically.
  std::vector<Permutation>& elems = group->elements_;
  auto& index = group->index_;
  auto& parent = group->parent_;
  Permutation id = Permutation::identity(degree);
  elems.push_back(id);
  index.emplace(id, 0);
  parent.emplace_back(0, kNoGenerator);
  std::size_t layer_begin = 0;
  while (layer_begin < elems.size()) {
    std::size_t layer_end = elems.size();
    std::vector<std::pair<Permutation, std::pair<Element, std::size_t>>> next;
    std::unordered_map<Permutation, std::size_t, PermutationHash> pending;
    for (std::size_t e = layer_begin; e < layer_end; ++e) {
      for (std::size_t s = 0; s < group->generators_.size(); ++s) {
        Permutation cand = group->generators_[s] * elems[e];
        if (index.contains(cand) || pending.contains(cand)) continue;
        pending.emplace(cand, next.size());
        next.push_back({std::move(cand), {static_cast<Element>(e), s}});
        if (elems.size() + next.size() > limits.max_elements) {
          throw CapExceeded("group closure exceeds " + std::to_string(limits.max_elements) +
                            " elements");
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [perm, par] : next) {
      index.emplace(perm, static_cast<Element>(elems.size()));
      elems.push_back(perm);
      parent.push_back(par);
    }
    layer_begin = layer_end;
  }

  const std::size_t n = elems.size();
  for (const auto& g : group->generators_) group->generator_elements_.push_back(index.at(g));
  group->inverses_.resize(n);
  for (std::size_t e = 0; e < n; ++e) group->inverses_[e] = index.at(elems[e].inverse());
  if (n <= kDenseTableLimit) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group->table_[a * n + b] = index.at(elems[a] * elems[b]);
  }
  group->element_orders_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t k = 1;
    Element x = static_cast<Element>(e);
    while (x != 0) {
      x = group->mul(x, static_cast<Element>(e));
      ++k;
    }
    group->element_orders_[e] = k;
  }
  return group;
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<std::size_t>>& table,
                                        std::string name, GroupLimits limits) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("Cayley table is not square");
    for (std::size_t v : row)
      if (v >= n) throw InputError("Cayley table entry out of range");
  }
  // Find the identity and inverses, then build x -> x * g^{-1}.
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) unit = e;
  }
  if (!unit) throw InputError("Cayley table has no identity");
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<std::size_t> ginv;
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == *unit) ginv = h;
    if (!ginv) throw InputError("Cayley table element has no inverse");
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(table[x][*ginv]);
    gens.emplace_back(std::move(images));
  }
  auto group = make(n, std::move(gens), std::move(name), limits);
  if (group->order() != n) throw InputError("Cayley table is not associative");
  return group;
}

std::optional<Element> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteGroup::mul(Element a, Element b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::vector<std::size_t> FiniteGroup::word(Element e) const {
  std::vector<std::size_t> w;
  while (parent_[e].second != kNoGenerator) {
    w.push_back(parent_[e].second);
    e = parent_[e].first;
  }
  return w;
}

}  // namespace eqnorm
