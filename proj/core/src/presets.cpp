#include "eqnorm/presets.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {

Permutation cycle(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
  return Permutation::from_cycles(n, {c});
}

// Left multiplication by i and j on {+-1, +-i, +-j, +-k}; index = unit + 4 * negative.
std::vector<Permutation> quaternion_generators() {
  // unit_mul[a][b] = (unit, sign flip) of a * b for units 1, i, j, k.
  const std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<Permutation> gens;
  for (int a : {1, 2}) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      auto [u, flip] = unit_mul[a][x % 4];
      int neg = (x / 4) ^ flip;
      images[x] = static_cast<Point>(u + 4 * neg);
    }
    gens.emplace_back(std::move(images));
  }
  return gens;
}

SubgroupId unique_of_order(const SubgroupLattice& lat, std::size_t order) {
  std::optional<SubgroupId> found;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    SubgroupId id{static_cast<std::uint32_t>(i)};
    if (lat.order(id) != order) continue;
    if (found) throw std::logic_error("preset subgroup of order " + std::to_string(order) + " is not unique");
    found = id;
  }
  if (!found) throw std::logic_error("preset subgroup of order " + std::to_string(order) + " is missing");
  return *found;
}

Rep coset_rep(const LatticePtr& lattice, SubgroupId k) {
  return perm_rep(GSet::orbit(lattice->subgroup(lattice->whole()), k));
}

Matrix scalar(long v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {{"Cp", "C3"}, {"Cp2", "C9"}, {"Cp3", "C27"}};
  return a;
}

}  // namespace

std::vector<std::string> group_preset_names() {
  return {"trivial", "C2", "C3", "C4", "C6", "C8", "C9", "C27", "S3", "D4", "Q8", "A4", "S4"};
}

std::string canonical_group_preset(std::string_view name) {
  std::string n(name);
  if (auto it = aliases().find(n); it != aliases().end()) return it->second;
  for (const auto& p : group_preset_names())
    if (p == n) return n;
  throw InputError("unknown group preset '" + n + "'");
}

GroupPtr preset_group(std::string_view name, GroupLimits limits) {
  std::string n = canonical_group_preset(name);
  if (n == "trivial") return FiniteGroup::make(1, {}, n, limits);
  if (n.size() > 1 && n[0] == 'C') {
    std::size_t order = std::stoul(n.substr(1));
    return FiniteGroup::make(order, {cycle(order)}, n, limits);
  }
  if (n == "S3")
    return FiniteGroup::make(3, {cycle(3), Permutation::from_cycles(3, {{0, 1}})}, n, limits);
  if (n == "D4")
    return FiniteGroup::make(4, {cycle(4), Permutation::from_cycles(4, {{1, 3}})}, n, limits);
  if (n == "Q8") return FiniteGroup::make(8, quaternion_generators(), n, limits);
  if (n == "A4")
    return FiniteGroup::make(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                                 Permutation::from_cycles(4, {{0, 1}, {2, 3}})},
                             n, limits);
  if (n == "S4")
    return FiniteGroup::make(4, {cycle(4), Permutation::from_cycles(4, {{0, 1}})}, n, limits);
  throw InputError("unknown group preset '" + n + "'");
}

Universe trivial_universe(const LatticePtr& lattice) {
  return Universe(lattice, {}, "trivial-" + lattice->group().name());
}

Universe complete_universe(const LatticePtr& lattice) {
  return Universe(lattice, {coset_rep(lattice, lattice->trivial())},
                  "complete-" + lattice->group().name());
}

// C2, S3: the sign representation. C3: the 2-dimensional rational
// rotation. Otherwise the permutation representation on G/N for a normal
// subgroup N: C4, C6, C8 use N of order 2; C9, C27 order 3; D4 and Q8 their
// centres; A4 the Klein subgroup; S4 the alternating subgroup.
Universe mixed_universe(const LatticePtr& lattice, std::string_view group_preset) {
  std::string n = canonical_group_preset(group_preset);
  const SubgroupLattice& lat = *lattice;
  std::vector<Rep> gens;
  if (n == "C2") {
    gens.push_back(Rep::from_group_generators(lattice, {scalar(-1)}));
  } else if (n == "S3") {
    gens.push_back(Rep::from_group_generators(lattice, {scalar(1), scalar(-1)}));
  } else if (n == "C3") {
    Matrix r(2, 2);
    r(0, 1) = -1;
    r(1, 0) = 1;
    r(1, 1) = -1;
    gens.push_back(Rep::from_group_generators(lattice, {r}));
  } else if (n == "C4" || n == "C6" || n == "C8" || n == "D4" || n == "Q8") {
    SubgroupId k = n == "D4" ? *lat.find(std::vector<Element>{0, *lat.group().index_of(
                                   Permutation::from_cycles(4, {{0, 2}, {1, 3}}))})
                             : unique_of_order(lat, 2);
    gens.push_back(coset_rep(lattice, k));
  } else if (n == "C9" || n == "C27") {
    gens.push_back(coset_rep(lattice, unique_of_order(lat, 3)));
  } else if (n == "A4") {
    gens.push_back(coset_rep(lattice, unique_of_order(lat, 4)));
  } else if (n == "S4") {
    gens.push_back(coset_rep(lattice, unique_of_order(lat, 12)));
  } else {
    throw InputError("no mixed universe for '" + n + "'");
  }
  return Universe(lattice, std::move(gens), n + "-mixed");
}

std::vector<std::string> universe_preset_names() {
  std::vector<std::string> out;
  for (const auto& g : group_preset_names()) {
    out.push_back("trivial-" + g);
    out.push_back("complete-" + g);
    if (g != "trivial") out.push_back(g + "-mixed");
  }
  return out;
}

UniversePresetName parse_universe_preset(std::string_view name) {
  std::string n(name);
  auto dash = n.find('-');
  if (dash == std::string::npos) throw InputError("unknown universe preset '" + n + "'");
  std::string a = n.substr(0, dash), b = n.substr(dash + 1);
  if (a == "trivial" || a == "complete") return {a, canonical_group_preset(b)};
  if (b == "mixed") {
    std::string g = canonical_group_preset(a);
    if (g == "trivial") throw InputError("no mixed universe for the trivial group");
    return {"mixed", g};
  }
  throw InputError("unknown universe preset '" + n + "'");
}

Universe preset_universe(std::string_view name, const LatticePtr& lattice) {
  UniversePresetName p = parse_universe_preset(name);
  const FiniteGroup& g = lattice->group();
  auto names = group_preset_names();
  bool named_preset = std::find(names.begin(), names.end(), g.name()) != names.end();
  if (preset_group(p.group)->order() != g.order() || (named_preset && g.name() != p.group))
    throw InputError("universe preset '" + std::string(name) + "' does not match group " + g.name());
  if (p.kind == "trivial") return trivial_universe(lattice);
  if (p.kind == "complete") return complete_universe(lattice);
  return mixed_universe(lattice, p.group);
}

}  // namespace eqnorm
