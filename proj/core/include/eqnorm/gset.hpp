#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqnorm/lattice.hpp"

namespace eqnorm {

/// A transitive H-set H/K; the stabilizer is stored as the representative of
/// its H-conjugacy class.
struct Orbit {
  Subgroup level;
  SubgroupId stabilizer;
};

struct OrbitTerm {
  SubgroupId stabilizer;
  std::size_t multiplicity = 0;
  friend bool operator==(const OrbitTerm&, const OrbitTerm&) = default;
};

/// A finite H-set as a multiset of orbits H/K. Stabilizers are normalized
/// to H-class representatives, merged, and sorted by lattice position, so
/// two GSets at the same level are isomorphic iff they compare equal.
class GSet {
 public:
  GSet() = default;
  /// Normalizes the terms; throws PreconditionError if a stabilizer is not
  /// contained in the level.
  GSet(Subgroup level, std::vector<OrbitTerm> orbits);

  static GSet empty(Subgroup level) { return GSet(std::move(level), {}); }
  static GSet point(Subgroup level);
  static GSet orbit(Subgroup level, SubgroupId stabilizer, std::size_t multiplicity = 1);

  const Subgroup& level() const { return level_; }
  const SubgroupLattice& lattice() const { return level_.lattice(); }
  const std::vector<OrbitTerm>& orbits() const { return orbits_; }
  std::size_t cardinality() const;
  std::size_t orbit_count() const;
  bool is_empty() const { return orbits_.empty(); }

  /// Literal text: comma-separated "m*L/K" terms, "0" for the empty set.
  std::string to_string() const;

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.level_ == b.level_ && a.orbits_ == b.orbits_;
  }

 private:
  Subgroup level_;
  std::vector<OrbitTerm> orbits_;
};

/// Parses "C4/C2", "2*C4/e, C4/C4", "2C2/e", "0". The token "H" names the
/// contextual level (required when level_hint is given for "H/H"-style
/// literals). All terms must share one level.
GSet parse_gset(std::string_view text, const LatticePtr& lattice,
                std::optional<SubgroupId> level_hint = std::nullopt);

/// Fixed-point counts |T^J| for J over the H-class representatives of
/// subgroups of the level H (in class_reps_within order).
struct MarkVector {
  Subgroup level;
  std::vector<SubgroupId> subgroups;
  std::vector<std::size_t> entries;
  friend bool operator==(const MarkVector& a, const MarkVector& b) {
    return a.level == b.level && a.subgroups == b.subgroups && a.entries == b.entries;
  }
};

/// Element-level model of a GSet: points are cosets h K of each orbit, the
/// level acts by left translation.
struct Realization {
  struct CosetPoint {
    std::size_t orbit = 0;     // index into the expanded orbit list
    SubgroupId stabilizer;     // of the orbit's base point
    Element representative = 0;  // least element of the coset
  };

  GSet gset;
  std::vector<Element> level_elements;  // level members, lattice order
  std::vector<CosetPoint> points;
  /// action[i][x]: image of point x under level_elements[i].
  std::vector<std::vector<Point>> action;
  /// Index of the first point of each expanded orbit (one entry per copy).
  std::vector<std::size_t> orbit_starts;

  std::size_t size() const { return points.size(); }
  /// Image of x under a group element of the level.
  Point act(Element g, Point x) const;
  std::size_t position_of(Element g) const;
};

using RealizationPtr = std::shared_ptr<const Realization>;

Realization realize(const GSet& t);

/// An element-level action of a level subgroup on points 0..n-1 with its
/// decomposition: iso[p] is the point of the action that corresponds to
/// point p of realize(gset).
struct Decomposition {
  GSet gset;
  std::vector<Point> iso;
};

/// Orbit decomposition of an arbitrary action of `level`; action[i][x] is
/// the image of x under the i-th member of the level.
Decomposition decompose_action(const Subgroup& level,
                               const std::vector<std::vector<Point>>& action);

GSet restrict(const GSet& t, const Subgroup& k);
GSet induce(const GSet& t, const Subgroup& h);
GSet product(const GSet& s, const GSet& t);
GSet coproduct(const GSet& s, const GSet& t);
/// Transport of an L-set to the gLg^{-1}-set c_g T.
GSet conjugate(const GSet& t, Element g);

MarkVector marks(const GSet& t);
/// Table of marks of G: rows G/K_i, columns J_j, both over the G-class
/// representatives in lattice order; entry |(G/K_i)^{J_j}|.
struct TableOfMarks {
  std::vector<SubgroupId> classes;
  std::vector<std::vector<std::size_t>> rows;
  friend bool operator==(const TableOfMarks&, const TableOfMarks&) = default;
};
TableOfMarks table_of_marks(const LatticePtr& lattice);

/// Marks are the decision procedure; orbit multisets are cross-checked and a
/// disagreement raises std::logic_error.
bool is_isomorphic(const GSet& s, const GSet& t);

/// All subobjects up to isomorphism, including the empty set and T itself.
std::vector<GSet> sub_gsets(const GSet& t);

/// An equivariant map between realizations.
struct GMap {
  RealizationPtr source;
  RealizationPtr target;
  std::vector<Point> assignment;

  bool is_mono() const;
  bool is_epi() const;
  bool is_equivariant() const;
};

struct GMapLimits {
  std::size_t max_maps = 200000;
};

/// All equivariant maps S -> T, enumerated orbit by orbit: the base point of
/// an orbit with stabilizer K goes to any point fixed by K.
std::vector<GMap> gmaps(const GSet& s, const GSet& t, GMapLimits limits = {});
GMap identity_map(const RealizationPtr& t);
/// g after f.
GMap compose(const GMap& g, const GMap& f);

/// All GSets at `level` with cardinality <= max_cardinality whose stabilizers
/// come from `allowed` (default: all), in deterministic order.
std::vector<GSet> enumerate_gsets(const Subgroup& level, std::size_t max_cardinality,
                                  std::optional<std::vector<SubgroupId>> allowed = std::nullopt);

}  // namespace eqnorm
