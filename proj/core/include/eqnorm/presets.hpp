#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqnorm/group.hpp"
#include "eqnorm/lattice.hpp"
#include "eqnorm/rep.hpp"

namespace eqnorm {

/// Shipped groups: trivial, C2, C3, C4, C6, C8, C9, C27, S3, D4, Q8, A4, S4,
/// and the aliases Cp = C3, Cp2 = C9, Cp3 = C27.
std::vector<std::string> group_preset_names();
/// Canonical name of a preset (resolving aliases); InputError if unknown.
std::string canonical_group_preset(std::string_view name);
GroupPtr preset_group(std::string_view name, GroupLimits limits = {});

/// The universe containing only the trivial representation.
Universe trivial_universe(const LatticePtr& lattice);
/// Generated by the regular representation: every irreducible occurs.
Universe complete_universe(const LatticePtr& lattice);
/// One intermediate universe per shipped group (see presets.cpp).
Universe mixed_universe(const LatticePtr& lattice, std::string_view group_preset);

/// Universe presets are written trivial-<G>, complete-<G> and <G>-mixed.
std::vector<std::string> universe_preset_names();
struct UniversePresetName {
  std::string kind;   // "trivial", "complete" or "mixed"
  std::string group;  // canonical group preset
};
UniversePresetName parse_universe_preset(std::string_view name);
Universe preset_universe(std::string_view name, const LatticePtr& lattice);

}  // namespace eqnorm
