#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "eqnorm/gset.hpp"
#include "eqnorm/indexing.hpp"
#include "eqnorm/norm.hpp"
#include "eqnorm/rep.hpp"
#include "eqnorm/span.hpp"

namespace eqnorm {

/// Keys keep insertion order so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

/// Parses text; malformed JSON raises InputError.
Json parse_json(const std::string& text, const std::string& origin = "input");
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary file and a rename; InputError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// { "name", "degree", "generators": [[images...]] }.
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, GroupLimits limits = {});

/// Member lists of every subgroup, for the lattice cache.
Json lattice_to_json(const SubgroupLattice& lat);
LatticePtr lattice_from_json(const Json& j, GroupPtr group);

/// { "level": id, "orbits": [{"stabilizer": id, "multiplicity": m}], "text": literal }.
/// Reading also accepts a bare literal string.
Json gset_to_json(const GSet& t);
GSet gset_from_json(const Json& j, const LatticePtr& lattice);
Json marks_to_json(const MarkVector& m);

/// { "group": name, "admissible": { H: [K, ...] } }; every listed K is an
/// H-class representative. Subgroups absent from the map admit nothing.
Json indexing_to_json(const IndexingSystem& ix);
IndexingSystem indexing_from_json(const Json& j, const LatticePtr& lattice);

/// { "group": name, "generators": [ {"kind": "perm", "gset": ...} |
///   {"kind": "matrix", "dimension": n, "matrices": [[["p/q", ...]]]} ] },
/// matrices given per defining generator of G. "group" may also be an inline
/// group object.
Json universe_to_json(const Universe& u);
Universe universe_from_json(const Json& j, const LatticePtr& lattice);

/// Realization form: { "gset", "points": [[copy, representative], ...] }.
Json realization_to_json(const Realization& r);
RealizationPtr realization_from_json(const Json& j, const LatticePtr& lattice);
/// { "apex", "source", "target", "left": [...], "right": [...] }.
Json span_to_json(const Span& s);
Span span_from_json(const Json& j, const LatticePtr& lattice, const IndexingSystem* ix = nullptr);

Json form_to_json(const CanonicalForm& f);
Json trace_to_json(const RewriteTrace& t);
RewriteTrace trace_from_json(const Json& j);

}  // namespace eqnorm
