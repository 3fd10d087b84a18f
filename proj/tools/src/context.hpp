#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eqnorm/cli.hpp"
#include "eqnorm/eqnorm.hpp"

namespace eqnorm::cli {

struct Options {
  std::string preset;
  std::string file;
  bool json = false;
  std::string ix_file;
  bool ungated = false;
  std::string cache_dir;
  std::string workspace;
  std::size_t cap_group_order = 48;
  std::uint64_t seed = 1;
  std::string report;

  std::string gset;
  std::string at;
  std::string left;
  std::string right;
  std::string ambient;
  std::string rule;
  std::vector<std::string> declare;
  std::vector<std::string> positional;
  std::size_t samples = 200;
  std::size_t max_card = 4;
};

struct GroupContext {
  GroupPtr group;
  LatticePtr lattice;
  TableOfMarks marks;
};

/// Per-run state: options, workspace and the record of every input read.
class Context {
 public:
  explicit Context(const Options& o);

  const Options& opts() const { return o_; }
  const Workspace& workspace() const { return ws_; }
  const Json& inputs() const { return inputs_; }

  /// Reads a file relative to the workspace and records its hash.
  std::string read_file(const std::string& path, const char* role);
  Json read_json(const std::string& path, const char* role);

  /// Group from --file or --preset (default: trivial).
  GroupContext group();
  /// Group named inside a universe/indexing document: a preset name or an
  /// inline group object.
  GroupContext group_from_reference(const Json& ref);
  /// Universe from --file or a universe --preset such as C4-mixed.
  std::pair<GroupContext, Universe> universe();
  /// Gating system from --ix; null when ungated (the default).
  const IndexingSystem* gate(const GroupContext& g);

  Subgroup subgroup(const GroupContext& g, const std::string& name,
                    std::optional<SubgroupId> fallback = std::nullopt) const;

 private:
  GroupContext finish(GroupPtr group, const std::string& defining_text);

  const Options& o_;
  Workspace ws_;
  Json inputs_ = Json::array();
  std::unique_ptr<IndexingSystem> gate_;
};

/// Left-aligned columns separated by two spaces; no trailing blanks.
std::string format_table(const std::vector<std::vector<std::string>>& rows);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string yes_no(bool b);
/// One row per subgroup H listing the admissible H/K.
std::string indexing_table(const IndexingSystem& ix);
/// The admissible orbits H/K with K != H, or "trivial".
std::string nontrivial_orbits(const IndexingSystem& ix);

int cmd_group_list(Context& c, std::ostream& out);
int cmd_group_subgroups(Context& c, std::ostream& out);
int cmd_group_marks(Context& c, std::ostream& out);
int cmd_group_doublecosets(Context& c, std::ostream& out);

int cmd_universe_admissible(Context& c, std::ostream& out);
int cmd_universe_indexing(Context& c, std::ostream& out);

int cmd_indexing_validate(Context& c, std::ostream& out);
int cmd_indexing_generate(Context& c, std::ostream& out);
int cmd_indexing_enumerate(Context& c, std::ostream& out);
int cmd_indexing_compare(Context& c, std::ostream& out);

int cmd_norm_normalize(Context& c, std::ostream& out);
int cmd_norm_equiv(Context& c, std::ostream& out);
int cmd_norm_trace(Context& c, std::ostream& out);
int cmd_norm_step(Context& c, std::ostream& out);
int cmd_norm_replay(Context& c, std::ostream& out);

int cmd_span_compose(Context& c, std::ostream& out);
int cmd_span_check_assoc(Context& c, std::ostream& out);
int cmd_span_pullback_square(Context& c, std::ostream& out);

}  // namespace eqnorm::cli
