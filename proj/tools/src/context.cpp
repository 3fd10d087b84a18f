#include "context.hpp"

#include <algorithm>

namespace eqnorm::cli {

namespace {
std::optional<std::filesystem::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}
}  // namespace

Context::Context(const Options& o)
    : o_(o), ws_(optional_path(o.workspace), optional_path(o.cache_dir)) {}

std::string Context::read_file(const std::string& path, const char* role) {
  std::string text = read_text_file(ws_.resolve(path));
  inputs_.push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(text)}});
  return text;
}

Json Context::read_json(const std::string& path, const char* role) {
  return parse_json(read_file(path, role), path);
}

GroupContext Context::finish(GroupPtr group, const std::string& defining_text) {
  Workspace::Entry e = ws_.lattice(group, defining_text, LatticeLimits{o_.cap_group_order});
  return {std::move(group), std::move(e.lattice), std::move(e.marks)};
}

GroupContext Context::group() {
  if (!o_.file.empty() && !o_.preset.empty()) throw InputError("give either --preset or --file, not both");
  if (!o_.file.empty()) {
    std::string text = read_file(o_.file, "group");
    GroupPtr g = group_from_json(parse_json(text, o_.file));
    return finish(std::move(g), text);
  }
  std::string name = o_.preset.empty() ? "trivial" : o_.preset;
  GroupPtr g = preset_group(name);
  inputs_.push_back({{"role", "group"}, {"preset", name}});
  return finish(g, dump(group_to_json(*g)));
}

GroupContext Context::group_from_reference(const Json& ref) {
  if (ref.is_object()) {
    GroupPtr g = group_from_json(ref);
    return finish(g, dump(group_to_json(*g)));
  }
  if (!ref.is_string()) throw InputError("group reference must be a preset name or a group object");
  GroupPtr g = preset_group(ref.get<std::string>());
  return finish(g, dump(group_to_json(*g)));
}

std::pair<GroupContext, Universe> Context::universe() {
  if (!o_.file.empty() && !o_.preset.empty()) throw InputError("give either --preset or --file, not both");
  if (!o_.file.empty()) {
    Json j = read_json(o_.file, "universe");
    if (!j.is_object() || !j.contains("group")) throw InputError("universe file needs a \"group\" entry");
    GroupContext g = group_from_reference(j.at("group"));
    Universe u = universe_from_json(j, g.lattice);
    return {std::move(g), std::move(u)};
  }
  if (o_.preset.empty()) throw InputError("universe needs --preset or --file");
  UniversePresetName p = parse_universe_preset(o_.preset);
  GroupPtr grp = preset_group(p.group);
  inputs_.push_back({{"role", "universe"}, {"preset", o_.preset}});
  GroupContext g = finish(grp, dump(group_to_json(*grp)));
  Universe u = preset_universe(o_.preset, g.lattice);
  return {std::move(g), std::move(u)};
}

const IndexingSystem* Context::gate(const GroupContext& g) {
  if (o_.ix_file.empty()) return nullptr;
  if (o_.ungated) throw InputError("--ix and --ungated are mutually exclusive");
  Json j = read_json(o_.ix_file, "indexing");
  gate_ = std::make_unique<IndexingSystem>(indexing_from_json(j, g.lattice));
  return gate_.get();
}

Subgroup Context::subgroup(const GroupContext& g, const std::string& name,
                           std::optional<SubgroupId> fallback) const {
  const SubgroupLattice& lat = *g.lattice;
  if (name.empty()) {
    if (!fallback) throw InputError("a subgroup id is required");
    return lat.subgroup(*fallback);
  }
  return lat.subgroup(lat.parse_name(name));
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace eqnorm::cli
