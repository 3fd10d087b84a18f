#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "eqnorm/gset.hpp"
#include "eqnorm/lattice.hpp"

namespace eqnorm {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Directory layout: <root>/cache/lattice-<key>.json. The key is the hash of
/// the text that defined the group, so an edited definition never reads an
/// old entry; loaded entries are re-verified before use.
class Workspace {
 public:
  /// Root from the argument, else the EQNORM_WORKSPACE environment variable,
  /// else none (no caching, paths relative to the working directory).
  explicit Workspace(std::optional<std::filesystem::path> root = std::nullopt,
                     std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const std::optional<std::filesystem::path>& root() const { return root_; }
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
  std::filesystem::path resolve(const std::filesystem::path& p) const;

  struct Entry {
    LatticePtr lattice;
    TableOfMarks marks;
    bool from_cache = false;
  };
  /// defining_text: the bytes of the group file, or the canonical JSON of a preset.
  Entry lattice(const GroupPtr& group, std::string_view defining_text, LatticeLimits limits = {}) const;
  static std::string cache_key(std::string_view defining_text);

 private:
  std::optional<std::filesystem::path> root_;
  std::optional<std::filesystem::path> cache_dir_;
};

}  // namespace eqnorm
