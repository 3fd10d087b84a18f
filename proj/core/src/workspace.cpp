#include "eqnorm/workspace.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <memory>

#include "eqnorm/errors.hpp"
#include "eqnorm/io.hpp"

namespace eqnorm {

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Workspace::Workspace(std::optional<std::filesystem::path> root,
                     std::optional<std::filesystem::path> cache_dir) {
  if (!root) {
    if (const char* env = std::getenv("EQNORM_WORKSPACE"); env && *env) root = env;
  }
  root_ = std::move(root);
  if (cache_dir)
    cache_dir_ = resolve(*cache_dir);
  else if (root_)
    cache_dir_ = *root_ / "cache";
}

std::filesystem::path Workspace::resolve(const std::filesystem::path& p) const {
  if (p.is_absolute() || !root_) return p;
  return *root_ / p;
}

std::string Workspace::cache_key(std::string_view defining_text) {
  return sha256_hex(std::string("eqnorm-lattice-v1\n") + std::string(defining_text));
}

Workspace::Entry Workspace::lattice(const GroupPtr& group, std::string_view defining_text,
                                    LatticeLimits limits) const {
  if (group->order() > limits.max_group_order)
    throw CapExceeded("group order " + std::to_string(group->order()) + " exceeds the lattice cap " +
                      std::to_string(limits.max_group_order));
  std::string key = cache_key(defining_text);
  std::optional<std::filesystem::path> file;
  if (cache_dir_) file = *cache_dir_ / ("lattice-" + key + ".json");
  if (file && std::filesystem::exists(*file)) {
    try {
      Json j = read_json_file(*file);
      if (j.at("key").get<std::string>() == key) {
        LatticePtr lat = lattice_from_json(j.at("lattice"), group);
        TableOfMarks marks = table_of_marks(lat);
        if (j.at("marks").get<std::vector<std::vector<std::size_t>>>() == marks.rows)
          return {lat, std::move(marks), true};
      }
    } catch (const std::exception&) {
      // Unreadable or inconsistent entries are rebuilt below.
    }
  }
  LatticePtr lat = SubgroupLattice::build(group, limits);
  TableOfMarks marks = table_of_marks(lat);
  if (file) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir_, ec);
    Json j{{"key", key}, {"lattice", lattice_to_json(*lat)}, {"marks", marks.rows}};
    std::filesystem::path tmp = *file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << dump(j);
    }
    std::filesystem::rename(tmp, *file, ec);
  }
  return {lat, std::move(marks), false};
}

}  // namespace eqnorm
