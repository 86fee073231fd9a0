#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace coverlab {

/// 64-bit FNV-1a, used for graph hashes and cache keys.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// On-disk JSON cache, one file per key. Writes go through a temporary file
/// and a rename, so readers never see half-written entries.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  /// $COVERLAB_CACHE, else $XDG_CACHE_HOME/coverlab, else ~/.cache/coverlab.
  static std::filesystem::path default_directory();

  /// Key from (graph hash, k, computation id, config fingerprint).
  static std::string make_key(std::string_view graph_hash, int k, std::string_view computation,
                              std::string_view fingerprint);

  const std::filesystem::path& directory() const noexcept { return dir_; }

  /// A corrupt entry is reported on stderr and treated as a miss.
  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value) const;
  /// Removes every entry; returns how many files were deleted.
  std::size_t clear() const;

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace coverlab
