#include "coverlab/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "coverlab/error.hpp"

namespace coverlab {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_directory() {
  if (const char* env = std::getenv("COVERLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "coverlab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "coverlab";
  return fs::temp_directory_path() / "coverlab-cache";
}

std::string Cache::make_key(std::string_view graph_hash, int k, std::string_view computation,
                            std::string_view fingerprint) {
  std::string raw;
  raw.append(graph_hash).append("|").append(std::to_string(k)).append("|");
  raw.append(computation).append("|").append(fingerprint);
  return std::string(computation) + "-" + hex64(fnv1a(raw));
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  const fs::path p = path_for(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object() || j.value("key", "") != key || !j.contains("value")) throw Error("bad envelope");
    return j.at("value");
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring corrupt cache entry " << p.string() << "\n";
    return std::nullopt;
  }
}

void Cache::put(const std::string& key, const nlohmann::json& value) const {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry in " + dir_.string());
    out << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
    if (!out) throw Error("cannot write cache entry in " + dir_.string());
  }
  // Same content under the same key, so the last rename simply wins.
  fs::rename(tmp, path_for(key));
}

std::size_t Cache::clear() const {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file()) {
      fs::remove(e.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace coverlab
