#pragma once

#include "kronsq/json_io.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace kronsq {

inline constexpr const char* kCacheVersion = "kronsq-cache-1";

// Directory of JSON files "<kind>_<fnv1a(key)>.json" holding
// {"version","kind","key","payload"}. Entries with another version or key are
// ignored and overwritten.
class PolyCache {
 public:
  PolyCache(std::filesystem::path dir, bool enabled);

  // KRONSQ_CACHE_DIR, else $XDG_CACHE_HOME/kronsq, else ~/.cache/kronsq.
  static std::filesystem::path default_dir();

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;

  std::optional<Json> load(const std::string& kind, const std::string& key) const;
  void store(const std::string& kind, const std::string& key, const Json& payload) const;

  Json get_or_compute(const std::string& kind, const std::string& key, const std::function<Json()>& compute) const;

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

std::string fnv1a_hex(const std::string& s);

}  // namespace kronsq
