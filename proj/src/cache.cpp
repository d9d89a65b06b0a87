#include "kronsq/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kronsq {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PolyCache::PolyCache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

std::filesystem::path PolyCache::default_dir() {
  if (const char* env = std::getenv("KRONSQ_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kronsq";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "kronsq";
  return std::filesystem::temp_directory_path() / "kronsq-cache";
}

std::filesystem::path PolyCache::path_for(const std::string& kind, const std::string& key) const {
  return dir_ / (kind + "_" + fnv1a_hex(key) + ".json");
}

std::optional<Json> PolyCache::load(const std::string& kind, const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(kind, key));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("version") != kCacheVersion || j.at("kind") != kind || j.at("key") != key) return std::nullopt;
    return j.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void PolyCache::store(const std::string& kind, const std::string& key, const Json& payload) const {
  if (!enabled_) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // a cache we cannot write is just a cold cache
  Json entry;
  entry["version"] = kCacheVersion;
  entry["kind"] = kind;
  entry["key"] = key;
  entry["payload"] = payload;
  auto target = path_for(kind, key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << entry.dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

Json PolyCache::get_or_compute(const std::string& kind, const std::string& key,
                               const std::function<Json()>& compute) const {
  if (auto hit = load(kind, key)) return *hit;
  Json fresh = compute();
  store(kind, key, fresh);
  return fresh;
}

}  // namespace kronsq
