#pragma once

// Per-D result cache: one JSON file per (D, kind), named by a SHA-256 content
// key of (D, kind, version). A file is trusted only if it parses, carries the
// expected key, its digest matches the payload, and re-serializing it
// reproduces the file byte for byte.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "prym/report.hpp"

namespace prym {

inline constexpr const char* kCacheVersion = "1";
inline constexpr const char* kCacheEnv = "PRYM_CACHE_DIR";

std::string sha256_hex(const std::string& data);

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::string version = kCacheVersion);
  // Directory from the environment variable, else the given default.
  static std::filesystem::path default_dir(const std::filesystem::path& fallback);

  std::string key(std::int64_t D, const std::string& kind) const;
  std::filesystem::path path(std::int64_t D, const std::string& kind) const;

  std::optional<Json> load(std::int64_t D, const std::string& kind) const;
  void store(std::int64_t D, const std::string& kind, const Json& result) const;
  Json get_or_compute(std::int64_t D, const std::string& kind, const std::function<Json()>& compute);

  std::size_t hits() const { return hits_; }
  std::size_t computed() const { return computed_; }

  static std::string serialize(const Json& doc);

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::atomic<std::size_t> hits_ = 0;
  std::atomic<std::size_t> computed_ = 0;
};

}  // namespace prym
