#include "prym/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace prym {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::default_dir(const std::filesystem::path& fallback) {
  const char* env = std::getenv(kCacheEnv);
  return env && *env ? std::filesystem::path(env) : fallback;
}

std::string ResultCache::key(std::int64_t D, const std::string& kind) const {
  return sha256_hex(serialize(Json{{"D", D}, {"kind", kind}, {"version", version_}}));
}

std::filesystem::path ResultCache::path(std::int64_t D, const std::string& kind) const {
  return dir_ / (kind + "-" + std::to_string(D) + "-" + key(D, kind).substr(0, 16) + ".json");
}

std::string ResultCache::serialize(const Json& doc) { return doc.dump(2) + "\n"; }

std::optional<Json> ResultCache::load(std::int64_t D, const std::string& kind) const {
  std::ifstream in(path(D, kind), std::ios::binary);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("result") || !doc.contains("digest")) return std::nullopt;
  if (doc.value("key", "") != key(D, kind)) return std::nullopt;
  if (doc["digest"] != sha256_hex(serialize(doc["result"]))) return std::nullopt;
  if (serialize(doc) != text) return std::nullopt;
  return doc["result"];
}

void ResultCache::store(std::int64_t D, const std::string& kind, const Json& result) const {
  Json doc{{"key", key(D, kind)},
           {"D", D},
           {"kind", kind},
           {"version", version_},
           {"digest", sha256_hex(serialize(result))},
           {"result", result}};
  auto target = path(D, kind);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(doc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

Json ResultCache::get_or_compute(std::int64_t D, const std::string& kind, const std::function<Json()>& compute) {
  if (auto hit = load(D, kind)) {
    ++hits_;
    return *hit;
  }
  ++computed_;
  Json result = compute();
  store(D, kind, result);
  return result;
}

}  // namespace prym
