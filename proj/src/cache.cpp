#include "planarity/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace planarity {

namespace {

nlohmann::json to_json(const CacheRecord& rec) {
  return {{"key", {{"d", rec.key.d}, {"r", rec.key.r}, {"mu", rec.key.mu}, {"kind", rec.key.kind}}},
          {"value", rec.value.get_str()},
          {"engine", rec.engine},
          {"version", rec.version},
          {"timestamp", rec.timestamp}};
}

CacheRecord from_json(const nlohmann::json& j) {
  CacheRecord rec;
  const auto& key = j.at("key");
  rec.key.d = key.at("d").get<int>();
  rec.key.r = key.at("r").get<long>();
  rec.key.mu = key.at("mu").get<std::string>();
  rec.key.kind = key.at("kind").get<std::string>();
  const auto text = j.at("value").get<std::string>();
  if (rec.value.set_str(text, 10) != 0) throw CacheIntegrityError("cache value '" + text + "' is not a decimal integer");
  rec.engine = j.value("engine", "");
  rec.version = j.value("version", "");
  rec.timestamp = j.value("timestamp", "");
  return rec;
}

std::string describe(const CacheKey& key) {
  return key.kind + "(d=" + std::to_string(key.d) + ", r=" + std::to_string(key.r) + ", mu=" + key.mu + ")";
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

HurwitzCache::HurwitzCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CacheRecord rec;
    try {
      rec = from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw CacheIntegrityError(path_.string() + ":" + std::to_string(line_no) + ": unreadable record: " + e.what());
    }
    auto [it, inserted] = entries_.emplace(rec.key, rec.value);
    if (!inserted && it->second != rec.value)
      throw CacheIntegrityError("cache holds conflicting values " + it->second.get_str() + " and " +
                                rec.value.get_str() + " for " + describe(rec.key));
  }
}

std::optional<ExactInt> HurwitzCache::lookup(const CacheKey& key) const {
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

void HurwitzCache::store(const CacheKey& key, const ExactInt& value, const std::string& engine) {
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (it->second != value)
      throw CacheIntegrityError("computed " + value.get_str() + " but cache holds " + it->second.get_str() + " for " +
                                describe(key));
    return;
  }
  CacheRecord rec{key, value, engine, kToolVersion, utc_timestamp()};
  // One write call per record keeps concurrent appends whole.
  const std::string line = to_json(rec).dump() + "\n";
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw CacheIntegrityError("cannot open cache file " + path_.string() + " for appending");
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  entries_.emplace(key, value);
}

}  // namespace planarity
