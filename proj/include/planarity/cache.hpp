#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "planarity/core_math.hpp"

namespace planarity {

inline constexpr const char* kToolVersion = "1.0.0";

/// Conflicting values for one key, or an unreadable cache line.
class CacheIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheKey {
  int d = 0;
  long r = 0;
  std::string mu;    ///< canonical partition string, "2,1"
  std::string kind;  ///< quantity, e.g. "n_trans"

  auto operator<=>(const CacheKey&) const = default;
};

struct CacheRecord {
  CacheKey key;
  ExactInt value;
  std::string engine;
  std::string version = kToolVersion;
  std::string timestamp;
};

/// Append-only JSON-lines store of exact counts. Values are written as
/// decimal strings. Identical duplicate lines are tolerated; two different
/// values for one key are an integrity violation.
class HurwitzCache {
 public:
  /// Loads an existing file (a missing file is an empty cache).
  explicit HurwitzCache(std::filesystem::path path);

  std::optional<ExactInt> lookup(const CacheKey& key) const;

  /// Appends unless the key is already present with the same value.
  void store(const CacheKey& key, const ExactInt& value, const std::string& engine);

  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::map<CacheKey, ExactInt> entries_;
};

std::string utc_timestamp();

}  // namespace planarity
