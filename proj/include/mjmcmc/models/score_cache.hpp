#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <mutex>
#include <span>
#include <unordered_map>

namespace mjmcmc::models {

struct CacheKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

/// 128-bit key for (node, sorted neighbour list).
CacheKey make_cache_key(std::uint32_t node, std::span<const std::uint32_t> neighbours) noexcept;

/// Thread-safe LRU map from CacheKey to a score. Capacity 0 disables caching.
/// Scores must be pure functions of the key, so caching never changes results.
class ScoreCache {
 public:
  explicit ScoreCache(std::size_t capacity = 1'000'000) : capacity_(capacity) {}

  double get_or_compute(const CacheKey& key, const std::function<double()>& compute);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;

 private:
  struct KeyHash {
    std::size_t operator()(const CacheKey& k) const noexcept { return k.hi ^ (k.lo * 0x9E3779B97F4A7C15ull); }
  };
  using Entry = std::pair<CacheKey, double>;

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<CacheKey, std::list<Entry>::iterator, KeyHash> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace mjmcmc::models
