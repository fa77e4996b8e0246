#include "mjmcmc/models/score_cache.hpp"

namespace mjmcmc::models {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 29;
  return h;
}

}  // namespace

CacheKey make_cache_key(std::uint32_t node, std::span<const std::uint32_t> neighbours) noexcept {
  std::uint64_t a = mix(0x243F6A8885A308D3ull, node);
  std::uint64_t b = mix(0x13198A2E03707344ull, node + 0x5bd1e995ull);
  a = mix(a, neighbours.size());
  b = mix(b, neighbours.size() ^ 0xA4093822299F31D0ull);
  for (auto v : neighbours) {
    a = mix(a, v);
    b = mix(b, std::uint64_t{v} * 0xff51afd7ed558ccdull + 1);
  }
  return {a, b};
}

double ScoreCache::get_or_compute(const CacheKey& key, const std::function<double()>& compute) {
  if (capacity_ == 0) return compute();
  {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      ++hits_;
      return it->second->second;
    }
    ++misses_;
  }
  const double value = compute();
  std::lock_guard lock(mutex_);
  if (index_.find(key) == index_.end()) {
    order_.emplace_front(key, value);
    index_.emplace(key, order_.begin());
    if (order_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }
  return value;
}

std::size_t ScoreCache::size() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

std::size_t ScoreCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t ScoreCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

}  // namespace mjmcmc::models
