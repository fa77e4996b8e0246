#include "mjmcmc/counter_rng.hpp"

namespace mjmcmc {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = std::uint64_t{a} * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c,
                                           std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ key[0], lo1, hi0 ^ c[3] ^ key[1], lo0};
  }
  return c;
}

std::uint64_t CounterRng::bits(Stream stream, std::uint64_t iteration,
                               std::uint64_t index) const noexcept {
  // Counter layout: index (48 bits) | stream (16 bits) | iteration (64 bits).
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>((index >> 32) & 0xFFFFu) |
          (static_cast<std::uint32_t>(stream) << 16),
      static_cast<std::uint32_t>(iteration),
      static_cast<std::uint32_t>(iteration >> 32),
  };
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  const auto out = philox4x32_10(counter, key);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

double CounterRng::uniform(Stream stream, std::uint64_t iteration,
                           std::uint64_t index) const noexcept {
  return static_cast<double>(bits(stream, iteration, index) >> 11) * 0x1.0p-53;
}

}  // namespace mjmcmc
