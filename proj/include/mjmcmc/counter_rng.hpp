#pragma once

#include <array>
#include <cstdint>

namespace mjmcmc {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// Independent draw families. Flip draws are the k per-iteration uniforms;
/// everything else (cap subsampling, BD events, MH acceptance) uses Auxiliary.
enum class Stream : std::uint32_t { Flip = 0, Auxiliary = 1 };

/// Stateless generator: every draw is addressed by (stream, iteration, index),
/// so draws can be produced in any order or on any thread with identical results.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform(Stream stream, std::uint64_t iteration, std::uint64_t index) const noexcept;

  /// Uniform on (0, 1], safe for log().
  double uniform_positive(Stream stream, std::uint64_t iteration,
                          std::uint64_t index) const noexcept {
    return 1.0 - uniform(stream, iteration, index);
  }

  std::uint64_t bits(Stream stream, std::uint64_t iteration, std::uint64_t index) const noexcept;

 private:
  std::uint64_t seed_;
};

}  // namespace mjmcmc
