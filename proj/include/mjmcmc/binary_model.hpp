#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mjmcmc {

/// A point m in {0,1}^k. The length is fixed at construction.
class BinaryModel {
 public:
  BinaryModel() = default;
  explicit BinaryModel(std::size_t k) : bits_(k, 0) {}
  explicit BinaryModel(std::vector<std::uint8_t> bits);

  /// State whose bit i equals bit i of `index` (k <= 63).
  static BinaryModel from_index(std::uint64_t index, std::size_t k);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) noexcept { bits_[i] ^= 1; }
  void flip_all(std::span<const std::uint32_t> indices) noexcept;

  /// Copy with element i flipped (m^i).
  BinaryModel flipped(std::size_t i) const;

  std::size_t count() const noexcept;
  std::uint64_t to_index() const;

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  const std::uint8_t* data() const noexcept { return bits_.data(); }

  std::string to_string() const;

  friend bool operator==(const BinaryModel&, const BinaryModel&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// |H_{a,b}|, the number of differing elements.
std::size_t hamming(const BinaryModel& a, const BinaryModel& b);

/// Sorted list of indices where a and b differ.
std::vector<std::uint32_t> difference(const BinaryModel& a, const BinaryModel& b);

}  // namespace mjmcmc
