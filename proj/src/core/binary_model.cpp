#include "mjmcmc/binary_model.hpp"

#include <algorithm>

#include "mjmcmc/error.hpp"

namespace mjmcmc {

BinaryModel::BinaryModel(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BinaryModel BinaryModel::from_index(std::uint64_t index, std::size_t k) {
  if (k > 63) throw CapacityError("packed state index supports k <= 63");
  BinaryModel m(k);
  for (std::size_t i = 0; i < k; ++i) m.bits_[i] = static_cast<std::uint8_t>((index >> i) & 1u);
  return m;
}

void BinaryModel::flip_all(std::span<const std::uint32_t> indices) noexcept {
  for (auto i : indices) bits_[i] ^= 1;
}

BinaryModel BinaryModel::flipped(std::size_t i) const {
  BinaryModel out = *this;
  out.flip(i);
  return out;
}

std::size_t BinaryModel::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BinaryModel::to_index() const {
  if (bits_.size() > 63) throw CapacityError("packed state index supports k <= 63");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) index |= std::uint64_t{bits_[i]} << i;
  return index;
}

std::string BinaryModel::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::size_t hamming(const BinaryModel& a, const BinaryModel& b) {
  std::size_t d = 0;
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) d += a[i] != b[i];
  return d + (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
}

std::vector<std::uint32_t> difference(const BinaryModel& a, const BinaryModel& b) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace mjmcmc
