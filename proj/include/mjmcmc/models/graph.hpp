#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mjmcmc/binary_model.hpp"

namespace mjmcmc::models {

/// Lexicographic bijection between undirected edges (i, j), i < j, of a
/// p-node graph and element indices 0 .. p(p-1)/2 - 1:
/// (0,1), (0,2), ..., (0,p-1), (1,2), ...
class EdgeIndex {
 public:
  explicit EdgeIndex(std::size_t nodes);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t edges() const noexcept { return pairs_.size(); }

  std::size_t edge(std::size_t i, std::size_t j) const;
  std::pair<std::uint32_t, std::uint32_t> endpoints(std::size_t e) const { return pairs_[e]; }

  /// Sorted neighbours of `node` in graph g.
  std::vector<std::uint32_t> neighbours(const BinaryModel& g, std::size_t node) const;

  /// Edges sharing an endpoint with e, including e itself, sorted.
  std::vector<std::size_t> incident(std::size_t e) const;

 private:
  std::size_t nodes_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

/// Sorted neighbour list with `extra` inserted or removed.
std::vector<std::uint32_t> toggled(std::vector<std::uint32_t> neighbours, std::uint32_t extra);

}  // namespace mjmcmc::models
