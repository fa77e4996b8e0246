#include "mjmcmc/models/graph.hpp"

#include <algorithm>
#include <string>

#include "mjmcmc/error.hpp"

namespace mjmcmc::models {

EdgeIndex::EdgeIndex(std::size_t nodes) : nodes_(nodes) {
  if (nodes < 2) throw ConfigError("a graph needs at least 2 nodes");
  pairs_.reserve(nodes * (nodes - 1) / 2);
  for (std::uint32_t i = 0; i < nodes; ++i)
    for (std::uint32_t j = i + 1; j < nodes; ++j) pairs_.emplace_back(i, j);
}

std::size_t EdgeIndex::edge(std::size_t i, std::size_t j) const {
  if (i == j || i >= nodes_ || j >= nodes_)
    throw Error("invalid edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (i > j) std::swap(i, j);
  return i * nodes_ - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::uint32_t> EdgeIndex::neighbours(const BinaryModel& g, std::size_t node) const {
  std::vector<std::uint32_t> out;
  for (std::size_t h = 0; h < nodes_; ++h) {
    if (h == node) continue;
    if (g[edge(node, h)]) out.push_back(static_cast<std::uint32_t>(h));
  }
  return out;
}

std::vector<std::size_t> EdgeIndex::incident(std::size_t e) const {
  const auto [a, b] = pairs_[e];
  std::vector<std::size_t> out;
  out.reserve(2 * nodes_);
  for (std::size_t h = 0; h < nodes_; ++h) {
    if (h != a) out.push_back(edge(a, h));
    if (h != b && h != a) out.push_back(edge(b, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> toggled(std::vector<std::uint32_t> neighbours, std::uint32_t extra) {
  auto it = std::lower_bound(neighbours.begin(), neighbours.end(), extra);
  if (it != neighbours.end() && *it == extra)
    neighbours.erase(it);
  else
    neighbours.insert(it, extra);
  return neighbours;
}

}  // namespace mjmcmc::models
