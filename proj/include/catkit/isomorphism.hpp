#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace catkit {

/// Vertex-colored undirected multigraph used as the common currency for
/// diagram equality checks.
class ColoredMultigraph {
 public:
  std::size_t add_vertex(std::string color);
  /// Adds one edge; u == v records a self-loop.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t size() const noexcept { return colors_.size(); }
  const std::string& color(std::size_t v) const { return colors_[v]; }
  /// (neighbour, multiplicity) pairs sorted by neighbour.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(std::size_t v) const { return adj_[v]; }

 private:
  std::vector<std::string> colors_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

/// Color-preserving isomorphism test by colour refinement followed by
/// individualisation and backtracking. Exponential in the worst case; the
/// graphs produced from boundary-anchored diagrams refine almost completely.
bool are_isomorphic(const ColoredMultigraph& a, const ColoredMultigraph& b);

}  // namespace catkit
