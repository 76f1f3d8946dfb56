#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pdsym {

/// Undirected graph with one real filtration value per vertex. Vertices are
/// indexed 0..vertex_count()-1. Self-loops are rejected; duplicate edges are
/// allowed and equivalent to a single edge.
class FilteredGraph {
 public:
  using Edge = std::pair<std::int64_t, std::int64_t>;

  FilteredGraph() = default;
  FilteredGraph(std::vector<double> vertex_values, std::vector<Edge> edges);

  const std::vector<double>& vertex_values() const { return values_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return values_.size(); }

  /// Neighbor lists, built once on demand.
  std::vector<std::vector<std::int64_t>> adjacency() const;

 private:
  std::vector<double> values_;
  std::vector<Edge> edges_;
};

}  // namespace pdsym
