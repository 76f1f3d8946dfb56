#include "pdsym/filtered_graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pdsym {

FilteredGraph::FilteredGraph(std::vector<double> vertex_values, std::vector<Edge> edges)
    : values_(std::move(vertex_values)), edges_(std::move(edges)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("vertex filtration values must be finite");
  }
  const auto n = static_cast<std::int64_t>(values_.size());
  for (const Edge& e : edges_) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + " out of range");
    }
    if (e.first == e.second) throw std::invalid_argument("self-loops are not allowed");
  }
}

std::vector<std::vector<std::int64_t>> FilteredGraph::adjacency() const {
  std::vector<std::vector<std::int64_t>> adj(values_.size());
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  return adj;
}

}  // namespace pdsym
