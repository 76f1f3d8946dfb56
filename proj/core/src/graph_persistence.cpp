#include "pdsym/graph_persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pdsym {

namespace {

struct UnionFind {
  std::vector<std::int64_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::int64_t{0});
  }

  std::int64_t find(std::int64_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
};

}  // namespace

PersistenceDiagram zero_dim_persistence(const FilteredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw std::invalid_argument("zero_dim_persistence: empty graph");

  const std::vector<double>& value = graph.vertex_values();
  std::vector<std::int64_t> order(n);
  std::iota(order.begin(), order.end(), std::int64_t{0});
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    const double va = value[static_cast<std::size_t>(a)];
    const double vb = value[static_cast<std::size_t>(b)];
    return va != vb ? va < vb : a < b;
  });

  const auto adj = graph.adjacency();

  UnionFind uf(n);
  // Per component root: birth level and the vertex that created the component.
  std::vector<double> birth(n, 0.0);
  std::vector<std::int64_t> creator(n, 0);
  std::vector<char> processed(n, 0);

  std::vector<Cornerpoint> points;
  for (std::int64_t u : order) {
    const auto su = static_cast<std::size_t>(u);
    birth[su] = value[su];
    creator[su] = u;
    processed[su] = 1;
    for (std::int64_t w : adj[su]) {
      if (!processed[static_cast<std::size_t>(w)]) continue;
      std::int64_t ru = uf.find(u);
      std::int64_t rw = uf.find(w);
      if (ru == rw) continue;
      // Edge activates at max endpoint value, i.e. the value of u.
      const double level = value[su];
      auto younger = static_cast<std::size_t>(ru);
      auto older = static_cast<std::size_t>(rw);
      if (birth[younger] < birth[older] ||
          (birth[younger] == birth[older] && creator[younger] < creator[older])) {
        std::swap(younger, older);
      }
      if (birth[younger] < level) {
        points.push_back({birth[younger], level, 1});
      }
      uf.parent[younger] = static_cast<std::int64_t>(older);
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (uf.find(static_cast<std::int64_t>(v)) == static_cast<std::int64_t>(v)) {
      points.push_back({birth[v], kInfiniteDeath, 1});
    }
  }
  return PersistenceDiagram(std::move(points));
}

std::int64_t persistent_betti_0(const FilteredGraph& graph, double u, double v) {
  if (!(u < v)) throw std::invalid_argument("persistent_betti_0: requires u < v");

  const std::size_t n = graph.vertex_count();
  const std::vector<double>& value = graph.vertex_values();

  // Components of the sublevel subgraph at v.
  UnionFind uf(n);
  for (const auto& [a, b] : graph.edges()) {
    if (value[static_cast<std::size_t>(a)] <= v && value[static_cast<std::size_t>(b)] <= v) {
      const std::int64_t ra = uf.find(a);
      const std::int64_t rb = uf.find(b);
      if (ra != rb) uf.parent[static_cast<std::size_t>(ra)] = rb;
    }
  }

  // Count distinct v-level classes reached by vertices alive at level u.
  std::vector<char> seen(n, 0);
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (value[i] > u) continue;
    const auto root = static_cast<std::size_t>(uf.find(static_cast<std::int64_t>(i)));
    if (!seen[root]) {
      seen[root] = 1;
      ++rank;
    }
  }
  return rank;
}

std::int64_t multiplicity_oracle(const FilteredGraph& graph, double u, double v, double epsilon) {
  if (!(epsilon > 0.0) || !(u + epsilon < v - epsilon)) {
    throw std::invalid_argument("multiplicity_oracle: requires epsilon > 0 and u+eps < v-eps");
  }
  std::vector<double> distinct = graph.vertex_values();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    if (epsilon >= 0.5 * (distinct[i] - distinct[i - 1])) {
      throw std::invalid_argument(
          "multiplicity_oracle: epsilon must be below half the minimal value gap");
    }
  }

  return persistent_betti_0(graph, u + epsilon, v - epsilon) -
         persistent_betti_0(graph, u - epsilon, v - epsilon) -
         persistent_betti_0(graph, u + epsilon, v + epsilon) +
         persistent_betti_0(graph, u - epsilon, v + epsilon);
}

}  // namespace pdsym
