#include "pdsym/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace pdsym {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct FlatPoint {
  double birth;
  double death;
  double half_persistence;
};

std::vector<FlatPoint> expand(const PersistenceDiagram& d, const char* who) {
  std::vector<FlatPoint> out;
  out.reserve(d.points().size());
  for (const Cornerpoint& p : d.points()) {
    if (p.essential()) {
      throw std::invalid_argument(std::string(who) + ": diagram not finitized (infinite death)");
    }
    for (std::int64_t c = 0; c < p.multiplicity; ++c) {
      out.push_back({p.birth, p.death, 0.5 * (p.death - p.birth)});
    }
  }
  return out;
}

double pair_cost(const FlatPoint& p, const FlatPoint& q) {
  const double move = std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
  const double destroy = std::max(p.half_persistence, q.half_persistence);
  return std::min(move, destroy);
}

// Hopcroft-Karp saturation test: can every left vertex in `rows` be matched
// to a distinct column j with cost[row * stride + j] <= threshold? Only the
// listed rows participate on the left; all `cols` columns are available.
bool saturates(const std::vector<std::size_t>& rows, std::size_t cols,
               const std::vector<double>& cost, std::size_t stride, double threshold) {
  const std::size_t n = rows.size();
  if (n == 0) return true;
  if (n > cols) return false;

  std::vector<std::size_t> match_left(n, kNone);
  std::vector<std::size_t> match_right(cols, kNone);

  // Greedy seed.
  for (std::size_t l = 0; l < n; ++l) {
    const double* row = cost.data() + rows[l] * stride;
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] <= threshold && match_right[j] == kNone) {
        match_left[l] = j;
        match_right[j] = l;
        break;
      }
    }
  }

  std::vector<std::size_t> layer(n);
  std::vector<std::size_t> queue_buf(n);
  std::size_t matched = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (match_left[l] != kNone) ++matched;
  }

  while (matched < n) {
    // BFS from free left vertices to build alternating layers.
    std::size_t head = 0;
    std::size_t tail = 0;
    std::fill(layer.begin(), layer.end(), kNone);
    for (std::size_t l = 0; l < n; ++l) {
      if (match_left[l] == kNone) {
        layer[l] = 0;
        queue_buf[tail++] = l;
      }
    }
    bool reachable_free_column = false;
    std::size_t limit = kNone;
    while (head < tail) {
      const std::size_t l = queue_buf[head++];
      if (layer[l] >= limit) continue;
      const double* row = cost.data() + rows[l] * stride;
      for (std::size_t j = 0; j < cols; ++j) {
        if (row[j] > threshold) continue;
        const std::size_t owner = match_right[j];
        if (owner == kNone) {
          if (!reachable_free_column) {
            reachable_free_column = true;
            limit = layer[l] + 1;
          }
        } else if (layer[owner] == kNone) {
          layer[owner] = layer[l] + 1;
          queue_buf[tail++] = owner;
        }
      }
    }
    if (!reachable_free_column) return false;

    // DFS along layered edges for a maximal set of disjoint augmenting paths.
    std::vector<char> used_column(cols, 0);
    auto augment = [&](auto&& self, std::size_t l) -> bool {
      const double* row = cost.data() + rows[l] * stride;
      for (std::size_t j = 0; j < cols; ++j) {
        if (used_column[j] || row[j] > threshold) continue;
        const std::size_t owner = match_right[j];
        if (owner == kNone) {
          used_column[j] = 1;
          match_left[l] = j;
          match_right[j] = l;
          return true;
        }
        if (layer[owner] == layer[l] + 1 && self(self, owner)) {
          used_column[j] = 1;
          match_left[l] = j;
          match_right[j] = l;
          return true;
        }
      }
      layer[l] = kNone;  // dead end for this phase
      return false;
    };

    std::size_t gained = 0;
    for (std::size_t l = 0; l < n; ++l) {
      if (match_left[l] == kNone && layer[l] == 0 && augment(augment, l)) ++gained;
    }
    if (gained == 0) return false;
    matched += gained;
  }
  return true;
}

// A bijection with max cost <= t exists iff the points too persistent to be
// destroyed (half-persistence > t) on each side can all be matched across at
// cost <= t. Saturating both sides separately suffices: two one-sided
// saturating matchings always combine into one covering both (Mendelsohn-
// Dulmage), and destroyed points plus diagonal bookkeeping absorb the rest.
struct Feasibility {
  const std::vector<FlatPoint>& left;
  const std::vector<FlatPoint>& right;
  const std::vector<double>& cost;     // |left| x |right|, row-major
  const std::vector<double>& cost_t;   // transpose
  std::vector<std::size_t> must_buf;

  bool operator()(double t) {
    must_buf.clear();
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i].half_persistence > t) must_buf.push_back(i);
    }
    if (!saturates(must_buf, right.size(), cost, right.size(), t)) return false;

    must_buf.clear();
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j].half_persistence > t) must_buf.push_back(j);
    }
    return saturates(must_buf, left.size(), cost_t, left.size(), t);
  }
};

}  // namespace

double point_cost(const Cornerpoint& p, const Cornerpoint& q) {
  if (p.essential() || q.essential()) {
    throw std::invalid_argument("point_cost: points must be finite (finitize first)");
  }
  const FlatPoint a{p.birth, p.death, 0.5 * (p.death - p.birth)};
  const FlatPoint b{q.birth, q.death, 0.5 * (q.death - q.birth)};
  return pair_cost(a, b);
}

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  const std::vector<FlatPoint> left = expand(a, "bottleneck_distance");
  const std::vector<FlatPoint> right = expand(b, "bottleneck_distance");
  const std::size_t n = left.size();
  const std::size_t m = right.size();
  if (n == 0 && m == 0) return 0.0;

  // Candidate thresholds: every destruction cost, plus those pairwise costs
  // where moving beats destroying (otherwise the pair cost is itself a
  // destruction cost and already listed).
  std::vector<double> cost(n * m);
  std::vector<double> cost_t(n * m);
  std::vector<double> candidates;
  candidates.reserve(n + m + n * m / 8);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double move =
          std::max(std::abs(left[i].birth - right[j].birth),
                   std::abs(left[i].death - right[j].death));
      const double destroy = std::max(left[i].half_persistence, right[j].half_persistence);
      const double c = std::min(move, destroy);
      cost[i * m + j] = c;
      cost_t[j * n + i] = c;
      if (move <= destroy) candidates.push_back(move);
    }
  }
  for (const FlatPoint& p : left) candidates.push_back(p.half_persistence);
  for (const FlatPoint& q : right) candidates.push_back(q.half_persistence);

  Feasibility feasible{left, right, cost, cost_t, {}};

  // Quickselect-style search for the smallest feasible candidate. The top
  // candidate (destroy everything) is always feasible.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(candidates.begin() + static_cast<std::ptrdiff_t>(lo),
                     candidates.begin() + static_cast<std::ptrdiff_t>(mid),
                     candidates.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double brute_force_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  const std::vector<FlatPoint> left = expand(a, "brute_force_bottleneck");
  const std::vector<FlatPoint> right = expand(b, "brute_force_bottleneck");
  if (left.size() + right.size() > 8) {
    throw std::length_error("brute_force_bottleneck: expanded sizes must satisfy N + M <= 8");
  }

  std::vector<char> used(right.size(), 0);
  double best = std::numeric_limits<double>::infinity();

  auto recurse = [&](auto&& self, std::size_t i, double worst) -> void {
    if (worst >= best) return;
    if (i == left.size()) {
      double total = worst;
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (!used[j]) total = std::max(total, right[j].half_persistence);
      }
      best = std::min(best, total);
      return;
    }
    self(self, i + 1, std::max(worst, left[i].half_persistence));  // destroy left point
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      self(self, i + 1, std::max(worst, pair_cost(left[i], right[j])));
      used[j] = 0;
    }
  };
  recurse(recurse, 0, 0.0);
  return best;
}

}  // namespace pdsym
