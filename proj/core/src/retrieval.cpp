#include "pdsym/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "pdsym/bottleneck.hpp"
#include "pdsym/parallel.hpp"

namespace pdsym {

namespace {

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return ids;
}

void check_metadata(std::size_t n, std::vector<std::string>& ids, std::vector<std::string>& labels) {
  if (ids.empty()) {
    ids = default_ids(n);
  } else if (ids.size() != n) {
    throw std::invalid_argument("item_ids size does not match item count");
  }
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("labels size does not match item count");
  }
}

template <class PairDistance>
DistanceMatrix pairwise_matrix(std::size_t n, std::vector<std::string> ids,
                               std::vector<std::string> labels, PairDistance&& dist) {
  if (n == 0) throw std::invalid_argument("compute_distance_matrix: no items");
  check_metadata(n, ids, labels);

  DistanceMatrix m;
  m.size = n;
  m.entries.assign(n * n, 0.0);
  m.item_ids = std::move(ids);
  m.labels = std::move(labels);

  // Upper triangle as a flat index space, mirrored after computing.
  const std::size_t pairs = n * (n - 1) / 2;
  parallel_for(pairs, [&](std::size_t p) {
    // Decode p -> (i, j), i < j, row-by-row.
    std::size_t i = 0;
    std::size_t remaining = p;
    std::size_t row_len = n - 1;
    while (remaining >= row_len) {
      remaining -= row_len;
      --row_len;
      ++i;
    }
    const std::size_t j = i + 1 + remaining;
    const double d = dist(i, j);
    m.entries[i * n + j] = d;
    m.entries[j * n + i] = d;
  });
  return m;
}

}  // namespace

void DistanceMatrix::validate() const {
  if (entries.size() != size * size) {
    throw std::invalid_argument("distance matrix entry count does not match size");
  }
  if (item_ids.size() != size) {
    throw std::invalid_argument("distance matrix item_ids count does not match size");
  }
  if (!labels.empty() && labels.size() != size) {
    throw std::invalid_argument("distance matrix labels count does not match size");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (at(i, i) != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!(at(i, j) >= 0.0) || !std::isfinite(at(i, j))) {
        throw std::invalid_argument("distance matrix entries must be finite and nonnegative");
      }
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument("distance matrix must be symmetric");
      }
    }
  }
}

DistanceMatrix compute_distance_matrix(std::span<const SymVector> items,
                                       std::vector<std::string> item_ids,
                                       std::vector<std::string> labels) {
  return pairwise_matrix(items.size(), std::move(item_ids), std::move(labels),
                         [&](std::size_t i, std::size_t j) {
                           return vector_distance(items[i], items[j]);
                         });
}

DistanceMatrix compute_distance_matrix(std::span<const PersistenceDiagram> items,
                                       std::vector<std::string> item_ids,
                                       std::vector<std::string> labels) {
  return pairwise_matrix(items.size(), std::move(item_ids), std::move(labels),
                         [&](std::size_t i, std::size_t j) {
                           return bottleneck_distance(items[i], items[j]);
                         });
}

DistanceMatrix combine_matrices(std::span<const DistanceMatrix> matrices,
                                std::span<const double> weights) {
  if (matrices.empty()) throw std::invalid_argument("combine_matrices: no matrices");
  if (matrices.size() != weights.size()) {
    throw std::invalid_argument("combine_matrices: weights count does not match matrices");
  }
  const std::size_t n = matrices[0].size;
  double weight_sum = 0.0;
  for (std::size_t f = 0; f < matrices.size(); ++f) {
    if (matrices[f].size != n || matrices[f].entries.size() != n * n) {
      throw std::invalid_argument("combine_matrices: matrices differ in size");
    }
    if (weights[f] < 0.0 || !std::isfinite(weights[f])) {
      throw std::invalid_argument("combine_matrices: weights must be finite and nonnegative");
    }
    weight_sum += weights[f];
  }
  if (!(weight_sum > 0.0)) {
    throw std::invalid_argument("combine_matrices: weights must have a positive sum");
  }

  DistanceMatrix out;
  out.size = n;
  out.item_ids = matrices[0].item_ids;
  out.labels = matrices[0].labels;
  out.entries.assign(n * n, 0.0);
  for (std::size_t f = 0; f < matrices.size(); ++f) {
    const double w = weights[f] / weight_sum;
    if (w == 0.0) continue;
    for (std::size_t e = 0; e < n * n; ++e) {
      out.entries[e] += w * matrices[f].entries[e];
    }
  }
  // A weighted average of zero diagonals stays exactly zero, but enforce it
  // against any accumulated signed zeros.
  for (std::size_t i = 0; i < n; ++i) out.entries[i * n + i] = 0.0;
  return out;
}

std::vector<std::string> leave_one_out_nn(const DistanceMatrix& matrix,
                                          std::size_t neighbor_count) {
  if (!matrix.has_labels()) {
    throw std::invalid_argument("leave_one_out_nn: matrix has no labels");
  }
  if (matrix.size < 2) {
    throw std::invalid_argument("leave_one_out_nn: need at least two items");
  }
  if (neighbor_count == 0) {
    throw std::invalid_argument("leave_one_out_nn: neighbor_count must be >= 1");
  }

  const std::size_t n = matrix.size;
  std::vector<std::string> predictions(n);
  std::vector<std::size_t> order(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (neighbor_count == 1) {
      std::size_t best = j == 0 ? 1 : 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j && matrix.at(i, j) < matrix.at(best, j)) best = i;
      }
      predictions[j] = matrix.labels[best];
      continue;
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) order[idx++] = i;
    }
    const std::size_t take = std::min(neighbor_count, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                      order.end(), [&](std::size_t a, std::size_t b) {
                        const double da = matrix.at(a, j);
                        const double db = matrix.at(b, j);
                        return da != db ? da < db : a < b;
                      });
    // Majority vote; a tie goes to the label holding the nearest neighbor.
    std::map<std::string, std::size_t> votes;
    for (std::size_t r = 0; r < take; ++r) ++votes[matrix.labels[order[r]]];
    std::size_t best_votes = 0;
    for (std::size_t r = 0; r < take; ++r) {
      const std::size_t v = votes[matrix.labels[order[r]]];
      if (v > best_votes) {
        best_votes = v;
        predictions[j] = matrix.labels[order[r]];
      }
    }
  }
  return predictions;
}

EvaluationReport evaluate(std::span<const std::string> predictions,
                          std::span<const std::string> labels,
                          const std::string& positive_class) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("evaluate: predictions and labels differ in length");
  }
  if (predictions.empty()) throw std::invalid_argument("evaluate: no items");
  if (std::find(labels.begin(), labels.end(), positive_class) == labels.end()) {
    throw std::invalid_argument("evaluate: positive class does not occur in labels");
  }

  EvaluationReport r;
  r.predictions.assign(predictions.begin(), predictions.end());
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool actual_positive = labels[i] == positive_class;
    const bool predicted_positive = predictions[i] == positive_class;
    if (predictions[i] == labels[i]) ++correct;
    if (actual_positive) {
      predicted_positive ? ++r.true_positives : ++r.false_negatives;
    } else {
      predicted_positive ? ++r.false_positives : ++r.true_negatives;
    }
  }
  const auto total = static_cast<double>(labels.size());
  r.accuracy = 100.0 * static_cast<double>(correct) / total;
  const std::int64_t positives = r.true_positives + r.false_negatives;
  const std::int64_t negatives = r.true_negatives + r.false_positives;
  if (positives > 0) {
    r.sensitivity = 100.0 * static_cast<double>(r.true_positives) / static_cast<double>(positives);
  }
  if (negatives > 0) {
    r.specificity = 100.0 * static_cast<double>(r.true_negatives) / static_cast<double>(negatives);
  }
  return r;
}

WeightSearchResult optimize_weights(std::span<const DistanceMatrix> matrices, double grid_step) {
  if (matrices.empty()) throw std::invalid_argument("optimize_weights: no matrices");
  if (!(grid_step > 0.0) || grid_step > 1.0) {
    throw std::invalid_argument("optimize_weights: grid_step must be in (0, 1]");
  }
  for (const DistanceMatrix& m : matrices) {
    if (!m.has_labels()) throw std::invalid_argument("optimize_weights: matrices must be labeled");
    if (m.size != matrices[0].size || m.labels != matrices[0].labels) {
      throw std::invalid_argument("optimize_weights: matrices must share size and labels");
    }
  }

  const std::size_t features = matrices.size();
  auto loo_accuracy = [&](const std::vector<double>& w) {
    const DistanceMatrix combined = combine_matrices(matrices, w);
    const auto preds = leave_one_out_nn(combined);
    std::int64_t correct = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (preds[i] == combined.labels[i]) ++correct;
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(preds.size());
  };

  std::vector<double> best(features, 1.0);  // uniform start
  double best_accuracy = loo_accuracy(best);

  // Visit the single-feature vertices up front.
  for (std::size_t f = 0; f < features; ++f) {
    std::vector<double> vertex(features, 0.0);
    vertex[f] = 1.0;
    const double a = loo_accuracy(vertex);
    if (a > best_accuracy) {
      best_accuracy = a;
      best = vertex;
    }
  }

  std::vector<double> current = best;
  double current_accuracy = best_accuracy;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t f = 0; f < features; ++f) {
      for (const double delta : {grid_step, -grid_step}) {
        const double moved = std::clamp(current[f] + delta, 0.0, 1.0);
        if (moved == current[f]) continue;
        std::vector<double> trial = current;
        trial[f] = moved;
        if (std::all_of(trial.begin(), trial.end(), [](double w) { return w == 0.0; })) continue;
        const double a = loo_accuracy(trial);
        if (a > current_accuracy) {
          current = std::move(trial);
          current_accuracy = a;
          improved = true;
        }
      }
    }
  }
  if (current_accuracy > best_accuracy) {
    best = current;
    best_accuracy = current_accuracy;
  }
  return {best, best_accuracy};
}

}  // namespace pdsym
