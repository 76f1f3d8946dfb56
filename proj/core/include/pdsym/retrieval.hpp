#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdsym/diagram.hpp"
#include "pdsym/symfun.hpp"

namespace pdsym {

/// Symmetric nonnegative dissimilarity matrix with a zero diagonal, plus
/// item identifiers and optional per-item class labels.
struct DistanceMatrix {
  std::size_t size = 0;
  std::vector<double> entries;         // row-major size x size
  std::vector<std::string> item_ids;   // size entries
  std::vector<std::string> labels;     // size entries, or empty when unlabeled

  double at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  bool has_labels() const { return !labels.empty(); }

  /// Throws std::invalid_argument if any structural invariant is violated.
  void validate() const;
};

struct EvaluationReport {
  double accuracy = 0.0;                  // percent
  std::optional<double> sensitivity;      // percent; empty when no positives
  std::optional<double> specificity;      // percent; empty when no negatives
  std::int64_t true_positives = 0;
  std::int64_t false_negatives = 0;
  std::int64_t true_negatives = 0;
  std::int64_t false_positives = 0;
  std::vector<std::string> predictions;
};

struct WeightSearchResult {
  std::vector<double> weights;
  double accuracy = 0.0;  // leave-one-out accuracy of the combined matrix, percent
};

/// Pairwise vector distances (upper triangle computed in parallel, mirrored).
/// Empty ids default to the item index as text.
DistanceMatrix compute_distance_matrix(std::span<const SymVector> items,
                                       std::vector<std::string> item_ids = {},
                                       std::vector<std::string> labels = {});

/// Pairwise bottleneck distances between finitized diagrams.
DistanceMatrix compute_distance_matrix(std::span<const PersistenceDiagram> items,
                                       std::vector<std::string> item_ids = {},
                                       std::vector<std::string> labels = {});

/// Entry-wise weighted average: sum_i w_i M_i / sum_i w_i. Weights must be
/// nonnegative with a positive sum; matrices must agree in size. Ids and
/// labels are taken from the first matrix.
DistanceMatrix combine_matrices(std::span<const DistanceMatrix> matrices,
                                std::span<const double> weights);

/// Leave-one-out nearest-neighbor prediction: item j receives the label of
/// its nearest other item (ties broken by smallest index). neighbor_count > 1
/// switches to a majority vote among that many nearest neighbors.
std::vector<std::string> leave_one_out_nn(const DistanceMatrix& matrix,
                                          std::size_t neighbor_count = 1);

/// Accuracy, sensitivity and specificity (in percent) of predictions against
/// ground-truth labels, treating positive_class as the positive.
EvaluationReport evaluate(std::span<const std::string> predictions,
                          std::span<const std::string> labels,
                          const std::string& positive_class);

/// Deterministic coordinate ascent over per-feature weights on the grid
/// {0, step, 2 step, ...} in [0, 1], objective = leave-one-out accuracy of
/// the combined matrix. Starts from uniform weights and also evaluates every
/// single-feature vertex, so the result never scores below the best single
/// feature on the visited grid.
WeightSearchResult optimize_weights(std::span<const DistanceMatrix> matrices,
                                    double grid_step = 0.05);

}  // namespace pdsym
