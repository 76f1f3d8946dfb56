#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace pdsym {

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

/// One off-diagonal point of a persistence diagram. A death of +infinity
/// marks an essential class (a cornerline).
struct Cornerpoint {
  double birth = 0.0;
  double death = 0.0;
  std::int64_t multiplicity = 1;

  bool essential() const { return death == kInfiniteDeath; }
  double persistence() const { return death - birth; }

  friend bool operator==(const Cornerpoint&, const Cornerpoint&) = default;
};

/// Multiset of cornerpoints. Construction canonicalizes the point list:
/// points are sorted by (birth, death) and coincident points merge by
/// summing multiplicities. Diagonal points (birth >= death) are rejected;
/// the diagonal itself is implicit and never stored.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(std::vector<Cornerpoint> points, std::string label = "");

  const std::vector<Cornerpoint>& points() const { return points_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Total cornerpoint count N, i.e. the sum of multiplicities.
  std::int64_t total_count() const;

  bool empty() const { return points_.empty(); }

  /// True if any point has infinite death.
  bool has_essential() const;

  friend bool operator==(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Cornerpoint> points_;
  std::string label_;
};

/// Affinely maps every finite coordinate from [f_min, f_max] onto [0, 1].
/// Infinite deaths and multiplicities are preserved. Throws
/// std::invalid_argument for a degenerate range and std::out_of_range for
/// coordinates outside [f_min, f_max].
PersistenceDiagram normalize_filtration(const PersistenceDiagram& diagram,
                                        double f_min, double f_max);

/// Replaces each cornerline (w, inf) by (w, V), with V the largest finite
/// death among the diagram's proper cornerpoints. When the diagram has no
/// proper cornerpoint, or V <= w, the substituted death is 1.0 (the top of
/// the normalized filtration). A cornerline at abscissa 1.0 that would
/// degenerate to the diagonal point (1, 1) is dropped. Expects coordinates
/// already normalized to [0, 1]; idempotent.
PersistenceDiagram finitize_cornerlines(const PersistenceDiagram& diagram);

}  // namespace pdsym
