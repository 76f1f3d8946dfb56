#include "pdsym/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdsym {

namespace {

void validate_point(const Cornerpoint& p) {
  if (std::isnan(p.birth) || std::isnan(p.death) || std::isinf(p.birth)) {
    throw std::invalid_argument("cornerpoint coordinates must have finite birth and non-NaN death");
  }
  if (p.death == -kInfiniteDeath) {
    throw std::invalid_argument("cornerpoint death must be finite or +inf");
  }
  if (!(p.birth < p.death)) {
    throw std::invalid_argument("cornerpoint requires birth < death");
  }
  if (p.multiplicity < 1) {
    throw std::invalid_argument("cornerpoint multiplicity must be >= 1");
  }
}

}  // namespace

PersistenceDiagram::PersistenceDiagram(std::vector<Cornerpoint> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  for (const Cornerpoint& p : points_) validate_point(p);
  std::sort(points_.begin(), points_.end(), [](const Cornerpoint& a, const Cornerpoint& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });
  // Merge coincident points, summing multiplicities.
  std::size_t out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (out > 0 && points_[out - 1].birth == points_[i].birth &&
        points_[out - 1].death == points_[i].death) {
      points_[out - 1].multiplicity += points_[i].multiplicity;
    } else {
      points_[out++] = points_[i];
    }
  }
  points_.resize(out);
}

std::int64_t PersistenceDiagram::total_count() const {
  std::int64_t n = 0;
  for (const Cornerpoint& p : points_) n += p.multiplicity;
  return n;
}

bool PersistenceDiagram::has_essential() const {
  return std::any_of(points_.begin(), points_.end(),
                     [](const Cornerpoint& p) { return p.essential(); });
}

PersistenceDiagram normalize_filtration(const PersistenceDiagram& diagram,
                                        double f_min, double f_max) {
  if (!(f_min < f_max)) {
    throw std::invalid_argument("normalize_filtration: degenerate range, f_min must be < f_max");
  }
  const double span = f_max - f_min;
  auto map = [&](double x) { return (x - f_min) / span; };

  std::vector<Cornerpoint> out;
  out.reserve(diagram.points().size());
  for (const Cornerpoint& p : diagram.points()) {
    if (p.birth < f_min || p.birth > f_max ||
        (!p.essential() && (p.death < f_min || p.death > f_max))) {
      throw std::out_of_range("normalize_filtration: coordinate outside [f_min, f_max]");
    }
    out.push_back({map(p.birth), p.essential() ? kInfiniteDeath : map(p.death), p.multiplicity});
  }
  return PersistenceDiagram(std::move(out), diagram.label());
}

PersistenceDiagram finitize_cornerlines(const PersistenceDiagram& diagram) {
  double max_death = -kInfiniteDeath;
  bool has_proper = false;
  for (const Cornerpoint& p : diagram.points()) {
    if (!p.essential()) {
      has_proper = true;
      max_death = std::max(max_death, p.death);
    }
  }

  std::vector<Cornerpoint> out;
  out.reserve(diagram.points().size());
  for (const Cornerpoint& p : diagram.points()) {
    if (!p.essential()) {
      out.push_back(p);
      continue;
    }
    const double death = (has_proper && max_death > p.birth) ? max_death : 1.0;
    if (death > p.birth) {
      out.push_back({p.birth, death, p.multiplicity});
    }
    // else: a cornerline at the filtration top would land on the diagonal; drop it.
  }
  return PersistenceDiagram(std::move(out), diagram.label());
}

}  // namespace pdsym
