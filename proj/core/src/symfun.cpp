#include "pdsym/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdsym {

namespace {

// Viete recurrence over one more root z: e_j <- e_j + z * e_{j-1}.
// e is 1-based with e[0] = 1; seen counts roots absorbed so far.
void absorb_root(std::vector<std::complex<double>>& e, std::size_t k, std::size_t& seen,
                 const std::complex<double>& z) {
  ++seen;
  for (std::size_t j = std::min(k, seen); j >= 1; --j) {
    e[j] += z * e[j - 1];
  }
}

}  // namespace

std::vector<std::complex<double>> elementary_symmetric(std::span<const WarpedPoint> points,
                                                       std::size_t k) {
  if (k == 0) throw std::invalid_argument("elementary_symmetric: k must be >= 1");
  std::vector<std::complex<double>> e(k + 1, 0.0);
  e[0] = 1.0;
  std::size_t seen = 0;
  for (const WarpedPoint& p : points) {
    if (p.multiplicity < 1) {
      throw std::invalid_argument("elementary_symmetric: multiplicity must be >= 1");
    }
    for (std::int64_t copy = 0; copy < p.multiplicity; ++copy) {
      absorb_root(e, k, seen, p.value);
    }
  }
  return {e.begin() + 1, e.end()};
}

std::vector<std::complex<double>> elementary_symmetric(
    std::span<const std::complex<double>> points, std::size_t k) {
  if (k == 0) throw std::invalid_argument("elementary_symmetric: k must be >= 1");
  std::vector<std::complex<double>> e(k + 1, 0.0);
  e[0] = 1.0;
  std::size_t seen = 0;
  for (const std::complex<double>& z : points) {
    absorb_root(e, k, seen, z);
  }
  return {e.begin() + 1, e.end()};
}

std::vector<std::complex<double>> renormalize(std::span<const std::complex<double>> a,
                                              std::int64_t count) {
  std::vector<std::complex<double>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::complex<double>& aj = a[i];
    if (aj.real() == 0.0 && aj.imag() == 0.0) {
      out[i] = 0.0;
      continue;
    }
    if (count < 1) {
      throw std::invalid_argument("renormalize: count must be >= 1 for nonzero components");
    }
    const double j = static_cast<double>(i) + 1.0;
    const double modulus = std::pow(std::abs(aj), 1.0 / j) / static_cast<double>(count);
    out[i] = std::polar(modulus, std::arg(aj));
  }
  return out;
}

double vector_distance(const SymVector& x, const SymVector& y) {
  if (x.components.size() != y.components.size()) {
    throw std::invalid_argument("vector_distance: vectors must have the same k");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < x.components.size(); ++j) {
    sum += std::abs(x.components[j] - y.components[j]);
  }
  return sum;
}

SymVector vectorize(const PersistenceDiagram& diagram, Transform transform, std::size_t k) {
  const WarpedMultiset warped = warp_diagram(diagram, transform);
  const auto raw = elementary_symmetric(std::span<const WarpedPoint>(warped.points), k);
  return {renormalize(raw, warped.source_count), warped.source_count};
}

}  // namespace pdsym
