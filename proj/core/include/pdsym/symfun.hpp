#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pdsym/diagram.hpp"
#include "pdsym/warp.hpp"

namespace pdsym {

/// The k renormalized elementary-symmetric components of a warped diagram,
/// together with the source cornerpoint count N.
struct SymVector {
  std::vector<std::complex<double>> components;
  std::int64_t source_count = 0;

  std::size_t k() const { return components.size(); }
};

/// First k elementary symmetric functions e_1..e_k of the multiset, expanded
/// by multiplicity. Uses the incremental coefficient recurrence
/// e_j <- e_j + z * e_{j-1} (descending j), O(m k). e_j = 0 for j beyond the
/// expanded size m, which makes zero-padding of shorter multisets a no-op.
std::vector<std::complex<double>> elementary_symmetric(std::span<const WarpedPoint> points,
                                                       std::size_t k);
std::vector<std::complex<double>> elementary_symmetric(
    std::span<const std::complex<double>> points, std::size_t k);

/// Component-wise renormalization: a_j -> |a_j|^(1/j) / N * exp(i arg a_j),
/// with 0 mapped to 0. Throws std::invalid_argument when N = 0 but some
/// component is nonzero.
std::vector<std::complex<double>> renormalize(std::span<const std::complex<double>> a,
                                              std::int64_t count);

/// Sum over components of |x_j - y_j|. Requires equal k.
double vector_distance(const SymVector& x, const SymVector& y);

/// Full pipeline: warp the (finitized, normalized) diagram, take the first k
/// elementary symmetric functions, renormalize by the cornerpoint count.
/// An empty diagram yields the zero vector with N = 0.
SymVector vectorize(const PersistenceDiagram& diagram, Transform transform, std::size_t k);

}  // namespace pdsym
