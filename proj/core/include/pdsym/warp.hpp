#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pdsym/diagram.hpp"

namespace pdsym {

enum class Transform { T, R };

/// A complex value with a multiplicity, the image of one or more cornerpoints.
struct WarpedPoint {
  std::complex<double> value;
  std::int64_t multiplicity = 1;

  friend bool operator==(const WarpedPoint&, const WarpedPoint&) = default;
};

/// Multiset of warped cornerpoints. source_count is the cornerpoint count N
/// of the originating diagram (sum of multiplicities).
struct WarpedMultiset {
  std::vector<WarpedPoint> points;
  std::int64_t source_count = 0;
};

/// T(u, v) = (v-u)/2 * (cos a - sin a + i (cos a + sin a)) with
/// a = sqrt(u^2 + v^2). Sends the diagonal to the origin and preserves each
/// point's distance to the diagonal as its modulus, |T(u,v)| = (v-u)/sqrt(2).
/// Defined on the closed triangle 0 <= u <= v <= 1 (checked with a 1e-12
/// slack for normalization round-off); outside it throws std::domain_error.
std::complex<double> warp_T(double u, double v);

/// R(u, v) = (v-u)/sqrt(2) * (cos t + i sin t) with t = pi (u+v). Same
/// modulus behavior as T; segments orthogonal to the diagonal map to rays
/// from the origin. Same domain as warp_T.
std::complex<double> warp_R(double u, double v);

/// Maps every cornerpoint of a finitized, [0,1]-normalized diagram through
/// the chosen transform. Coincident images merge by summing multiplicities;
/// points are returned sorted by (re, im). Throws std::invalid_argument if
/// the diagram still contains an infinite death.
WarpedMultiset warp_diagram(const PersistenceDiagram& diagram, Transform transform);

}  // namespace pdsym
