#include "pdsym/warp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdsym {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_triangle(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || u < -kDomainSlack ||
      v - u < -kDomainSlack || v > 1.0 + kDomainSlack) {
    throw std::domain_error("warp: point outside the triangle 0 <= u <= v <= 1");
  }
}

}  // namespace

std::complex<double> warp_T(double u, double v) {
  check_triangle(u, v);
  const double alpha = std::sqrt(u * u + v * v);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double half_gap = 0.5 * (v - u);
  return {half_gap * (c - s), half_gap * (c + s)};
}

std::complex<double> warp_R(double u, double v) {
  check_triangle(u, v);
  const double theta = std::numbers::pi * (u + v);
  const double radius = (v - u) / std::numbers::sqrt2;
  return {radius * std::cos(theta), radius * std::sin(theta)};
}

WarpedMultiset warp_diagram(const PersistenceDiagram& diagram, Transform transform) {
  WarpedMultiset out;
  out.points.reserve(diagram.points().size());
  for (const Cornerpoint& p : diagram.points()) {
    if (p.essential()) {
      throw std::invalid_argument("warp_diagram: diagram not finitized (infinite death)");
    }
    const std::complex<double> z =
        transform == Transform::T ? warp_T(p.birth, p.death) : warp_R(p.birth, p.death);
    out.points.push_back({z, p.multiplicity});
    out.source_count += p.multiplicity;
  }

  std::sort(out.points.begin(), out.points.end(), [](const WarpedPoint& a, const WarpedPoint& b) {
    return a.value.real() != b.value.real() ? a.value.real() < b.value.real()
                                            : a.value.imag() < b.value.imag();
  });
  std::size_t merged = 0;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (merged > 0 && out.points[merged - 1].value == out.points[i].value) {
      out.points[merged - 1].multiplicity += out.points[i].multiplicity;
    } else {
      out.points[merged++] = out.points[i];
    }
  }
  out.points.resize(merged);
  return out;
}

}  // namespace pdsym
