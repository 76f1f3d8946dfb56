#pragma once

#include "pdsym/diagram.hpp"

namespace pdsym {

/// Per-pair matching cost: the cheaper of moving one point onto the other in
/// the sup norm and destroying both onto the diagonal,
/// min{ max(|u-u'|, |v-v'|), max((v-u)/2, (v'-u')/2) }.
/// Both points must be finite.
double point_cost(const Cornerpoint& p, const Cornerpoint& q);

/// Exact bottleneck (matching) distance between two finitized diagrams: the
/// minimum over bijections (diagonal points freely available) of the maximum
/// per-pair cost. Computed by a threshold search over the candidate cost set
/// with a Hopcroft-Karp feasibility test per probe; the result is always a
/// member of the candidate set. Multiplicities are expanded before matching.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Exhaustive minimization over all partial matchings, unmatched points
/// destroyed at half their persistence. Only for expanded sizes N + M <= 8;
/// larger instances throw std::length_error.
double brute_force_bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace pdsym
