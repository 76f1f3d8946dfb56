#pragma once

#include <cstdint>

#include "pdsym/diagram.hpp"
#include "pdsym/filtered_graph.hpp"

namespace pdsym {

/// 0-dimensional persistence of the sublevel filtration of a vertex-weighted
/// graph. Vertices enter at their own value, an edge at the max of its
/// endpoint values. Union-find with the elder rule: when two components
/// merge, the one with the larger birth dies (birth tie: the component whose
/// creating vertex has the larger index dies). Emits one proper cornerpoint
/// per death with birth < death, and one cornerline (birth, inf) per
/// connected component of the full graph. Zero-persistence pairs are
/// discarded.
PersistenceDiagram zero_dim_persistence(const FilteredGraph& graph);

/// Rank of the map induced on connected components by the inclusion of the
/// sublevel subgraph at u into the one at v: the number of components at
/// level u that remain distinct at level v. Requires u < v.
std::int64_t persistent_betti_0(const FilteredGraph& graph, double u, double v);

/// Multiplicity of (u, v) as an alternating sum of four persistent Betti
/// numbers evaluated at a corner offset of epsilon. Requires
/// u + epsilon < v - epsilon, epsilon > 0, and epsilon smaller than half the
/// minimal gap between distinct filtration values, so the sum is stable.
std::int64_t multiplicity_oracle(const FilteredGraph& graph, double u, double v, double epsilon);

}  // namespace pdsym
