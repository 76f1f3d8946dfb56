#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pdsym/diagram.hpp"

namespace pdsym {

/// Uniform double in [0, 1) from the top 53 bits of the engine output.
/// Unlike std::uniform_real_distribution this is pinned by the standard's
/// engine specification, so seeded streams are reproducible everywhere.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random diagram in the open triangle: signal points carry persistence in
/// [0.20, 0.22] with births in [0.10, 0.13] (a tight cluster well off the
/// diagonal), noise points sit near the diagonal with persistence in
/// (0, 0.05] and births spread over [0, 0.9].
PersistenceDiagram make_synthetic_diagram(std::int64_t signal_points, std::int64_t noise_points,
                                          std::mt19937_64& rng);

/// Database of `count` diagrams with `points` cornerpoints each, a
/// noise_fraction share of them noise. Deterministic in the seed.
std::vector<PersistenceDiagram> make_synthetic_database(std::int64_t count, std::int64_t points,
                                                        double noise_fraction, std::uint64_t seed);

}  // namespace pdsym
