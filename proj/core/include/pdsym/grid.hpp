#pragma once

#include <cstddef>
#include <vector>

#include "pdsym/filtered_graph.hpp"

namespace pdsym {

/// Dense row-major 2-D array of reals.
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  bool empty() const { return rows == 0 || cols == 0; }
};

enum class Connectivity { four = 4, eight = 8 };

/// Shrinks a grid by averaging over block x block squares. Output dimensions
/// are ceil(rows/block) x ceil(cols/block); blocks truncated at the border
/// average over the cells actually present.
Grid downsample_blocks(const Grid& grid, std::size_t block);

/// One vertex per cell carrying the cell value; edges join cells adjacent
/// under the chosen connectivity (4: axis neighbors, 8: plus diagonals).
FilteredGraph grid_to_graph(const Grid& grid, Connectivity connectivity);

}  // namespace pdsym
