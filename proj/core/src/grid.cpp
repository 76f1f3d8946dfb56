#include "pdsym/grid.hpp"

#include <stdexcept>

namespace pdsym {

Grid downsample_blocks(const Grid& grid, std::size_t block) {
  if (block == 0) throw std::invalid_argument("downsample_blocks: block must be >= 1");
  if (grid.values.size() != grid.rows * grid.cols) {
    throw std::invalid_argument("downsample_blocks: grid dimensions do not match value count");
  }
  if (block == 1) return grid;

  Grid out;
  out.rows = (grid.rows + block - 1) / block;
  out.cols = (grid.cols + block - 1) / block;
  out.values.resize(out.rows * out.cols, 0.0);
  for (std::size_t br = 0; br < out.rows; ++br) {
    for (std::size_t bc = 0; bc < out.cols; ++bc) {
      const std::size_t r_end = std::min(grid.rows, (br + 1) * block);
      const std::size_t c_end = std::min(grid.cols, (bc + 1) * block);
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t r = br * block; r < r_end; ++r) {
        for (std::size_t c = bc * block; c < c_end; ++c) {
          sum += grid.at(r, c);
          ++count;
        }
      }
      out.at(br, bc) = sum / static_cast<double>(count);
    }
  }
  return out;
}

FilteredGraph grid_to_graph(const Grid& grid, Connectivity connectivity) {
  if (grid.empty()) throw std::invalid_argument("grid_to_graph: empty grid");
  if (grid.values.size() != grid.rows * grid.cols) {
    throw std::invalid_argument("grid_to_graph: grid dimensions do not match value count");
  }

  const bool diagonals = connectivity == Connectivity::eight;
  std::vector<FilteredGraph::Edge> edges;
  auto id = [&](std::size_t r, std::size_t c) {
    return static_cast<std::int64_t>(r * grid.cols + c);
  };
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      if (c + 1 < grid.cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < grid.rows) edges.emplace_back(id(r, c), id(r + 1, c));
      if (diagonals && r + 1 < grid.rows) {
        if (c + 1 < grid.cols) edges.emplace_back(id(r, c), id(r + 1, c + 1));
        if (c > 0) edges.emplace_back(id(r, c), id(r + 1, c - 1));
      }
    }
  }
  return FilteredGraph(grid.values, std::move(edges));
}

}  // namespace pdsym
