#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ratcat/lattice.hpp"

namespace ratcat {

/// The three path statistics. They always sum to (m-1)(n-1)/2, the number of
/// positive-rank cells.
struct StatTriple {
  std::int64_t area = 0;
  std::int64_t dinv = 0;
  std::int64_t skips = 0;
  bool operator==(const StatTriple&) const = default;
};

/// Disjoint split of the positive-rank cells: area cells lie below the path,
/// dinv and skips cells above it.
struct CellPartition {
  std::vector<Cell> area_cells;
  std::vector<Cell> dinv_cells;
  std::vector<Cell> skips_cells;
};

/// All above-path cells in reading order (top row first, left to right).
inline std::vector<Cell> above_cells(const DyckPath& path) {
  std::vector<Cell> cells;
  for (int row = path.pair().n(); row >= 1; --row) {
    for (int col = 1; col <= path.row_length(row); ++col) {
      cells.push_back(Cell{col, row});
    }
  }
  return cells;
}

/// Positive-rank cells below the path, in reading order.
inline std::vector<Cell> area_cells(const DyckPath& path) {
  std::vector<Cell> cells;
  for (int row = path.pair().n(); row >= 1; --row) {
    const int prefix = positive_prefix(path.pair(), row);
    for (int col = path.row_length(row) + 1; col <= prefix; ++col) {
      cells.push_back(Cell{col, row});
    }
  }
  return cells;
}

/// The four reference cells of the rank-comparison dinv criterion for an
/// above-path cell: the easternmost above-path cell in its row, the cell one
/// east of that, the southernmost above-path cell in its column, and the cell
/// one south of that. All four are always in range.
struct DinvNeighbors {
  Cell row_above_end;    // easternmost above-path cell in the row
  Cell row_below_first;  // one east of row_above_end, below the path
  Cell col_above_end;    // southernmost above-path cell in the column
  Cell col_below_first;  // one south of col_above_end, below the path
};

inline DinvNeighbors dinv_neighbors(const DyckPath& path, Cell cell) {
  detail::require_above_path(path, cell);
  const int east_end = path.row_length(cell.row);
  int south_end = cell.row;
  while (south_end > 1 && path.row_length(south_end - 1) >= cell.col) {
    --south_end;
  }
  if (south_end < 2) {
    // An above-path cell is strictly above the diagonal, so the row below its
    // column segment always exists.
    throw std::logic_error("above-path column segment reaches the bottom row");
  }
  return DinvNeighbors{Cell{east_end, cell.row}, Cell{east_end + 1, cell.row},
                       Cell{cell.col, south_end}, Cell{cell.col, south_end - 1}};
}

/// Dinv cells by the arm/leg definition: above-path cells with
/// arm/(leg+1) < m/n < (arm+1)/leg, where division by zero means infinity.
/// Evaluated by cross-multiplication, so no division occurs; coprimality
/// rules out the equality cases.
inline std::vector<Cell> dinv_naive(const DyckPath& path) {
  const std::int64_t m = path.pair().m();
  const std::int64_t n = path.pair().n();
  std::vector<Cell> cells;
  for (Cell cell : above_cells(path)) {
    const std::int64_t a = arm(path, cell);
    const std::int64_t l = leg(path, cell);
    if (a * n == m * (l + 1) || l * m == n * (a + 1)) {
      throw std::logic_error("arm/leg ratio equals m/n on a coprime grid");
    }
    if (a * n < m * (l + 1) && l * m < n * (a + 1)) {
      cells.push_back(cell);
    }
  }
  return cells;
}

/// Dinv cells by the rank-comparison criterion: an above-path cell is
/// included iff its row's last above-path rank exceeds its column's first
/// below-path rank, and its column's last above-path rank exceeds its row's
/// first below-path rank. Agrees with dinv_naive on every path.
inline std::vector<Cell> dinv_fast(const DyckPath& path) {
  const CoprimePair& pair = path.pair();
  std::vector<Cell> cells;
  for (Cell cell : above_cells(path)) {
    const DinvNeighbors refs = dinv_neighbors(path, cell);
    if (rank_of(pair, refs.row_above_end) > rank_of(pair, refs.col_below_first) &&
        rank_of(pair, refs.col_above_end) > rank_of(pair, refs.row_below_first)) {
      cells.push_back(cell);
    }
  }
  return cells;
}

/// Above-path cells that fail the dinv criterion.
inline std::vector<Cell> skips_cells(const DyckPath& path) {
  std::vector<Cell> skips;
  std::vector<Cell> dinv = dinv_fast(path);
  std::size_t next = 0;
  for (Cell cell : above_cells(path)) {
    if (next < dinv.size() && dinv[next] == cell) {
      ++next;
    } else {
      skips.push_back(cell);
    }
  }
  return skips;
}

inline CellPartition cell_partition(const DyckPath& path) {
  return CellPartition{area_cells(path), dinv_fast(path), skips_cells(path)};
}

inline StatTriple stat_triple(const DyckPath& path) {
  const CellPartition parts = cell_partition(path);
  return StatTriple{static_cast<std::int64_t>(parts.area_cells.size()),
                    static_cast<std::int64_t>(parts.dinv_cells.size()),
                    static_cast<std::int64_t>(parts.skips_cells.size())};
}

}  // namespace ratcat
