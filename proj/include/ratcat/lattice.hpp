#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratcat {

/// Coprime grid dimensions: m columns by n rows.
///
/// Every object in the library is parameterized by such a pair; coprimality
/// is checked once here and assumed everywhere downstream.
class CoprimePair {
 public:
  CoprimePair(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) {
      throw std::invalid_argument("grid dimensions must be positive");
    }
    if (std::gcd(m, n) != 1) {
      throw std::invalid_argument("m and n must be coprime");
    }
    if (static_cast<std::int64_t>(m) * n > kMaxCells) {
      throw std::invalid_argument("m*n too large for exact rank arithmetic");
    }
  }

  int m() const { return m_; }
  int n() const { return n_; }

  /// Number of cells with strictly positive rank: (m-1)(n-1)/2.
  std::int64_t positive_rank_count() const {
    return static_cast<std::int64_t>(m_ - 1) * (n_ - 1) / 2;
  }

  bool operator==(const CoprimePair&) const = default;

  // Keeps every rank within comfortable int64 range.
  static constexpr std::int64_t kMaxCells = std::int64_t{1} << 40;

 private:
  int m_;
  int n_;
};

/// Grid cell addressed by 1-based column and row. Cell (col,row) is the unit
/// cell whose northeast corner is the lattice point (col,row); row 1 is the
/// bottom row, column 1 the leftmost column.
struct Cell {
  int col = 0;
  int row = 0;
  bool operator==(const Cell&) const = default;
};

inline void require_in_range(const CoprimePair& pair, Cell cell) {
  if (cell.col < 1 || cell.col > pair.m() || cell.row < 1 || cell.row > pair.n()) {
    throw std::out_of_range("cell (" + std::to_string(cell.col) + "," +
                            std::to_string(cell.row) + ") outside the " +
                            std::to_string(pair.m()) + "x" + std::to_string(pair.n()) +
                            " grid");
  }
}

/// Rank of a cell: mn - col*n - (n+1-row)*m. Ranks are pairwise distinct
/// across the grid, and positive exactly for cells strictly above the main
/// diagonal.
inline std::int64_t rank_of(const CoprimePair& pair, Cell cell) {
  require_in_range(pair, cell);
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  return m * n - cell.col * n - (n + 1 - cell.row) * m;
}

/// True iff the cell lies strictly above the diagonal y = (n/m)x, i.e.
/// (row-1)*m - col*n > 0. Agrees with rank_of(pair, cell) > 0 on every cell.
inline bool is_above_diagonal(const CoprimePair& pair, Cell cell) {
  require_in_range(pair, cell);
  return static_cast<std::int64_t>(cell.row - 1) * pair.m() -
             static_cast<std::int64_t>(cell.col) * pair.n() >
         0;
}

/// Number of positive-rank cells in a row; they always form a prefix of the
/// row starting at column 1.
inline int positive_prefix(const CoprimePair& pair, int row) {
  if (row < 1 || row > pair.n()) {
    throw std::out_of_range("row index outside the grid");
  }
  return static_cast<int>(static_cast<std::int64_t>(row - 1) * pair.m() / pair.n());
}

/// The full m x n grid of ranks, with cell lookup in both directions.
class RankDiagram {
 public:
  explicit RankDiagram(CoprimePair pair) : pair_(pair) {}

  const CoprimePair& pair() const { return pair_; }

  std::int64_t rank(Cell cell) const { return rank_of(pair_, cell); }

  /// Locates the cell carrying a given rank. Throws std::out_of_range if no
  /// cell has that rank.
  Cell cell_of_rank(std::int64_t rank) const {
    const std::int64_t m = pair_.m();
    const std::int64_t n = pair_.n();
    for (int col = 1; col <= pair_.m(); ++col) {
      const std::int64_t rest = m * n - col * n - rank;  // = (n+1-row)*m
      if (rest % m != 0) continue;
      const std::int64_t k = rest / m;
      if (k < 1 || k > n) continue;
      return Cell{col, static_cast<int>(n + 1 - k)};
    }
    throw std::out_of_range("no cell has rank " + std::to_string(rank));
  }

  /// All positive-rank cells in reading order (top row first, left to right).
  std::vector<Cell> positive_cells() const {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(pair_.positive_rank_count()));
    for (int row = pair_.n(); row >= 1; --row) {
      const int prefix = positive_prefix(pair_, row);
      for (int col = 1; col <= prefix; ++col) {
        cells.push_back(Cell{col, row});
      }
    }
    return cells;
  }

 private:
  CoprimePair pair_;
};

/// A Dyck path over the grid, stored as the Ferrers shape of the cells above
/// it: shape()[i] is the number of above-path cells in row n-i, so the top
/// row comes first and the entries are weakly decreasing.
class DyckPath {
 public:
  DyckPath(CoprimePair pair, std::vector<int> shape_top_first)
      : pair_(pair), shape_(std::move(shape_top_first)) {
    if (shape_.size() != static_cast<std::size_t>(pair_.n())) {
      throw std::invalid_argument("shape must list one row length per row");
    }
    for (std::size_t i = 0; i < shape_.size(); ++i) {
      const int row = pair_.n() - static_cast<int>(i);
      if (shape_[i] < 0) {
        throw std::invalid_argument("row lengths must be non-negative");
      }
      if (i > 0 && shape_[i] > shape_[i - 1]) {
        throw std::invalid_argument("row lengths must weakly decrease from the top row down");
      }
      if (shape_[i] > positive_prefix(pair_, row)) {
        throw std::invalid_argument("row " + std::to_string(row) +
                                    " reaches a cell on or below the diagonal");
      }
    }
  }

  const CoprimePair& pair() const { return pair_; }

  /// Row lengths, top row (row n) first.
  const std::vector<int>& shape() const { return shape_; }

  /// Number of above-path cells in a 1-based row.
  int row_length(int row) const {
    if (row < 1 || row > pair_.n()) {
      throw std::out_of_range("row index outside the grid");
    }
    return shape_[static_cast<std::size_t>(pair_.n() - row)];
  }

  bool operator==(const DyckPath&) const = default;

 private:
  CoprimePair pair_;
  std::vector<int> shape_;
};

enum class CellSide { above_path, below_path };

/// Which side of the path a cell lies on. The above-path region is exactly
/// the stored shape; everything else, including all negative-rank cells, is
/// below.
inline CellSide cell_classification(const DyckPath& path, Cell cell) {
  require_in_range(path.pair(), cell);
  return cell.col <= path.row_length(cell.row) ? CellSide::above_path
                                               : CellSide::below_path;
}

inline bool is_above_path(const DyckPath& path, Cell cell) {
  return cell_classification(path, cell) == CellSide::above_path;
}

namespace detail {
inline void require_above_path(const DyckPath& path, Cell cell) {
  if (!is_above_path(path, cell)) {
    throw std::domain_error("cell (" + std::to_string(cell.col) + "," +
                            std::to_string(cell.row) + ") is not above the path");
  }
}
}  // namespace detail

/// Number of above-path cells strictly east of the cell in its row.
inline int arm(const DyckPath& path, Cell cell) {
  detail::require_above_path(path, cell);
  return path.row_length(cell.row) - cell.col;
}

/// Number of above-path cells strictly south of the cell in its column.
inline int leg(const DyckPath& path, Cell cell) {
  detail::require_above_path(path, cell);
  int count = 0;
  for (int row = cell.row - 1; row >= 1 && path.row_length(row) >= cell.col; --row) {
    ++count;
  }
  return count;
}

/// Number of Dyck paths over the grid: binom(m+n,m)/(m+n). Exact; throws
/// std::overflow_error if the count does not fit in 64 bits.
inline std::int64_t rational_catalan_number(const CoprimePair& pair) {
  using u128 = unsigned __int128;
  const int m = pair.m();
  const int n = pair.n();
  u128 binom = 1;
  for (int i = 1; i <= m; ++i) {
    const u128 factor = static_cast<u128>(n + i);
    const u128 next = binom * factor;
    if (next / factor != binom) {
      throw std::overflow_error("path count does not fit in 64 bits");
    }
    binom = next / static_cast<u128>(i);  // binom(n+i, i), always integral
  }
  if (binom % static_cast<u128>(m + n) != 0) {
    throw std::logic_error("binom(m+n,m) not divisible by m+n");
  }
  const u128 count = binom / static_cast<u128>(m + n);
  if (count > static_cast<u128>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("path count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(count);
}

/// Streams every Dyck path of a grid exactly once, in lexicographically
/// increasing order of the top-first shape sequence. Optionally restricted to
/// paths with a fixed top-row length, which partitions the full enumeration
/// into independent slices.
class PathEnumerator {
 public:
  explicit PathEnumerator(CoprimePair pair) : PathEnumerator(pair, std::nullopt) {}

  PathEnumerator(CoprimePair pair, std::optional<int> top_row_length)
      : pair_(pair),
        shape_(static_cast<std::size_t>(pair.n()), 0),
        fixed_top_(top_row_length) {
    caps_.reserve(shape_.size());
    for (int i = 0; i < pair_.n(); ++i) {
      caps_.push_back(positive_prefix(pair_, pair_.n() - i));
    }
    if (fixed_top_) {
      if (*fixed_top_ < 0 || *fixed_top_ > caps_[0]) {
        throw std::invalid_argument("top row length out of range");
      }
      shape_[0] = *fixed_top_;
    }
  }

  /// Next path in order, or nullopt when exhausted.
  std::optional<DyckPath> next() {
    if (done_) return std::nullopt;
    DyckPath current(pair_, shape_);
    advance();
    return current;
  }

 private:
  void advance() {
    const int lowest = fixed_top_ ? 1 : 0;
    for (int i = pair_.n() - 1; i >= lowest; --i) {
      const int cap = std::min(caps_[static_cast<std::size_t>(i)],
                               i > 0 ? shape_[static_cast<std::size_t>(i - 1)]
                                     : std::numeric_limits<int>::max());
      if (shape_[static_cast<std::size_t>(i)] < cap) {
        ++shape_[static_cast<std::size_t>(i)];
        std::fill(shape_.begin() + i + 1, shape_.end(), 0);
        return;
      }
    }
    done_ = true;
  }

  CoprimePair pair_;
  std::vector<int> shape_;
  std::vector<int> caps_;
  std::optional<int> fixed_top_;
  bool done_ = false;
};

template <typename Fn>
void for_each_path(const CoprimePair& pair, Fn&& fn) {
  PathEnumerator paths(pair);
  while (auto path = paths.next()) {
    fn(*path);
  }
}

inline std::vector<DyckPath> enumerate_paths(const CoprimePair& pair) {
  std::vector<DyckPath> all;
  for_each_path(pair, [&](const DyckPath& path) { all.push_back(path); });
  return all;
}

namespace detail {

inline std::int64_t parse_int(std::string_view token) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

inline int parse_small_int(std::string_view token, const char* what) {
  const std::int64_t value = parse_int(token);
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(std::string(what) + " out of range");
  }
  return static_cast<int>(value);
}

}  // namespace detail

/// Renders a path in the text format "m,n:l_n,l_{n-1},...,l_1".
inline std::string format_path(const DyckPath& path) {
  std::string out = std::to_string(path.pair().m()) + "," +
                    std::to_string(path.pair().n()) + ":";
  const auto& shape = path.shape();
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(shape[i]);
  }
  return out;
}

/// Parses a bare shape list "l_n,...,l_1" against known dimensions.
inline DyckPath parse_shape(const CoprimePair& pair, std::string_view text) {
  std::vector<int> shape;
  for (std::string_view token : detail::split(text, ',')) {
    shape.push_back(detail::parse_small_int(token, "row length"));
  }
  return DyckPath(pair, std::move(shape));
}

/// Parses the full path text format "m,n:l_n,...,l_1".
inline DyckPath parse_path(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("path text must look like 'm,n:l_n,...,l_1'");
  }
  const auto dims = detail::split(text.substr(0, colon), ',');
  if (dims.size() != 2) {
    throw std::invalid_argument("path text must start with 'm,n:'");
  }
  CoprimePair pair(detail::parse_small_int(dims[0], "m"),
                   detail::parse_small_int(dims[1], "n"));
  return parse_shape(pair, text.substr(colon + 1));
}

}  // namespace ratcat
