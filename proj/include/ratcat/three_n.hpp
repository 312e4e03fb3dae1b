#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcat/lattice.hpp"
#include "ratcat/polynomial.hpp"
#include "ratcat/rank_word.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

/// Statistics triple (area, dinv, skips) of a path on a three-column grid.
/// Valid triples satisfy skips <= min(area, dinv) and have area+dinv+skips+1
/// not divisible by 3; they classify three-column paths uniquely, with the
/// grid height recovered as rows() = area + dinv + skips + 1.
class DyckTriple {
 public:
  DyckTriple(std::int64_t area, std::int64_t dinv, std::int64_t skips)
      : area_(area), dinv_(dinv), skips_(skips) {
    if (area < 0 || dinv < 0 || skips < 0) {
      throw std::domain_error("triple entries must be non-negative");
    }
    if (skips > std::min(area, dinv)) {
      throw std::domain_error("skips must not exceed min(area, dinv)");
    }
    if ((area + dinv + skips + 1) % 3 == 0) {
      throw std::domain_error("area + dinv + skips + 1 must not be divisible by 3");
    }
  }

  std::int64_t area() const { return area_; }
  std::int64_t dinv() const { return dinv_; }
  std::int64_t skips() const { return skips_; }
  std::int64_t rows() const { return area_ + dinv_ + skips_ + 1; }

  StatTriple stats() const { return StatTriple{area_, dinv_, skips_}; }
  bool operator==(const DyckTriple&) const = default;

 private:
  std::int64_t area_;
  std::int64_t dinv_;
  std::int64_t skips_;
};

namespace detail {
inline void require_three_columns(int m) {
  if (m != 3) {
    throw std::domain_error("operation requires a three-column grid");
  }
}
}  // namespace detail

/// Skips of a three-column rank word counted directly: the number of
/// unhighlighted letters whose immediate left neighbor is highlighted.
/// Always equals the equivalence-class count from skip_classes.
inline std::int64_t skips_adjacent(const RankWord& word) {
  detail::require_three_columns(word.pair().m());
  detail::require_valid_word(word);
  std::int64_t count = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!word.highlighted(i) && word.highlighted(i - 1)) ++count;
  }
  return count;
}

/// The two possible shapes of a first-column skip cell on a three-column
/// grid: arm 1 with a short leg (3*(leg+1) < n), or arm 0 with a long leg
/// (n < 3*leg). Exactly one holds for every such cell.
enum class FirstColumnSkip { arm1_short_leg, arm0_long_leg };

inline FirstColumnSkip classify_first_column(const DyckPath& path, Cell cell) {
  detail::require_three_columns(path.pair().m());
  if (cell.col != 1) {
    throw std::domain_error("cell is not in the first column");
  }
  const std::vector<Cell> skips = skips_cells(path);
  if (std::find(skips.begin(), skips.end(), cell) == skips.end()) {
    throw std::domain_error("cell is not a skips cell of the path");
  }
  const int a = arm(path, cell);
  const int l = leg(path, cell);
  const int n = path.pair().n();
  if (a == 1 && 3 * (l + 1) < n) return FirstColumnSkip::arm1_short_leg;
  if (a == 0 && n < 3 * l) return FirstColumnSkip::arm0_long_leg;
  throw std::logic_error("first-column skip cell fits neither condition");
}

/// Builds the three-column rank word with the given statistics. Start from
/// the bare word of the (3, rows) grid and highlight the largest dinv ranks;
/// then, skips times, take the smallest unhighlighted rank r with a
/// highlighted rank immediately to its right and highlight the largest rank
/// below r whose color differs from r's.
inline RankWord construct_word(const DyckTriple& triple) {
  if (triple.rows() > static_cast<std::int64_t>(std::numeric_limits<int>::max())) {
    throw std::domain_error("triple too large to realize as a word");
  }
  const int n = static_cast<int>(triple.rows());
  RankWord word = build_word(CoprimePair(3, n));
  const std::size_t length = word.size();
  std::vector<bool> mask(length, false);

  for (std::size_t i = 0; i < static_cast<std::size_t>(triple.dinv()); ++i) {
    mask[length - 1 - i] = true;
  }

  const std::int64_t ceil_n3 = (n + 2) / 3;
  if (triple.skips() > 0 && triple.dinv() < ceil_n3 &&
      triple.skips() - 1 + ceil_n3 > triple.area() + triple.dinv()) {
    // Counting argument for the construction; valid triples never trip this.
    throw std::logic_error("not enough letters to place every skip");
  }

  for (std::int64_t step = 0; step < triple.skips(); ++step) {
    std::size_t smallest = length;
    for (std::size_t i = 0; i + 1 < length; ++i) {
      if (!mask[i] && mask[i + 1]) {
        smallest = i;
        break;
      }
    }
    if (smallest == length) {
      throw std::logic_error("no unhighlighted letter with a highlighted right neighbor");
    }
    const int color = word.letters()[smallest].color;
    bool placed = false;
    for (std::size_t i = smallest; i-- > 0;) {
      if (word.letters()[i].color != color) {
        if (mask[i]) {
          throw std::logic_error("construction revisited a highlighted letter");
        }
        mask[i] = true;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::logic_error("no smaller letter of the other color to highlight");
    }
  }

  RankWord result = word.with_highlights(std::move(mask));
  detail::require_valid_word(result);
  return result;
}

/// Reads a three-column path's statistics as a DyckTriple.
inline DyckTriple triple_of_path(const DyckPath& path) {
  detail::require_three_columns(path.pair().m());
  const StatTriple stats = stat_triple(path);
  return DyckTriple(stats.area, stats.dinv, stats.skips);
}

/// Closed form of the three-column generating function:
/// sum_{i=0}^{floor(n/3)} b^i s_{n-1-2i,i}(q,t). Equals genfun_W for the
/// (3,n) grid. Requires n >= 1 and n not divisible by 3.
inline BqtPolynomial schur_expansion(int n) {
  if (n < 1) {
    throw std::domain_error("grid height must be positive");
  }
  if (n % 3 == 0) {
    throw std::domain_error("grid height must not be divisible by 3");
  }
  BqtPolynomial out;
  for (int i = 0; i <= n / 3; ++i) {
    out += BqtPolynomial::term(1, i, 0, 0) * schur_two_var(n - 1 - 2 * i, i);
  }
  return out;
}

/// Involution on three-column paths that exchanges area with dinv and
/// preserves skips: rebuild the word from the triple with area and dinv
/// swapped, then take its path.
inline DyckPath swap_bijection(const DyckPath& path) {
  const DyckTriple triple = triple_of_path(path);
  return to_path(construct_word(DyckTriple(triple.dinv(), triple.area(), triple.skips())));
}

}  // namespace ratcat
