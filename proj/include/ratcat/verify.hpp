#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratcat/detail/parallel.hpp"
#include "ratcat/lattice.hpp"
#include "ratcat/polynomial.hpp"
#include "ratcat/rank_word.hpp"
#include "ratcat/statistics.hpp"
#include "ratcat/three_n.hpp"

namespace ratcat {

/// One verification check over a grid's full path set.
struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::int64_t items = 0;                       // paths (or triples) examined
  std::string note;                             // extra context for the report
  std::optional<std::string> counterexample;    // path text when failed
};

namespace detail {

template <typename Pred>
CheckOutcome scan_paths(std::string name, const CoprimePair& pair,
                        std::int64_t work_bound, int parallelism, Pred&& pred) {
  checked_path_count(pair, work_bound);
  struct Slice {
    std::int64_t checked = 0;
    std::optional<std::string> failure;
  };
  auto slices = map_top_slices<Slice>(pair, parallelism, [&](int top) {
    Slice slice;
    PathEnumerator paths(pair, top);
    while (auto path = paths.next()) {
      ++slice.checked;
      if (!slice.failure && !pred(*path)) {
        slice.failure = format_path(*path);
      }
    }
    return slice;
  });
  CheckOutcome outcome;
  outcome.name = std::move(name);
  outcome.passed = true;
  for (const Slice& slice : slices) {
    outcome.items += slice.checked;
    if (outcome.passed && slice.failure) {
      outcome.passed = false;
      outcome.counterexample = slice.failure;
    }
  }
  return outcome;
}

inline bool cells_equal(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  return a == b;  // both sides are produced in reading order
}

}  // namespace detail

/// Checks applicable to a grid. The first six run for every coprime pair;
/// the last four need a three-column grid.
inline std::vector<std::string> check_names(const CoprimePair& pair) {
  std::vector<std::string> names = {"fast-dinv",    "transport", "class-skips",
                                    "conservation", "genfun-b1", "qt-symmetry"};
  if (pair.m() == 3) {
    names.insert(names.end(),
                 {"schur", "triple-roundtrip", "swap-involution", "adjacent-skips"});
  }
  return names;
}

/// Runs one named check. Unknown names, and three-column checks requested on
/// other grids, raise std::invalid_argument.
inline CheckOutcome run_check(const std::string& name, const CoprimePair& pair,
                              std::int64_t work_bound = kDefaultWorkBound,
                              int parallelism = 1) {
  if (name == "fast-dinv") {
    return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
      return detail::cells_equal(dinv_fast(path), dinv_naive(path));
    });
  }
  if (name == "transport") {
    return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
      const RankWord word = from_path(path);
      return to_path(word) == path && word_stats(word) == stat_triple(path);
    });
  }
  if (name == "class-skips") {
    return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
      return skip_classes(from_path(path)).size() == skips_cells(path).size();
    });
  }
  if (name == "conservation") {
    return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
      const StatTriple stats = stat_triple(path);
      return stats.area + stats.dinv + stats.skips == path.pair().positive_rank_count();
    });
  }
  if (name == "genfun-b1") {
    CheckOutcome outcome{name, false, 0, "", std::nullopt};
    outcome.items = checked_path_count(pair, work_bound);
    outcome.passed =
        substitute(genfun_W(pair, work_bound, parallelism), Var::b, 1) ==
        catalan_C(pair, work_bound, parallelism);
    if (!outcome.passed) outcome.note = "W(1,q,t) differs from C(q,t)";
    return outcome;
  }
  if (name == "qt-symmetry") {
    CheckOutcome outcome{name, false, 0, "", std::nullopt};
    outcome.items = checked_path_count(pair, work_bound);
    const BqtPolynomial c = catalan_C(pair, work_bound, parallelism);
    outcome.passed = c == swap_qt(c);
    if (pair.m() > 3) outcome.note = "conjecture check (m>3)";
    return outcome;
  }

  if (name == "schur" || name == "triple-roundtrip" || name == "swap-involution" ||
      name == "adjacent-skips") {
    if (pair.m() != 3) {
      throw std::invalid_argument("check '" + name + "' requires m=3");
    }
  } else {
    throw std::invalid_argument("unknown check '" + name + "'");
  }

  if (name == "schur") {
    CheckOutcome outcome{name, false, 0, "", std::nullopt};
    outcome.items = checked_path_count(pair, work_bound);
    outcome.passed =
        genfun_W(pair, work_bound, parallelism) == schur_expansion(pair.n());
    if (!outcome.passed) outcome.note = "W differs from the closed Schur form";
    return outcome;
  }
  if (name == "triple-roundtrip") {
    // Both directions: every valid triple reaches a path carrying it, and
    // every path is recovered from its own triple.
    CheckOutcome outcome{name, true, 0, "", std::nullopt};
    const int n = pair.n();
    for (std::int64_t area = 0; area < n && outcome.passed; ++area) {
      for (std::int64_t dinv = 0; area + dinv < n && outcome.passed; ++dinv) {
        const std::int64_t skips = n - 1 - area - dinv;
        if (skips < 0 || skips > std::min(area, dinv)) continue;
        const DyckTriple triple(area, dinv, skips);
        ++outcome.items;
        if (triple_of_path(to_path(construct_word(triple))) != triple) {
          outcome.passed = false;
          outcome.note = "triple (" + std::to_string(area) + "," + std::to_string(dinv) +
                         "," + std::to_string(skips) + ") not recovered";
        }
      }
    }
    if (!outcome.passed) return outcome;
    CheckOutcome paths = detail::scan_paths(name, pair, work_bound, parallelism,
                                            [](const DyckPath& path) {
      return to_path(construct_word(triple_of_path(path))) == path;
    });
    paths.items += outcome.items;
    return paths;
  }
  if (name == "swap-involution") {
    return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
      const DyckPath image = swap_bijection(path);
      const StatTriple before = stat_triple(path);
      const StatTriple after = stat_triple(image);
      return after.area == before.dinv && after.dinv == before.area &&
             after.skips == before.skips && swap_bijection(image) == path;
    });
  }
  // adjacent-skips
  return detail::scan_paths(name, pair, work_bound, parallelism, [](const DyckPath& path) {
    const RankWord word = from_path(path);
    const auto classes = skip_classes(word);
    if (skips_adjacent(word) != static_cast<std::int64_t>(classes.size())) return false;
    for (Cell cell : skips_cells(path)) {
      if (cell.col != 1) continue;
      const int a = arm(path, cell);
      const int l = leg(path, cell);
      const int n = path.pair().n();
      const bool short_leg = a == 1 && 3 * (l + 1) < n;
      const bool long_leg = a == 0 && n < 3 * l;
      if (short_leg == long_leg) return false;
      classify_first_column(path, cell);  // must not throw
    }
    return true;
  });
}

}  // namespace ratcat
