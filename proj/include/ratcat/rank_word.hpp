#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratcat/lattice.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

/// One letter of an (m,n)-word: a positive rank decorated with its color,
/// which is the column of the cell carrying that rank.
struct Letter {
  std::int64_t rank = 0;
  int color = 0;
  bool operator==(const Letter&) const = default;
};

class RankWord;
inline RankWord build_word(const CoprimePair& pair);

/// The sorted sequence of all positive ranks of a grid, each colored by its
/// column, together with a highlight flag per letter. Highlighted letters
/// correspond to above-path cells under the word/path bijection. The letter
/// sequence itself is fixed by the grid; only the highlight mask varies, and
/// a mask is only a valid rank word when it satisfies the closure rule
/// checked by validate_highlight.
class RankWord {
 public:
  const CoprimePair& pair() const { return pair_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<bool>& highlights() const { return highlights_; }
  std::size_t size() const { return letters_.size(); }
  bool highlighted(std::size_t index) const { return highlights_.at(index); }

  /// Same letters with a different highlight mask. The mask is not required
  /// to satisfy the closure rule; query validate_highlight for that.
  RankWord with_highlights(std::vector<bool> mask) const {
    if (mask.size() != letters_.size()) {
      throw std::invalid_argument("highlight mask size must match the word length");
    }
    RankWord word = *this;
    word.highlights_ = std::move(mask);
    return word;
  }

  /// Convenience: highlight exactly the letters with the given ranks.
  RankWord with_highlight_ranks(const std::vector<std::int64_t>& ranks) const {
    std::vector<bool> mask(letters_.size(), false);
    for (std::int64_t rank : ranks) {
      bool found = false;
      for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].rank == rank) {
          mask[i] = true;
          found = true;
          break;
        }
      }
      if (!found) {
        throw std::invalid_argument("rank " + std::to_string(rank) +
                                    " does not appear in the word");
      }
    }
    return with_highlights(std::move(mask));
  }

  bool operator==(const RankWord&) const = default;

 private:
  explicit RankWord(CoprimePair pair) : pair_(pair) {}
  friend RankWord build_word(const CoprimePair& pair);

  CoprimePair pair_;
  std::vector<Letter> letters_;
  std::vector<bool> highlights_;
};

/// The (m,n)-word with nothing highlighted: all positive values of
/// mn - k*m - l*n for k,l >= 1, sorted increasing, colored by l.
inline RankWord build_word(const CoprimePair& pair) {
  RankWord word(pair);
  RankDiagram diagram(pair);
  for (Cell cell : diagram.positive_cells()) {
    word.letters_.push_back(Letter{diagram.rank(cell), cell.col});
  }
  std::sort(word.letters_.begin(), word.letters_.end(),
            [](const Letter& a, const Letter& b) { return a.rank < b.rank; });
  word.highlights_.assign(word.letters_.size(), false);
  return word;
}

/// The grid cell carrying a letter's rank: column = color, row recovered
/// from the rank formula.
inline Cell letter_cell(const CoprimePair& pair, const Letter& letter) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  const std::int64_t k = (m * n - letter.color * n - letter.rank) / m;
  return Cell{letter.color, static_cast<int>(n + 1 - k)};
}

/// Closure rule for highlight masks: whenever a letter is highlighted, every
/// larger rank congruent to it mod m (same column) or mod n (same row) must
/// be highlighted too.
inline bool validate_highlight(const RankWord& word) {
  const std::int64_t m = word.pair().m();
  const std::int64_t n = word.pair().n();
  const auto& letters = word.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!word.highlighted(i)) continue;
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      if (word.highlighted(j)) continue;
      const std::int64_t diff = letters[j].rank - letters[i].rank;
      if (diff % m == 0 || diff % n == 0) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {
inline void require_valid_word(const RankWord& word) {
  if (!validate_highlight(word)) {
    throw std::invalid_argument("highlight mask violates the closure rule");
  }
}
}  // namespace detail

/// Path whose above-path cells are exactly the highlighted letters' cells.
inline DyckPath to_path(const RankWord& word) {
  detail::require_valid_word(word);
  const int n = word.pair().n();
  std::vector<int> row_counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word.highlighted(i)) continue;
    ++row_counts[static_cast<std::size_t>(letter_cell(word.pair(), word.letters()[i]).row)];
  }
  std::vector<int> shape;
  shape.reserve(static_cast<std::size_t>(n));
  for (int row = n; row >= 1; --row) {
    shape.push_back(row_counts[static_cast<std::size_t>(row)]);
  }
  return DyckPath(word.pair(), std::move(shape));
}

/// Inverse of to_path: highlight exactly the letters whose cells lie above
/// the path.
inline RankWord from_path(const DyckPath& path) {
  RankWord word = build_word(path.pair());
  std::vector<bool> mask(word.size(), false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    mask[i] = is_above_path(path, letter_cell(path.pair(), word.letters()[i]));
  }
  return word.with_highlights(std::move(mask));
}

/// All rank words of a grid, in the enumeration order of their paths.
inline std::vector<RankWord> enumerate_rank_words(const CoprimePair& pair) {
  std::vector<RankWord> words;
  for_each_path(pair, [&](const DyckPath& path) { words.push_back(from_path(path)); });
  return words;
}

/// Word-level area: the number of unhighlighted letters.
inline std::int64_t word_area(const RankWord& word) {
  detail::require_valid_word(word);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word.highlighted(i)) ++count;
  }
  return count;
}

/// Ordered pair of a highlighted letter and an unhighlighted letter to its
/// right. The two colors always differ.
struct SkipPair {
  Letter left;
  Letter right;
  bool operator==(const SkipPair&) const = default;
};

/// All skip pairs of the word, ordered by (left rank, right rank).
inline std::vector<SkipPair> skip_pairs(const RankWord& word) {
  detail::require_valid_word(word);
  const auto& letters = word.letters();
  std::vector<SkipPair> pairs;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!word.highlighted(i)) continue;
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      if (word.highlighted(j)) continue;
      if (letters[i].color == letters[j].color) {
        throw std::logic_error("skip pair with equal colors");
      }
      pairs.push_back(SkipPair{letters[i], letters[j]});
    }
  }
  return pairs;
}

/// Partition of the skip pairs into equivalence classes; the class count is
/// the word's skips statistic. Classes are ordered by their smallest pair.
///
/// A pair sits on the side of the smaller color: left color below right
/// color, or the reverse. The generator relation respects sides. Two pairs
/// with left color < right color are related when their left colors agree and
/// their right ranks are congruent mod n (congruence mod n means lying in the
/// same row of the grid); two pairs with left color > right color are related
/// when their right colors agree and their left ranks are congruent mod n.
/// Pairs on opposite sides are never related. The partition is the
/// transitive closure of that generator, built with a union-find.
inline std::vector<std::vector<SkipPair>> skip_classes(const RankWord& word) {
  const std::vector<SkipPair> pairs = skip_pairs(word);
  const std::int64_t n = word.pair().n();

  std::vector<std::size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  auto related = [&](const SkipPair& a, const SkipPair& b) {
    const bool a_low_left = a.left.color < a.right.color;
    const bool b_low_left = b.left.color < b.right.color;
    if (a_low_left != b_low_left) return false;
    if (a_low_left) {
      return a.left.color == b.left.color && (a.right.rank - b.right.rank) % n == 0;
    }
    return a.right.color == b.right.color && (a.left.rank - b.left.rank) % n == 0;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (related(pairs[i], pairs[j])) {
        parent[find(i)] = find(j);
      }
    }
  }

  std::vector<std::vector<SkipPair>> classes;
  std::vector<std::size_t> class_of_root(pairs.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::size_t root = find(i);
    if (class_of_root[root] == pairs.size()) {
      class_of_root[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back(pairs[i]);
  }
  return classes;
}

/// Representative letter of a skip pair's equivalence class: for left color
/// below right color, the letter in the left letter's column and the right
/// letter's row; otherwise the letter in the right letter's column and the
/// left letter's row. Constant on classes, and its cell is always a skips
/// cell of the corresponding path.
inline Letter psi(const RankWord& word, const SkipPair& pair) {
  detail::require_valid_word(word);
  const auto& letters = word.letters();
  const std::int64_t n = word.pair().n();

  auto index_of = [&](const Letter& letter) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] == letter) return i;
    }
    throw std::domain_error("letter does not appear in the word");
  };
  const std::size_t left = index_of(pair.left);
  const std::size_t right = index_of(pair.right);
  if (!word.highlighted(left) || word.highlighted(right) ||
      pair.left.rank >= pair.right.rank || pair.left.color == pair.right.color) {
    throw std::domain_error("pair is not in the word's skip set");
  }

  const int target_color = std::min(pair.left.color, pair.right.color);
  const std::int64_t row_rank =
      pair.left.color < pair.right.color ? pair.right.rank : pair.left.rank;
  for (const Letter& letter : letters) {
    if (letter.color == target_color && (letter.rank - row_rank) % n == 0) {
      return letter;
    }
  }
  throw std::domain_error("no letter in the target column and row");
}

/// Word statistics: area counts unhighlighted letters, skips counts the
/// equivalence classes, dinv is the complement within (m-1)(n-1)/2. Always
/// equal to the path statistics of to_path(word).
inline StatTriple word_stats(const RankWord& word) {
  const std::int64_t area = word_area(word);
  const std::int64_t skips = static_cast<std::int64_t>(skip_classes(word).size());
  return StatTriple{area, word.pair().positive_rank_count() - area - skips, skips};
}

/// Text form: letters as "rank_color" in ascending rank order, highlighted
/// letters in brackets, e.g. "1_1 2_2 4_1 [5_2] 7_1 [10_1] [13_1]".
inline std::string format_word(const RankWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += " ";
    const Letter& letter = word.letters()[i];
    std::string token = std::to_string(letter.rank) + "_" + std::to_string(letter.color);
    out += word.highlighted(i) ? "[" + token + "]" : token;
  }
  return out;
}

/// Parses the text form back into a rank word over the given grid. The
/// letters must match the grid's word exactly.
inline RankWord parse_word(const CoprimePair& pair, std::string_view text) {
  RankWord word = build_word(pair);
  std::vector<bool> mask(word.size(), false);
  std::size_t index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    bool highlighted = false;
    if (token.size() >= 2 && token.front() == '[' && token.back() == ']') {
      highlighted = true;
      token = token.substr(1, token.size() - 2);
    }
    const std::size_t sep = token.find('_');
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("letter token must look like 'rank_color'");
    }
    if (index >= word.size()) {
      throw std::invalid_argument("too many letters for this grid");
    }
    const Letter expected = word.letters()[index];
    if (detail::parse_int(token.substr(0, sep)) != expected.rank ||
        detail::parse_int(token.substr(sep + 1)) != expected.color) {
      throw std::invalid_argument("letter " + std::string(token) +
                                  " does not match the grid's word");
    }
    mask[index] = highlighted;
    ++index;
  }
  if (index != word.size()) {
    throw std::invalid_argument("too few letters for this grid");
  }
  return word.with_highlights(std::move(mask));
}

}  // namespace ratcat
