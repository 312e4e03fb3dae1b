#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ratcat/rank_word.hpp"

using namespace ratcat;
namespace oracle = ratcat::testing;

namespace {

std::set<std::int64_t> highlight_ranks(const RankWord& word) {
  std::set<std::int64_t> ranks;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.highlighted(i)) ranks.insert(word.letters()[i].rank);
  }
  return ranks;
}

SkipPair pair_of(const RankWord& word, std::int64_t left, std::int64_t right) {
  for (const SkipPair& candidate : skip_pairs(word)) {
    if (candidate.left.rank == left && candidate.right.rank == right) return candidate;
  }
  REQUIRE(false);
  return SkipPair{};
}

// the (5,7) word of the skips worked example
RankWord example_word_57() {
  return build_word(CoprimePair(5, 7)).with_highlight_ranks({3, 8, 9, 13, 16, 18, 23});
}

}  // namespace

TEST_CASE("word letters and colors") {
  const RankWord w35 = build_word(CoprimePair(3, 5));
  REQUIRE(w35.size() == 4);
  CHECK(w35.letters() == std::vector<Letter>{{1, 1}, {2, 2}, {4, 1}, {7, 1}});

  const RankWord w47 = build_word(CoprimePair(4, 7));
  CHECK(w47.letters() == std::vector<Letter>{{1, 1}, {2, 2}, {3, 3}, {5, 1}, {6, 2},
                                             {9, 1}, {10, 2}, {13, 1}, {17, 1}});

  CHECK(build_word(CoprimePair(1, 6)).size() == 0);
  CHECK(build_word(CoprimePair(2, 3)).letters() == std::vector<Letter>{{1, 1}});
}

TEST_CASE("letters of one color are congruent mod m") {
  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(8)) {
    const RankWord word = build_word(pair);
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word.letters()[i].color == word.letters()[j].color) {
          CHECK((word.letters()[j].rank - word.letters()[i].rank) % pair.m() == 0);
        }
      }
    }
  }
}

TEST_CASE("highlight closure rule") {
  const RankWord w35 = build_word(CoprimePair(3, 5));
  CHECK(validate_highlight(w35));  // nothing highlighted
  CHECK(validate_highlight(w35.with_highlight_ranks({7, 4})));
  CHECK(validate_highlight(w35.with_highlight_ranks({7, 2})));
  // 2 is congruent to 7 mod 5, so 2 highlighted alone is not closed
  CHECK(!validate_highlight(w35.with_highlight_ranks({2})));
  CHECK(!validate_highlight(w35.with_highlight_ranks({4})));
  CHECK(validate_highlight(w35.with_highlight_ranks({1, 2, 4, 7})));
  CHECK_THROWS_AS(w35.with_highlight_ranks({3}), std::invalid_argument);
  CHECK_THROWS_AS(to_path(w35.with_highlight_ranks({2})), std::invalid_argument);
}

TEST_CASE("rank word enumeration matches the exhaustive search") {
  const std::vector<std::set<std::int64_t>> expected = {
      {}, {7}, {7, 4}, {7, 4, 1}, {7, 2}, {7, 2, 4}, {7, 2, 4, 1}};
  const std::vector<RankWord> words = enumerate_rank_words(CoprimePair(3, 5));
  REQUIRE(words.size() == 7);
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(highlight_ranks(words[i]) == expected[i]);
    CHECK(validate_highlight(words[i]));
  }

  for (const CoprimePair& pair :
       {CoprimePair(2, 3), CoprimePair(3, 5), CoprimePair(4, 7), CoprimePair(5, 7),
        CoprimePair(3, 8), CoprimePair(5, 6)}) {
    const auto masks = oracle::search_highlight_masks(pair);
    std::set<std::vector<bool>> from_search(masks.begin(), masks.end());
    std::set<std::vector<bool>> from_paths;
    for (const RankWord& word : enumerate_rank_words(pair)) {
      from_paths.insert(word.highlights());
    }
    CHECK(from_search == from_paths);
    CHECK(from_paths.size() ==
          static_cast<std::size_t>(rational_catalan_number(pair)));
  }
}

TEST_CASE("word and path are inverse bijections") {
  // the worked (4,7) example
  const RankWord word =
      build_word(CoprimePair(4, 7)).with_highlight_ranks({17, 13, 10, 6});
  CHECK(to_path(word) == DyckPath(CoprimePair(4, 7), {2, 2, 0, 0, 0, 0, 0}));
  CHECK(from_path(DyckPath(CoprimePair(4, 7), {2, 2, 0, 0, 0, 0, 0})) == word);

  CHECK(to_path(build_word(CoprimePair(3, 5))) ==
        DyckPath(CoprimePair(3, 5), {0, 0, 0, 0, 0}));

  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(8)) {
    for_each_path(pair, [](const DyckPath& path) {
      CHECK(to_path(from_path(path)) == path);
    });
    for (const RankWord& word : enumerate_rank_words(pair)) {
      CHECK(from_path(to_path(word)) == word);
    }
  }
}

TEST_CASE("word area counts unhighlighted letters") {
  const RankWord word =
      build_word(CoprimePair(4, 7)).with_highlight_ranks({17, 13, 10, 6});
  CHECK(word_area(word) == 5);
  CHECK(word_area(build_word(CoprimePair(3, 5))) == 4);
  CHECK(word_area(build_word(CoprimePair(3, 5)).with_highlight_ranks({1, 2, 4, 7})) == 0);
}

TEST_CASE("skip pairs of the worked (5,7) word") {
  const RankWord word = example_word_57();
  const std::vector<SkipPair> pairs = skip_pairs(word);
  REQUIRE(pairs.size() == 5);
  CHECK(pairs[0] == SkipPair{{3, 1}, {4, 3}});
  CHECK(pairs[1] == SkipPair{{3, 1}, {6, 2}});
  CHECK(pairs[2] == SkipPair{{3, 1}, {11, 2}});
  CHECK(pairs[3] == SkipPair{{8, 1}, {11, 2}});
  CHECK(pairs[4] == SkipPair{{9, 3}, {11, 2}});

  CHECK(skip_pairs(build_word(CoprimePair(3, 5))).empty());
  CHECK(skip_pairs(build_word(CoprimePair(3, 5)).with_highlight_ranks({1, 2, 4, 7})).empty());
}

TEST_CASE("skip classes of the worked examples") {
  const auto classes = skip_classes(example_word_57());
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<SkipPair>{{{3, 1}, {4, 3}}, {{3, 1}, {11, 2}}, {{8, 1}, {11, 2}}});
  CHECK(classes[1] == std::vector<SkipPair>{{{3, 1}, {6, 2}}});
  CHECK(classes[2] == std::vector<SkipPair>{{{9, 3}, {11, 2}}});

  const RankWord word47 =
      build_word(CoprimePair(4, 7)).with_highlight_ranks({17, 13, 10, 6});
  const auto classes47 = skip_classes(word47);
  REQUIRE(classes47.size() == 1);
  CHECK(classes47[0] == std::vector<SkipPair>{{{6, 2}, {9, 1}}});
}

TEST_CASE("pairs on opposite sides are never directly related") {
  // left-color-below-right pairs and their mirror never satisfy either
  // congruence case of the generator across sides
  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(7)) {
    const std::int64_t n = pair.n();
    for (const RankWord& word : enumerate_rank_words(pair)) {
      const std::vector<SkipPair> pairs = skip_pairs(word);
      for (const SkipPair& p : pairs) {
        for (const SkipPair& q : pairs) {
          if ((p.left.color < p.right.color) == (q.left.color < q.right.color)) continue;
          CHECK(!(p.left.color == q.left.color && (p.right.rank - q.right.rank) % n == 0));
          CHECK(!(p.right.color == q.right.color && (p.left.rank - q.left.rank) % n == 0));
        }
      }
    }
  }
}

TEST_CASE("psi on the worked examples") {
  const RankWord word = example_word_57();
  CHECK(psi(word, pair_of(word, 3, 4)) == Letter{18, 1});
  CHECK(psi(word, pair_of(word, 3, 11)) == Letter{18, 1});
  CHECK(psi(word, pair_of(word, 8, 11)) == Letter{18, 1});
  CHECK(psi(word, pair_of(word, 3, 6)) == Letter{13, 1});
  CHECK(psi(word, pair_of(word, 9, 11)) == Letter{16, 2});

  const RankWord word47 =
      build_word(CoprimePair(4, 7)).with_highlight_ranks({17, 13, 10, 6});
  const Letter image = psi(word47, pair_of(word47, 6, 9));
  CHECK(image == Letter{13, 1});
  CHECK(letter_cell(word47.pair(), image) == Cell{1, 6});

  // (13,1)-(17,1) is not a skip pair: both highlighted, equal colors
  CHECK_THROWS_AS(psi(word47, SkipPair{{13, 1}, {17, 1}}), std::domain_error);
  CHECK_THROWS_AS(psi(word47, SkipPair{{9, 1}, {6, 2}}), std::domain_error);
  CHECK_THROWS_AS(psi(word47, SkipPair{{4, 1}, {6, 2}}), std::domain_error);
}

TEST_CASE("psi is a class invariant and a bijection onto the skip cells") {
  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(7)) {
    for_each_path(pair, [&](const DyckPath& path) {
      const RankWord word = from_path(path);
      const auto classes = skip_classes(word);
      std::set<std::int64_t> images;
      for (const auto& group : classes) {
        const Letter image = psi(word, group.front());
        for (const SkipPair& member : group) {
          CHECK(psi(word, member) == image);
        }
        CHECK(images.insert(image.rank).second);  // distinct classes, distinct images
      }
      std::set<std::int64_t> skips;
      for (Cell cell : skips_cells(path)) skips.insert(rank_of(pair, cell));
      CHECK(images == skips);
    });
  }
}

TEST_CASE("word statistics match the path statistics") {
  CHECK(word_stats(example_word_57()) == StatTriple{5, 4, 3});
  CHECK(word_stats(build_word(CoprimePair(4, 7)).with_highlight_ranks({17, 13, 10, 6})) ==
        StatTriple{5, 3, 1});
  CHECK(word_stats(build_word(CoprimePair(4, 7))) == StatTriple{9, 0, 0});

  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(7)) {
    for_each_path(pair, [](const DyckPath& path) {
      const RankWord word = from_path(path);
      CHECK(word_stats(word) == stat_triple(path));
      CHECK(skip_classes(word).size() == skips_cells(path).size());
    });
  }
}

TEST_CASE("each class stays on one side of the color order") {
  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(7)) {
    for (const RankWord& word : enumerate_rank_words(pair)) {
      for (const auto& group : skip_classes(word)) {
        const bool low_left = group.front().left.color < group.front().right.color;
        for (const SkipPair& member : group) {
          CHECK((member.left.color < member.right.color) == low_left);
          CHECK(member.left.color != member.right.color);
        }
      }
    }
  }
}

TEST_CASE("word text format") {
  const RankWord word = build_word(CoprimePair(3, 8)).with_highlight_ranks({2, 5, 10, 13});
  CHECK(format_word(word) == "1_1 [2_2] 4_1 [5_2] 7_1 [10_1] [13_1]");
  CHECK(parse_word(CoprimePair(3, 8), format_word(word)) == word);

  for (const RankWord& w : enumerate_rank_words(CoprimePair(4, 7))) {
    CHECK(parse_word(CoprimePair(4, 7), format_word(w)) == w);
  }

  CHECK(format_word(build_word(CoprimePair(1, 4))).empty());
  CHECK(parse_word(CoprimePair(1, 4), "") == build_word(CoprimePair(1, 4)));

  CHECK_THROWS_AS(parse_word(CoprimePair(3, 5), "1_1 2_2 4_1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(CoprimePair(3, 5), "1_1 2_2 4_1 7_2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(CoprimePair(3, 5), "1_1 2_2 4_1 7_1 9_1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(CoprimePair(3, 5), "1_1 2 4_1 7_1"), std::invalid_argument);
}
