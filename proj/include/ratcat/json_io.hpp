#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratcat/lattice.hpp"
#include "ratcat/polynomial.hpp"
#include "ratcat/rank_word.hpp"
#include "ratcat/statistics.hpp"
#include "ratcat/three_n.hpp"

namespace ratcat {

// ordered_json keeps keys in insertion order, so every document below is
// byte-stable under dump().
using Json = nlohmann::ordered_json;

inline Json cell_to_json(Cell cell) {
  return Json{{"col", cell.col}, {"row", cell.row}};
}

inline Json cells_to_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (Cell cell : cells) out.push_back(cell_to_json(cell));
  return out;
}

inline Json path_to_json(const DyckPath& path) {
  return Json{{"m", path.pair().m()}, {"n", path.pair().n()}, {"shape", path.shape()}};
}

inline DyckPath path_from_json(const Json& value) {
  return DyckPath(CoprimePair(value.at("m").get<int>(), value.at("n").get<int>()),
                  value.at("shape").get<std::vector<int>>());
}

inline Json stats_to_json(const StatTriple& stats) {
  return Json{{"area", stats.area}, {"dinv", stats.dinv}, {"skips", stats.skips}};
}

inline StatTriple stats_from_json(const Json& value) {
  return StatTriple{value.at("area").get<std::int64_t>(),
                    value.at("dinv").get<std::int64_t>(),
                    value.at("skips").get<std::int64_t>()};
}

inline Json triple_to_json(const DyckTriple& triple) {
  return stats_to_json(triple.stats());
}

inline DyckTriple triple_from_json(const Json& value) {
  const StatTriple stats = stats_from_json(value);
  return DyckTriple(stats.area, stats.dinv, stats.skips);
}

inline Json word_to_json(const RankWord& word) {
  Json letters = Json::array();
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Letter& letter = word.letters()[i];
    letters.push_back(Json{{"rank", letter.rank},
                           {"color", letter.color},
                           {"highlighted", word.highlighted(i)}});
  }
  return Json{{"m", word.pair().m()}, {"n", word.pair().n()}, {"letters", letters}};
}

inline RankWord word_from_json(const Json& value) {
  const CoprimePair pair(value.at("m").get<int>(), value.at("n").get<int>());
  RankWord word = build_word(pair);
  const Json& letters = value.at("letters");
  if (letters.size() != word.size()) {
    throw std::invalid_argument("letter list does not match the grid's word");
  }
  std::vector<bool> mask(word.size(), false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Json& entry = letters.at(i);
    if (entry.at("rank").get<std::int64_t>() != word.letters()[i].rank ||
        entry.at("color").get<int>() != word.letters()[i].color) {
      throw std::invalid_argument("letter list does not match the grid's word");
    }
    mask[i] = entry.at("highlighted").get<bool>();
  }
  return word.with_highlights(std::move(mask));
}

inline Json poly_to_json(const BqtPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& [monomial, coeff] : poly.terms()) {
    terms.push_back(Json{{"b", monomial.b}, {"q", monomial.q}, {"t", monomial.t},
                         {"coeff", coeff}});
  }
  return terms;
}

inline BqtPolynomial poly_from_json(const Json& value) {
  BqtPolynomial poly;
  for (const Json& entry : value) {
    poly.add_term(Monomial{entry.at("b").get<int>(), entry.at("q").get<int>(),
                           entry.at("t").get<int>()},
                  entry.at("coeff").get<std::int64_t>());
  }
  return poly;
}

/// Canonical on-disk rendering of a polynomial document; used for cache files
/// so that a cache hit is byte-identical to a recomputation.
inline std::string genfun_document(const CoprimePair& pair, const BqtPolynomial& poly) {
  Json doc{{"m", pair.m()}, {"n", pair.n()}, {"polynomial", "W"},
           {"terms", poly_to_json(poly)}};
  return doc.dump(2) + "\n";
}

}  // namespace ratcat
