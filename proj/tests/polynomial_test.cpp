#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "ratcat/polynomial.hpp"

using namespace ratcat;
namespace oracle = ratcat::testing;

TEST_CASE("ring operations") {
  const BqtPolynomial bq = BqtPolynomial::term(1, 1, 1, 0);
  const BqtPolynomial t = BqtPolynomial::term(1, 0, 0, 1);
  BqtPolynomial sum = bq + t + t;
  CHECK(sum.coefficient(1, 1, 0) == 1);
  CHECK(sum.coefficient(0, 0, 1) == 2);
  CHECK(to_text(sum) == "b*q + 2*t");

  const BqtPolynomial q_plus_t = BqtPolynomial::term(1, 0, 1, 0) + t;
  CHECK(to_text(q_plus_t * q_plus_t) == "q^2 + 2*q*t + t^2");

  const BqtPolynomial mixed =
      BqtPolynomial::term(1, 2, 1, 1) + BqtPolynomial::term(1, 1, 2, 1);
  CHECK(to_text(substitute(mixed, Var::b, 1)) == "q^2*t + q*t");
  CHECK_THROWS_AS(substitute(mixed, Var::b, 2), std::invalid_argument);

  // cancellation removes the stored term
  BqtPolynomial cancel = BqtPolynomial::term(3, 0, 1, 0);
  cancel += BqtPolynomial::term(-3, 0, 1, 0);
  CHECK(cancel.is_zero());
  CHECK(to_text(cancel) == "0");

  CHECK(to_text(BqtPolynomial::constant(1)) == "1");
  CHECK(to_text(BqtPolynomial::term(-1, 0, 1, 0) + BqtPolynomial::constant(-2)) ==
        "-q + -2");
  CHECK_THROWS_AS(BqtPolynomial::term(1, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("coefficient overflow is detected") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  BqtPolynomial poly = BqtPolynomial::constant(big);
  CHECK_THROWS_AS(poly += BqtPolynomial::constant(big), std::overflow_error);
  CHECK_THROWS_AS(BqtPolynomial::constant(big) * BqtPolynomial::constant(2),
                  std::overflow_error);
  CHECK_THROWS_AS((BqtPolynomial::constant(big) + BqtPolynomial::term(big, 0, 1, 0))
                      .coefficient_sum(),
                  std::overflow_error);
}

TEST_CASE("canonical term order drives the text form") {
  BqtPolynomial poly;
  poly += BqtPolynomial::term(1, 0, 4, 0);
  poly += BqtPolynomial::term(1, 1, 1, 2);
  poly += BqtPolynomial::term(1, 1, 2, 1);
  poly += BqtPolynomial::term(1, 0, 2, 2);
  CHECK(to_text(poly) == "b*q^2*t + b*q*t^2 + q^4 + q^2*t^2");
  CHECK(to_latex(poly) == "bq^{2}t + bqt^{2} + q^{4} + q^{2}t^{2}");
}

TEST_CASE("two-variable Schur specialization") {
  CHECK(to_text(schur_two_var(4, 0)) == "q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4");
  CHECK(to_text(schur_two_var(2, 1)) == "q^2*t + q*t^2");
  CHECK(to_text(schur_two_var(0, 0)) == "1");
  CHECK_THROWS_AS(schur_two_var(1, 2), std::domain_error);
  CHECK_THROWS_AS(schur_two_var(3, -1), std::domain_error);

  for (int l1 = 0; l1 <= 8; ++l1) {
    for (int l2 = 0; l2 <= l1; ++l2) {
      const BqtPolynomial schur = schur_two_var(l1, l2);
      CHECK(schur == swap_qt(schur));
      CHECK(schur.homogeneous_degree() == l1 + l2);
    }
  }
}

TEST_CASE("generating function of the worked grids") {
  CHECK(to_text(genfun_W(CoprimePair(3, 5))) ==
        "b*q^2*t + b*q*t^2 + q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4");
  CHECK(genfun_W(CoprimePair(3, 5)) ==
        schur_two_var(4, 0) + BqtPolynomial::term(1, 1, 0, 0) * schur_two_var(2, 1));
  CHECK(genfun_W(CoprimePair(1, 9)) == BqtPolynomial::constant(1));
  CHECK(to_text(genfun_W(CoprimePair(2, 3))) == "q + t");
}

TEST_CASE("catalan polynomial of the worked grids") {
  CHECK(to_text(catalan_C(CoprimePair(3, 5))) ==
        "q^4 + q^3*t + q^2*t^2 + q^2*t + q*t^3 + q*t^2 + t^4");
  CHECK(to_text(catalan_C(CoprimePair(2, 3))) == "q + t");
  CHECK(catalan_C(CoprimePair(4, 7)).coefficient_sum() == 30);
}

TEST_CASE("genfun invariants across small grids") {
  for (const CoprimePair& pair : oracle::coprime_pairs_up_to(7)) {
    const BqtPolynomial w = genfun_W(pair);
    CHECK(w.coefficient_sum() == rational_catalan_number(pair));
    CHECK(w.homogeneous_degree() == static_cast<int>(pair.positive_rank_count()));
    CHECK(substitute(w, Var::b, 1) == catalan_C(pair));
  }
}

TEST_CASE("worker count does not change the result") {
  const CoprimePair pair(5, 8);
  const BqtPolynomial serial = genfun_W(pair, kDefaultWorkBound, 1);
  CHECK(serial == genfun_W(pair, kDefaultWorkBound, 4));
  CHECK(catalan_C(pair, kDefaultWorkBound, 1) == catalan_C(pair, kDefaultWorkBound, 4));
}

TEST_CASE("work bound is enforced") {
  CHECK_THROWS_AS(genfun_W(CoprimePair(4, 7), 10), WorkBoundError);
  CHECK_THROWS_AS(catalan_C(CoprimePair(4, 7), 29), WorkBoundError);
  CHECK_NOTHROW(catalan_C(CoprimePair(4, 7), 30));
  CHECK_THROWS_AS(checked_path_count(CoprimePair(1000003, 1000033), kDefaultWorkBound),
                  WorkBoundError);
  CHECK_THROWS_AS(genfun_W(CoprimePair(3, 5), 0), std::invalid_argument);
}
