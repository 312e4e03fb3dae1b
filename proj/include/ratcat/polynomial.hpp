#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcat/detail/parallel.hpp"
#include "ratcat/lattice.hpp"
#include "ratcat/rank_word.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

enum class Var { b, q, t };

inline const char* var_name(Var var) {
  switch (var) {
    case Var::b: return "b";
    case Var::q: return "q";
    case Var::t: return "t";
  }
  throw std::invalid_argument("unknown variable");
}

struct Monomial {
  int b = 0;
  int q = 0;
  int t = 0;
  int total_degree() const { return b + q + t; }
  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: descending lexicographic on (b,q,t) exponents.
struct CanonicalTermOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.b != y.b) return x.b > y.b;
    if (x.q != y.q) return x.q > y.q;
    return x.t > y.t;
  }
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("polynomial coefficient overflows 64 bits");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("polynomial coefficient overflows 64 bits");
  }
  return out;
}

}  // namespace detail

/// Exact trivariate polynomial over the integers in b, q, t. Coefficients are
/// 64-bit with overflow detection; zero coefficients are never stored, and
/// iteration order over terms is the canonical order.
class BqtPolynomial {
 public:
  using TermMap = std::map<Monomial, std::int64_t, CanonicalTermOrder>;

  BqtPolynomial() = default;

  static BqtPolynomial constant(std::int64_t value) {
    BqtPolynomial poly;
    poly.add_term(Monomial{}, value);
    return poly;
  }

  static BqtPolynomial term(std::int64_t coeff, int b, int q, int t) {
    if (b < 0 || q < 0 || t < 0) {
      throw std::invalid_argument("exponents must be non-negative");
    }
    BqtPolynomial poly;
    poly.add_term(Monomial{b, q, t}, coeff);
    return poly;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& monomial, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(monomial, coeff);
    if (!inserted) {
      it->second = detail::checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(int b, int q, int t) const {
    const auto it = terms_.find(Monomial{b, q, t});
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t coefficient_sum() const {
    std::int64_t sum = 0;
    for (const auto& [monomial, coeff] : terms_) {
      sum = detail::checked_add(sum, coeff);
    }
    return sum;
  }

  /// Common total degree of all terms, or nullopt if the polynomial is zero
  /// or inhomogeneous.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [monomial, coeff] : terms_) {
      if (!degree) {
        degree = monomial.total_degree();
      } else if (*degree != monomial.total_degree()) {
        return std::nullopt;
      }
    }
    return degree;
  }

  BqtPolynomial& operator+=(const BqtPolynomial& other) {
    for (const auto& [monomial, coeff] : other.terms_) {
      add_term(monomial, coeff);
    }
    return *this;
  }

  friend BqtPolynomial operator+(BqtPolynomial lhs, const BqtPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend BqtPolynomial operator*(const BqtPolynomial& lhs, const BqtPolynomial& rhs) {
    BqtPolynomial product;
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) {
        product.add_term(Monomial{ml.b + mr.b, ml.q + mr.q, ml.t + mr.t},
                         detail::checked_mul(cl, cr));
      }
    }
    return product;
  }

  bool operator==(const BqtPolynomial&) const = default;

 private:
  TermMap terms_;
};

/// Sets one variable to 1, collapsing its grading. Only substitution by 1 is
/// supported.
inline BqtPolynomial substitute(const BqtPolynomial& poly, Var var, std::int64_t value) {
  if (value != 1) {
    throw std::invalid_argument("only substitution by 1 is supported");
  }
  BqtPolynomial out;
  for (const auto& [monomial, coeff] : poly.terms()) {
    Monomial collapsed = monomial;
    switch (var) {
      case Var::b: collapsed.b = 0; break;
      case Var::q: collapsed.q = 0; break;
      case Var::t: collapsed.t = 0; break;
    }
    out.add_term(collapsed, coeff);
  }
  return out;
}

/// Exchanges the q and t exponents of every term.
inline BqtPolynomial swap_qt(const BqtPolynomial& poly) {
  BqtPolynomial out;
  for (const auto& [monomial, coeff] : poly.terms()) {
    out.add_term(Monomial{monomial.b, monomial.t, monomial.q}, coeff);
  }
  return out;
}

/// Two-variable Schur polynomial for a two-row partition:
/// s_{l1,l2}(q,t) = sum_{j=0}^{l1-l2} q^{l2+j} t^{l1-j}. Requires l1 >= l2 >= 0.
inline BqtPolynomial schur_two_var(int lambda1, int lambda2) {
  if (lambda2 < 0 || lambda1 < lambda2) {
    throw std::domain_error("partition rows must satisfy lambda1 >= lambda2 >= 0");
  }
  BqtPolynomial out;
  for (int j = 0; j <= lambda1 - lambda2; ++j) {
    out.add_term(Monomial{0, lambda2 + j, lambda1 - j}, 1);
  }
  return out;
}

inline constexpr std::int64_t kDefaultWorkBound = 10'000'000;

/// Thrown when an enumeration job would exceed the configured work bound.
class WorkBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path count of the grid, verified to fit under the work bound. Throws
/// WorkBoundError otherwise (also when the count itself overflows 64 bits).
inline std::int64_t checked_path_count(const CoprimePair& pair, std::int64_t work_bound) {
  if (work_bound < 1) {
    throw std::invalid_argument("work bound must be at least 1");
  }
  std::int64_t count = 0;
  try {
    count = rational_catalan_number(pair);
  } catch (const std::overflow_error&) {
    throw WorkBoundError("path count for " + std::to_string(pair.m()) + "," +
                         std::to_string(pair.n()) + " exceeds 2^63");
  }
  if (count > work_bound) {
    throw WorkBoundError("path count " + std::to_string(count) +
                         " exceeds the work bound " + std::to_string(work_bound));
  }
  return count;
}

namespace detail {

inline Monomial stat_monomial(const StatTriple& stats) {
  const std::int64_t limit = std::numeric_limits<int>::max();
  if (stats.skips > limit || stats.dinv > limit || stats.area > limit) {
    throw std::overflow_error("statistic too large for an exponent");
  }
  return Monomial{static_cast<int>(stats.skips), static_cast<int>(stats.dinv),
                  static_cast<int>(stats.area)};
}

}  // namespace detail

/// Generating function over rank words, W(b,q,t) = sum_w b^skips q^dinv
/// t^area, computed through the word-level statistics. Homogeneous of total
/// degree (m-1)(n-1)/2, with coefficient sum equal to the path count.
inline BqtPolynomial genfun_W(const CoprimePair& pair,
                              std::int64_t work_bound = kDefaultWorkBound,
                              int parallelism = 1) {
  checked_path_count(pair, work_bound);
  auto partials = detail::map_top_slices<BqtPolynomial>(pair, parallelism, [&](int top) {
    BqtPolynomial partial;
    PathEnumerator paths(pair, top);
    while (auto path = paths.next()) {
      partial.add_term(detail::stat_monomial(word_stats(from_path(*path))), 1);
    }
    return partial;
  });
  BqtPolynomial total;
  for (const BqtPolynomial& partial : partials) total += partial;
  return total;
}

/// Rational q,t-Catalan polynomial, C(q,t) = sum_paths q^dinv t^area,
/// computed directly from the path statistics rather than through genfun_W.
/// Always equals substitute(genfun_W(pair), Var::b, 1).
inline BqtPolynomial catalan_C(const CoprimePair& pair,
                               std::int64_t work_bound = kDefaultWorkBound,
                               int parallelism = 1) {
  checked_path_count(pair, work_bound);
  auto partials = detail::map_top_slices<BqtPolynomial>(pair, parallelism, [&](int top) {
    BqtPolynomial partial;
    PathEnumerator paths(pair, top);
    while (auto path = paths.next()) {
      const StatTriple stats = stat_triple(*path);
      partial.add_term(detail::stat_monomial(StatTriple{stats.area, stats.dinv, 0}), 1);
    }
    return partial;
  });
  BqtPolynomial total;
  for (const BqtPolynomial& partial : partials) total += partial;
  return total;
}

namespace detail {

inline std::string render_term(std::int64_t coeff, const Monomial& monomial, bool latex) {
  std::string out;
  const bool has_vars = monomial.total_degree() > 0;
  if (coeff == -1 && has_vars) {
    out += "-";
  } else if (coeff != 1 || !has_vars) {
    out += std::to_string(coeff);
    if (has_vars && !latex) out += "*";
  }
  bool first = true;
  auto append_var = [&](const char* name, int exponent) {
    if (exponent == 0) return;
    if (!first && !latex) out += "*";
    first = false;
    out += name;
    if (exponent > 1) {
      out += latex ? "^{" + std::to_string(exponent) + "}" : "^" + std::to_string(exponent);
    }
  };
  append_var("b", monomial.b);
  append_var("q", monomial.q);
  append_var("t", monomial.t);
  return out;
}

}  // namespace detail

/// Text rendering in canonical term order, e.g. "b*q^2*t + b*q*t^2 + q^4".
inline std::string to_text(const BqtPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [monomial, coeff] : poly.terms()) {
    if (!out.empty()) out += " + ";
    out += detail::render_term(coeff, monomial, false);
  }
  return out;
}

/// LaTeX rendering in canonical term order, e.g. "bq^{2}t + bqt^{2} + q^{4}".
inline std::string to_latex(const BqtPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [monomial, coeff] : poly.terms()) {
    if (!out.empty()) out += " + ";
    out += detail::render_term(coeff, monomial, true);
  }
  return out;
}

}  // namespace ratcat
