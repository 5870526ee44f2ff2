#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qdissect/series.hpp"

namespace qdissect {

// One term c * q^s * prod f_k^{e_k} * prod theta(A_i, B_i), where f_k is the
// product expansion of (q^k; q^k)_inf and theta(A, B) the bilateral sum of
// (-1)^n q^{A n(n+1)/2 + B n(n-1)/2}. Every factor has constant term 1, so
// negative eta exponents still evaluate to genuine power series.
struct EtaMonomial {
  mpz_class coeff = 1;
  std::int64_t qshift = 0;
  std::map<std::int64_t, std::int64_t> etas;                  // k -> e_k, e_k != 0
  std::vector<std::pair<std::int64_t, std::int64_t>> thetas;  // (A, B), sorted

  friend bool operator==(const EtaMonomial&, const EtaMonomial&) = default;
};

// Sum of monomials, kept normalized: terms sorted by structure, terms with
// equal structure merged, zero coefficients dropped. An empty term list is
// the canonical zero.
struct EtaExpr {
  std::vector<EtaMonomial> terms;

  friend bool operator==(const EtaExpr&, const EtaExpr&) = default;
};

// Pentagonal expansion of (q^k; q^k)_inf to order N: signed support at the
// exponents k*j*(3j -+ 1)/2.
Series eta_series(std::int64_t k, std::int64_t N, Ring ring);

// Truncated bilateral theta sum; constant term 1 from the n = 0 term. The
// summation range is chosen so no term with exponent <= N is dropped.
Series theta_series(std::int64_t A, std::int64_t B, std::int64_t N, Ring ring);

Series eval(const EtaExpr& expr, std::int64_t N, Ring ring);

EtaExpr normalize(EtaExpr expr);
EtaExpr expr_add(const EtaExpr& a, const EtaExpr& b);
EtaExpr expr_sub(const EtaExpr& a, const EtaExpr& b);
EtaExpr expr_neg(const EtaExpr& a);
EtaExpr expr_mul(const EtaExpr& a, const EtaExpr& b);
// Nonnegative e always works; negative e requires a single term with unit
// coefficient, no q-shift and no theta factors (an invertible monomial).
EtaExpr expr_pow(const EtaExpr& a, std::int64_t e);
// Substitute q -> q^t at the notation level: k -> t*k, s -> t*s, (A,B) -> (tA,tB).
EtaExpr inflate_expr(const EtaExpr& a, std::int64_t t);

// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := atom ['^' ['-'] integer]
//          atom := integer | 'q' | 'f'K | 'theta' '(' A ',' B ')' | '(' expr ')'
// Division is sugar for negative exponents, so a divisor must reduce to an
// invertible monomial. Errors carry the offending position.
EtaExpr parse_expr(const std::string& text);
std::string render(const EtaExpr& expr);

// An expression with an optional arithmetic-progression slice applied after
// evaluation; extract_m == 1 means no slicing. This is how identities about
// "every coefficient on the progression m*n + r" are written down.
struct SeriesExpr {
  EtaExpr expr;
  std::int64_t extract_m = 1;
  std::int64_t extract_r = 0;

  friend bool operator==(const SeriesExpr&, const SeriesExpr&) = default;
};

// Accepts either a bare expression or a top-level extract(expr, m, r).
SeriesExpr parse_series_expr(const std::string& text);
std::string render(const SeriesExpr& expr);
// The underlying expression is expanded far enough that the sliced result
// still carries N+1 guaranteed coefficients.
Series eval(const SeriesExpr& expr, std::int64_t N, Ring ring);

// Named identity: both sides evaluate to equal series, exactly when modulus
// is absent, else coefficient-wise mod the given modulus.
struct IdentityRecord {
  std::string name;
  SeriesExpr lhs;
  SeriesExpr rhs;
  std::optional<std::uint64_t> modulus;
  std::string source;
};

// Catalog text: one record per line, fields separated by '|':
//   name | lhs | rhs | modulus (blank = exact) | source
// Blank lines and lines starting with '#' are skipped. Names must be unique.
std::vector<IdentityRecord> parse_catalog(const std::string& text);
const std::vector<IdentityRecord>& default_catalog();

}  // namespace qdissect
