#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qdissect/etalang.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

enum class ClaimStatus { Unchecked, Verified, Refuted };

// The assertion "coefficient(a*n + b) of gf is 0 mod m for all n >= first_n".
// first_n is 0 for every directly stated claim; it becomes positive only when
// a progression constant at least as large as the step is reduced into
// canonical (b < a) form without changing the set of checked indices.
struct CongruenceClaim {
  EtaExpr gf;
  std::string gf_text;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t first_n = 0;
  std::uint64_t mod = 2;
  ClaimStatus status = ClaimStatus::Unchecked;
  // Verified: every index up to bound vanished. Refuted: bound is the first
  // offending index, always congruent to b mod a.
  std::int64_t bound = -1;

  std::string progression_name() const;  // "12n+6 mod 2"
};

CongruenceClaim make_claim(const std::string& gf, std::int64_t a, std::int64_t b,
                           std::uint64_t mod, std::int64_t first_n = 0);

// Standard Legendre symbol; p must be an odd prime.
int legendre(const mpz_class& a, std::int64_t p);

// Brute-force solution set of 2(6k+1)^2 + 6(6m+1)^2 = 0 mod p over the box
// -(p-1)/2 <= k, m <= (p-1)/2. When -3 is a quadratic nonresidue the only
// solution is the pair annihilating both squares, k = m = expected_k.
struct QuadraticCriterionReport {
  std::int64_t p = 0;
  int legendre_minus_three = 0;
  std::int64_t expected_k = 0;  // (p-1)/6 when p = 1 mod 6, else -(p+1)/6
  std::vector<std::pair<std::int64_t, std::int64_t>> solutions;
  bool only_expected = false;
};

QuadraticCriterionReport quadratic_criterion(std::int64_t p);

// Evaluates the claim's generating function mod m to order N and scans the
// progression. Refutation is an outcome, not an error.
CongruenceClaim check_claim(CongruenceClaim c, std::int64_t N);
// Same scan against an already-evaluated series in Modular(c.mod).
CongruenceClaim check_claim_on(const Series& s, CongruenceClaim c);

// The eight built-in progression claims for the triple counting function:
// (12,6,2) (12,9,2) (6,4,4) (3,1,3) (3,2,9) (9,5,27) (9,8,27) (5,3,5).
std::vector<CongruenceClaim> theorem1_suite(std::int64_t N);

// Prime-family instantiation: for an odd prime p with legendre(-3,p) = -1
// and alpha >= 1, the p-1 claims 9p^{2a}n + (p^{2a-1}(3p+18j)+1)/2 mod 27.
std::vector<CongruenceClaim> theorem2_claims(std::int64_t p, std::int64_t alpha);

// The mod-7 and mod-11 families: 21n+{7,10,16,18} and
// 121n+{39,61,72,94,105,116}.
std::vector<CongruenceClaim> theorem3_suite(std::int64_t N);

// Empirical congruence scan: every (a <= a_max, b < a, m in moduli) whose
// progression vanishes mod m at all indices <= N, with at least min_hits
// indices tested. Results are evidence to the stated bound, never proofs.
std::vector<CongruenceClaim> scan(const EtaExpr& gf, std::int64_t a_max,
                                  const std::vector<std::uint64_t>& moduli, std::int64_t N,
                                  std::int64_t min_hits = 50);

}  // namespace qdissect
