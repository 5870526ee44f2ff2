#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qdissect/etalang.hpp"
#include "qdissect/series.hpp"

namespace qdissect {

bool is_prime(std::int64_t n);

struct PDissectionSummand {
  std::int64_t k;
  std::int64_t exponent;  // (3k^2 + k) / 2
  std::int64_t theta_a;   // (3p^2 + (6k+1)p) / 2
  std::int64_t theta_b;   // (3p^2 - (6k+1)p) / 2
};

// Structure of the prime dissection of (q;q)_inf for p >= 5: a principal
// term +-q^{(p^2-1)/24} (q^{p^2};q^{p^2})_inf plus p-1 shifted theta terms.
// No summand exponent is congruent to the principal exponent mod p, which is
// what lets a single progression slice isolate the principal term.
struct PDissection {
  std::int64_t p;
  std::int64_t excluded_k;          // (p-1)/6 when p = 1 mod 6, else -(p+1)/6
  std::int64_t principal_exponent;  // (p^2 - 1) / 24
  int principal_sign;               // (-1)^excluded_k
  std::vector<PDissectionSummand> summands;  // k ascending, excluded_k omitted
};

// Validates the residue side-claim by direct computation while building.
PDissection build_pdissection(std::int64_t p);

// Outcome of one series comparison; mismatch_index is -1 when equal.
struct VerifyReport {
  std::string name;
  std::string ring;
  std::int64_t order = 0;
  bool equal = false;
  std::int64_t mismatch_index = -1;
  std::string lhs_value;
  std::string rhs_value;
  std::string source;
};

// Evaluates every term of the dissection and compares the sum against the
// direct pentagonal expansion, exactly, to order N.
VerifyReport verify_pdissection(std::int64_t p, std::int64_t N);

// Residues r mod m carrying at least one nonzero coefficient.
std::set<std::int64_t> residue_support(const Series& s, std::int64_t m);

// Both sides evaluated in the exact ring, or mod rec.modulus when present.
VerifyReport verify_identity(const IdentityRecord& rec, std::int64_t N);

}  // namespace qdissect
