#include "qdissect/dissect.hpp"

#include <stdexcept>

namespace qdissect {

namespace {

std::int64_t positive_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

VerifyReport compare(std::string name, std::string source, const Series& lhs,
                     const Series& rhs) {
  VerifyReport rep;
  rep.name = std::move(name);
  rep.source = std::move(source);
  rep.ring = lhs.ring().name();
  rep.order = std::min(lhs.order(), rhs.order());
  const auto mismatch = first_mismatch(lhs, rhs);
  rep.equal = !mismatch.has_value();
  if (mismatch) {
    rep.mismatch_index = *mismatch;
    rep.lhs_value = lhs.coeff(*mismatch).get_str();
    rep.rhs_value = rhs.coeff(*mismatch).get_str();
  }
  return rep;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PDissection build_pdissection(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("dissection requires a prime p >= 5");
  }
  PDissection out;
  out.p = p;
  out.excluded_k = p % 6 == 1 ? (p - 1) / 6 : -(p + 1) / 6;
  out.principal_exponent = (p * p - 1) / 24;
  out.principal_sign = out.excluded_k % 2 != 0 ? -1 : 1;
  const std::int64_t principal_residue = positive_mod(out.principal_exponent, p);
  for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == out.excluded_k) continue;
    PDissectionSummand s;
    s.k = k;
    s.exponent = (3 * k * k + k) / 2;
    s.theta_a = (3 * p * p + (6 * k + 1) * p) / 2;
    s.theta_b = (3 * p * p - (6 * k + 1) * p) / 2;
    if (positive_mod(s.exponent, p) == principal_residue) {
      throw std::logic_error("summand exponent collides with the principal residue");
    }
    out.summands.push_back(s);
  }
  return out;
}

VerifyReport verify_pdissection(std::int64_t p, std::int64_t N) {
  const PDissection d = build_pdissection(p);
  const Ring ring = Ring::exact();
  const Series lhs = eta_series(1, N, ring);
  Series rhs = scalar_mul(d.principal_sign,
                          shift(eta_series(p * p, N, ring), d.principal_exponent));
  for (const PDissectionSummand& s : d.summands) {
    const Series term = shift(theta_series(s.theta_a, s.theta_b, N, ring), s.exponent);
    rhs = add(rhs, scalar_mul(s.k % 2 != 0 ? -1 : 1, term));
  }
  return compare("p=" + std::to_string(p), "", lhs, rhs);
}

std::set<std::int64_t> residue_support(const Series& s, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("residue modulus must be positive");
  std::set<std::int64_t> support;
  for (std::int64_t n = 0; n <= s.order(); ++n) {
    if (!s.coeff_is_zero(n)) support.insert(n % m);
  }
  return support;
}

VerifyReport verify_identity(const IdentityRecord& rec, std::int64_t N) {
  const Ring ring = rec.modulus ? Ring::modular(*rec.modulus) : Ring::exact();
  const Series lhs = eval(rec.lhs, N, ring);
  const Series rhs = eval(rec.rhs, N, ring);
  return compare(rec.name, rec.source, lhs, rhs);
}

}  // namespace qdissect
