#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdissect {

// Coefficient ring: exact integers, or integers modulo m with canonical
// representatives in [0, m). The modulus is capped at 2^31 so that a product
// of two representatives always fits in an unsigned 64-bit word.
class Ring {
public:
  static Ring exact() { return Ring(0); }
  static Ring modular(std::uint64_t m);

  bool is_modular() const { return m_ != 0; }
  std::uint64_t modulus() const;  // error on the exact ring

  std::string name() const;  // "exact" or "mod <m>"

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  explicit Ring(std::uint64_t m) : m_(m) {}
  std::uint64_t m_;  // 0 encodes the exact ring
};

// Truncated formal power series. Coefficients are exact for exponents
// 0..order inclusive; nothing is known beyond the order and operations never
// pretend otherwise: every operation returns the largest order it can
// guarantee from its inputs.
class Series {
public:
  Series(Ring ring, std::int64_t order);  // zero series
  static Series one(Ring ring, std::int64_t order);

  Ring ring() const { return ring_; }
  std::int64_t order() const;

  // Canonical value: the representative in [0, m) when modular.
  mpz_class coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, const mpz_class& value);

  bool coeff_is_zero(std::int64_t n) const;
  std::int64_t nonzero_count() const;

  // Raw storage for the arithmetic kernels; zdata is active iff the ring is
  // exact, mdata iff it is modular.
  std::vector<mpz_class>& zdata() { return zc_; }
  const std::vector<mpz_class>& zdata() const { return zc_; }
  std::vector<std::uint64_t>& mdata() { return mc_; }
  const std::vector<std::uint64_t>& mdata() const { return mc_; }

private:
  Ring ring_;
  std::vector<mpz_class> zc_;
  std::vector<std::uint64_t> mc_;
};

// All operations are pure; inputs are never mutated and results are fresh
// values, so concurrent use of shared series is safe. Binary operations
// require matching rings and truncate to the smaller input order.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scalar_mul(const mpz_class& c, const Series& a);

// Multiplicative inverse; the constant term must be a unit (+-1 in the exact
// ring, coprime to m otherwise). Runs the classic convolution recurrence in
// O(order * nnz(a)), which is what makes sparse pentagonal-type inputs cheap.
Series inverse(const Series& a);
// a / b under the same unit-constant requirement on b; same cost profile.
Series div(const Series& a, const Series& b);
// Repeated squaring; e = 0 yields the one-series, negative e goes through
// the inverse and therefore needs a unit constant term.
Series pow(const Series& a, std::int64_t e);

// Substitute q -> q^t while keeping the ambient truncation order.
Series inflate(const Series& a, std::int64_t t);
// Multiply by q^s; order preserved.
Series shift(const Series& a, std::int64_t s);
// Arithmetic-progression slice: result[n] = a[m*n + r], 0 <= r < m.
// result.order = floor((a.order - r) / m).
Series extract(const Series& a, std::int64_t m, std::int64_t r);
// Inverse of extract: result[m*n + r] = parts[r][n] with m = parts.size().
Series interleave(const std::vector<Series>& parts);

// Coefficient-wise canonical reduction of an exact series.
Series reduce_mod(const Series& a, std::uint64_t m);

// First exponent within the common order where the two series differ.
std::optional<std::int64_t> first_mismatch(const Series& a, const Series& b);
// Equality is coefficient-wise up to the minimum of the two orders.
bool operator==(const Series& a, const Series& b);

}  // namespace qdissect
