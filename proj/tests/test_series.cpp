#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qdissect/etalang.hpp"
#include "qdissect/series.hpp"

using namespace qdissect;

namespace {

Series from_coeffs(Ring ring, const std::vector<long>& c) {
  Series s(ring, static_cast<std::int64_t>(c.size()) - 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    s.set_coeff(static_cast<std::int64_t>(n), mpz_class(c[n]));
  }
  return s;
}

std::vector<long> coeffs(const Series& s) {
  std::vector<long> out;
  for (std::int64_t n = 0; n <= s.order(); ++n) out.push_back(s.coeff(n).get_si());
  return out;
}

}  // namespace

TEST_CASE("ring construction and naming") {
  CHECK(Ring::exact().name() == "exact");
  CHECK_FALSE(Ring::exact().is_modular());
  CHECK(Ring::modular(27).name() == "mod 27");
  CHECK(Ring::modular(27).modulus() == 27);
  CHECK(Ring::modular(std::uint64_t(1) << 31).is_modular());
  CHECK_THROWS_AS(Ring::exact().modulus(), std::logic_error);
  CHECK_THROWS_AS(Ring::modular(1), std::invalid_argument);
  CHECK_THROWS_AS(Ring::modular((std::uint64_t(1) << 31) + 1), std::invalid_argument);
}

TEST_CASE("zero and one series") {
  Series z(Ring::exact(), 4);
  CHECK(z.order() == 4);
  CHECK(z.nonzero_count() == 0);
  Series e = Series::one(Ring::exact(), 4);
  CHECK(coeffs(e) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(e.nonzero_count() == 1);
  CHECK_THROWS_AS(Series(Ring::exact(), -1), std::invalid_argument);
  CHECK_THROWS_AS(z.coeff(5), std::out_of_range);
  CHECK_THROWS_AS(z.coeff(-1), std::out_of_range);
}

TEST_CASE("modular coefficients are stored canonically") {
  Series s(Ring::modular(5), 2);
  s.set_coeff(0, mpz_class(-1));
  s.set_coeff(1, mpz_class(7));
  CHECK(s.coeff(0) == 4);
  CHECK(s.coeff(1) == 2);
  CHECK(s.coeff_is_zero(2));
}

TEST_CASE("add and sub truncate to the smaller order") {
  Series a = from_coeffs(Ring::exact(), {1, 2});
  Series b = from_coeffs(Ring::exact(), {3, 4, 5});
  CHECK(coeffs(add(a, b)) == std::vector<long>{4, 6});
  CHECK(coeffs(sub(b, a)) == std::vector<long>{2, 2});
  Series m4 = from_coeffs(Ring::modular(5), {4});
  Series m3 = from_coeffs(Ring::modular(5), {3});
  CHECK(coeffs(add(m4, m3)) == std::vector<long>{2});
  CHECK(coeffs(sub(m3, m4)) == std::vector<long>{4});
  CHECK_THROWS_AS(add(a, m4), std::invalid_argument);
}

TEST_CASE("mul convolves and respects rings") {
  Series a = from_coeffs(Ring::exact(), {1, 1, 0});
  Series b = from_coeffs(Ring::exact(), {1, -1, 0});
  CHECK(coeffs(mul(a, b)) == std::vector<long>{1, 0, -1});
  Series am = reduce_mod(a, 2);
  Series bm = reduce_mod(b, 2);
  CHECK(coeffs(mul(am, bm)) == std::vector<long>{1, 0, 1});
  CHECK_THROWS_AS(mul(a, am), std::invalid_argument);
}

TEST_CASE("scalar_mul") {
  Series a = from_coeffs(Ring::exact(), {1, -2, 3});
  CHECK(coeffs(scalar_mul(mpz_class(-3), a)) == std::vector<long>{-3, 6, -9});
  Series m = from_coeffs(Ring::modular(7), {1, 2, 3});
  CHECK(coeffs(scalar_mul(mpz_class(10), m)) == std::vector<long>{3, 6, 2});
}

TEST_CASE("inverse of the geometric generator") {
  // 1/(1-q) = 1 + q + q^2 + ...
  Series g = from_coeffs(Ring::exact(), {1, -1, 0, 0, 0, 0});
  Series inv = inverse(g);
  CHECK(coeffs(inv) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(inverse(inv) == g);
}

TEST_CASE("inverse round-trips against the pentagonal series") {
  Series f1 = eta_series(1, 100, Ring::exact());
  CHECK(mul(f1, inverse(f1)) == Series::one(Ring::exact(), 100));
  Series f1m = eta_series(1, 100, Ring::modular(27));
  CHECK(mul(f1m, inverse(f1m)) == Series::one(Ring::modular(27), 100));
}

TEST_CASE("inverse requires a unit constant term") {
  CHECK_THROWS_AS(inverse(from_coeffs(Ring::exact(), {2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(inverse(from_coeffs(Ring::exact(), {0, 1})), std::invalid_argument);
  // 2 is not invertible mod 6, but 5 is.
  CHECK_THROWS_AS(inverse(from_coeffs(Ring::modular(6), {2, 1})), std::invalid_argument);
  CHECK(coeffs(inverse(from_coeffs(Ring::modular(6), {5}))) == std::vector<long>{5});
  // Constant term -1 is a unit in the exact ring.
  Series neg = from_coeffs(Ring::exact(), {-1, 4});
  CHECK(mul(neg, inverse(neg)) == Series::one(Ring::exact(), 1));
}

TEST_CASE("div agrees with mul by the inverse") {
  Series a = eta_series(2, 60, Ring::exact());
  Series b = eta_series(3, 60, Ring::exact());
  CHECK(div(a, b) == mul(a, inverse(b)));
  Series am = eta_series(2, 60, Ring::modular(81));
  Series bm = eta_series(3, 60, Ring::modular(81));
  CHECK(div(am, bm) == mul(am, inverse(bm)));
}

TEST_CASE("pow at the unit exponents") {
  Series a = from_coeffs(Ring::exact(), {1, 5, -2});
  CHECK(pow(a, 0) == Series::one(Ring::exact(), 2));
  CHECK(pow(a, 1) == a);
  CHECK(pow(a, 2) == mul(a, a));
  CHECK(pow(a, -2) == inverse(mul(a, a)));
}

TEST_CASE("cube of the pentagonal series carries odd squares") {
  // (q;q)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}
  Series c = pow(eta_series(1, 7, Ring::exact()), 3);
  CHECK(coeffs(c) == std::vector<long>{1, -3, 0, 5, 0, 0, -7, 0});
}

TEST_CASE("inflate keeps the ambient order") {
  Series f1 = eta_series(1, 60, Ring::exact());
  Series g = inflate(f1, 3);
  CHECK(g.order() == 60);
  CHECK(g == eta_series(3, 60, Ring::exact()));
  CHECK(inflate(f1, 1) == f1);
  CHECK_THROWS_AS(inflate(f1, 0), std::invalid_argument);
}

TEST_CASE("shift multiplies by a power of q") {
  Series a = from_coeffs(Ring::exact(), {1, 2, 3, 4});
  CHECK(coeffs(shift(a, 2)) == std::vector<long>{0, 0, 1, 2});
  CHECK(shift(a, 0) == a);
  CHECK_THROWS_AS(shift(a, -1), std::invalid_argument);
}

TEST_CASE("extract slices an arithmetic progression") {
  Series a = from_coeffs(Ring::exact(), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  Series s = extract(a, 3, 1);
  CHECK(s.order() == 3);
  CHECK(coeffs(s) == std::vector<long>{1, 4, 7, 10});
  CHECK(extract(a, 1, 0) == a);
  CHECK_THROWS_AS(extract(a, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(extract(a, 0, 0), std::invalid_argument);
  Series tiny = from_coeffs(Ring::exact(), {1});
  CHECK_THROWS_AS(extract(tiny, 3, 1), std::invalid_argument);
}

TEST_CASE("interleave inverts extract") {
  Series a = eta_series(1, 50, Ring::exact());
  std::vector<Series> parts;
  for (std::int64_t r = 0; r < 3; ++r) parts.push_back(extract(a, 3, r));
  Series back = interleave(parts);
  CHECK(back.order() >= 48);
  CHECK(back == a);
  CHECK_THROWS_AS(interleave(std::vector<Series>{}), std::invalid_argument);
}

TEST_CASE("interleave order is limited by the shortest part") {
  std::vector<Series> parts{from_coeffs(Ring::exact(), {1, 2, 3}),
                            from_coeffs(Ring::exact(), {4})};
  Series s = interleave(parts);
  // Part 1 supplies nothing past index 1, so exponent 3 is unknown.
  CHECK(s.order() == 2);
  CHECK(coeffs(s) == std::vector<long>{1, 4, 2});
}

TEST_CASE("reduce_mod maps into canonical representatives") {
  Series a = from_coeffs(Ring::exact(), {9, -9, 27});
  Series r = reduce_mod(a, 27);
  CHECK(r.ring() == Ring::modular(27));
  CHECK(coeffs(r) == std::vector<long>{9, 18, 0});
  CHECK_THROWS_AS(reduce_mod(r, 27), std::invalid_argument);
}

TEST_CASE("first_mismatch and equality use the common order") {
  Series a = from_coeffs(Ring::exact(), {1, 2, 3, 4});
  Series b = from_coeffs(Ring::exact(), {1, 2, 9});
  CHECK(first_mismatch(a, b) == std::optional<std::int64_t>{2});
  Series c = from_coeffs(Ring::exact(), {1, 2, 3});
  CHECK_FALSE(first_mismatch(a, c).has_value());
  CHECK(a == c);  // equality cannot see past order 2
  CHECK_FALSE(a == b);
}

TEST_CASE("triple counting function through the series kernel") {
  Series f1 = eta_series(1, 8, Ring::exact());
  Series f3 = eta_series(3, 8, Ring::exact());
  Series gf = inverse(mul(pow(f1, 3), pow(f3, 3)));
  CHECK(coeffs(gf) == std::vector<long>{1, 3, 9, 25, 60, 135, 296, 609, 1215});
}
