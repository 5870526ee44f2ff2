#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdissect/congruence.hpp"
#include "qdissect/etalang.hpp"
#include "qdissect/series.hpp"

using namespace qdissect;

namespace {

bool has_claim(const std::vector<CongruenceClaim>& claims, std::int64_t a, std::int64_t b,
               std::uint64_t mod) {
  return std::any_of(claims.begin(), claims.end(), [&](const CongruenceClaim& c) {
    return c.a == a && c.b == b && c.mod == mod;
  });
}

}  // namespace

TEST_CASE("legendre symbol") {
  CHECK(legendre(-3, 5) == -1);
  CHECK(legendre(-3, 7) == 1);
  CHECK(legendre(-3, 11) == -1);
  CHECK(legendre(-3, 13) == 1);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(0, 5) == 0);
  CHECK(legendre(10, 5) == 0);
  CHECK_THROWS_AS(legendre(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(1, -7), std::invalid_argument);
}

TEST_CASE("quadratic criterion distinguishes the residue classes") {
  QuadraticCriterionReport r5 = quadratic_criterion(5);
  CHECK(r5.legendre_minus_three == -1);
  CHECK(r5.expected_k == -1);
  CHECK(r5.solutions == std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, -1}});
  CHECK(r5.only_expected);

  QuadraticCriterionReport r11 = quadratic_criterion(11);
  CHECK(r11.expected_k == -2);
  CHECK(r11.solutions == std::vector<std::pair<std::int64_t, std::int64_t>>{{-2, -2}});
  CHECK(r11.only_expected);

  // When -3 is a residue the congruence picks up extra solutions.
  QuadraticCriterionReport r13 = quadratic_criterion(13);
  CHECK(r13.legendre_minus_three == 1);
  CHECK(r13.expected_k == 2);
  CHECK(r13.solutions.size() == 25);
  CHECK_FALSE(r13.only_expected);
  CHECK(std::count(r13.solutions.begin(), r13.solutions.end(),
                   std::make_pair(std::int64_t(2), std::int64_t(2))) == 1);
  CHECK(std::count(r13.solutions.begin(), r13.solutions.end(),
                   std::make_pair(std::int64_t(1), std::int64_t(0))) == 1);

  CHECK_THROWS_AS(quadratic_criterion(4), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_criterion(3), std::invalid_argument);
}

TEST_CASE("claim construction and naming") {
  CongruenceClaim c = make_claim("f1^-3*f3^-3", 12, 6, 2);
  CHECK(c.status == ClaimStatus::Unchecked);
  CHECK(c.progression_name() == "12n+6 mod 2");
  CHECK(make_claim("f1", 1089, 83, 27, 1).progression_name() == "1089n+83 (n>=1) mod 27");
  CHECK_THROWS_AS(make_claim("f1", 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_claim("f1", 5, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_claim("f1", 5, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_claim("f1", 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_claim("f1", 5, 1, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_claim("f1 +", 5, 1, 2), std::invalid_argument);
}

TEST_CASE("checking claims against the triple counts") {
  CongruenceClaim good = check_claim(make_claim("f1^-3*f3^-3", 3, 1, 3), 2000);
  CHECK(good.status == ClaimStatus::Verified);
  CHECK(good.bound == 2000);

  CongruenceClaim bad = check_claim(make_claim("f1^-3*f3^-3", 5, 1, 5), 100);
  CHECK(bad.status == ClaimStatus::Refuted);
  CHECK(bad.bound == 1);  // count of 1 is 3, nonzero mod 5

  // 5n+4 survives one step (count of 4 is 60) and dies at the next.
  CongruenceClaim later = check_claim(make_claim("f1^-3*f3^-3", 5, 4, 5), 100);
  CHECK(later.status == ClaimStatus::Refuted);
  CHECK(later.bound == 9);
  CHECK(later.bound % later.a == later.b);

  CHECK_THROWS_AS(check_claim(make_claim("f1", 12, 9, 2), 5), std::invalid_argument);
}

TEST_CASE("checking against a precomputed series") {
  Series s = eval(parse_expr("f1^-3*f3^-3"), 400, Ring::modular(2));
  CongruenceClaim c = check_claim_on(s, make_claim("f1^-3*f3^-3", 12, 6, 2));
  CHECK(c.status == ClaimStatus::Verified);
  CHECK(c.bound == 400);

  Series exact = eval(parse_expr("f1^-3*f3^-3"), 400, Ring::exact());
  CHECK_THROWS_AS(check_claim_on(exact, make_claim("f1^-3*f3^-3", 12, 6, 2)),
                  std::invalid_argument);
}

TEST_CASE("a bound below the first index is no evidence") {
  Series s = eval(parse_expr("f1^-3*f3^-3"), 1000, Ring::modular(27));
  CongruenceClaim far = check_claim_on(s, make_claim("f1^-3*f3^-3", 1089, 83, 27, 1));
  CHECK(far.status == ClaimStatus::Unchecked);
  CHECK(far.bound == -1);

  Series longer = eval(parse_expr("f1^-3*f3^-3"), 1200, Ring::modular(27));
  CongruenceClaim near = check_claim_on(longer, make_claim("f1^-3*f3^-3", 1089, 83, 27, 1));
  CHECK(near.status == ClaimStatus::Verified);  // exactly one index, 1172
}

TEST_CASE("the eight built-in progression claims") {
  std::vector<CongruenceClaim> claims = theorem1_suite(2000);
  REQUIRE(claims.size() == 8);
  for (const CongruenceClaim& c : claims) {
    CAPTURE(c.progression_name());
    CHECK(c.status == ClaimStatus::Verified);
    CHECK(c.bound == 2000);
    CHECK(c.gf_text == "f1^-3*f3^-3");
  }
  CHECK(has_claim(claims, 12, 6, 2));
  CHECK(has_claim(claims, 12, 9, 2));
  CHECK(has_claim(claims, 6, 4, 4));
  CHECK(has_claim(claims, 3, 1, 3));
  CHECK(has_claim(claims, 3, 2, 9));
  CHECK(has_claim(claims, 9, 5, 27));
  CHECK(has_claim(claims, 9, 8, 27));
  CHECK(has_claim(claims, 5, 3, 5));
  CHECK_THROWS_AS(theorem1_suite(5), std::invalid_argument);
}

TEST_CASE("verified claims stay verified as the bound grows") {
  std::vector<CongruenceClaim> first = theorem1_suite(1000);
  std::vector<CongruenceClaim> second = theorem1_suite(2000);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].status == ClaimStatus::Verified);
    CHECK(second[i].status == ClaimStatus::Verified);
    CHECK(first[i].a == second[i].a);
    CHECK(first[i].b == second[i].b);
  }
}

TEST_CASE("prime family instantiation") {
  std::vector<CongruenceClaim> c5 = theorem2_claims(5, 1);
  REQUIRE(c5.size() == 4);
  std::vector<std::int64_t> b5;
  for (const CongruenceClaim& c : c5) {
    CHECK(c.a == 225);
    CHECK(c.mod == 27);
    CHECK(c.first_n == 0);
    CHECK(c.status == ClaimStatus::Unchecked);
    b5.push_back(c.b);
  }
  CHECK(b5 == std::vector<std::int64_t>{83, 128, 173, 218});

  std::vector<CongruenceClaim> c5a2 = theorem2_claims(5, 2);
  std::vector<std::int64_t> b5a2;
  for (const CongruenceClaim& c : c5a2) {
    CHECK(c.a == 5625);
    b5a2.push_back(c.b);
  }
  CHECK(b5a2 == std::vector<std::int64_t>{2063, 3188, 4313, 5438});

  // p = 11: the last progression constant exceeds the step and folds into a
  // canonical residue with a shifted start.
  std::vector<CongruenceClaim> c11 = theorem2_claims(11, 1);
  REQUIRE(c11.size() == 10);
  CHECK(c11[0].a == 1089);
  CHECK(c11[0].b == 281);
  CHECK(c11[0].first_n == 0);
  CHECK(c11[9].b == 83);
  CHECK(c11[9].first_n == 1);
  CHECK(c11[9].progression_name() == "1089n+83 (n>=1) mod 27");
}

TEST_CASE("prime family verification") {
  Series s = eval(parse_expr("f1^-3*f3^-3"), 3000, Ring::modular(27));
  for (CongruenceClaim c : theorem2_claims(5, 1)) {
    c = check_claim_on(s, std::move(c));
    CAPTURE(c.progression_name());
    CHECK(c.status == ClaimStatus::Verified);
  }
  for (CongruenceClaim c : theorem2_claims(11, 1)) {
    c = check_claim_on(s, std::move(c));
    CAPTURE(c.progression_name());
    CHECK(c.status == ClaimStatus::Verified);
  }
}

TEST_CASE("prime family rejects ineligible parameters") {
  CHECK_THROWS_WITH_AS(theorem2_claims(7, 1),
                       "legendre(-3, 7) = 1, the family requires -1", std::invalid_argument);
  CHECK_THROWS_AS(theorem2_claims(13, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_claims(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_claims(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_claims(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_claims(5, 20), std::invalid_argument);  // power overflow
}

TEST_CASE("the mod-7 and mod-11 progression families") {
  std::vector<CongruenceClaim> claims = theorem3_suite(2000);
  REQUIRE(claims.size() == 10);
  for (const CongruenceClaim& c : claims) {
    CAPTURE(c.progression_name());
    CHECK(c.status == ClaimStatus::Verified);
  }
  for (const int b : {7, 10, 16, 18}) CHECK(has_claim(claims, 21, b, 7));
  for (const int b : {39, 61, 72, 94, 105, 116}) CHECK(has_claim(claims, 121, b, 11));
  CHECK_THROWS_AS(theorem3_suite(100), std::invalid_argument);
}

TEST_CASE("scan recovers planted progressions") {
  EtaExpr gf = parse_expr("f1^-3*f3^-3");
  std::vector<CongruenceClaim> found = scan(gf, 6, {2, 3, 4, 9}, 2000, 20);
  CHECK(has_claim(found, 6, 4, 4));
  CHECK(has_claim(found, 3, 1, 3));
  CHECK(has_claim(found, 3, 2, 9));
  for (const CongruenceClaim& c : found) {
    CHECK(c.status == ClaimStatus::Verified);
    CHECK(c.bound == 2000);
    // Everything the scan reports must re-check against a fresh evaluation.
    CHECK(check_claim(c, 2000).status == ClaimStatus::Verified);
  }

  std::vector<CongruenceClaim> p5 = scan(gf, 5, {5}, 2000, 20);
  CHECK(has_claim(p5, 5, 3, 5));
  CHECK_FALSE(has_claim(p5, 5, 4, 5));

  // The single-color generating function has the classical progression.
  CHECK(has_claim(scan(parse_expr("f1^-1"), 5, {5}, 2000, 20), 5, 4, 5));
}

TEST_CASE("scan parameter validation") {
  EtaExpr gf = parse_expr("f1^-1");
  CHECK_THROWS_AS(scan(gf, 0, {2}, 100, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan(gf, 5, {2}, 100, 0), std::invalid_argument);
  CHECK_THROWS_AS(scan(gf, 5, {2}, 40, 10), std::invalid_argument);
}

TEST_CASE("modular evaluation matches the reduced exact evaluation") {
  EtaExpr gf = parse_expr("f1^-3*f3^-3");
  Series exact = eval(gf, 300, Ring::exact());
  for (const std::uint64_t m : {2ull, 4ull, 27ull, 121ull}) {
    CHECK(reduce_mod(exact, m) == eval(gf, 300, Ring::modular(m)));
  }
}
