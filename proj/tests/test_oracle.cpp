#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qdissect/etalang.hpp"
#include "qdissect/oracle.hpp"
#include "qdissect/series.hpp"

using namespace qdissect;

namespace {

std::vector<long> to_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const mpz_class& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("ordinary partition numbers as a degenerate spec") {
  ColoredPartitionSpec spec;
  spec.colors_all_parts = 1;
  CHECK(to_longs(count_dp(spec, 9)) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30});
}

TEST_CASE("an empty spec counts only the empty partition") {
  ColoredPartitionSpec spec;
  std::vector<mpz_class> counts = count_dp(spec, 5);
  CHECK(counts[0] == 1);
  for (std::size_t n = 1; n < counts.size(); ++n) CHECK(counts[n] == 0);
}

TEST_CASE("one extra color on even parts") {
  ColoredPartitionSpec spec;
  spec.colors_all_parts = 1;
  spec.colors_multiples = {{2, 1}};
  CHECK(to_longs(count_dp(spec, 12)) ==
        std::vector<long>{1, 1, 3, 4, 9, 12, 23, 31, 54, 73, 118, 159, 246});
}

TEST_CASE("triple spec counts") {
  const std::vector<long> expected{1,    3,    9,    25,   60,    135,   296,  609, 1215,
                                   2362, 4452, 8199, 14829, 26265, 45765, 78588, 132972};
  CHECK(to_longs(count_dp(triple_partition_spec(), 16)) == expected);
  CHECK(to_longs(convolution_oracle(16)) == expected);
}

TEST_CASE("convolution decomposition at n = 8") {
  // Splitting by the total weight on multiples of three: p3 convolved with
  // its reindexing. p3 = 1, 3, 9, 22, 51, 108, 221, 429, 810, ...
  ColoredPartitionSpec p3_spec;
  p3_spec.colors_all_parts = 3;
  std::vector<mpz_class> p3 = count_dp(p3_spec, 8);
  CHECK(to_longs(p3) == std::vector<long>{1, 3, 9, 22, 51, 108, 221, 429, 810});
  mpz_class total = p3[8] * p3[0] + p3[5] * p3[1] + p3[2] * p3[2];
  CHECK(total == 1215);
}

TEST_CASE("both oracles agree with the series pipeline through 120") {
  const std::int64_t N = 120;
  std::vector<mpz_class> dp = count_dp(triple_partition_spec(), N);
  std::vector<mpz_class> conv = convolution_oracle(N);
  Series s = eval(parse_expr("f1^-3*f3^-3"), N, Ring::exact());
  REQUIRE(dp.size() == static_cast<std::size_t>(N + 1));
  REQUIRE(conv.size() == static_cast<std::size_t>(N + 1));
  for (std::int64_t n = 0; n <= N; ++n) {
    CAPTURE(n);
    CHECK(dp[n] == conv[n]);
    CHECK(dp[n] == s.coeff(n));
  }
  CHECK(dp[120] == mpz_class("6662224695909001924"));
}

TEST_CASE("triple counts are strictly increasing") {
  std::vector<mpz_class> dp = count_dp(triple_partition_spec(), 120);
  for (std::size_t n = 1; n < dp.size(); ++n) CHECK(dp[n] > dp[n - 1]);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(count_dp(triple_partition_spec(), -1), std::invalid_argument);
  ColoredPartitionSpec bad;
  bad.colors_all_parts = -1;
  CHECK_THROWS_AS(count_dp(bad, 5), std::invalid_argument);
  bad.colors_all_parts = 1;
  bad.colors_multiples = {{0, 1}};
  CHECK_THROWS_AS(count_dp(bad, 5), std::invalid_argument);
  bad.colors_multiples = {{2, -1}};
  CHECK_THROWS_AS(count_dp(bad, 5), std::invalid_argument);
}
