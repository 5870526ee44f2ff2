#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdissect {

// Colored-partition counting problem: a number of colors usable on every
// part, plus extra colors usable only on parts divisible by t. The counts
// equal the coefficients of prod (1-q^k)^-colors * prod (1-q^{tk})^-count.
struct ColoredPartitionSpec {
  std::int64_t colors_all_parts = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> colors_multiples;  // (t, count)
};

// Three colors on every part and three more on multiples of three: the
// 2-color partition triple counting problem.
ColoredPartitionSpec triple_partition_spec();

// Unbounded-knapsack count of colored partitions of 0..N. Deliberately
// naive (one rolling pass per part size and color) so it can serve as an
// independent check on the series pipeline.
std::vector<mpz_class> count_dp(const ColoredPartitionSpec& spec, std::int64_t N);

// Second independent route for the triple counts: convolution of the
// 3-colored partition numbers with their multiples-of-three reindexing.
std::vector<mpz_class> convolution_oracle(std::int64_t N);

}  // namespace qdissect
