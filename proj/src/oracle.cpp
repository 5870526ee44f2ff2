#include "qdissect/oracle.hpp"

#include <stdexcept>

namespace qdissect {

ColoredPartitionSpec triple_partition_spec() { return {3, {{3, 3}}}; }

std::vector<mpz_class> count_dp(const ColoredPartitionSpec& spec, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("count bound must be nonnegative");
  if (spec.colors_all_parts < 0) throw std::invalid_argument("color count must be nonnegative");
  for (const auto& [t, count] : spec.colors_multiples) {
    if (t < 1) throw std::invalid_argument("multiple constraint must be positive");
    if (count < 0) throw std::invalid_argument("color count must be nonnegative");
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1, mpz_class(0));
  c[0] = 1;
  for (std::int64_t size = 1; size <= N; ++size) {
    std::int64_t colors = spec.colors_all_parts;
    for (const auto& [t, count] : spec.colors_multiples) {
      if (size % t == 0) colors += count;
    }
    // One unbounded pass per color of this part size.
    for (std::int64_t i = 0; i < colors; ++i) {
      for (std::int64_t n = size; n <= N; ++n) {
        c[n] += c[n - size];
      }
    }
  }
  return c;
}

std::vector<mpz_class> convolution_oracle(std::int64_t N) {
  const std::vector<mpz_class> p3 = count_dp({3, {}}, N);
  std::vector<mpz_class> out(static_cast<std::size_t>(N) + 1, mpz_class(0));
  for (std::int64_t n = 0; n <= N; ++n) {
    for (std::int64_t k = 0; 3 * k <= n; ++k) {
      out[n] += p3[n - 3 * k] * p3[k];
    }
  }
  return out;
}

}  // namespace qdissect
