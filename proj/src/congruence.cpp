#include "qdissect/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "qdissect/dissect.hpp"
#include "qdissect/parallel.hpp"

namespace qdissect {

std::size_t worker_cap() {
  if (const char* env = std::getenv("QDISSECT_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min(worker_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        task(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

std::string CongruenceClaim::progression_name() const {
  std::string name = std::to_string(a) + "n+" + std::to_string(b);
  if (first_n > 0) name += " (n>=" + std::to_string(first_n) + ")";
  return name + " mod " + std::to_string(mod);
}

CongruenceClaim make_claim(const std::string& gf, std::int64_t a, std::int64_t b,
                           std::uint64_t mod, std::int64_t first_n) {
  if (a < 1) throw std::invalid_argument("progression step must be positive");
  if (b < 0 || b >= a) throw std::invalid_argument("progression residue must satisfy 0 <= b < a");
  if (mod < 2) throw std::invalid_argument("congruence modulus must be at least 2");
  if (first_n < 0) throw std::invalid_argument("first index must be nonnegative");
  CongruenceClaim c;
  c.gf = parse_expr(gf);
  c.gf_text = gf;
  c.a = a;
  c.b = b;
  c.first_n = first_n;
  c.mod = mod;
  return c;
}

int legendre(const mpz_class& a, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("legendre symbol requires an odd prime");
  }
  const mpz_class pz(static_cast<long>(p));
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

QuadraticCriterionReport quadratic_criterion(std::int64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("quadratic criterion requires a prime p >= 5");
  }
  QuadraticCriterionReport rep;
  rep.p = p;
  rep.legendre_minus_three = legendre(-3, p);
  rep.expected_k = p % 6 == 1 ? (p - 1) / 6 : -(p + 1) / 6;
  const std::int64_t half = (p - 1) / 2;
  for (std::int64_t k = -half; k <= half; ++k) {
    for (std::int64_t m = -half; m <= half; ++m) {
      const std::int64_t u = 6 * k + 1, v = 6 * m + 1;
      const std::int64_t value = (2 * u * u + 6 * v * v) % p;
      if (value == 0) rep.solutions.emplace_back(k, m);
    }
  }
  rep.only_expected = rep.solutions.size() == 1 &&
                      rep.solutions.front() == std::make_pair(rep.expected_k, rep.expected_k);
  return rep;
}

CongruenceClaim check_claim(CongruenceClaim c, std::int64_t N) {
  if (N < c.b) throw std::invalid_argument("check bound must reach the progression start");
  // Evaluate before moving c: the arguments of one call carry no sequencing.
  const Series s = eval(c.gf, N, Ring::modular(c.mod));
  return check_claim_on(s, std::move(c));
}

CongruenceClaim check_claim_on(const Series& s, CongruenceClaim c) {
  if (!(s.ring() == Ring::modular(c.mod))) {
    throw std::invalid_argument("series ring does not match the claim modulus");
  }
  bool any_checked = false;
  for (std::int64_t n = c.first_n; c.a * n + c.b <= s.order(); ++n) {
    any_checked = true;
    if (!s.coeff_is_zero(c.a * n + c.b)) {
      c.status = ClaimStatus::Refuted;
      c.bound = c.a * n + c.b;
      return c;
    }
  }
  // A bound below the first progression index is no evidence at all; the
  // claim stays unchecked rather than vacuously verified.
  if (any_checked) {
    c.status = ClaimStatus::Verified;
    c.bound = s.order();
  }
  return c;
}

namespace {

constexpr const char* kTripleGf = "f1^-3*f3^-3";

// Checks claims sharing one generating function, evaluating it once per
// distinct modulus; moduli run in parallel, results keep claim order.
std::vector<CongruenceClaim> check_grouped(std::vector<CongruenceClaim> claims, std::int64_t N) {
  std::map<std::uint64_t, std::vector<std::size_t>> by_mod;
  for (std::size_t i = 0; i < claims.size(); ++i) by_mod[claims[i].mod].push_back(i);
  std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> groups(by_mod.begin(),
                                                                         by_mod.end());
  const EtaExpr gf = claims.front().gf;
  parallel_for(groups.size(), [&](std::size_t g) {
    const Series s = eval(gf, N, Ring::modular(groups[g].first));
    for (const std::size_t i : groups[g].second) {
      claims[i] = check_claim_on(s, std::move(claims[i]));
    }
  });
  return claims;
}

}  // namespace

std::vector<CongruenceClaim> theorem1_suite(std::int64_t N) {
  if (N < 9) throw std::invalid_argument("bound must reach the largest progression start");
  std::vector<CongruenceClaim> claims;
  for (const auto& [a, b, m] : std::initializer_list<std::tuple<int, int, int>>{
           {12, 6, 2}, {12, 9, 2}, {6, 4, 4}, {3, 1, 3}, {3, 2, 9}, {9, 5, 27}, {9, 8, 27},
           {5, 3, 5}}) {
    claims.push_back(make_claim(kTripleGf, a, b, m));
  }
  return check_grouped(std::move(claims), N);
}

std::vector<CongruenceClaim> theorem2_claims(std::int64_t p, std::int64_t alpha) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("the prime family requires an odd prime");
  }
  if (alpha < 1) throw std::invalid_argument("the prime family requires alpha >= 1");
  const int symbol = legendre(-3, p);
  if (symbol != -1) {
    throw std::invalid_argument("legendre(-3, " + std::to_string(p) + ") = " +
                                std::to_string(symbol) + ", the family requires -1");
  }
  std::int64_t p_pow = 1;  // p^(2*alpha - 1)
  for (std::int64_t i = 0; i < 2 * alpha - 1; ++i) {
    if (p_pow > (std::int64_t(1) << 40) / p) {
      throw std::invalid_argument("prime power exceeds the supported range");
    }
    p_pow *= p;
  }
  const std::int64_t a = 9 * p_pow * p;
  std::vector<CongruenceClaim> claims;
  for (std::int64_t j = 1; j <= p - 1; ++j) {
    const std::int64_t numerator = p_pow * (3 * p + 18 * j) + 1;
    if (numerator % 2 != 0) throw std::logic_error("progression constant must be an integer");
    const std::int64_t r = numerator / 2;
    // b = r mod a with the start index advanced keeps the checked set equal
    // to {a*n + r : n >= 0}.
    claims.push_back(make_claim(kTripleGf, a, r % a, 27, r / a));
  }
  return claims;
}

std::vector<CongruenceClaim> theorem3_suite(std::int64_t N) {
  if (N < 121) throw std::invalid_argument("bound must reach the largest progression start");
  std::vector<CongruenceClaim> claims;
  for (const int b : {7, 10, 16, 18}) claims.push_back(make_claim(kTripleGf, 21, b, 7));
  for (const int b : {39, 61, 72, 94, 105, 116}) claims.push_back(make_claim(kTripleGf, 121, b, 11));
  return check_grouped(std::move(claims), N);
}

std::vector<CongruenceClaim> scan(const EtaExpr& gf, std::int64_t a_max,
                                  const std::vector<std::uint64_t>& moduli, std::int64_t N,
                                  std::int64_t min_hits) {
  if (a_max < 1) throw std::invalid_argument("progression step bound must be positive");
  if (min_hits < 1) throw std::invalid_argument("minimum hit count must be positive");
  if (N < a_max * min_hits) {
    throw std::invalid_argument("scan bound too small for the requested hit count");
  }
  const std::string gf_text = render(gf);
  std::vector<std::vector<CongruenceClaim>> per_modulus(moduli.size());
  parallel_for(moduli.size(), [&](std::size_t mi) {
    const std::uint64_t m = moduli[mi];
    const Series s = eval(gf, N, Ring::modular(m));
    for (std::int64_t a = 1; a <= a_max; ++a) {
      for (std::int64_t b = 0; b < a; ++b) {
        if ((N - b) / a + 1 < min_hits) continue;
        bool all_zero = true;
        for (std::int64_t n = b; n <= N; n += a) {
          if (!s.coeff_is_zero(n)) {
            all_zero = false;
            break;
          }
        }
        if (!all_zero) continue;
        CongruenceClaim c;
        c.gf = gf;
        c.gf_text = gf_text;
        c.a = a;
        c.b = b;
        c.mod = m;
        c.status = ClaimStatus::Verified;
        c.bound = N;
        per_modulus[mi].push_back(std::move(c));
      }
    }
  });
  std::vector<CongruenceClaim> out;
  for (std::vector<CongruenceClaim>& chunk : per_modulus) {
    for (CongruenceClaim& c : chunk) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qdissect
