#include "qdissect/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdissect {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;

void require_same_ring(const Series& a, const Series& b) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument("ring mismatch between series operands");
  }
}

std::uint64_t canonical(const mpz_class& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);  // nonnegative remainder
}

std::vector<std::int64_t> nonzero_indices(const Series& s) {
  std::vector<std::int64_t> idx;
  for (std::int64_t n = 0; n <= s.order(); ++n) {
    if (!s.coeff_is_zero(n)) idx.push_back(n);
  }
  return idx;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  mpz_class r, am(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(m));
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0) {
    throw std::invalid_argument("constant term is not a unit in the ring");
  }
  return r.get_ui();
}

}  // namespace

Ring Ring::modular(std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [2, 2^31]");
  }
  return Ring(m);
}

std::uint64_t Ring::modulus() const {
  if (!is_modular()) throw std::logic_error("exact ring has no modulus");
  return m_;
}

std::string Ring::name() const {
  return is_modular() ? "mod " + std::to_string(m_) : "exact";
}

Series::Series(Ring ring, std::int64_t order) : ring_(ring) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (ring_.is_modular()) {
    mc_.assign(static_cast<std::size_t>(order) + 1, 0);
  } else {
    zc_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
  }
}

Series Series::one(Ring ring, std::int64_t order) {
  Series s(ring, order);
  s.set_coeff(0, 1);
  return s;
}

std::int64_t Series::order() const {
  return static_cast<std::int64_t>(ring_.is_modular() ? mc_.size() : zc_.size()) - 1;
}

mpz_class Series::coeff(std::int64_t n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
  if (ring_.is_modular()) {
    return mpz_class(static_cast<unsigned long>(mc_[static_cast<std::size_t>(n)]));
  }
  return zc_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(std::int64_t n, const mpz_class& value) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
  if (ring_.is_modular()) {
    mc_[static_cast<std::size_t>(n)] = canonical(value, ring_.modulus());
  } else {
    zc_[static_cast<std::size_t>(n)] = value;
  }
}

bool Series::coeff_is_zero(std::int64_t n) const {
  if (ring_.is_modular()) return mc_[static_cast<std::size_t>(n)] == 0;
  return mpz_sgn(zc_[static_cast<std::size_t>(n)].get_mpz_t()) == 0;
}

std::int64_t Series::nonzero_count() const {
  std::int64_t count = 0;
  for (std::int64_t n = 0; n <= order(); ++n) {
    if (!coeff_is_zero(n)) ++count;
  }
  return count;
}

Series add(const Series& a, const Series& b) {
  require_same_ring(a, b);
  const std::int64_t N = std::min(a.order(), b.order());
  Series out(a.ring(), N);
  if (a.ring().is_modular()) {
    const std::uint64_t m = a.ring().modulus();
    for (std::int64_t n = 0; n <= N; ++n) {
      std::uint64_t s = a.mdata()[n] + b.mdata()[n];
      out.mdata()[n] = s >= m ? s - m : s;
    }
  } else {
    for (std::int64_t n = 0; n <= N; ++n) {
      out.zdata()[n] = a.zdata()[n] + b.zdata()[n];
    }
  }
  return out;
}

Series sub(const Series& a, const Series& b) {
  require_same_ring(a, b);
  const std::int64_t N = std::min(a.order(), b.order());
  Series out(a.ring(), N);
  if (a.ring().is_modular()) {
    const std::uint64_t m = a.ring().modulus();
    for (std::int64_t n = 0; n <= N; ++n) {
      const std::uint64_t x = a.mdata()[n], y = b.mdata()[n];
      out.mdata()[n] = x >= y ? x - y : x + m - y;
    }
  } else {
    for (std::int64_t n = 0; n <= N; ++n) {
      out.zdata()[n] = a.zdata()[n] - b.zdata()[n];
    }
  }
  return out;
}

Series mul(const Series& a, const Series& b) {
  require_same_ring(a, b);
  const std::int64_t N = std::min(a.order(), b.order());
  Series out(a.ring(), N);
  // Drive the convolution from the sparser factor: pentagonal-type inputs
  // have O(sqrt(N)) support, which turns this into O(N * nnz).
  const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
  const Series& s = a_sparser ? a : b;
  const Series& d = a_sparser ? b : a;
  const std::vector<std::int64_t> idx = nonzero_indices(s);
  if (a.ring().is_modular()) {
    const std::uint64_t m = a.ring().modulus();
    const auto& sv = s.mdata();
    const auto& dv = d.mdata();
    for (std::int64_t n = 0; n <= N; ++n) {
      unsigned __int128 acc = 0;
      for (std::int64_t i : idx) {
        if (i > n) break;
        acc += static_cast<unsigned __int128>(sv[i]) * dv[n - i];
      }
      out.mdata()[n] = static_cast<std::uint64_t>(acc % m);
    }
  } else {
    const auto& sv = s.zdata();
    const auto& dv = d.zdata();
    auto& ov = out.zdata();
    for (std::int64_t i : idx) {
      for (std::int64_t j = 0; i + j <= N; ++j) {
        if (mpz_sgn(dv[j].get_mpz_t()) == 0) continue;
        mpz_addmul(ov[i + j].get_mpz_t(), sv[i].get_mpz_t(), dv[j].get_mpz_t());
      }
    }
  }
  return out;
}

Series scalar_mul(const mpz_class& c, const Series& a) {
  Series out(a.ring(), a.order());
  if (a.ring().is_modular()) {
    const std::uint64_t m = a.ring().modulus();
    const std::uint64_t cm = canonical(c, m);
    for (std::int64_t n = 0; n <= a.order(); ++n) {
      out.mdata()[n] = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(cm) * a.mdata()[n] % m);
    }
  } else {
    for (std::int64_t n = 0; n <= a.order(); ++n) {
      out.zdata()[n] = c * a.zdata()[n];
    }
  }
  return out;
}

Series div(const Series& a, const Series& b) {
  require_same_ring(a, b);
  const std::int64_t N = std::min(a.order(), b.order());
  Series out(a.ring(), N);
  std::vector<std::int64_t> idx = nonzero_indices(b);
  if (idx.empty() || idx.front() != 0) {
    throw std::invalid_argument("constant term is not a unit in the ring");
  }
  idx.erase(idx.begin());  // the recurrence consumes b's tail only
  // c[n] = (a[n] - sum_{k >= 1} b[k] c[n-k]) / b[0]
  if (a.ring().is_modular()) {
    const std::uint64_t m = a.ring().modulus();
    const std::uint64_t inv0 = mod_inverse(b.mdata()[0], m);
    const auto& av = a.mdata();
    const auto& bv = b.mdata();
    auto& cv = out.mdata();
    for (std::int64_t n = 0; n <= N; ++n) {
      unsigned __int128 acc = 0;
      for (std::int64_t k : idx) {
        if (k > n) break;
        acc += static_cast<unsigned __int128>(bv[k]) * cv[n - k];
      }
      const std::uint64_t red = static_cast<std::uint64_t>(acc % m);
      const std::uint64_t t = (av[n] + m - red) % m;
      cv[n] = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(t) * inv0 % m);
    }
  } else {
    const mpz_class& b0 = b.zdata()[0];
    if (b0 != 1 && b0 != -1) {
      throw std::invalid_argument("constant term is not a unit in the ring");
    }
    const bool negate = b0 == -1;
    const auto& av = a.zdata();
    const auto& bv = b.zdata();
    auto& cv = out.zdata();
    for (std::int64_t n = 0; n <= N; ++n) {
      mpz_class acc = av[n];
      for (std::int64_t k : idx) {
        if (k > n) break;
        mpz_submul(acc.get_mpz_t(), bv[k].get_mpz_t(), cv[n - k].get_mpz_t());
      }
      cv[n] = negate ? mpz_class(-acc) : acc;
    }
  }
  return out;
}

Series inverse(const Series& a) { return div(Series::one(a.ring(), a.order()), a); }

Series pow(const Series& a, std::int64_t e) {
  if (e == 0) return Series::one(a.ring(), a.order());
  if (e < 0) return pow(inverse(a), -e);
  Series result = Series::one(a.ring(), a.order());
  Series base = a;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

Series inflate(const Series& a, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("inflation factor must be positive");
  Series out(a.ring(), a.order());
  for (std::int64_t n = 0; n * t <= a.order(); ++n) {
    out.set_coeff(n * t, a.coeff(n));
  }
  return out;
}

Series shift(const Series& a, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("shift amount must be nonnegative");
  Series out(a.ring(), a.order());
  for (std::int64_t n = s; n <= a.order(); ++n) {
    out.set_coeff(n, a.coeff(n - s));
  }
  return out;
}

Series extract(const Series& a, std::int64_t m, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("extraction modulus must be positive");
  if (r < 0 || r >= m) throw std::invalid_argument("extraction residue must satisfy 0 <= r < m");
  if (r > a.order()) throw std::invalid_argument("extraction residue exceeds the series order");
  Series out(a.ring(), (a.order() - r) / m);
  for (std::int64_t n = 0; n <= out.order(); ++n) {
    out.set_coeff(n, a.coeff(m * n + r));
  }
  return out;
}

Series interleave(const std::vector<Series>& parts) {
  if (parts.empty()) throw std::invalid_argument("interleave requires at least one part");
  const std::int64_t m = static_cast<std::int64_t>(parts.size());
  for (const Series& p : parts) require_same_ring(parts.front(), p);
  // The result is valid up to the last exponent below the first index any
  // part can no longer supply.
  std::int64_t limit = m * (parts[0].order() + 1);
  for (std::int64_t r = 1; r < m; ++r) {
    limit = std::min(limit, m * (parts[r].order() + 1) + r);
  }
  Series out(parts.front().ring(), limit - 1);
  for (std::int64_t r = 0; r < m; ++r) {
    for (std::int64_t n = 0; m * n + r <= out.order(); ++n) {
      out.set_coeff(m * n + r, parts[r].coeff(n));
    }
  }
  return out;
}

Series reduce_mod(const Series& a, std::uint64_t m) {
  if (a.ring().is_modular()) {
    throw std::invalid_argument("reduce_mod expects an exact-ring series");
  }
  Series out(Ring::modular(m), a.order());
  for (std::int64_t n = 0; n <= a.order(); ++n) {
    out.mdata()[n] = canonical(a.zdata()[n], m);
  }
  return out;
}

std::optional<std::int64_t> first_mismatch(const Series& a, const Series& b) {
  require_same_ring(a, b);
  const std::int64_t N = std::min(a.order(), b.order());
  for (std::int64_t n = 0; n <= N; ++n) {
    if (a.ring().is_modular()) {
      if (a.mdata()[n] != b.mdata()[n]) return n;
    } else {
      if (a.zdata()[n] != b.zdata()[n]) return n;
    }
  }
  return std::nullopt;
}

bool operator==(const Series& a, const Series& b) { return !first_mismatch(a, b).has_value(); }

}  // namespace qdissect
