#include "qdissect/etalang.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace qdissect {

namespace {

void add_signed_unit(Series& s, std::int64_t n, bool negative) {
  if (s.ring().is_modular()) {
    const std::uint64_t m = s.ring().modulus();
    const std::uint64_t unit = negative ? m - 1 : 1;
    std::uint64_t v = s.mdata()[n] + unit;
    s.mdata()[n] = v >= m ? v - m : v;
  } else {
    s.zdata()[n] += negative ? -1 : 1;
  }
}

// Structural key ignoring the coefficient, used for sorting and merging.
auto structure_of(const EtaMonomial& t) {
  return std::tie(t.qshift, t.etas, t.thetas);
}

EtaMonomial mono_mul(const EtaMonomial& a, const EtaMonomial& b) {
  EtaMonomial out;
  out.coeff = a.coeff * b.coeff;
  out.qshift = a.qshift + b.qshift;
  out.etas = a.etas;
  for (const auto& [k, e] : b.etas) {
    const std::int64_t merged = out.etas[k] + e;
    if (merged == 0) {
      out.etas.erase(k);
    } else {
      out.etas[k] = merged;
    }
  }
  out.thetas = a.thetas;
  out.thetas.insert(out.thetas.end(), b.thetas.begin(), b.thetas.end());
  std::sort(out.thetas.begin(), out.thetas.end());
  return out;
}

}  // namespace

Series eta_series(std::int64_t k, std::int64_t N, Ring ring) {
  if (k < 1) throw std::invalid_argument("eta index must be positive");
  Series out(ring, N);
  add_signed_unit(out, 0, false);
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t g1 = k * (j * (3 * j - 1) / 2);
    const std::int64_t g2 = k * (j * (3 * j + 1) / 2);
    if (g1 > N && g2 > N) break;
    const bool negative = (j % 2) != 0;
    if (g1 <= N) add_signed_unit(out, g1, negative);
    if (g2 <= N) add_signed_unit(out, g2, negative);
  }
  return out;
}

Series theta_series(std::int64_t A, std::int64_t B, std::int64_t N, Ring ring) {
  if (A < 1 || B < 1) throw std::invalid_argument("theta parameters must be positive");
  Series out(ring, N);
  add_signed_unit(out, 0, false);
  const std::int64_t low = std::min(A, B);
  // low * n(n-1)/2 is a lower bound for the exponents at +-n, so the loop
  // cannot stop before every contributing index has been visited.
  for (std::int64_t n = 1; low * (n * (n - 1) / 2) <= N; ++n) {
    const bool negative = (n % 2) != 0;
    const std::int64_t e_pos = A * (n * (n + 1) / 2) + B * (n * (n - 1) / 2);
    const std::int64_t e_neg = A * (n * (n - 1) / 2) + B * (n * (n + 1) / 2);
    if (e_pos <= N) add_signed_unit(out, e_pos, negative);
    if (e_neg <= N) add_signed_unit(out, e_neg, negative);
  }
  return out;
}

Series eval(const EtaExpr& expr, std::int64_t N, Ring ring) {
  Series total(ring, N);
  for (const EtaMonomial& term : expr.terms) {
    Series acc = Series::one(ring, N);
    for (const auto& [k, e] : term.etas) {
      const Series factor = eta_series(k, N, ring);
      // One sparse pass per unit of exponent keeps the whole evaluation at
      // O(N * nnz) even for the deeply negative powers.
      for (std::int64_t i = 0; i < (e > 0 ? e : -e); ++i) {
        acc = e > 0 ? mul(acc, factor) : div(acc, factor);
      }
    }
    for (const auto& [A, B] : term.thetas) {
      acc = mul(acc, theta_series(A, B, N, ring));
    }
    if (term.qshift > 0) acc = shift(acc, term.qshift);
    if (term.coeff != 1) acc = scalar_mul(term.coeff, acc);
    total = add(total, acc);
  }
  return total;
}

EtaExpr normalize(EtaExpr expr) {
  for (EtaMonomial& t : expr.terms) {
    for (auto it = t.etas.begin(); it != t.etas.end();) {
      it = it->second == 0 ? t.etas.erase(it) : std::next(it);
    }
    std::sort(t.thetas.begin(), t.thetas.end());
  }
  std::sort(expr.terms.begin(), expr.terms.end(),
            [](const EtaMonomial& a, const EtaMonomial& b) {
              return structure_of(a) < structure_of(b);
            });
  std::vector<EtaMonomial> merged;
  for (EtaMonomial& t : expr.terms) {
    if (!merged.empty() && structure_of(merged.back()) == structure_of(t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const EtaMonomial& t) { return t.coeff == 0; });
  return EtaExpr{std::move(merged)};
}

EtaExpr expr_add(const EtaExpr& a, const EtaExpr& b) {
  EtaExpr out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return normalize(std::move(out));
}

EtaExpr expr_neg(const EtaExpr& a) {
  EtaExpr out = a;
  for (EtaMonomial& t : out.terms) t.coeff = -t.coeff;
  return out;
}

EtaExpr expr_sub(const EtaExpr& a, const EtaExpr& b) { return expr_add(a, expr_neg(b)); }

EtaExpr expr_mul(const EtaExpr& a, const EtaExpr& b) {
  EtaExpr out;
  for (const EtaMonomial& x : a.terms) {
    for (const EtaMonomial& y : b.terms) {
      out.terms.push_back(mono_mul(x, y));
    }
  }
  return normalize(std::move(out));
}

EtaExpr expr_pow(const EtaExpr& a, std::int64_t e) {
  EtaExpr one{{EtaMonomial{}}};
  if (e == 0) return one;
  if (e < 0) {
    if (a.terms.size() != 1) {
      throw std::invalid_argument("cannot raise a sum to a negative power");
    }
    const EtaMonomial& t = a.terms.front();
    if (t.coeff != 1 && t.coeff != -1) {
      throw std::invalid_argument("cannot invert a non-unit coefficient");
    }
    if (t.qshift != 0) throw std::invalid_argument("cannot invert a q power");
    if (!t.thetas.empty()) throw std::invalid_argument("cannot invert a theta factor");
    EtaMonomial inv;
    inv.coeff = t.coeff == -1 && (e % 2 != 0) ? -1 : 1;
    for (const auto& [k, ek] : t.etas) inv.etas[k] = ek * e;
    return EtaExpr{{inv}};
  }
  EtaExpr result = one;
  for (std::int64_t i = 0; i < e; ++i) result = expr_mul(result, a);
  return result;
}

EtaExpr inflate_expr(const EtaExpr& a, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("inflation factor must be positive");
  EtaExpr out = a;
  for (EtaMonomial& term : out.terms) {
    term.qshift *= t;
    std::map<std::int64_t, std::int64_t> etas;
    for (const auto& [k, e] : term.etas) etas[k * t] = e;
    term.etas = std::move(etas);
    for (auto& [A, B] : term.thetas) {
      A *= t;
      B *= t;
    }
  }
  return normalize(std::move(out));
}

namespace {

// Recursive-descent parser over the grammar in the header.
class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  EtaExpr parse_full_expr() {
    EtaExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

  SeriesExpr parse_full_series_expr() {
    skip_ws();
    SeriesExpr out;
    if (peek_word("extract")) {
      pos_ += 7;
      expect('(');
      out.expr = parse_expr();
      expect(',');
      out.extract_m = parse_uint();
      expect(',');
      out.extract_r = parse_uint();
      expect(')');
      if (out.extract_m < 1 || out.extract_r < 0 || out.extract_r >= out.extract_m) {
        fail("extract arguments must satisfy 0 <= r < m");
      }
    } else {
      out.expr = parse_expr();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool peek_word(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    const std::size_t after = pos_ + word.size();
    return after >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[after]));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t(1) << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  std::int64_t parse_sint() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const std::int64_t v = parse_uint();
    return neg ? -v : v;
  }

  EtaExpr parse_expr() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    EtaExpr acc = parse_term();
    if (neg) acc = expr_neg(acc);
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      const EtaExpr rhs = parse_term();
      acc = c == '+' ? expr_add(acc, rhs) : expr_sub(acc, rhs);
    }
    return normalize(std::move(acc));
  }

  EtaExpr parse_term() {
    EtaExpr acc = parse_factor();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') break;
      ++pos_;
      EtaExpr rhs = parse_factor();
      if (c == '/') rhs = expr_pow(rhs, -1);
      acc = expr_mul(acc, rhs);
    }
    return acc;
  }

  EtaExpr parse_factor() {
    EtaExpr base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      base = expr_pow(base, parse_sint());
    }
    return base;
  }

  EtaExpr parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      EtaExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      EtaMonomial t;
      t.coeff = parse_uint();
      return EtaExpr{{t}};
    }
    if (peek_word("q")) {
      ++pos_;
      EtaMonomial t;
      t.qshift = 1;
      return EtaExpr{{t}};
    }
    if (peek_word("theta")) {
      pos_ += 5;
      expect('(');
      const std::int64_t A = parse_uint();
      expect(',');
      const std::int64_t B = parse_uint();
      expect(')');
      if (A < 1 || B < 1) fail("theta parameters must be positive");
      EtaMonomial t;
      t.thetas.emplace_back(A, B);
      return EtaExpr{{t}};
    }
    if (c == 'f') {
      ++pos_;
      const std::int64_t k = parse_uint();
      if (k < 1) fail("eta index must be positive");
      EtaMonomial t;
      t.etas[k] = 1;
      return EtaExpr{{t}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown factor '" + text_.substr(pos_, end - pos_) + "'");
    }
    fail("expected a factor");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string render_term(const EtaMonomial& t) {
  std::vector<std::string> parts;
  mpz_class c = abs(t.coeff);
  const bool bare = t.qshift == 0 && t.etas.empty() && t.thetas.empty();
  if (c != 1 || bare) parts.push_back(c.get_str());
  if (t.qshift == 1) {
    parts.push_back("q");
  } else if (t.qshift > 1) {
    parts.push_back("q^" + std::to_string(t.qshift));
  }
  for (const auto& [k, e] : t.etas) {
    std::string s = "f" + std::to_string(k);
    if (e != 1) s += "^" + std::to_string(e);
    parts.push_back(std::move(s));
  }
  for (const auto& [A, B] : t.thetas) {
    parts.push_back("theta(" + std::to_string(A) + "," + std::to_string(B) + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace

EtaExpr parse_expr(const std::string& text) { return Parser(text).parse_full_expr(); }

std::string render(const EtaExpr& expr) {
  if (expr.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    const EtaMonomial& t = expr.terms[i];
    if (i == 0) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    out += render_term(t);
  }
  return out;
}

SeriesExpr parse_series_expr(const std::string& text) {
  return Parser(text).parse_full_series_expr();
}

std::string render(const SeriesExpr& expr) {
  if (expr.extract_m == 1) return render(expr.expr);
  return "extract(" + render(expr.expr) + ", " + std::to_string(expr.extract_m) + ", " +
         std::to_string(expr.extract_r) + ")";
}

Series eval(const SeriesExpr& expr, std::int64_t N, Ring ring) {
  if (expr.extract_m == 1 && expr.extract_r == 0) return eval(expr.expr, N, ring);
  const Series inner = eval(expr.expr, expr.extract_m * N + expr.extract_r, ring);
  return extract(inner, expr.extract_m, expr.extract_r);
}

}  // namespace qdissect
