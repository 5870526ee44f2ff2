#include "qdissect/etalang.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qdissect {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

// The auxiliary two-term sum f2^6*f3/(f1^2*f6^2) + 3*q*f1^2*f6^6/(f2^2*f3^3)
// appears below both as-is and with q replaced by q^3; the replaced form is
// spelled out since the grammar has no substitution operator.
const char* const kDefaultCatalog = R"(
# two-dissections of f1*f3 and the quotients f1/f3, f3/f1
two_dissection_f1f3 | f1*f3 | f2*f8^2*f12^4/(f4^2*f6*f24^2) - q*f4^4*f6*f24^2/(f2*f8^2*f12^2) | | Hirschhorn, The Power of q, (30.12.1)
two_dissection_f1_over_f3 | f1/f3 | f2*f16*f24^2/(f6^2*f8*f48) - q*f2*f8^2*f12*f48/(f4*f6^2*f16*f24) | | Hirschhorn, The Power of q, (30.10.1)
two_dissection_f3_over_f1 | f3/f1 | f4*f6*f16*f24^2/(f2^2*f8*f12*f48) + q*f6*f8^2*f48/(f2^2*f16*f24) | | Hirschhorn, The Power of q, (30.10.3)

# three-dissections of f1^3 and 1/f1^3
three_dissection_f1_cubed | f1^3 | f6^6*f9/(f3^2*f18^2) + 3*q^3*f3^2*f18^6/(f6^2*f9^3) - 3*q*f9^3 | | Hirschhorn, The Power of q, (21.3.3)
three_dissection_inv_f1_cubed | f1^-3 | f9^3/f3^12*((f6^6*f9/(f3^2*f18^2) + 3*q^3*f3^2*f18^6/(f6^2*f9^3))^2 + 3*q*f9^3*(f6^6*f9/(f3^2*f18^2) + 3*q^3*f3^2*f18^6/(f6^2*f9^3)) + 9*q^2*f9^6) | | root-of-unity product of the f1^3 three-dissection
three_dissection_inv_f1_cubed_expanded | f1^-3 | f9^3/f3^12*(f1^6 + 9*q*f1^3*f9^3 + 27*q^2*f9^6) | | previous row with the auxiliary sum rewritten through its inflated form
p_aux_substitution | f6^6*f9/(f3^2*f18^2) + 3*q^3*f3^2*f18^6/(f6^2*f9^3) | f1^3 + 3*q*f9^3 | | Hirschhorn, The Power of q, (21.3.3) rearranged

# arithmetic-progression slices of the triple generating function 1/(f1^3*f3^3)
triple_gf_3n | extract(f1^-3*f3^-3, 3, 0) | f3^3/f1^15*(f2^6*f3/(f1^2*f6^2) + 3*q*f1^2*f6^6/(f2^2*f3^3))^2 | | three-dissection of the generating function
triple_gf_3n_plus_1 | extract(f1^-3*f3^-3, 3, 1) | 3*f3^6/f1^15*(f2^6*f3/(f1^2*f6^2) + 3*q*f1^2*f6^6/(f2^2*f3^3)) | | three-dissection of the generating function
triple_gf_3n_plus_2 | extract(f1^-3*f3^-3, 3, 2) | 9*f3^9/f1^15 | | three-dissection of the generating function

# modular reductions feeding the progression congruences
triple_gf_2n_mod4 | extract(f1^-3*f3^-3, 2, 0) | f1^3/f3^3 | 4 | two-dissection of f1*f3 with binomial reduction
triple_gf_3n_plus_2_mod27 | extract(f1^-3*f3^-3, 3, 2) | 9*f3^4 | 27 | cube-power congruence f_k^3 = f_3k mod 3
f3_pow4_mod27 | 9*f3^4 | 9*f3*f9 | 27 | cube-power congruence f_k^3 = f_3k mod 3
triple_gf_9n_plus_2_mod27 | extract(f1^-3*f3^-3, 9, 2) | 9*f1*f3 | 27 | three-dissection of 9*f3*f9
)";

}  // namespace

std::vector<IdentityRecord> parse_catalog(const std::string& text) {
  std::vector<IdentityRecord> records;
  std::set<std::string> names;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream split(stripped);
    while (std::getline(split, field, '|')) fields.push_back(trim(field));
    if (fields.size() != 5) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": expected 5 '|'-separated fields");
    }
    IdentityRecord rec;
    rec.name = fields[0];
    if (rec.name.empty()) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": empty name");
    }
    if (!names.insert(rec.name).second) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                  ": duplicate name '" + rec.name + "'");
    }
    rec.lhs = parse_series_expr(fields[1]);
    rec.rhs = parse_series_expr(fields[2]);
    if (!fields[3].empty()) {
      const unsigned long m = std::stoul(fields[3]);
      if (m < 2) {
        throw std::invalid_argument("catalog line " + std::to_string(lineno) +
                                    ": modulus must be at least 2");
      }
      rec.modulus = m;
    }
    rec.source = fields[4];
    records.push_back(std::move(rec));
  }
  return records;
}

const std::vector<IdentityRecord>& default_catalog() {
  static const std::vector<IdentityRecord> catalog = parse_catalog(kDefaultCatalog);
  return catalog;
}

}  // namespace qdissect
