#include "qdissect/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdissect/congruence.hpp"
#include "qdissect/dissect.hpp"
#include "qdissect/etalang.hpp"
#include "qdissect/oracle.hpp"
#include "qdissect/parallel.hpp"
#include "qdissect/series.hpp"
#include "qdissect/version.hpp"

namespace qdissect {

namespace {

using nlohmann::json;

constexpr const char* kTripleGf = "f1^-3*f3^-3";

std::string iso_timestamp() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// Items are sorted by name so report layout never depends on completion
// order; everything except duration_ms and timestamp is reproducible.
void write_report(const std::string& path, const std::string& command, const std::string& ring,
                  std::int64_t order, json items,
                  std::chrono::steady_clock::time_point started) {
  if (path.empty()) return;
  std::stable_sort(items.begin(), items.end(), [](const json& a, const json& b) {
    return a.at("name").get<std::string>() < b.at("name").get<std::string>();
  });
  const auto elapsed = std::chrono::steady_clock::now() - started;
  const json report{
      {"command", command},
      {"version", kVersion},
      {"ring", ring},
      {"order", order},
      {"items", std::move(items)},
      {"duration_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
      {"timestamp", iso_timestamp()},
  };
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open report path '" + path + "'");
  out << report.dump(2) << "\n";
}

json claim_item(const CongruenceClaim& c, bool empirical) {
  const char* status = c.status == ClaimStatus::Verified   ? "verified"
                       : c.status == ClaimStatus::Refuted ? "refuted"
                                                          : "unchecked";
  return json{
      {"kind", "claim"},    {"name", c.progression_name()},
      {"gf", c.gf_text},    {"a", c.a},
      {"b", c.b},           {"first_n", c.first_n},
      {"mod", c.mod},       {"status", status},
      {"bound", c.bound},   {"empirical", empirical},
  };
}

json identity_item(const VerifyReport& r) {
  return json{
      {"kind", "identity"},          {"name", r.name},
      {"ring", r.ring},              {"order", r.order},
      {"equal", r.equal},            {"mismatch_index", r.mismatch_index},
      {"lhs_value", r.lhs_value},    {"rhs_value", r.rhs_value},
      {"source", r.source},
  };
}

void print_claim(const CongruenceClaim& c, bool empirical) {
  if (c.status == ClaimStatus::Verified) {
    std::cout << (empirical ? "empirical " : "verified  ") << c.progression_name()
              << "  (indices <= " << c.bound << ")\n";
  } else if (c.status == ClaimStatus::Refuted) {
    std::cout << "REFUTED   " << c.progression_name() << "  at index " << c.bound << "\n";
  } else {
    std::cout << "unchecked " << c.progression_name() << "  (no index within bound)\n";
  }
}

// Recomputes the generating function exactly at a desk-scale bound and
// demands agreement with each modular pipeline after reduction.
bool exact_crosscheck(const EtaExpr& gf, const std::vector<CongruenceClaim>& claims,
                      std::int64_t limit, json& items) {
  const std::int64_t bound = std::min<std::int64_t>(limit, 500);
  const Series exact = eval(gf, bound, Ring::exact());
  std::set<std::uint64_t> moduli;
  for (const CongruenceClaim& c : claims) moduli.insert(c.mod);
  bool agree = true;
  for (const std::uint64_t m : moduli) {
    if (first_mismatch(reduce_mod(exact, m), eval(gf, bound, Ring::modular(m)))) agree = false;
  }
  items.push_back(json{{"kind", "crosscheck"},
                       {"name", "exact crosscheck"},
                       {"limit", bound},
                       {"agree", agree}});
  std::cout << "exact crosscheck to " << bound << ": " << (agree ? "agree" : "DISAGREE") << "\n";
  return agree;
}

int finish_claims(std::vector<CongruenceClaim> claims, const std::string& out_path,
                  const std::string& command, const std::string& ring, std::int64_t limit,
                  bool do_exact, bool empirical,
                  std::chrono::steady_clock::time_point started) {
  std::stable_sort(claims.begin(), claims.end(),
                   [](const CongruenceClaim& a, const CongruenceClaim& b) {
                     return a.progression_name() < b.progression_name();
                   });
  json items = json::array();
  bool failed = false;
  for (const CongruenceClaim& c : claims) {
    print_claim(c, empirical);
    items.push_back(claim_item(c, empirical));
    if (c.status == ClaimStatus::Refuted) failed = true;
  }
  if (do_exact && !claims.empty()) {
    if (!exact_crosscheck(claims.front().gf, claims, limit, items)) failed = true;
  }
  write_report(out_path, command, ring, limit, std::move(items), started);
  return failed ? 1 : 0;
}

std::string ring_of_moduli(const std::set<std::uint64_t>& moduli) {
  if (moduli.size() == 1) return Ring::modular(*moduli.begin()).name();
  return "modular";
}

// "12n+6,9" -> step 12, residues {6, 9}
void parse_progression(const std::string& text, std::int64_t& a, std::vector<std::int64_t>& bs) {
  std::istringstream in(text);
  char n = 0, plus = 0;
  if (!(in >> a >> n >> plus) || n != 'n' || plus != '+' || a < 1) {
    throw std::invalid_argument("progression must look like '12n+6,9'");
  }
  std::string rest;
  std::getline(in, rest);
  std::istringstream list(rest);
  std::string tok;
  while (std::getline(list, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("progression must look like '12n+6,9'");
    bs.push_back(std::stoll(tok));
  }
  if (bs.empty()) throw std::invalid_argument("progression must list at least one residue");
  for (const std::int64_t b : bs) {
    if (b < 0 || b >= a) throw std::invalid_argument("progression residues must satisfy 0 <= b < step");
  }
}

std::vector<std::uint64_t> parse_moduli(const std::string& text) {
  std::vector<std::uint64_t> moduli;
  std::istringstream list(text);
  std::string tok;
  while (std::getline(list, tok, ',')) {
    const long long m = std::stoll(tok);
    if (m < 2) throw std::invalid_argument("moduli must be at least 2");
    moduli.push_back(static_cast<std::uint64_t>(m));
  }
  if (moduli.empty()) throw std::invalid_argument("at least one modulus is required");
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
  return moduli;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"q-series engine: dissection identities and progression congruences"};
  app.require_subcommand(1);

  std::string gf_text = kTripleGf, out_path, catalog_path = "default", only_name;
  std::string progression, moduli_text;
  std::int64_t upto = -1, order = 400, p = 0, alpha = 1, limit = -1, a = 0, b = -1;
  std::int64_t pmax = 200, amax = 12, min_hits = 50, pd_order = 300;
  std::uint64_t mod = 0;
  bool do_exact = false, compare = false;

  CLI::App* c_coeff = app.add_subcommand("coeff", "print series coefficients");
  c_coeff->add_option("--gf", gf_text, "generating function expression");
  c_coeff->add_option("--upto", upto, "last exponent to print, default 8");
  c_coeff->add_option("--mod", mod, "compute mod m instead of exactly");
  c_coeff->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_verify = app.add_subcommand("verify-identities", "check catalog identities");
  c_verify->add_option("--catalog", catalog_path, "'default' or a catalog file path");
  c_verify->add_option("--order", order, "verification order");
  c_verify->add_option("--only", only_name, "restrict to one identity");
  c_verify->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_pdis = app.add_subcommand("pdissect", "verify the prime dissection of f1");
  c_pdis->add_option("--p", p, "prime >= 5")->required();
  c_pdis->add_option("--order", pd_order, "verification order");
  c_pdis->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_th1 = app.add_subcommand("theorem1", "check the eight built-in progression claims");
  c_th1->add_option("--limit", limit, "largest index checked, default 50000");
  c_th1->add_flag("--exact", do_exact, "cross-validate against exact arithmetic");
  c_th1->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_th2 = app.add_subcommand("theorem2", "check a prime-family congruence instance");
  c_th2->add_option("--p", p, "odd prime with legendre(-3,p) = -1")->required();
  c_th2->add_option("--alpha", alpha, "power of the prime");
  c_th2->add_option("--limit", limit, "largest index checked, default 50000");
  c_th2->add_flag("--exact", do_exact, "cross-validate against exact arithmetic");
  c_th2->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_th3 = app.add_subcommand("theorem3", "check the mod-7 and mod-11 families");
  c_th3->add_option("--limit", limit, "largest index checked, default 50000");
  c_th3->add_flag("--exact", do_exact, "cross-validate against exact arithmetic");
  c_th3->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_quad = app.add_subcommand("quadratic-criterion",
                                        "solution sets of 2(6k+1)^2+6(6m+1)^2 = 0 mod p");
  c_quad->add_option("--pmax", pmax, "check primes below this bound");
  c_quad->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_check = app.add_subcommand("check", "check one progression congruence");
  c_check->add_option("--gf", gf_text, "generating function expression");
  c_check->add_option("--a", a, "progression step");
  c_check->add_option("--b", b, "progression residue");
  c_check->add_option("--progression", progression, "shorthand like '12n+6,9'");
  c_check->add_option("--mod", mod, "congruence modulus")->required();
  c_check->add_option("--limit", limit, "largest index checked, default 10000");
  c_check->add_flag("--exact", do_exact, "cross-validate against exact arithmetic");
  c_check->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_scan = app.add_subcommand("scan", "empirical congruence scan");
  c_scan->add_option("--gf", gf_text, "generating function expression");
  c_scan->add_option("--amax", amax, "largest progression step");
  c_scan->add_option("--moduli", moduli_text, "comma-separated moduli")->required();
  c_scan->add_option("--limit", limit, "largest index checked, default 10000");
  c_scan->add_option("--min-hits", min_hits, "minimum indices per progression");
  c_scan->add_option("--out", out_path, "write a JSON report");

  CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force triple partition counts");
  c_oracle->add_option("--upto", upto, "last index to count, default 120");
  c_oracle->add_flag("--compare", compare, "cross-check against convolution and series");
  c_oracle->add_option("--out", out_path, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Per-subcommand defaults for the shared numeric options.
  if (upto < 0) upto = c_oracle->parsed() ? 120 : 8;
  if (limit < 0) limit = (c_check->parsed() || c_scan->parsed()) ? 10000 : 50000;

  try {
    if (c_coeff->parsed()) {
      const Ring ring = mod == 0 ? Ring::exact() : Ring::modular(mod);
      const Series s = eval(parse_expr(gf_text), upto, ring);
      json values = json::array();
      for (std::int64_t n = 0; n <= s.order(); ++n) {
        if (n > 0) std::cout << ' ';
        std::cout << s.coeff(n).get_str();
        values.push_back(s.coeff(n).get_str());
      }
      std::cout << '\n';
      json items = json::array();
      items.push_back(json{{"kind", "coeff"},
                           {"name", "coefficients"},
                           {"gf", gf_text},
                           {"ring", ring.name()},
                           {"upto", upto},
                           {"values", std::move(values)}});
      write_report(out_path, command, ring.name(), upto, std::move(items), started);
      return 0;
    }

    if (c_verify->parsed()) {
      std::vector<IdentityRecord> records;
      if (catalog_path == "default") {
        records = default_catalog();
      } else {
        std::ifstream in(catalog_path);
        if (!in) throw std::invalid_argument("cannot open catalog '" + catalog_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        records = parse_catalog(buffer.str());
      }
      if (!only_name.empty()) {
        std::erase_if(records, [&](const IdentityRecord& r) { return r.name != only_name; });
        if (records.empty()) throw std::invalid_argument("unknown identity '" + only_name + "'");
      }
      std::vector<VerifyReport> reports(records.size());
      parallel_for(records.size(),
                   [&](std::size_t i) { reports[i] = verify_identity(records[i], order); });
      std::stable_sort(reports.begin(), reports.end(),
                       [](const VerifyReport& x, const VerifyReport& y) { return x.name < y.name; });
      json items = json::array();
      bool failed = false;
      std::set<std::string> rings;
      for (const VerifyReport& r : reports) {
        rings.insert(r.ring);
        items.push_back(identity_item(r));
        if (r.equal) {
          std::cout << "ok        " << r.name << "  (" << r.ring << ", order " << r.order << ")\n";
        } else {
          failed = true;
          std::cout << "MISMATCH  " << r.name << "  at index " << r.mismatch_index
                    << ": lhs=" << r.lhs_value << " rhs=" << r.rhs_value << "\n";
        }
      }
      write_report(out_path, command, rings.size() == 1 ? *rings.begin() : "mixed", order,
                   std::move(items), started);
      return failed ? 1 : 0;
    }

    if (c_pdis->parsed()) {
      const PDissection d = build_pdissection(p);
      const VerifyReport r = verify_pdissection(p, pd_order);
      json items = json::array();
      items.push_back(json{{"kind", "pdissect"},
                           {"name", r.name},
                           {"p", d.p},
                           {"order", r.order},
                           {"equal", r.equal},
                           {"mismatch_index", r.mismatch_index},
                           {"summand_count", d.summands.size()},
                           {"principal_exponent", d.principal_exponent},
                           {"excluded_k", d.excluded_k},
                           {"residue_claim", true}});
      if (r.equal) {
        std::cout << "ok        " << r.name << "  (exact, order " << r.order << ", "
                  << d.summands.size() << " summands, principal exponent "
                  << d.principal_exponent << ")\n";
      } else {
        std::cout << "MISMATCH  " << r.name << "  at index " << r.mismatch_index
                  << ": lhs=" << r.lhs_value << " rhs=" << r.rhs_value << "\n";
      }
      write_report(out_path, command, "exact", pd_order, std::move(items), started);
      return r.equal ? 0 : 1;
    }

    if (c_th1->parsed()) {
      return finish_claims(theorem1_suite(limit), out_path, command, "modular", limit, do_exact,
                           false, started);
    }

    if (c_th2->parsed()) {
      std::vector<CongruenceClaim> claims = theorem2_claims(p, alpha);
      const Series s = eval(claims.front().gf, limit, Ring::modular(27));
      for (CongruenceClaim& c : claims) c = check_claim_on(s, std::move(c));
      return finish_claims(std::move(claims), out_path, command, "mod 27", limit, do_exact, false,
                           started);
    }

    if (c_th3->parsed()) {
      return finish_claims(theorem3_suite(limit), out_path, command, "modular", limit, do_exact,
                           false, started);
    }

    if (c_quad->parsed()) {
      json items = json::array();
      bool failed = false;
      for (std::int64_t q = 5; q < pmax; ++q) {
        if (!is_prime(q)) continue;
        const QuadraticCriterionReport rep = quadratic_criterion(q);
        const bool ok = rep.legendre_minus_three != -1 || rep.only_expected;
        if (!ok) failed = true;
        json solutions = json::array();
        for (const auto& [k, m2] : rep.solutions) solutions.push_back(json::array({k, m2}));
        items.push_back(json{{"kind", "quadratic"},
                             {"name", "p=" + std::to_string(q)},
                             {"p", q},
                             {"legendre", rep.legendre_minus_three},
                             {"expected_k", rep.expected_k},
                             {"solutions", std::move(solutions)},
                             {"only_expected", rep.only_expected}});
        std::cout << (ok ? "ok        " : "VIOLATION ") << "p=" << q
                  << "  legendre=" << rep.legendre_minus_three << "  solutions="
                  << rep.solutions.size()
                  << (rep.only_expected ? "  (only the expected pair)" : "") << "\n";
      }
      write_report(out_path, command, "exact", pmax, std::move(items), started);
      return failed ? 1 : 0;
    }

    if (c_check->parsed()) {
      std::vector<CongruenceClaim> claims;
      if (!progression.empty()) {
        std::vector<std::int64_t> residues;
        parse_progression(progression, a, residues);
        for (const std::int64_t r : residues) claims.push_back(make_claim(gf_text, a, r, mod));
      } else {
        if (a < 1 || b < 0) {
          throw std::invalid_argument("either --progression or both --a and --b are required");
        }
        claims.push_back(make_claim(gf_text, a, b, mod));
      }
      const Series s = eval(claims.front().gf, limit, Ring::modular(mod));
      for (CongruenceClaim& c : claims) c = check_claim_on(s, std::move(c));
      return finish_claims(std::move(claims), out_path, command, Ring::modular(mod).name(), limit,
                           do_exact, false, started);
    }

    if (c_scan->parsed()) {
      const std::vector<std::uint64_t> moduli = parse_moduli(moduli_text);
      std::vector<CongruenceClaim> claims =
          scan(parse_expr(gf_text), amax, moduli, limit, min_hits);
      std::cout << claims.size() << " progression(s) vanish through index " << limit << "\n";
      return finish_claims(std::move(claims), out_path, command,
                           ring_of_moduli({moduli.begin(), moduli.end()}), limit, false, true,
                           started);
    }

    if (c_oracle->parsed()) {
      const std::vector<mpz_class> dp = count_dp(triple_partition_spec(), upto);
      json values = json::array();
      for (std::int64_t n = 0; n <= upto; ++n) {
        if (n > 0) std::cout << ' ';
        std::cout << dp[n].get_str();
        values.push_back(dp[n].get_str());
      }
      std::cout << '\n';
      bool agree = true;
      if (compare) {
        const std::vector<mpz_class> conv = convolution_oracle(upto);
        const Series s = eval(parse_expr(kTripleGf), upto, Ring::exact());
        for (std::int64_t n = 0; n <= upto; ++n) {
          if (dp[n] != conv[n] || dp[n] != s.coeff(n)) agree = false;
        }
        std::cout << "triple agreement to " << upto << ": " << (agree ? "agree" : "DISAGREE")
                  << "\n";
      }
      json items = json::array();
      items.push_back(json{{"kind", "oracle"},
                           {"name", "triple counts"},
                           {"upto", upto},
                           {"compared", compare},
                           {"agree", agree},
                           {"values", std::move(values)}});
      write_report(out_path, command, "exact", upto, std::move(items), started);
      return agree ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("qdissect");
  for (const std::string& s : args) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace qdissect
