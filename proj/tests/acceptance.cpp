// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact rational equalities.

#include "stablerank/cli.hpp"
#include "stablerank/ideal.hpp"
#include "stablerank/lp.hpp"
#include "stablerank/tensor.hpp"
#include "stablerank/verify.hpp"

#include <json.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace stablerank;

const std::string kData = STABLERANK_DATA_DIR;

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Runs the CLI with --json and returns the "value" field, or "" on error.
std::string cli_value(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  std::ostringstream out;
  std::ostringstream err;
  if (run(args, out, err) != 0) {
    std::cerr << "  cli error: " << err.str();
    return "";
  }
  return nlohmann::json::parse(out.str()).at("value").get<std::string>();
}

bool expect(bool ok, const std::string& what) {
  if (!ok)
    std::cerr << "  mismatch: " << what << '\n';
  return ok;
}

bool w_tensor() {
  const std::string t = cli_value({"rank", "tensor", kData + "/w_tensor.txt"});
  const std::string s = cli_value({"rank", "symm", kData + "/w_form.txt"});
  return expect(t == "3/2", "rank tensor gave " + t) & expect(s == "3/2", "rank symm gave " + s);
}

bool monomial_anchor() {
  const std::string l = cli_value({"lct", kData + "/cyclic_ideal.txt"});
  const std::string r = cli_value({"rank", "ideal", kData + "/cyclic_ideal.txt"});
  return expect(l == "1", "lct gave " + l) & expect(r == "1", "rank ideal gave " + r);
}

bool diagonal_family() {
  std::mt19937_64 rng(2024);
  bool ok = true;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = draw(rng, 1, 4);
    std::vector<Exponent> gens;
    Rational expected = 0;
    for (int i = 0; i < n; ++i) {
      const int u = draw(rng, 1, 9);
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = u;
      gens.push_back(e);
      expected += Rational(1) / u;
    }
    const Rational got = lct_monomial(MonomialIdeal(n, gens));
    ok &= expect(got == expected, "lct " + to_string(got) + " vs " + to_string(expected));
  }
  return ok;
}

bool coordinate_change() {
  const std::string plain = cli_value({"rank", "ideal", kData + "/square.txt"});
  const std::string changed =
      cli_value({"rank", "ideal", kData + "/square.txt", "--change", kData + "/sum_diff.txt"});
  const std::string cusp = cli_value({"rank", "ideal", kData + "/cusp_free.txt"});
  return expect(plain == "1", "standard rank " + plain) &
         expect(changed == "1/2", "changed rank " + changed) &
         expect(cusp == "3/2", "x + y^2 rank " + cusp);
}

// rk((x_1^d + ... + x_n^d)) = n/d. The symmetric rank of the same form carries
// the extra factor d, so it must equal n.
bool fermat_forms() {
  bool ok = true;
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 5; ++d) {
      SparsePolynomial f(n);
      for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add_term(e, 1);
      }
      const ExtendedRational rank = t_stable_rank(PolyIdeal(n, {f})).value;
      const ExtendedRational symm = symm_torus_rank(symmetric_support_of(f)).value;
      const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      ok &= expect(rank == ExtendedRational(Rational(n) / d), tag + " rank " + to_string(rank));
      ok &= expect(symm == ExtendedRational(Rational(d) * (Rational(n) / d)),
                   tag + " symmetric rank " + to_string(symm));
    }
  return ok;
}

bool theorem_suites() {
  bool ok = true;
  for (std::uint64_t seed : {7ULL, 42ULL}) {
    RandomInstanceConfig cfg;
    cfg.seed = seed;
    cfg.cases = 200;
    cfg.max_n = 3;
    cfg.max_d = 4;
    cfg.max_support = 5;
    cfg.max_exponent = 6;
    for (const char* suite : {"symm-multi", "semistable", "monomial-lct", "ideal-props"}) {
      for (const auto& t : tally(run_suite(suite, cfg))) {
        const bool pass = t.cases == 200 && t.cases_passed == 200 && t.anchors_passed == t.anchors;
        ok &= expect(pass, std::string(suite) + " seed " + std::to_string(seed) + ": " +
                               std::to_string(t.cases_passed) + "/" + std::to_string(t.cases) +
                               " cases, " + std::to_string(t.anchors_passed) + "/" +
                               std::to_string(t.anchors) + " anchors");
      }
    }
  }
  return ok;
}

bool lp_oracle() {
  std::mt19937_64 rng(500);
  bool ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = draw(rng, 1, 4);
    const int k = draw(rng, 1, 4);
    RationalVector cost;
    for (int j = 0; j < m; ++j)
      cost.push_back(Rational(draw(rng, 1, 9)) / draw(rng, 1, 4));
    std::vector<IntegerVector> rows;
    for (int r = 0; r < k; ++r) {
      IntegerVector row;
      for (int j = 0; j < m; ++j)
        row.emplace_back(draw(rng, 0, 6));
      rows.push_back(row);
    }
    const LinearProgram prob = slope_program(cost, rows);
    const LpOutcome lp = lp_minimize(prob);
    const auto oracle = oracle_minimum_over_vertices(prob);
    if (!oracle) {
      ok &= expect(lp.status == LpStatus::infeasible, "trial " + std::to_string(trial) +
                                                          ": oracle infeasible, simplex not");
      continue;
    }
    ok &= expect(lp.status == LpStatus::optimal && lp.value == *oracle,
                 "trial " + std::to_string(trial) + ": simplex " + to_string(lp.value) +
                     " vs oracle " + to_string(*oracle));
  }
  return ok;
}

bool lct_below_rank() {
  const std::string r = cli_value({"rank", "ideal", kData + "/sum_of_squares.txt"});
  const Rational lct_value = 1;
  return expect(r == "3/2", "rank " + r) &&
         expect(lct_value < parse_rational(r), "lct 1 is not below " + r);
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"1 W-tensor rank 3/2 (tensor and symmetric)", w_tensor},
      {"2 monomial anchor lct = rank = 1", monomial_anchor},
      {"3 diagonal family lct = sum 1/u_i", diagonal_family},
      {"4 coordinate change 1 -> 1/2, x + y^2 -> 3/2", coordinate_change},
      {"5 Fermat forms rank n/d", fermat_forms},
      {"6 theorem suites 200/200 at seeds 7, 42", theorem_suites},
      {"7 simplex agrees with vertex oracle on 500 programs", lp_oracle},
      {"8 sum of squares rank 3/2 > lct 1", lct_below_rank},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << '\n';
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name << std::endl;
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
