#include "stablerank/cli.hpp"

#include "stablerank/ideal.hpp"
#include "stablerank/io.hpp"
#include "stablerank/tensor.hpp"
#include "stablerank/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace stablerank {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

constexpr const char* kTensorNote = "torus-restricted: upper bound on rk^G; exact for torus-optimal tensors";
constexpr const char* kIdealNote = "upper bound on rk^G";

struct Result {
  std::string value;
  json witness = json::array();
  std::vector<std::string> notes;
};

json integer_array(const IntegerVector& v) {
  json a = json::array();
  // Numbers when they fit a long, strings beyond that.
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(to_string(x));
  }
  return a;
}

void emit(const Result& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j{{"value", r.value}, {"witness", r.witness}, {"notes", r.notes}};
    out << j.dump() << '\n';
    return;
  }
  out << "value: " << r.value << '\n';
  if (!r.witness.empty()) {
    std::function<std::string(const json&)> flat = [&](const json& x) -> std::string {
      if (x.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < x.size(); ++i)
          s += (i ? " " : "") + flat(x[i]);
        return s + ")";
      }
      return x.is_string() ? x.get<std::string>() : x.dump();
    };
    out << "witness: " << flat(r.witness) << '\n';
  }
  for (const auto& n : r.notes)
    out << "note: " << n << '\n';
}

template <typename T>
const T& expect_kind(const InputDocument& doc, const std::string& path, const char* wanted) {
  if (const T* p = std::get_if<T>(&doc))
    return *p;
  throw InputError(path + ": expected a '" + wanted + "' file, got '" +
                   std::string(kind_name(doc)) + "'");
}

PolyIdeal as_poly_ideal(const InputDocument& doc, const std::string& path) {
  if (const auto* m = std::get_if<MonomialIdeal>(&doc))
    return to_poly_ideal(*m);
  if (const auto* p = std::get_if<PolyIdeal>(&doc))
    return *p;
  throw InputError(path + ": expected an 'mideal' or 'pideal' file, got '" +
                   std::string(kind_name(doc)) + "'");
}

AlphaWeights parse_alpha(const std::string& text) {
  AlphaWeights alpha;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    alpha.push_back(parse_rational(item));
  return alpha;
}

Result rank_tensor(const std::string& path, const std::string& alpha_text) {
  const auto doc = load_input(path);
  const auto& v = expect_kind<TensorSupport>(doc, path, "tensor");
  const SlopeResult r = alpha_text.empty() ? torus_rank(v) : torus_rank(v, parse_alpha(alpha_text));
  Result out{to_string(r.value), json::array(), {}};
  if (r.value.is_finite())
    for (const auto& f : split_witness(r.witness, v.order(), v.dim()))
      out.witness.push_back(integer_array(f));
  out.notes.emplace_back(kTensorNote);
  return out;
}

Result rank_symm(const std::string& path) {
  const auto doc = load_input(path);
  const auto& v = expect_kind<SymmetricSupport>(doc, path, "symm");
  const SlopeResult r = symm_torus_rank(v);
  Result out{to_string(r.value), json::array(), {}};
  if (r.value.is_finite())
    out.witness = integer_array(r.witness);
  out.notes.emplace_back(kTensorNote);
  return out;
}

Result rank_ideal(const std::string& path, const std::vector<std::string>& change_paths) {
  const PolyIdeal a = as_poly_ideal(load_input(path), path);
  std::vector<LinearChange> changes;
  for (const auto& p : change_paths) {
    LinearChange m = expect_kind<LinearChange>(load_input(p), p, "matrix");
    if (m.dim() != static_cast<std::size_t>(a.vars()))
      throw InputError(p + ": matrix dimension does not match the ideal");
    changes.push_back(std::move(m));
  }
  const ChangeRankReport report = rank_over_changes(a, changes);
  const SlopeResult& best = report.per_system[report.best];
  Result out{to_string(best.value), json::array(), {}};
  if (best.value.is_finite())
    out.witness = integer_array(best.witness);
  out.notes.emplace_back(kIdealNote);
  for (std::size_t i = 0; i < report.per_system.size(); ++i) {
    std::string label = i == 0 ? "standard parameters" : "change " + change_paths[i - 1];
    out.notes.push_back(label + ": " + to_string(report.per_system[i].value));
  }
  if (change_paths.empty() || report.best == 0)
    out.notes.emplace_back("minimum attained in standard parameters");
  else
    out.notes.push_back("minimum attained after change " + change_paths[report.best - 1]);
  return out;
}

Result lct(const std::string& path) {
  const auto doc = load_input(path);
  const auto& a = expect_kind<MonomialIdeal>(doc, path, "mideal");
  const Rational value = lct_monomial(a);
  const SlopeResult r = t_stable_rank(a);
  Result out{to_string(value), json::array(), {}};
  out.witness = integer_array(r.witness);
  out.notes.emplace_back("lct of a monomial ideal at the origin; equals its G-stable rank");
  out.notes.push_back("Newton polyhedron threshold: " + to_string(newton_threshold(a)));
  return out;
}

Result semistable(const std::string& path) {
  const auto doc = load_input(path);
  SemistabilityResult s;
  if (const auto* t = std::get_if<TensorSupport>(&doc)) {
    s = torus_semistability(*t);
  } else if (const auto* v = std::get_if<SymmetricSupport>(&doc)) {
    s = symm_torus_semistability(*v);
  } else {
    throw InputError(path + ": expected a 'tensor' or 'symm' file, got '" +
                     std::string(kind_name(doc)) + "'");
  }
  Result out{s.semistable ? "true" : "false", json::array(), {}};
  if (!s.semistable) {
    for (const auto& f : s.destabilizer)
      out.witness.push_back(integer_array(f));
    out.notes.emplace_back("witness: traceless diagonal 1-PS with positive valuation");
  }
  out.notes.emplace_back("semistability under the diagonal torus of SL");
  return out;
}

int verify(const std::string& suite, const RandomInstanceConfig& cfg, bool as_json,
           std::ostream& out) {
  const std::vector<CheckReport> reports = run_suite(suite, cfg);
  const std::vector<SuiteTally> tallies = tally(reports);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (as_json) {
    json checks = json::array();
    for (const auto& t : tallies)
      checks.push_back({{"name", t.check_name},
                        {"anchors", t.anchors},
                        {"anchors_passed", t.anchors_passed},
                        {"cases", t.cases},
                        {"cases_passed", t.cases_passed}});
    json failures = json::array();
    for (const auto& r : reports)
      if (!r.passed)
        failures.push_back({{"check", r.check_name},
                            {"case", r.case_index},
                            {"relation", r.relation},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"witness", r.witness},
                            {"note", r.note},
                            {"instance", r.instance}});
    json j{{"suite", suite},     {"seed", cfg.seed},        {"passed", ok},
           {"checks", checks},   {"failures", failures}};
    out << j.dump() << '\n';
  } else {
    for (const auto& t : tallies)
      out << t.check_name << ": anchors " << t.anchors_passed << "/" << t.anchors << ", cases "
          << t.cases_passed << "/" << t.cases << '\n';
    for (const auto& r : reports) {
      if (r.passed)
        continue;
      out << "FAIL " << r.check_name << " case " << r.case_index << ": " << r.lhs << ' '
          << r.relation << ' ' << r.rhs << " (" << r.note << ")";
      if (!r.witness.empty())
        out << " witness " << r.witness;
      out << "\n" << r.instance;
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torus-restricted G-stable ranks, semistability and monomial lct",
               "stablerank"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON object");

  std::string file;
  std::string alpha;
  std::vector<std::string> changes;
  std::string suite;
  RandomInstanceConfig cfg;

  auto* rank = app.add_subcommand("rank", "G-stable rank (torus-restricted or T-stable)");
  rank->require_subcommand(1);
  auto* rank_t = rank->add_subcommand("tensor", "rk^G_alpha of a tensor support");
  rank_t->add_option("file", file, "tensor file")->required();
  rank_t->add_option("--alpha", alpha, "comma-separated positive rationals p/q");
  auto* rank_s = rank->add_subcommand("symm", "symmetric G-stable rank of a form");
  rank_s->add_option("file", file, "symm file")->required();
  auto* rank_i = rank->add_subcommand("ideal", "T-stable rank of an ideal at the origin");
  rank_i->add_option("file", file, "mideal or pideal file")->required();
  rank_i->add_option("--change", changes, "matrix file of a linear change of parameters")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold of a monomial ideal");
  lct_cmd->add_option("file", file, "mideal file")->required();

  auto* ss_cmd = app.add_subcommand("semistable", "diagonal-torus semistability");
  ss_cmd->add_option("file", file, "tensor or symm file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a randomized check suite");
  verify_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_option("--cases", cfg.cases, "random cases per check")
      ->check(CLI::PositiveNumber);

  // --json may appear after any subcommand.
  for (CLI::App* sub : {rank, rank_t, rank_s, rank_i, lct_cmd, ss_cmd, verify_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInputError;
  }

  try {
    if (*verify_cmd)
      return verify(suite, cfg, as_json, out);
    Result r;
    if (*rank_t)
      r = rank_tensor(file, alpha);
    else if (*rank_s)
      r = rank_symm(file);
    else if (*rank_i)
      r = rank_ideal(file, changes);
    else if (*lct_cmd)
      r = lct(file);
    else
      r = semistable(file);
    emit(r, as_json, out);
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace stablerank
