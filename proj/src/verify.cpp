#include "stablerank/verify.hpp"

#include "stablerank/ideal.hpp"
#include "stablerank/io.hpp"
#include "stablerank/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace stablerank {

void RandomInstanceConfig::validate() const {
  if (cases < 1 || max_n < 1 || max_d < 1 || max_support < 1 || max_exponent < 1 ||
      max_power < 1)
    throw InputError("random instance bounds must all be >= 1");
}

namespace {

class InstanceGenerator {
public:
  InstanceGenerator(const RandomInstanceConfig& cfg, std::uint64_t salt)
      : cfg_(cfg), rng_(cfg.seed ^ salt) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
  }

  TensorSupport tensor() {
    const int d = uniform(1, cfg_.max_d);
    const int n = uniform(1, cfg_.max_n);
    const int k = uniform(1, cfg_.max_support);
    std::vector<IndexTuple> tuples;
    for (int i = 0; i < k; ++i) {
      IndexTuple t(static_cast<std::size_t>(d));
      for (auto& j : t)
        j = uniform(1, n);
      tuples.push_back(std::move(t));
    }
    dedupe(tuples);
    return TensorSupport(d, n, std::move(tuples));
  }

  SymmetricSupport symmetric() {
    const int d = uniform(1, cfg_.max_d);
    const int n = uniform(1, cfg_.max_n);
    const int k = uniform(1, cfg_.max_support);
    std::vector<Exponent> exps;
    for (int i = 0; i < k; ++i) {
      Exponent e(static_cast<std::size_t>(n));
      int sum = 0;
      do {
        sum = 0;
        for (auto& x : e) {
          x = uniform(0, d);
          sum += x;
        }
      } while (sum != d);
      exps.push_back(std::move(e));
    }
    dedupe(exps);
    return SymmetricSupport(d, n, std::move(exps));
  }

  MonomialIdeal monomial_ideal(int n) {
    const int k = uniform(1, cfg_.max_support);
    std::vector<Exponent> gens;
    for (int i = 0; i < k; ++i)
      gens.push_back(nonzero_exponent(n, cfg_.max_exponent));
    return MonomialIdeal(n, std::move(gens));
  }

  Exponent nonzero_exponent(int n, int max) {
    Exponent e(static_cast<std::size_t>(n));
    do {
      for (auto& x : e)
        x = uniform(0, max);
    } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
    return e;
  }

  IntegerVector weights(std::size_t n) {
    IntegerVector w(n);
    for (auto& x : w)
      x = uniform(0, cfg_.max_exponent);
    return w;
  }

  int n() { return uniform(1, cfg_.max_n); }
  int power() { return uniform(1, cfg_.max_power); }

private:
  template <typename T>
  static void dedupe(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const RandomInstanceConfig& cfg_;
  std::mt19937_64 rng_;
};

std::string vec_string(const IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string witness_string(const SlopeResult& r) {
  return r.value.is_infinite() ? std::string("-") : vec_string(r.witness);
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string instance_of(std::initializer_list<InputDocument> docs) {
  std::string s;
  for (const auto& d : docs)
    s += (s.empty() ? "" : kInstanceSeparator) + serialize(d);
  return s;
}

CheckReport report(std::string name, int index, std::string instance, bool passed,
                   std::string relation, std::string lhs, std::string rhs,
                   std::string witness = {}, std::string note = {}) {
  return CheckReport{std::move(name), index,          std::move(instance),
                     passed,          std::move(relation), std::move(lhs),
                     std::move(rhs),  std::move(witness),  std::move(note)};
}

// Symmetric vs multilinear rank on one symmetric support, including both
// directions of the inequality through explicit witnesses.
void symm_multi_case(const std::string& name, int index, const SymmetricSupport& v,
                     const IntegerVector* lambda_seed, std::vector<CheckReport>& out) {
  const std::string inst = instance_of({v});
  const int d = v.degree();
  const int n = v.vars();
  const TensorSupport t = expand_symmetric(v);
  const SlopeResult symm = symm_torus_rank(v);
  const SlopeResult multi = torus_rank(t);
  out.push_back(report(name, index, inst, symm.value == multi.value, "=", to_string(symm.value),
                       to_string(multi.value),
                       "symm " + witness_string(symm) + " multi " + witness_string(multi),
                       "symm_torus_rank vs torus_rank(expand_symmetric)"));

  // >=: the symmetric witness on every factor has the same multilinear slope.
  {
    WeightAssignment diag(static_cast<std::size_t>(d), symm.witness);
    const Integer val = torus_valuation(t, diag);
    const Integer sum = std::accumulate(symm.witness.begin(), symm.witness.end(), Integer(0));
    const Rational slope = Rational(Integer(d) * sum) / Rational(val);
    out.push_back(report(name, index, inst, ExtendedRational(slope) == symm.value, "=",
                         to_string(slope), to_string(symm.value), witness_string(symm),
                         "multilinear slope of the diagonal symmetric witness"));
  }

  // <=: combining the multilinear witness gives a symmetric slope no larger.
  {
    const WeightAssignment lambda = split_witness(multi.witness, d, n);
    const IntegerVector gamma = combine_one_ps(lambda);
    const Integer val = symmetric_valuation(v, gamma);
    const Integer sum = std::accumulate(gamma.begin(), gamma.end(), Integer(0));
    const Rational slope = Rational(Integer(d) * sum) / Rational(val);
    out.push_back(report(name, index, inst, ExtendedRational(slope) <= multi.value, "<=",
                         to_string(slope), to_string(multi.value), vec_string(gamma),
                         "symmetric slope of the combined multilinear witness"));
  }

  // The combination inequality on arbitrary weights.
  if (lambda_seed) {
    WeightAssignment lambda = split_witness(*lambda_seed, d, n);
    const IntegerVector gamma = combine_one_ps(lambda);
    const Integer lhs = symmetric_valuation(v, gamma);
    const Integer rhs = Integer(d) * torus_valuation(t, lambda);
    out.push_back(report(name, index, inst, lhs >= rhs, ">=", to_string(lhs), to_string(rhs),
                         vec_string(*lambda_seed), "val(gamma.v) vs d*val(lambda.v)"));
  }
}

bool destabilizer_valid(const std::vector<IntegerVector>& rows,
                        const std::vector<IntegerVector>& lambda) {
  for (const auto& l : lambda)
    if (std::accumulate(l.begin(), l.end(), Integer(0)) != 0)
      return false;
  IntegerVector flat;
  for (const auto& l : lambda)
    flat.insert(flat.end(), l.begin(), l.end());
  for (const auto& r : rows) {
    Integer s = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
      s += r[j] * flat[j];
    if (sgn(s) <= 0)
      return false;
  }
  return true;
}

void tensor_semistable_case(const std::string& name, int index, const TensorSupport& v,
                            std::vector<CheckReport>& out) {
  const std::string inst = instance_of({v});
  const SemistabilityResult ss = torus_semistability(v);
  const SlopeResult rank = torus_rank(v);
  const bool full = rank.value == ExtendedRational(Rational(v.dim()));
  out.push_back(report(name, index, inst, ss.semistable == full, "iff", bool_string(ss.semistable),
                       bool_string(full), witness_string(rank),
                       "torus-semistable vs torus_rank = n (rank " + to_string(rank.value) + ")"));
  if (!ss.semistable) {
    std::vector<IntegerVector> rows;
    const auto n = static_cast<std::size_t>(v.dim());
    for (const auto& t : v.tuples()) {
      IntegerVector r(n * t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        r[i * n + static_cast<std::size_t>(t[i] - 1)] = 1;
      rows.push_back(std::move(r));
    }
    std::string w;
    for (const auto& l : ss.destabilizer)
      w += vec_string(l);
    const bool ok = destabilizer_valid(rows, ss.destabilizer);
    out.push_back(report(name, index, inst, ok, "=", bool_string(ok), "true", w,
                         "destabilizer is traceless with positive valuation"));
  }
}

void symm_semistable_case(const std::string& name, int index, const SymmetricSupport& v,
                          std::vector<CheckReport>& out) {
  const std::string inst = instance_of({v});
  const SemistabilityResult ss = symm_torus_semistability(v);
  const SlopeResult rank = symm_torus_rank(v);
  const bool full = rank.value == ExtendedRational(Rational(v.vars()));
  out.push_back(report(name, index, inst, ss.semistable == full, "iff", bool_string(ss.semistable),
                       bool_string(full), witness_string(rank),
                       "symmetric semistable vs symm_torus_rank = n (rank " +
                           to_string(rank.value) + ")"));
  const bool multi = is_torus_semistable(expand_symmetric(v));
  out.push_back(report(name, index, inst, ss.semistable == multi, "iff", bool_string(ss.semistable),
                       bool_string(multi), {}, "SL(V) vs SL(V)^d semistability at the torus"));
  if (!ss.semistable) {
    std::vector<IntegerVector> rows;
    for (const auto& m : v.exponents())
      rows.emplace_back(m.begin(), m.end());
    const bool ok = destabilizer_valid(rows, ss.destabilizer);
    out.push_back(report(name, index, inst, ok, "=", bool_string(ok), "true",
                         vec_string(ss.destabilizer.front()),
                         "destabilizer is traceless with positive valuation"));
  }
}

void monomial_lct_case(const std::string& name, int index, const MonomialIdeal& a,
                       std::vector<CheckReport>& out, const Rational* expected = nullptr) {
  const std::string inst = instance_of({a});
  const SlopeResult rank = t_stable_rank(a);
  const Rational nu = newton_threshold(a);
  out.push_back(report(name, index, inst, rank.value == ExtendedRational(nu), "=",
                       to_string(rank.value), to_string(nu), witness_string(rank),
                       "t_stable_rank vs Newton polyhedron threshold"));
  if (rank.value.is_finite()) {
    const Rational& r = rank.value.value();
    const bool at = newton_membership(a, r);
    const Rational above = r + r / 1000;
    const bool beyond = newton_membership(a, above);
    out.push_back(report(name, index, inst, at && !beyond, "=",
                         bool_string(at) + "," + bool_string(beyond), "true,false", {},
                         "newton_membership at rank and at rank*(1+1/1000)"));
  }
  if (expected)
    out.push_back(report(name, index, inst, ExtendedRational(lct_monomial(a)) == *expected, "=",
                         to_string(lct_monomial(a)), to_string(*expected), {},
                         "lct_monomial vs known value"));
}

void ideal_props_case(const std::string& name, int index, const MonomialIdeal& a,
                      const MonomialIdeal& b, unsigned r, const MonomialIdeal& sub,
                      const WeightVector& lambda, std::vector<CheckReport>& out) {
  const std::string inst = instance_of({a, b, sub});
  const SlopeResult ra = t_stable_rank(a);
  const SlopeResult rb = t_stable_rank(b);

  const SlopeResult rp = t_stable_rank(ideal_power(a, r));
  const Rational scaled = ra.value.value() / r;
  out.push_back(report(name, index, inst, rp.value == ExtendedRational(scaled), "=",
                       to_string(rp.value), to_string(scaled), witness_string(rp),
                       "rank(a^" + std::to_string(r) + ") vs rank(a)/" + std::to_string(r)));

  const SlopeResult rab = t_stable_rank(ideal_product(a, b));
  const Rational inv_ab = 1 / rab.value.value();
  const Rational inv_sum = 1 / ra.value.value() + 1 / rb.value.value();
  out.push_back(report(name, index, inst, inv_ab <= inv_sum, "<=", to_string(inv_ab),
                       to_string(inv_sum), witness_string(rab), "1/rank(ab) vs 1/rank(a)+1/rank(b)"));

  const bool contained = monomial_subset(sub, a);
  const SlopeResult rs = t_stable_rank(sub);
  out.push_back(report(name, index, inst, contained && rs.value <= ra.value, "<=",
                       to_string(rs.value), to_string(ra.value), witness_string(rs),
                       "rank(c) vs rank(a) for c contained in a"));

  const SlopeResult rsum = t_stable_rank(ideal_sum(a, b));
  const Rational bound = ra.value.value() + rb.value.value();
  out.push_back(report(name, index, inst, rsum.value <= ExtendedRational(bound), "<=",
                       to_string(rsum.value), to_string(bound), witness_string(rsum),
                       "rank(a+b) vs rank(a)+rank(b); monomial case only, the general "
                       "statement is a conjecture and is not asserted"));

  if (!lambda.empty()) {
    const Integer lhs = ideal_order(ideal_product(a, b), lambda);
    const Integer rhs = ideal_order(a, lambda) + ideal_order(b, lambda);
    out.push_back(report(name, index, inst, lhs == rhs, "=", to_string(lhs), to_string(rhs),
                         vec_string(lambda), "ord(ab) vs ord(a)+ord(b)"));
  }
}

} // namespace

std::vector<CheckReport> check_symm_equals_multi(const RandomInstanceConfig& cfg) {
  cfg.validate();
  const std::string name = "symm_equals_multi";
  std::vector<CheckReport> out;
  symm_multi_case(name, -1, SymmetricSupport(3, 2, {{2, 1}}), nullptr, out);
  symm_multi_case(name, -1, SymmetricSupport(3, 1, {{3}}), nullptr, out);
  InstanceGenerator gen(cfg, 0x53594d4dULL);
  for (int i = 0; i < cfg.cases; ++i) {
    const SymmetricSupport v = gen.symmetric();
    const IntegerVector lambda =
        gen.weights(static_cast<std::size_t>(v.degree()) * static_cast<std::size_t>(v.vars()));
    symm_multi_case(name, i, v, &lambda, out);
  }
  return out;
}

std::vector<CheckReport> check_semistable_iff_rank(const RandomInstanceConfig& cfg) {
  cfg.validate();
  const std::string name = "semistable_iff_rank";
  std::vector<CheckReport> out;
  tensor_semistable_case(name, -1, TensorSupport(3, 2, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}), out);
  tensor_semistable_case(name, -1, TensorSupport(2, 2, {{1, 1}, {2, 2}}), out);
  tensor_semistable_case(name, -1, TensorSupport(2, 2, {{1, 1}}), out);
  symm_semistable_case(name, -1, SymmetricSupport(3, 2, {{2, 1}}), out);
  InstanceGenerator gen(cfg, 0x53454d49ULL);
  for (int i = 0; i < cfg.cases; ++i) {
    tensor_semistable_case(name, i, gen.tensor(), out);
    symm_semistable_case(name, i, gen.symmetric(), out);
  }
  return out;
}

std::vector<CheckReport> check_monomial_lct(const RandomInstanceConfig& cfg) {
  cfg.validate();
  const std::string name = "monomial_lct";
  std::vector<CheckReport> out;
  const Rational seven_twelfths(7, 12);
  monomial_lct_case(name, -1, MonomialIdeal(2, {{3, 0}, {0, 4}}), out, &seven_twelfths);
  const Rational one(1);
  monomial_lct_case(name, -1, MonomialIdeal(1, {{1}}), out, &one);
  monomial_lct_case(name, -1, MonomialIdeal(3, {{2, 1, 0}, {0, 2, 1}, {1, 0, 2}}), out, &one);
  InstanceGenerator gen(cfg, 0x4c4354ULL);
  for (int i = 0; i < cfg.cases; ++i)
    monomial_lct_case(name, i, gen.monomial_ideal(gen.n()), out);
  return out;
}

std::vector<CheckReport> check_ideal_props(const RandomInstanceConfig& cfg) {
  cfg.validate();
  const std::string name = "ideal_props";
  std::vector<CheckReport> out;
  {
    const MonomialIdeal xy(2, {{1, 0}, {0, 1}});
    ideal_props_case(name, -1, xy, xy, 2, ideal_product(xy, xy), {}, out);
  }
  {
    const MonomialIdeal x(2, {{1, 0}});
    const MonomialIdeal y(2, {{0, 1}});
    ideal_props_case(name, -1, x, y, 1, ideal_product(x, y), IntegerVector{1, 2}, out);
  }
  {
    const MonomialIdeal x(1, {{1}});
    const MonomialIdeal x2(1, {{2}});
    ideal_props_case(name, -1, x, x, 1, x2, {}, out);
  }
  InstanceGenerator gen(cfg, 0x50524f50ULL);
  for (int i = 0; i < cfg.cases; ++i) {
    const int n = gen.n();
    const MonomialIdeal a = gen.monomial_ideal(n);
    const MonomialIdeal b = gen.monomial_ideal(n);
    const auto r = static_cast<unsigned>(gen.power());
    // c is contained in a: each generator of a times a random monomial.
    std::vector<Exponent> shifted;
    for (const auto& g : a.generators()) {
      Exponent e = g;
      for (auto& x : e)
        x += gen.uniform(0, 2);
      shifted.push_back(std::move(e));
    }
    const MonomialIdeal c(n, std::move(shifted));
    const WeightVector lambda = gen.weights(static_cast<std::size_t>(n));
    ideal_props_case(name, i, a, b, r, c, lambda, out);
  }
  return out;
}

std::vector<CheckReport> check_lct_leq_rank_anchor() {
  const std::string name = "lct_leq_rank";
  std::vector<CheckReport> out;
  {
    SparsePolynomial f(3);
    f.add_term({2, 0, 0}, 1);
    f.add_term({0, 2, 0}, 1);
    f.add_term({0, 0, 2}, 1);
    const PolyIdeal a(3, {f});
    const SlopeResult rank = t_stable_rank(a);
    const Rational literature_lct = 1;
    const std::string inst = instance_of({a});
    out.push_back(report(name, -1, inst, rank.value == ExtendedRational(Rational(3, 2)), "=",
                         to_string(rank.value), "3/2", witness_string(rank),
                         "rank of x1^2+x2^2+x3^2"));
    out.push_back(report(name, -1, inst, ExtendedRational(literature_lct) < rank.value, "<",
                         to_string(literature_lct), to_string(rank.value), witness_string(rank),
                         "lct = 1 is a literature constant, not computed here"));
  }
  for (int u : {1, 3}) {
    const MonomialIdeal a(1, {{u}});
    const SlopeResult rank = t_stable_rank(a);
    const Rational lct = lct_monomial(a);
    out.push_back(report(name, -1, instance_of({a}),
                         rank.value == ExtendedRational(lct) && lct == Rational(1, u), "=",
                         to_string(lct), to_string(rank.value), witness_string(rank),
                         "lct_monomial vs rank of x^" + std::to_string(u)));
  }
  return out;
}

std::vector<SuiteTally> tally(const std::vector<CheckReport>& reports) {
  std::vector<SuiteTally> out;
  // (check, case) -> all passed, in first-seen order.
  std::vector<std::pair<std::string, int>> keys;
  std::map<std::pair<std::string, int>, bool> ok;
  std::map<std::string, std::pair<int, int>> anchors; // total, passed
  for (const auto& r : reports) {
    if (std::none_of(out.begin(), out.end(),
                     [&](const SuiteTally& t) { return t.check_name == r.check_name; }))
      out.push_back(SuiteTally{r.check_name});
    if (r.case_index < 0) {
      auto& [total, passed] = anchors[r.check_name];
      ++total;
      passed += r.passed ? 1 : 0;
      continue;
    }
    auto key = std::make_pair(r.check_name, r.case_index);
    auto [it, inserted] = ok.try_emplace(key, true);
    if (inserted)
      keys.push_back(key);
    it->second = it->second && r.passed;
  }
  for (auto& t : out) {
    t.anchors = anchors[t.check_name].first;
    t.anchors_passed = anchors[t.check_name].second;
    for (const auto& key : keys)
      if (key.first == t.check_name) {
        ++t.cases;
        t.cases_passed += ok[key] ? 1 : 0;
      }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symm-multi",  "semistable", "monomial-lct",
                                              "ideal-props", "lct-anchor", "all"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const RandomInstanceConfig& cfg) {
  std::vector<CheckReport> out;
  auto append = [&out](std::vector<CheckReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  const bool all = name == "all";
  if (all || name == "symm-multi")
    append(check_symm_equals_multi(cfg));
  if (all || name == "semistable")
    append(check_semistable_iff_rank(cfg));
  if (all || name == "monomial-lct")
    append(check_monomial_lct(cfg));
  if (all || name == "ideal-props")
    append(check_ideal_props(cfg));
  if (all || name == "lct-anchor")
    append(check_lct_leq_rank_anchor());
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw InputError("unknown verify suite '" + name + "'");
  return out;
}

} // namespace stablerank
