#include "stablerank/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stablerank {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j])
      return false;
  return true;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    out[j] = a[j] + b[j];
  return out;
}

Integer pairing(const Exponent& u, const WeightVector& lambda) {
  Integer s = 0;
  for (std::size_t j = 0; j < u.size(); ++j)
    s += lambda[j] * u[j];
  return s;
}

void check_weights(int vars, const WeightVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(vars))
    throw InputError("weight vector has " + std::to_string(lambda.size()) + " entries, expected " +
                     std::to_string(vars));
  for (const auto& l : lambda)
    if (sgn(l) < 0)
      throw InputError("weights must be nonnegative");
}

// Visits every multiset of size r drawn from [0, k) as a nondecreasing index
// sequence.
template <typename F>
void for_each_multiset(std::size_t k, unsigned r, F&& visit) {
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    visit(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == k - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j)
      idx[j] = idx[i - 1];
  }
}

std::vector<IntegerVector> to_rows(const std::vector<Exponent>& exps) {
  std::vector<IntegerVector> rows;
  rows.reserve(exps.size());
  for (const auto& e : exps)
    rows.emplace_back(e.begin(), e.end());
  return rows;
}

} // namespace

// SparsePolynomial

SparsePolynomial::SparsePolynomial(int vars) : vars_(vars) {
  if (vars_ < 1)
    throw InputError("number of variables must be >= 1");
}

SparsePolynomial::SparsePolynomial(int vars, const TermMap& terms) : SparsePolynomial(vars) {
  for (const auto& [e, c] : terms)
    add_term(e, c);
}

SparsePolynomial SparsePolynomial::monomial(int vars, const Exponent& e, const Rational& c) {
  SparsePolynomial p(vars);
  p.add_term(e, c);
  return p;
}

SparsePolynomial SparsePolynomial::constant(int vars, const Rational& c) {
  return monomial(vars, Exponent(static_cast<std::size_t>(vars), 0), c);
}

void SparsePolynomial::check_exponent(const Exponent& e) const {
  if (e.size() != static_cast<std::size_t>(vars_))
    throw InputError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                     std::to_string(vars_));
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    throw InputError("negative exponent");
}

bool SparsePolynomial::has_constant_term() const {
  return !terms_.empty() && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                        [](int x) { return x == 0; });
}

bool SparsePolynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == degree;
  });
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  check_exponent(e);
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  if (other.vars_ != vars_)
    throw InputError("polynomials in different numbers of variables");
  SparsePolynomial out = *this;
  for (const auto& [e, c] : other.terms_)
    out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  if (other.vars_ != vars_)
    throw InputError("polynomials in different numbers of variables");
  SparsePolynomial out(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_)
      out.add_term(add(e1, e2), c1 * c2);
  return out;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial out(vars_);
  for (const auto& [e, k] : terms_)
    out.add_term(e, k * c);
  return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned r) const {
  SparsePolynomial out = constant(vars_, 1);
  SparsePolynomial base = *this;
  while (r > 0) {
    if (r & 1U)
      out = out * base;
    r >>= 1U;
    if (r > 0)
      base = base * base;
  }
  return out;
}

std::string to_string(const SparsePolynomial& f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first reads more naturally.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    first = false;
    Rational mag = abs(c);
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || is_const)
      os << to_string(mag) << (is_const ? "" : "*");
    bool first_var = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0)
        continue;
      if (!first_var)
        os << "*";
      first_var = false;
      os << "x" << (j + 1);
      if (e[j] > 1)
        os << "^" << e[j];
    }
  }
  return os.str();
}

// Ideals

MonomialIdeal::MonomialIdeal(int vars, std::vector<Exponent> generators) : vars_(vars) {
  if (vars_ < 1)
    throw InputError("number of variables must be >= 1");
  if (generators.empty())
    throw InputError("monomial ideal has no generators");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(vars_))
      throw InputError("generator has " + std::to_string(g.size()) + " exponents, expected " +
                       std::to_string(vars_));
    if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; }))
      throw InputError("negative exponent");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool redundant = std::any_of(generators.begin(), generators.end(),
                                 [&](const Exponent& h) { return h != g && divides(h, g); });
    if (!redundant)
      generators_.push_back(g);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const Exponent& g) {
    return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
  });
}

PolyIdeal::PolyIdeal(int vars, std::vector<SparsePolynomial> generators) : vars_(vars) {
  for (auto& g : generators) {
    if (g.vars() != vars_)
      throw InputError("generator in " + std::to_string(g.vars()) + " variables, expected " +
                       std::to_string(vars_));
    if (g.is_zero() || std::find(generators_.begin(), generators_.end(), g) != generators_.end())
      continue;
    generators_.push_back(std::move(g));
  }
  if (generators_.empty())
    throw InputError("zero ideal: no nonzero generator");
}

PolyIdeal to_poly_ideal(const MonomialIdeal& a) {
  std::vector<SparsePolynomial> gens;
  for (const auto& g : a.generators())
    gens.push_back(SparsePolynomial::monomial(a.vars(), g));
  return PolyIdeal(a.vars(), std::move(gens));
}

// Linear changes

LinearChange::LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0)
    throw InputError("empty matrix");
  for (const auto& row : matrix_)
    if (row.size() != n)
      throw InputError("matrix is not square");
  if (sgn(determinant(matrix_)) == 0)
    throw InputError("singular matrix: not a change of local parameters");
}

LinearChange LinearChange::inverse() const { return LinearChange(*stablerank::inverse(matrix_)); }

SparsePolynomial apply_linear_change(const SparsePolynomial& f, const LinearChange& m) {
  const auto n = static_cast<std::size_t>(f.vars());
  if (m.dim() != n)
    throw InputError("matrix dimension does not match the number of variables");
  // image[i] = sum_j M[j][i] y_j; powers[i][k] = image[i]^k, built lazily.
  std::vector<std::vector<SparsePolynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparsePolynomial image(f.vars());
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      image.add_term(e, m.matrix()[j][i]);
    }
    powers[i].push_back(SparsePolynomial::constant(f.vars(), 1));
    powers[i].push_back(std::move(image));
  }
  auto power = [&](std::size_t i, int k) -> const SparsePolynomial& {
    auto& p = powers[i];
    while (p.size() <= static_cast<std::size_t>(k))
      p.push_back(p.back() * p[1]);
    return p[static_cast<std::size_t>(k)];
  };

  SparsePolynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(f.vars(), c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0)
        term = term * power(i, e[i]);
    out = out + term;
  }
  return out;
}

PolyIdeal apply_linear_change(const PolyIdeal& a, const LinearChange& m) {
  std::vector<SparsePolynomial> gens;
  for (const auto& g : a.generators())
    gens.push_back(apply_linear_change(g, m));
  return PolyIdeal(a.vars(), std::move(gens));
}

// Orders and ranks

std::optional<Integer> weighted_order(const SparsePolynomial& f, const WeightVector& lambda) {
  check_weights(f.vars(), lambda);
  std::optional<Integer> best;
  for (const auto& [e, c] : f.terms()) {
    Integer s = pairing(e, lambda);
    if (!best || s < *best)
      best = std::move(s);
  }
  return best;
}

Integer ideal_order(const PolyIdeal& a, const WeightVector& lambda) {
  std::optional<Integer> best;
  for (const auto& g : a.generators()) {
    auto v = weighted_order(g, lambda);
    if (v && (!best || *v < *best))
      best = std::move(v);
  }
  return *best;
}

Integer ideal_order(const MonomialIdeal& a, const WeightVector& lambda) {
  check_weights(a.vars(), lambda);
  std::optional<Integer> best;
  for (const auto& g : a.generators()) {
    Integer s = pairing(g, lambda);
    if (!best || s < *best)
      best = std::move(s);
  }
  return *best;
}

SlopeResult t_stable_rank(const PolyIdeal& a) {
  std::vector<Exponent> exps;
  for (const auto& g : a.generators())
    for (const auto& [e, c] : g.terms())
      exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  RationalVector cost(static_cast<std::size_t>(a.vars()), Rational(1));
  return minimize_slope(cost, to_rows(exps));
}

SlopeResult t_stable_rank(const MonomialIdeal& a) {
  RationalVector cost(static_cast<std::size_t>(a.vars()), Rational(1));
  return minimize_slope(cost, to_rows(a.generators()));
}

ChangeRankReport rank_over_changes(const PolyIdeal& a, const std::vector<LinearChange>& changes) {
  ChangeRankReport report;
  report.per_system.push_back(t_stable_rank(a));
  for (const auto& m : changes) {
    report.per_system.push_back(t_stable_rank(apply_linear_change(a, m)));
    if (report.per_system.back().value < report.per_system[report.best].value)
      report.best = report.per_system.size() - 1;
  }
  return report;
}

// Newton polyhedron

bool newton_membership(const MonomialIdeal& a, const Rational& nu) {
  if (sgn(nu) <= 0)
    throw InputError("nu must be positive");
  // theta >= 0, sum theta = 1, sum theta_i l_i <= (1/nu, ..., 1/nu).
  const std::size_t r = a.generators().size();
  const auto n = static_cast<std::size_t>(a.vars());
  const Rational bound = 1 / nu;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(r);
    for (std::size_t i = 0; i < r; ++i)
      row[i] = -a.generators()[i][j];
    rows.push_back(std::move(row));
    rhs.push_back(-bound);
  }
  std::vector<RationalVector> eq{RationalVector(r, Rational(1))};
  return lp_feasible(rows, rhs, eq, RationalVector{Rational(1)}).feasible;
}

Rational newton_threshold(const MonomialIdeal& a) {
  if (a.is_unit())
    throw InputError("lct undefined: P not in V(a)");
  // Variables (theta_1..theta_r, t): min t s.t. t - sum theta_i l_i[j] >= 0,
  // sum theta = 1. The least t with t*(1..1) in P(a) is 1/lct.
  const std::size_t r = a.generators().size();
  const auto n = static_cast<std::size_t>(a.vars());
  LinearProgram prob;
  prob.objective.assign(r + 1, Rational(0));
  prob.objective[r] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(r + 1);
    for (std::size_t i = 0; i < r; ++i)
      row[i] = -a.generators()[i][j];
    row[r] = 1;
    prob.rows.push_back(std::move(row));
    prob.rhs.emplace_back(0);
  }
  RationalVector sum(r + 1, Rational(1));
  sum[r] = 0;
  prob.equality_rows.push_back(std::move(sum));
  prob.equality_rhs.emplace_back(1);
  const LpOutcome out = lp_minimize(prob);
  if (out.status != LpStatus::optimal || sgn(out.value) <= 0)
    throw std::logic_error("Newton polyhedron program did not reach a positive optimum");
  return 1 / out.value;
}

Rational lct_monomial(const MonomialIdeal& a) {
  if (a.is_unit())
    throw InputError("lct undefined: P not in V(a)");
  const SlopeResult rank = t_stable_rank(a);
  const Rational via_newton = newton_threshold(a);
  if (!(rank.value == ExtendedRational(via_newton)))
    throw std::logic_error("lct mismatch: rank " + to_string(rank.value) + " vs Newton " +
                           to_string(via_newton));
  return via_newton;
}

// Ideal operations

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned r) {
  if (r == 0)
    throw InputError("ideal power must be >= 1");
  const auto& g = a.generators();
  std::vector<Exponent> out;
  for_each_multiset(g.size(), r, [&](const std::vector<std::size_t>& idx) {
    Exponent e(static_cast<std::size_t>(a.vars()), 0);
    for (std::size_t i : idx)
      e = add(e, g[i]);
    out.push_back(std::move(e));
  });
  return MonomialIdeal(a.vars(), std::move(out));
}

PolyIdeal ideal_power(const PolyIdeal& a, unsigned r) {
  if (r == 0)
    throw InputError("ideal power must be >= 1");
  const auto& g = a.generators();
  std::vector<SparsePolynomial> out;
  for_each_multiset(g.size(), r, [&](const std::vector<std::size_t>& idx) {
    SparsePolynomial p = SparsePolynomial::constant(a.vars(), 1);
    for (std::size_t i : idx)
      p = p * g[i];
    out.push_back(std::move(p));
  });
  return PolyIdeal(a.vars(), std::move(out));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw InputError("ideals in different numbers of variables");
  std::vector<Exponent> out;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators())
      out.push_back(add(x, y));
  return MonomialIdeal(a.vars(), std::move(out));
}

PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b) {
  if (a.vars() != b.vars())
    throw InputError("ideals in different numbers of variables");
  std::vector<SparsePolynomial> out;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators())
      out.push_back(x * y);
  return PolyIdeal(a.vars(), std::move(out));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw InputError("ideals in different numbers of variables");
  std::vector<Exponent> out = a.generators();
  out.insert(out.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(out));
}

bool monomial_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars())
    throw InputError("ideals in different numbers of variables");
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Exponent& g) {
    return std::any_of(b.generators().begin(), b.generators().end(),
                       [&](const Exponent& h) { return divides(h, g); });
  });
}

SymmetricSupport symmetric_support_of(const SparsePolynomial& form) {
  if (form.is_zero())
    throw InputError("zero form has no support");
  const auto& first = form.terms().begin()->first;
  const int d = std::accumulate(first.begin(), first.end(), 0);
  if (d < 1 || !form.is_homogeneous(d))
    throw InputError("not a homogeneous form of positive degree");
  std::vector<Exponent> exps;
  for (const auto& [e, c] : form.terms())
    exps.push_back(e);
  return SymmetricSupport(d, form.vars(), std::move(exps));
}

} // namespace stablerank
