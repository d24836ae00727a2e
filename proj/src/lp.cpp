#include "stablerank/lp.hpp"

#include "stablerank/linalg.hpp"

#include <algorithm>
#include <string>

namespace stablerank {

void LinearProgram::validate() const {
  const std::size_t m = objective.size();
  if (m == 0)
    throw InputError("linear program has no variables");
  if (rows.size() != rhs.size())
    throw InputError("linear program: " + std::to_string(rows.size()) + " rows but " +
                     std::to_string(rhs.size()) + " right-hand sides");
  if (equality_rows.size() != equality_rhs.size())
    throw InputError("linear program: equality rows and right-hand sides differ in count");
  for (const auto& r : rows)
    if (r.size() != m)
      throw InputError("linear program: ragged constraint row");
  for (const auto& r : equality_rows)
    if (r.size() != m)
      throw InputError("linear program: ragged equality row");
}

namespace {

// Dense simplex tableau in equality form. Column layout:
//   [0, m)                 structural variables
//   [m, m + s)             surplus variables, one per >= row
//   [m + s, m + s + r)     artificial variables, one per row
// The last entry of every row holds the right-hand side. The cost row holds
// reduced costs, and its last entry is minus the current objective value.
class Tableau {
public:
  Tableau(const std::vector<RationalVector>& ge_rows, const RationalVector& ge_rhs,
          const std::vector<RationalVector>& eq_rows, const RationalVector& eq_rhs,
          std::size_t num_vars)
      : vars_(num_vars), surplus_(ge_rows.size()), rows_(ge_rows.size() + eq_rows.size()) {
    const std::size_t width = total_columns() + 1;
    table_.assign(rows_, RationalVector(width));
    basis_.resize(rows_);
    active_.assign(rows_, true);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool ge = i < surplus_;
      const RationalVector& a = ge ? ge_rows[i] : eq_rows[i - surplus_];
      const Rational& b = ge ? ge_rhs[i] : eq_rhs[i - surplus_];
      RationalVector& row = table_[i];
      for (std::size_t j = 0; j < vars_; ++j)
        row[j] = a[j];
      if (ge)
        row[vars_ + i] = -1;
      row.back() = b;
      if (sgn(b) < 0)
        for (auto& x : row)
          x = -x;
      row[artificial(i)] = 1;
      basis_[i] = artificial(i);
    }
  }

  // Phase one: minimize the sum of artificials. Returns true iff the
  // optimum is zero, i.e. the constraints are feasible.
  bool phase_one() {
    cost_.assign(total_columns() + 1, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < total_columns() + 1; ++j)
        if (!is_artificial(j))
          cost_[j] -= table_[i][j];
    run(/*allow_artificial=*/true);
    if (sgn(cost_.back()) != 0)
      return false;
    evict_artificials();
    return true;
  }

  // Phase two on the original objective. Returns false if unbounded.
  bool phase_two(const RationalVector& objective) {
    cost_.assign(total_columns() + 1, Rational(0));
    for (std::size_t j = 0; j < vars_; ++j)
      cost_[j] = objective[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i])
        continue;
      const std::size_t b = basis_[i];
      if (b >= vars_ || sgn(objective[b]) == 0)
        continue;
      const Rational cb = objective[b];
      for (std::size_t j = 0; j < cost_.size(); ++j)
        cost_[j] -= cb * table_[i][j];
    }
    return run(/*allow_artificial=*/false);
  }

  RationalVector solution() const {
    RationalVector x(vars_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (active_[i] && basis_[i] < vars_)
        x[basis_[i]] = table_[i].back();
    return x;
  }

private:
  std::size_t total_columns() const { return vars_ + surplus_ + rows_; }
  std::size_t artificial(std::size_t row) const { return vars_ + surplus_ + row; }
  bool is_artificial(std::size_t col) const {
    return col >= vars_ + surplus_ && col < total_columns();
  }

  // Bland's rule: least-index entering column with negative reduced cost,
  // least-index basic variable among ratio-test ties. Returns false when
  // an entering column has no positive entry (unbounded).
  bool run(bool allow_artificial) {
    for (;;) {
      std::size_t enter = total_columns();
      for (std::size_t j = 0; j < total_columns(); ++j) {
        if (!allow_artificial && is_artificial(j))
          continue;
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == total_columns())
        return true;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i] || sgn(table_[i][enter]) <= 0)
          continue;
        Rational ratio = table_[i].back() / table_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_)
        return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    RationalVector& p = table_[row];
    const Rational pv = p[col];
    for (auto& x : p)
      x /= pv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !active_[i] || sgn(table_[i][col]) == 0)
        continue;
      const Rational f = table_[i][col];
      for (std::size_t j = 0; j < p.size(); ++j)
        if (sgn(p[j]) != 0)
          table_[i][j] -= f * p[j];
    }
    if (sgn(cost_[col]) != 0) {
      const Rational f = cost_[col];
      for (std::size_t j = 0; j < p.size(); ++j)
        if (sgn(p[j]) != 0)
          cost_[j] -= f * p[j];
    }
    basis_[row] = col;
  }

  // After a zero-valued phase one, artificials still basic sit at value 0.
  // Pivot each out on any nonzero non-artificial entry; a row with none is a
  // redundant equation and is dropped.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i] || !is_artificial(basis_[i]))
        continue;
      std::size_t col = total_columns();
      for (std::size_t j = 0; j < vars_ + surplus_; ++j)
        if (sgn(table_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col == total_columns())
        active_[i] = false;
      else
        pivot(i, col);
    }
  }

  std::size_t vars_;
  std::size_t surplus_;
  std::size_t rows_;
  std::vector<RationalVector> table_;
  RationalVector cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    s += a[j] * b[j];
  return s;
}

} // namespace

LpOutcome lp_minimize(const LinearProgram& prob) {
  prob.validate();
  Tableau t(prob.rows, prob.rhs, prob.equality_rows, prob.equality_rhs, prob.num_vars());
  LpOutcome out;
  if (!t.phase_one()) {
    out.status = LpStatus::infeasible;
    return out;
  }
  if (!t.phase_two(prob.objective)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.vertex = t.solution();
  out.value = dot(prob.objective, out.vertex);
  return out;
}

FeasibilityResult lp_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                              const std::vector<RationalVector>& eq_rows,
                              const RationalVector& eq_rhs) {
  std::size_t m = 0;
  if (!rows.empty())
    m = rows.front().size();
  else if (!eq_rows.empty())
    m = eq_rows.front().size();
  LinearProgram prob{rows, rhs, eq_rows, eq_rhs, RationalVector(m)};
  prob.validate();
  Tableau t(rows, rhs, eq_rows, eq_rhs, m);
  FeasibilityResult out;
  if (t.phase_one()) {
    out.feasible = true;
    out.witness = t.solution();
  }
  return out;
}

std::optional<Rational> slope_at(const RationalVector& cost, const std::vector<IntegerVector>& rows,
                                 const IntegerVector& weights) {
  if (weights.size() != cost.size())
    throw InputError("slope: weight vector length does not match cost");
  Rational numerator = 0;
  for (std::size_t j = 0; j < cost.size(); ++j)
    numerator += cost[j] * weights[j];
  std::optional<Integer> denominator;
  for (const auto& row : rows) {
    if (row.size() != weights.size())
      throw InputError("slope: row length does not match weights");
    Integer s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      s += row[j] * weights[j];
    if (!denominator || s < *denominator)
      denominator = std::move(s);
  }
  if (!denominator || sgn(*denominator) <= 0)
    return std::nullopt;
  return Rational(numerator / Rational(*denominator));
}

LinearProgram slope_program(const RationalVector& cost, const std::vector<IntegerVector>& rows) {
  LinearProgram prob;
  prob.objective = cost;
  for (const auto& row : rows) {
    prob.rows.emplace_back(row.begin(), row.end());
    prob.rhs.emplace_back(1);
  }
  return prob;
}

SlopeResult minimize_slope(const RationalVector& cost, const std::vector<IntegerVector>& rows) {
  if (rows.empty())
    throw InputError("rank of zero object undefined: no rows");
  if (cost.empty())
    throw InputError("minimize_slope: empty cost vector");
  for (const auto& c : cost)
    if (sgn(c) <= 0)
      throw InputError("minimize_slope: cost must be strictly positive");
  for (const auto& row : rows) {
    if (row.size() != cost.size())
      throw InputError("minimize_slope: row length does not match cost");
    for (const auto& a : row)
      if (sgn(a) < 0)
        throw InputError("minimize_slope: rows must be nonnegative");
  }
  const bool has_zero_row = std::any_of(rows.begin(), rows.end(), [](const IntegerVector& r) {
    return std::all_of(r.begin(), r.end(), [](const Integer& a) { return sgn(a) == 0; });
  });
  if (has_zero_row)
    return {};

  // Nonnegative nonzero rows make the program feasible; positive cost bounds it.
  const LpOutcome lp = lp_minimize(slope_program(cost, rows));
  if (lp.status != LpStatus::optimal)
    throw std::logic_error("slope program not optimal despite nonzero rows");

  const Integer scale = lcm_of_denominators(lp.vertex);
  SlopeResult out;
  out.value = lp.value;
  out.witness.reserve(lp.vertex.size());
  for (const auto& x : lp.vertex) {
    Rational scaled = x * scale;
    out.witness.push_back(scaled.get_num());
  }
  return out;
}

std::optional<Rational> oracle_minimum_over_vertices(const LinearProgram& prob,
                                                     std::size_t max_bases) {
  prob.validate();
  const std::size_t m = prob.num_vars();

  // Every constraint as an equation candidate: equalities, >= rows, bounds.
  RationalMatrix coeffs;
  RationalVector rhs;
  for (std::size_t k = 0; k < prob.equality_rows.size(); ++k) {
    coeffs.push_back(prob.equality_rows[k]);
    rhs.push_back(prob.equality_rhs[k]);
  }
  for (std::size_t k = 0; k < prob.rows.size(); ++k) {
    coeffs.push_back(prob.rows[k]);
    rhs.push_back(prob.rhs[k]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector e(m);
    e[j] = 1;
    coeffs.push_back(std::move(e));
    rhs.emplace_back(0);
  }
  const std::size_t total = coeffs.size();

  // C(total, m) with an early exit once it passes the bound.
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < m; ++i) {
    candidates = candidates * (total - i) / (i + 1);
    if (candidates > max_bases)
      throw InputError("oracle: more than " + std::to_string(max_bases) + " candidate bases");
  }

  auto feasible = [&](const RationalVector& x) {
    for (const auto& v : x)
      if (sgn(v) < 0)
        return false;
    for (std::size_t k = 0; k < prob.rows.size(); ++k)
      if (dot(prob.rows[k], x) < prob.rhs[k])
        return false;
    for (std::size_t k = 0; k < prob.equality_rows.size(); ++k)
      if (dot(prob.equality_rows[k], x) != prob.equality_rhs[k])
        return false;
    return true;
  };

  std::optional<Rational> best;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i)
    pick[i] = i;
  for (;;) {
    RationalMatrix a;
    RationalVector b;
    a.reserve(m);
    for (std::size_t i : pick) {
      a.push_back(coeffs[i]);
      b.push_back(rhs[i]);
    }
    if (auto x = solve_square(std::move(a), std::move(b)); x && feasible(*x)) {
      Rational v = dot(prob.objective, *x);
      if (!best || v < *best)
        best = std::move(v);
    }
    // Next m-combination of [0, total) in lexicographic order.
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == total - m + (i - 1))
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return best;
}

} // namespace stablerank
