#include "stablerank/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stablerank {

namespace {

template <typename T>
void sort_unique_or_throw(std::vector<T>& items, const char* what) {
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end())
    throw InputError(std::string("duplicate ") + what);
}

// Feasibility of { lambda free : lambda.row >= 1 for each row, and
// sum of lambda over each block == 0 }, via the split lambda = p - q.
// Returns an integer destabilizer on success.
std::optional<IntegerVector> traceless_positive_weights(const std::vector<IntegerVector>& rows,
                                                        std::size_t blocks,
                                                        std::size_t block_size) {
  const std::size_t m = blocks * block_size;
  std::vector<RationalVector> ge;
  RationalVector ge_rhs;
  for (const auto& r : rows) {
    RationalVector row(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = r[j];
      row[m + j] = -r[j];
    }
    ge.push_back(std::move(row));
    ge_rhs.emplace_back(1);
  }
  std::vector<RationalVector> eq;
  RationalVector eq_rhs;
  for (std::size_t b = 0; b < blocks; ++b) {
    RationalVector row(2 * m);
    for (std::size_t j = 0; j < block_size; ++j) {
      row[b * block_size + j] = 1;
      row[m + b * block_size + j] = -1;
    }
    eq.push_back(std::move(row));
    eq_rhs.emplace_back(0);
  }
  FeasibilityResult f = lp_feasible(ge, ge_rhs, eq, eq_rhs);
  if (!f.feasible)
    return std::nullopt;
  RationalVector lambda(m);
  for (std::size_t j = 0; j < m; ++j)
    lambda[j] = (*f.witness)[j] - (*f.witness)[m + j];
  const Integer scale = lcm_of_denominators(lambda);
  IntegerVector out;
  for (const auto& x : lambda) {
    Rational s = x * scale;
    out.push_back(s.get_num());
  }
  return out;
}

std::vector<IntegerVector> tensor_rows(const TensorSupport& v) {
  const auto d = static_cast<std::size_t>(v.order());
  const auto n = static_cast<std::size_t>(v.dim());
  std::vector<IntegerVector> rows;
  rows.reserve(v.tuples().size());
  for (const auto& t : v.tuples()) {
    IntegerVector row(n * d);
    for (std::size_t i = 0; i < d; ++i)
      row[i * n + static_cast<std::size_t>(t[i] - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<IntegerVector> symmetric_rows(const SymmetricSupport& v) {
  std::vector<IntegerVector> rows;
  for (const auto& m : v.exponents())
    rows.emplace_back(m.begin(), m.end());
  return rows;
}

} // namespace

TensorSupport::TensorSupport(int order, int dim, std::vector<IndexTuple> tuples)
    : order_(order), dim_(dim), tuples_(std::move(tuples)) {
  if (order_ < 1)
    throw InputError("tensor order must be >= 1");
  if (dim_ < 1)
    throw InputError("tensor dimension must be >= 1");
  if (tuples_.empty())
    throw InputError("tensor support is empty");
  for (const auto& t : tuples_) {
    if (t.size() != static_cast<std::size_t>(order_))
      throw InputError("support tuple has " + std::to_string(t.size()) + " indices, expected " +
                       std::to_string(order_));
    for (int j : t)
      if (j < 1 || j > dim_)
        throw InputError("support index " + std::to_string(j) + " outside 1.." +
                         std::to_string(dim_));
  }
  sort_unique_or_throw(tuples_, "support tuple");
}

SymmetricSupport::SymmetricSupport(int degree, int vars, std::vector<Exponent> exponents)
    : degree_(degree), vars_(vars), exponents_(std::move(exponents)) {
  if (degree_ < 1)
    throw InputError("symmetric degree must be >= 1");
  if (vars_ < 1)
    throw InputError("number of variables must be >= 1");
  if (exponents_.empty())
    throw InputError("symmetric support is empty");
  for (const auto& m : exponents_) {
    if (m.size() != static_cast<std::size_t>(vars_))
      throw InputError("exponent vector has " + std::to_string(m.size()) + " entries, expected " +
                       std::to_string(vars_));
    if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
      throw InputError("negative exponent");
    if (std::accumulate(m.begin(), m.end(), 0) != degree_)
      throw InputError("exponent vector does not sum to degree " + std::to_string(degree_));
  }
  sort_unique_or_throw(exponents_, "exponent vector");
}

Integer torus_valuation(const TensorSupport& v, const WeightAssignment& lambda) {
  const auto d = static_cast<std::size_t>(v.order());
  const auto n = static_cast<std::size_t>(v.dim());
  if (lambda.size() != d)
    throw InputError("weight assignment has " + std::to_string(lambda.size()) +
                     " factors, expected " + std::to_string(d));
  for (const auto& l : lambda)
    if (l.size() != n)
      throw InputError("factor weight has wrong length");
  std::optional<Integer> best;
  for (const auto& t : v.tuples()) {
    Integer s = 0;
    for (std::size_t i = 0; i < d; ++i)
      s += lambda[i][static_cast<std::size_t>(t[i] - 1)];
    if (!best || s < *best)
      best = std::move(s);
  }
  return *best;
}

Integer symmetric_valuation(const SymmetricSupport& v, const IntegerVector& gamma) {
  if (gamma.size() != static_cast<std::size_t>(v.vars()))
    throw InputError("weight vector has wrong length");
  std::optional<Integer> best;
  for (const auto& m : v.exponents()) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      s += gamma[j] * m[j];
    if (!best || s < *best)
      best = std::move(s);
  }
  return *best;
}

SlopeResult torus_rank(const TensorSupport& v, const AlphaWeights& alpha) {
  const auto d = static_cast<std::size_t>(v.order());
  const auto n = static_cast<std::size_t>(v.dim());
  if (alpha.size() != d)
    throw InputError("alpha has " + std::to_string(alpha.size()) + " entries, expected " +
                     std::to_string(d));
  for (const auto& a : alpha)
    if (sgn(a) <= 0)
      throw InputError("alpha weights must be positive");
  RationalVector cost;
  cost.reserve(n * d);
  for (std::size_t i = 0; i < d; ++i)
    cost.insert(cost.end(), n, alpha[i]);
  return minimize_slope(cost, tensor_rows(v));
}

SlopeResult torus_rank(const TensorSupport& v) {
  return torus_rank(v, AlphaWeights(static_cast<std::size_t>(v.order()), Rational(1)));
}

SlopeResult symm_torus_rank(const SymmetricSupport& v) {
  RationalVector cost(static_cast<std::size_t>(v.vars()), Rational(v.degree()));
  return minimize_slope(cost, symmetric_rows(v));
}

WeightAssignment split_witness(const IntegerVector& flat, int order, int dim) {
  const auto d = static_cast<std::size_t>(order);
  const auto n = static_cast<std::size_t>(dim);
  if (flat.size() != n * d)
    throw InputError("witness length does not match order * dim");
  WeightAssignment out(d);
  for (std::size_t i = 0; i < d; ++i)
    out[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                  flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return out;
}

TensorSupport expand_symmetric(const SymmetricSupport& v) {
  std::vector<IndexTuple> tuples;
  for (const auto& m : v.exponents()) {
    IndexTuple t;
    for (std::size_t j = 0; j < m.size(); ++j)
      t.insert(t.end(), static_cast<std::size_t>(m[j]), static_cast<int>(j) + 1);
    // t is sorted, so this walks every distinct arrangement once.
    do {
      tuples.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return TensorSupport(v.degree(), v.vars(), std::move(tuples));
}

IntegerVector combine_one_ps(const WeightAssignment& lambda) {
  if (lambda.empty())
    return {};
  IntegerVector gamma(lambda.front().size());
  for (const auto& l : lambda) {
    if (l.size() != gamma.size())
      throw InputError("factor weights differ in length");
    for (std::size_t j = 0; j < l.size(); ++j)
      gamma[j] += l[j];
  }
  return gamma;
}

SemistabilityResult torus_semistability(const TensorSupport& v) {
  const auto d = static_cast<std::size_t>(v.order());
  const auto n = static_cast<std::size_t>(v.dim());
  SemistabilityResult out;
  auto lambda = traceless_positive_weights(tensor_rows(v), d, n);
  out.semistable = !lambda.has_value();
  if (lambda)
    out.destabilizer = split_witness(*lambda, v.order(), v.dim());
  return out;
}

bool is_torus_semistable(const TensorSupport& v) { return torus_semistability(v).semistable; }

SemistabilityResult symm_torus_semistability(const SymmetricSupport& v) {
  SemistabilityResult out;
  auto lambda = traceless_positive_weights(symmetric_rows(v), 1, static_cast<std::size_t>(v.vars()));
  out.semistable = !lambda.has_value();
  if (lambda)
    out.destabilizer.push_back(std::move(*lambda));
  return out;
}

bool is_symm_torus_semistable(const SymmetricSupport& v) {
  return symm_torus_semistability(v).semistable;
}

} // namespace stablerank
