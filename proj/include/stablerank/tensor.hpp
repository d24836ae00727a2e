#pragma once

// G-stable rank of tensors, restricted to 1-parameter subgroups of the
// standard maximal torus.
//
// A diagonal 1-PS lambda = (lambda_1, ..., lambda_d), lambda_i in Z^n, scales
// the basis tensor e_{j_1} (x) ... (x) e_{j_d} by t^{lambda_1[j_1] + ... +
// lambda_d[j_d]}. Distinct basis tensors never mix, so coefficients cannot
// cancel (characteristic 0) and the t-valuation of lambda(t).v depends only
// on the support of v. Tensors are therefore represented by their support.
//
// All ranks computed here infimize over the standard torus only. They are an
// upper bound on rk^G, exact for tensors whose optimal 1-PS is diagonal in the
// standard basis (every worked example is).
//
// Semistability vs. rank (torus level). Let v live in V^{(x)d}, dim V = n,
// and alpha = (1, ..., 1).
//  * If a traceless lambda has val(lambda.v) > 0, put c_i = -min_j
//    lambda_{i,j} and lambda'_{i,j} = lambda_{i,j} + c_i >= 0. Then
//    sum_ij lambda'_{i,j} = n sum_i c_i and val(lambda'.v) = val(lambda.v) +
//    sum_i c_i, so the slope is < n.
//  * If some lambda >= 0 has slope < n, put lambda'_{i,j} = n lambda_{i,j} -
//    sum_j lambda_{i,j}. It is traceless and val(lambda'.v) = n val(lambda.v)
//    - sum_ij lambda_{i,j} > 0.
// Together with the universal witness lambda_1 = (1, ..., 1) of slope n, this
// gives: v is torus-semistable iff torus_rank(v) = n. The same argument with
// a single lambda and the factor d gives the symmetric statement.

#include "stablerank/lp.hpp"

#include <cstddef>
#include <vector>

namespace stablerank {

using IndexTuple = std::vector<int>; // 1-based, entries in [1, n]
using Exponent = std::vector<int>;   // nonnegative

/// Support of a tensor in V^{(x)d}, dim V = n. Tuples are kept sorted and
/// unique.
class TensorSupport {
public:
  /// Throws InputError on d < 1, n < 1, empty support, out-of-range indices,
  /// wrong arity or duplicate tuples.
  TensorSupport(int order, int dim, std::vector<IndexTuple> tuples);

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }

  friend bool operator==(const TensorSupport&, const TensorSupport&) = default;

private:
  int order_;
  int dim_;
  std::vector<IndexTuple> tuples_;
};

/// Support of a symmetric tensor in D^d V, i.e. of a degree-d form in n
/// variables. Exponent vectors are kept sorted and unique.
class SymmetricSupport {
public:
  /// Throws InputError on d < 1, n < 1, empty support, negative entries,
  /// exponents not summing to d, or duplicates.
  SymmetricSupport(int degree, int vars, std::vector<Exponent> exponents);

  int degree() const { return degree_; }
  int vars() const { return vars_; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  friend bool operator==(const SymmetricSupport&, const SymmetricSupport&) = default;

private:
  int degree_;
  int vars_;
  std::vector<Exponent> exponents_;
};

/// Per-factor weights of a polynomial diagonal 1-PS: d vectors of length n,
/// all entries >= 0.
using WeightAssignment = std::vector<IntegerVector>;

/// Positive rational weights alpha_i on the factors.
using AlphaWeights = RationalVector;

/// val(lambda(t).v) = min over support tuples of sum_i lambda_i[j_i].
Integer torus_valuation(const TensorSupport& v, const WeightAssignment& lambda);

/// min over exponents m of <m, gamma>.
Integer symmetric_valuation(const SymmetricSupport& v, const IntegerVector& gamma);

/// Torus-restricted rk^G_alpha. The witness is the concatenation
/// lambda_1 || ... || lambda_d (length n*d). Upper bound on rk^G; exact for
/// torus-optimal tensors.
SlopeResult torus_rank(const TensorSupport& v, const AlphaWeights& alpha);
SlopeResult torus_rank(const TensorSupport& v); // alpha = (1, ..., 1)

/// Torus-restricted symmrk^G: inf of d * sum(lambda) / min_m <m, lambda>.
SlopeResult symm_torus_rank(const SymmetricSupport& v);

/// Splits a torus_rank witness back into per-factor weights.
WeightAssignment split_witness(const IntegerVector& flat, int order, int dim);

/// All tuples whose index multiset matches an exponent vector of v.
TensorSupport expand_symmetric(const SymmetricSupport& v);

/// gamma = lambda_1 * ... * lambda_d as diagonal 1-PS, i.e. the coordinatewise
/// sum of weights. For symmetric v, val(gamma.v) >= d * val(lambda.v).
IntegerVector combine_one_ps(const WeightAssignment& lambda);

struct SemistabilityResult {
  bool semistable = false;
  /// When unstable: a traceless integer destabilizing 1-PS (per factor), with
  /// every support row strictly positive on it.
  std::vector<IntegerVector> destabilizer;
};

/// Semistability of v under the diagonal torus of SL(V)^d.
SemistabilityResult torus_semistability(const TensorSupport& v);
bool is_torus_semistable(const TensorSupport& v);

/// Semistability of a symmetric v under the diagonal torus of SL(V).
SemistabilityResult symm_torus_semistability(const SymmetricSupport& v);
bool is_symm_torus_semistable(const SymmetricSupport& v);

} // namespace stablerank
