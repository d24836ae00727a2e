#pragma once

// T-stable rank of ideals at the origin and lct of monomial ideals.
//
// For weights lambda in Z^n_{>=0} on the local parameters T = {x_1..x_n},
// val_lambda(f) is the least <u, lambda> over the terms x^u of f and
// ord_lambda(a) is the least val_lambda over generators of a. Over
// characteristic 0 a diagonal weighting cannot cancel terms, so ord_lambda is
// the minimum of <u, lambda> over the union of all generator terms, and
//
//   rk^T(a) = inf_lambda sum(lambda) / ord_lambda(a)
//
// is a fractional program over exactly those rows. Only polynomial
// generators are supported, and only the point P = 0; translate coordinates
// before input for other points.

#include "stablerank/linalg.hpp"
#include "stablerank/lp.hpp"
#include "stablerank/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stablerank {

class SparsePolynomial {
public:
  using TermMap = std::map<Exponent, Rational>;

  explicit SparsePolynomial(int vars);
  /// Zero coefficients are dropped. Throws InputError on arity mismatch or
  /// negative exponents.
  SparsePolynomial(int vars, const TermMap& terms);

  static SparsePolynomial monomial(int vars, const Exponent& e, const Rational& c = 1);
  static SparsePolynomial constant(int vars, const Rational& c);

  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const;
  /// True when every term has total degree d.
  bool is_homogeneous(int degree) const;

  void add_term(const Exponent& e, const Rational& c);

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial scaled(const Rational& c) const;
  SparsePolynomial pow(unsigned r) const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
  void check_exponent(const Exponent& e) const;

  int vars_;
  TermMap terms_;
};

std::string to_string(const SparsePolynomial& f);

/// Ideal generated by monomials x^{l_1}, ..., x^{l_r}. The generator set is
/// reduced to its divisibility-minimal elements and sorted, so equal ideals
/// compare equal.
class MonomialIdeal {
public:
  /// Throws InputError on empty generators, arity mismatch or negative
  /// exponents.
  MonomialIdeal(int vars, std::vector<Exponent> generators);

  int vars() const { return vars_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  /// True when some generator is the zero vector (the unit ideal).
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int vars_;
  std::vector<Exponent> generators_;
};

/// Ideal generated by polynomials. Zero generators and duplicates are
/// dropped; at least one nonzero generator must remain.
class PolyIdeal {
public:
  PolyIdeal(int vars, std::vector<SparsePolynomial> generators);

  int vars() const { return vars_; }
  const std::vector<SparsePolynomial>& generators() const { return generators_; }

  friend bool operator==(const PolyIdeal&, const PolyIdeal&) = default;

private:
  int vars_;
  std::vector<SparsePolynomial> generators_;
};

PolyIdeal to_poly_ideal(const MonomialIdeal& a);

/// An element of GL(n) acting on local parameters by x_i -> sum_j M[j][i] y_j.
class LinearChange {
public:
  /// Throws InputError if the matrix is not square or is singular.
  explicit LinearChange(RationalMatrix matrix);

  std::size_t dim() const { return matrix_.size(); }
  const RationalMatrix& matrix() const { return matrix_; }
  LinearChange inverse() const;

  friend bool operator==(const LinearChange&, const LinearChange&) = default;

private:
  RationalMatrix matrix_;
};

using WeightVector = IntegerVector;

/// val_lambda(f); nullopt stands for +inf (f = 0).
std::optional<Integer> weighted_order(const SparsePolynomial& f, const WeightVector& lambda);

/// ord_lambda over the generators.
Integer ideal_order(const PolyIdeal& a, const WeightVector& lambda);
Integer ideal_order(const MonomialIdeal& a, const WeightVector& lambda);

/// rk^T at the origin in the given coordinates. +inf when some generator has
/// a nonzero constant term (the origin is not in V(a)).
SlopeResult t_stable_rank(const PolyIdeal& a);
SlopeResult t_stable_rank(const MonomialIdeal& a);

SparsePolynomial apply_linear_change(const SparsePolynomial& f, const LinearChange& m);
PolyIdeal apply_linear_change(const PolyIdeal& a, const LinearChange& m);

/// rk^T in the standard system and after each supplied change, plus the
/// least of them. Every value is an upper bound on rk^G.
struct ChangeRankReport {
  std::vector<SlopeResult> per_system; // [0] is the standard system
  std::size_t best = 0;                // index into per_system
};
ChangeRankReport rank_over_changes(const PolyIdeal& a, const std::vector<LinearChange>& changes);

/// Is (1, ..., 1) in nu * P(a), P(a) = conv(generators) + R^n_{>=0}?
/// Throws InputError for nu <= 0.
bool newton_membership(const MonomialIdeal& a, const Rational& nu);

/// max { nu : (1, ..., 1) in nu * P(a) } by a single LP over the Newton
/// polyhedron. Throws InputError for the unit ideal.
Rational newton_threshold(const MonomialIdeal& a);

/// lct at the origin of a proper monomial ideal, computed as its T-stable
/// rank and cross-checked against newton_threshold.
Rational lct_monomial(const MonomialIdeal& a);

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned r);
PolyIdeal ideal_power(const PolyIdeal& a, unsigned r);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
PolyIdeal ideal_product(const PolyIdeal& a, const PolyIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// a is contained in b: every generator of a is divisible by one of b.
bool monomial_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// Support of a homogeneous form of degree d >= 1. Throws InputError otherwise.
SymmetricSupport symmetric_support_of(const SparsePolynomial& form);

} // namespace stablerank
