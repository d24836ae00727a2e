#pragma once

// Exact rational linear programming.
//
// Every rank and threshold in this library is the optimum of a fractional
// program min (c.x) / (min_k a_k.x) over nonnegative weights. The ratio is
// invariant under scaling x, so normalizing the denominator to 1 turns it into
// the ordinary LP  min c.x  s.t.  a_k.x >= 1, x >= 0. A rational optimum
// scales to an integer one with the same ratio, so the infimum over integer
// weights equals the LP optimum and is attained.

#include "stablerank/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stablerank {

/// min objective.x  s.t.  rows[k].x >= rhs[k],  equality_rows[k].x == equality_rhs[k],  x >= 0.
struct LinearProgram {
  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<RationalVector> equality_rows;
  RationalVector equality_rhs;
  RationalVector objective;

  std::size_t num_vars() const { return objective.size(); }
  /// Throws InputError on ragged rows or mismatched rhs lengths.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational value;        // meaningful when optimal
  RationalVector vertex; // meaningful when optimal
};

/// Two-phase dense-tableau simplex over the rationals with Bland's
/// least-index rule, so it terminates on degenerate programs and the
/// returned vertex is reproducible.
LpOutcome lp_minimize(const LinearProgram& prob);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<RationalVector> witness;
};

/// Phase one only: is {x >= 0 : rows.x >= rhs, eq_rows.x == eq_rhs} nonempty?
FeasibilityResult lp_feasible(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                              const std::vector<RationalVector>& eq_rows,
                              const RationalVector& eq_rhs);

/// Optimum of a fractional program with a denominator-cleared witness.
struct SlopeResult {
  ExtendedRational value; // +inf when no weight makes the denominator positive
  IntegerVector witness;  // empty iff value is infinite
};

/// (cost.x) / (min_k rows[k].x), or nullopt when the denominator is zero.
std::optional<Rational> slope_at(const RationalVector& cost, const std::vector<IntegerVector>& rows,
                                 const IntegerVector& weights);

/// inf over nonzero integer x >= 0 with min_k rows[k].x > 0 of
/// (cost.x) / (min_k rows[k].x). Rows must be nonnegative, cost strictly
/// positive. A zero row forces the denominator to 0 for every x, giving +inf.
SlopeResult minimize_slope(const RationalVector& cost, const std::vector<IntegerVector>& rows);

/// Brute-force optimum: tries every choice of num_vars active constraints
/// (including the x_j >= 0 bounds), solves the square system exactly, keeps
/// the feasible points and returns the least objective. nullopt means no
/// vertex exists, i.e. the program is infeasible. Only valid for bounded
/// programs. Throws InputError if the number of candidate bases exceeds
/// `max_bases`.
std::optional<Rational> oracle_minimum_over_vertices(const LinearProgram& prob,
                                                     std::size_t max_bases = 200000);

/// The LP that minimize_slope solves, exposed for the oracle cross-check.
LinearProgram slope_program(const RationalVector& cost, const std::vector<IntegerVector>& rows);

} // namespace stablerank
