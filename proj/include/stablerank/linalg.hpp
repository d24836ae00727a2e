#pragma once

// Small dense exact linear algebra over the rationals.

#include "stablerank/rational.hpp"

#include <optional>
#include <vector>

namespace stablerank {

using RationalMatrix = std::vector<RationalVector>; // row-major, square where required

/// Solves A x = b by Gauss-Jordan elimination. nullopt when A is singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

Rational determinant(RationalMatrix a);

/// nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix identity_matrix(std::size_t n);

} // namespace stablerank
