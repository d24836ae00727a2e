#include "stablerank/linalg.hpp"

#include <utility>

namespace stablerank {

namespace {

// Reduces [a | rhs...] in place until a is the identity. Returns false if a
// is singular. When det is non-null it receives det(a).
bool gauss_jordan(RationalMatrix& a, std::vector<RationalVector>& rhs, Rational* det) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0)
      ++pivot;
    if (pivot == n) {
      if (det)
        *det = 0;
      return false;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      for (auto& r : rhs)
        std::swap(r[pivot], r[col]);
      d = -d;
    }
    Rational p = a[col][col];
    d *= p;
    for (std::size_t j = col; j < n; ++j)
      a[col][j] /= p;
    for (auto& r : rhs)
      r[col] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0)
        continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        a[i][j] -= f * a[col][j];
      for (auto& r : rhs)
        r[i] -= f * r[col];
    }
  }
  if (det)
    *det = d;
  return true;
}

} // namespace

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  std::vector<RationalVector> rhs{std::move(b)};
  if (!gauss_jordan(a, rhs, nullptr))
    return std::nullopt;
  return std::move(rhs.front());
}

Rational determinant(RationalMatrix a) {
  Rational d;
  std::vector<RationalVector> none;
  gauss_jordan(a, none, &d);
  return d;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  // Columns of the identity, solved simultaneously; rhs[k] is column k.
  std::vector<RationalVector> rhs(n, RationalVector(n));
  for (std::size_t k = 0; k < n; ++k)
    rhs[k][k] = 1;
  RationalMatrix work = a;
  if (!gauss_jordan(work, rhs, nullptr))
    return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      inv[i][k] = rhs[k][i];
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  RationalMatrix out(rows, RationalVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

} // namespace stablerank
