#include "arrlab/linalg.hpp"

#include <algorithm>
#include <utility>

#include "arrlab/errors.hpp"

namespace arrlab {

bool RationalVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational dot(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < lhs.dim(); ++i) {
    if (!lhs[i].is_zero() && !rhs[i].is_zero()) acc += lhs[i] * rhs[i];
  }
  return acc;
}

RationalVector operator+(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("vector add: dimension mismatch");
  RationalVector out(lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.dim() != rhs.dim()) throw InputError("vector subtract: dimension mismatch");
  RationalVector out(lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

RationalVector operator*(const Rational& scale, const RationalVector& v) {
  RationalVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = scale * v[i];
  return out;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("matrix rows have unequal length");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw InputError("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
  if (x.dim() != cols_) throw InputError("matrix-vector product: dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) acc += (*this)(r, c) * x[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Scales each row of the rational matrix by the lcm of its denominators.
// Row scaling changes neither the solution set nor the rank.
IntMatrix integer_rows(const RationalMatrix& a, const RationalVector* rhs) {
  const std::size_t width = a.cols() + (rhs ? 1 : 0);
  IntMatrix m(a.rows(), std::vector<BigInt>(width));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).denominator().get_mpz_t());
    }
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[r].denominator().get_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m[r][c] = a(r, c).numerator() * (l / a(r, c).denominator());
    }
    if (rhs) m[r][a.cols()] = (*rhs)[r].numerator() * (l / (*rhs)[r].denominator());
  }
  return m;
}

// In-place Bareiss elimination over the first `pivot_cols` columns. Returns
// the pivot column of each eliminated row; rows beyond the returned size are
// zero in those columns. `swaps` counts row exchanges for the determinant sign.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t pivot_cols, int& swaps) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t width = rows == 0 ? 0 : m.front().size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        BigInt t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_linear_system(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InputError("solve_linear_system: matrix is not square");
  if (b.dim() != n) throw InputError("solve_linear_system: right-hand side dimension mismatch");

  IntMatrix m = integer_rows(a, &b);
  int swaps = 0;
  auto pivots = bareiss(m, n, swaps);
  if (pivots.size() < n) return std::nullopt;

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(m[i][j]) != 0) acc -= Rational(m[i][j]) * x[j];
    }
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InputError("determinant: matrix is not square");
  if (n == 0) return Rational(1);
  // Row scaling multiplies the determinant by the product of the row factors.
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).denominator().get_mpz_t());
    }
    scale *= l;
  }
  IntMatrix m = integer_rows(a, nullptr);
  int swaps = 0;
  auto pivots = bareiss(m, n, swaps);
  if (pivots.size() < n) return Rational(0);
  // The last Bareiss pivot equals the determinant of the scaled matrix.
  BigInt det = m[n - 1][n - 1];
  if (swaps % 2 != 0) det = -det;
  return Rational(det, scale);
}

std::size_t rank(const RationalMatrix& a) {
  IntMatrix m = integer_rows(a, nullptr);
  int swaps = 0;
  return bareiss(m, a.cols(), swaps).size();
}

RationalVector orthogonal_complement(std::span<const RationalVector> rows) {
  const std::size_t d = rows.size() + 1;
  for (const auto& r : rows) {
    if (r.dim() != d) throw InputError("orthogonal_complement: expected d-1 rows of length d");
  }
  RationalVector out(d);
  for (std::size_t skip = 0; skip < d; ++skip) {
    RationalMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == skip) continue;
        minor(r, cc++) = rows[r][c];
      }
    }
    Rational m = determinant(minor);
    out[skip] = (skip % 2 == 0) ? m : -m;
  }
  return out;
}

}  // namespace arrlab
