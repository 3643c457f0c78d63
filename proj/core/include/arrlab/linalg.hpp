#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "arrlab/rational.hpp"

namespace arrlab {

/// Fixed-dimension vector of exact rationals.
class RationalVector {
 public:
  explicit RationalVector(std::size_t dim) : entries_(dim) {}
  RationalVector(std::initializer_list<Rational> values) : entries_(values) {}
  explicit RationalVector(std::vector<Rational> values) : entries_(std::move(values)) {}

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RationalVector& lhs, const RationalVector& rhs);
RationalVector operator+(const RationalVector& lhs, const RationalVector& rhs);
RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs);
RationalVector operator*(const Rational& scale, const RationalVector& v);

/// Dense row-major matrix of exact rationals with fixed shape.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::span<const RationalVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector operator*(const RationalVector& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Unique solution of A x = b, or nullopt when A is singular. Uses
/// fraction-free (Bareiss) elimination on the integer-scaled augmented system.
/// Throws InputError if A is not square or b does not match.
std::optional<RationalVector> solve_linear_system(const RationalMatrix& a, const RationalVector& b);

Rational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

/// Nonzero vector orthogonal to the d-1 given rows of length d (generalized
/// cross product via signed maximal minors). Zero iff the rows are dependent.
RationalVector orthogonal_complement(std::span<const RationalVector> rows);

}  // namespace arrlab
