#pragma once

#include <optional>
#include <vector>

#include "chowring/rational.hpp"

namespace chowring {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  std::size_t rank() const;
  // Requires a square matrix.
  Rational determinant() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> x;  // filled only when Unique
};

/// Exact solve of A x = b by Gauss-Jordan elimination. Overdetermined systems
/// are checked for consistency rather than fitted.
SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace chowring
