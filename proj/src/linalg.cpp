#include "chowring/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace chowring {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

// Reduces `m` in place to row echelon form; returns pivot columns and the
// sign flip count through `swaps`.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t col_limit, int* swaps) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      if (swaps) ++*swaps;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix m(*this);
  return echelon(m, cols_, nullptr).size();
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix m(*this);
  int swaps = 0;
  auto pivots = echelon(m, cols_, &swaps);
  if (pivots.size() < rows_) return Rational(0);
  Rational det(swaps % 2 ? -1 : 1);
  for (std::size_t i = 0; i < rows_; ++i) det *= m(i, i);
  return det;
}

SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = echelon(aug, n, nullptr);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return {SolveStatus::Inconsistent, {}};
  }
  if (pivots.size() < n) return {SolveStatus::Underdetermined, {}};
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= aug(i, c) * x[c];
    x[i] = acc / aug(i, i);
  }
  return {SolveStatus::Unique, std::move(x)};
}

}  // namespace chowring
