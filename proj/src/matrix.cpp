#include "ugb/matrix.hpp"

#include <utility>

namespace ugb {

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Forward elimination to row echelon form; returns pivot count and the sign
// flips performed (for the determinant).
std::pair<std::size_t, bool> echelon(Matrix& m) {
  std::size_t pivot_row = 0;
  bool flipped = false;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      swap_rows(m, r, pivot_row);
      flipped = !flipped;
    }
    Scalar inv = m(pivot_row, c).inverse();
    for (std::size_t below = pivot_row + 1; below < m.rows(); ++below) {
      if (m(below, c).is_zero()) continue;
      Scalar factor = m(below, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(below, k) -= factor * m(pivot_row, k);
    }
    ++pivot_row;
  }
  return {pivot_row, flipped};
}

}  // namespace

std::size_t rank(Matrix m) { return echelon(m).first; }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  auto [r, flipped] = echelon(m);
  if (r < m.rows()) return Scalar::zero(m.field());
  Scalar det = Scalar::one(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return flipped ? -det : det;
}

std::optional<Matrix> solve(Matrix m, Matrix b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.rows() != n) throw Error(Errc::InvalidArgument, "solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return std::nullopt;
    swap_rows(m, r, c);
    swap_rows(b, r, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t k = c; k < n; ++k) m(c, k) *= inv;
    for (std::size_t k = 0; k < b.cols(); ++k) b(c, k) *= inv;
    for (std::size_t other = 0; other < n; ++other) {
      if (other == c || m(other, c).is_zero()) continue;
      Scalar factor = m(other, c);
      for (std::size_t k = c; k < n; ++k) m(other, k) -= factor * m(c, k);
      for (std::size_t k = 0; k < b.cols(); ++k) b(other, k) -= factor * b(c, k);
    }
  }
  return b;
}

}  // namespace ugb
