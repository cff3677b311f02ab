#include "pyragrow/linalg.hpp"

namespace pyragrow {

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

namespace {

// Row echelon in place; returns pivot column list. Plain fraction arithmetic
// is fine at our sizes; pivots are the first nonzero entry in each column.
std::vector<int> echelon(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) { p = r; break; }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(echelon(a).size()); }

int affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat d(static_cast<int>(points.size()) - 1, points[0].size());
  for (size_t i = 1; i < points.size(); ++i)
    d.row(static_cast<int>(i) - 1) = (points[i] - points[0]).transpose();
  return rank(d);
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  const std::vector<int> pivots = echelon(aug);
  for (int pc : pivots)
    if (pc == cols) return std::nullopt;  // inconsistent row 0 ... 0 | 1
  Vec x = Vec::Zero(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<int>(i), cols);
  return x;
}

Mat nullspace(Mat a) {
  const int cols = static_cast<int>(a.cols());
  const std::vector<int> pivots = echelon(a);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < cols; ++c) {
      if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Mat basis = Mat::Zero(cols, static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    const int fc = free_cols[j];
    basis(fc, static_cast<int>(j)) = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], static_cast<int>(j)) = -a(static_cast<int>(i), fc);
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) return std::nullopt;
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Identity(n, n);
  const std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  return Mat(aug.rightCols(n));
}

void canonicalize_functional(Vec& a, Rational& b) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) lcm_den = lcm(lcm_den, denominator(a(i)));
  lcm_den = lcm(lcm_den, denominator(b));
  Integer gcd_num = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    gcd_num = gcd(gcd_num, numerator(a(i) * Rational(lcm_den)));
  gcd_num = gcd(gcd_num, numerator(b * Rational(lcm_den)));
  if (gcd_num == 0) return;
  const Rational scale = Rational(lcm_den) / Rational(gcd_num);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) *= scale;
  b *= scale;
}

Vec primitive_direction(Vec d) {
  Rational dummy(0);
  canonicalize_functional(d, dummy);
  return d;
}

}  // namespace pyragrow
