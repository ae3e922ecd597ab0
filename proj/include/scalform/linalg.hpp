#ifndef SCALFORM_LINALG_HPP
#define SCALFORM_LINALG_HPP

#include <vector>
#include <stdexcept>
#include "scalform/poly.hpp"

namespace scalform {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, f_zero<K>()) {}
  K& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const K& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m)
{
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f_is_zero(m(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(pr, j), m(r, j));
    K inv = f_inv(m(r, c));
    for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || f_is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis (columns of the kernel) of an r x c matrix.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m)
{
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<K> v(m.cols, f_zero<K>());
    v[c] = f_one<K>();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m((int)i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve A x = b. Returns false if inconsistent; x gets one solution
// (free variables set to zero).
template <class K>
bool solve_linear(Mat<K> m, std::vector<K> b, std::vector<K>& x)
{
  if ((int)b.size() != m.rows) throw std::invalid_argument("solve_linear: size mismatch");
  Mat<K> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto pivots = rref(aug);
  for (int c : pivots)
    if (c == m.cols) return false; // pivot in the constants column
  x.assign(m.cols, f_zero<K>());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug((int)i, m.cols);
  return true;
}

} // namespace scalform

#endif
