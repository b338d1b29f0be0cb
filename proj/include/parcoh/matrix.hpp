#pragma once

#include <cassert>
#include <cstdlib>
#include <vector>

#include "parcoh/errors.hpp"

namespace parcoh {

using i64 = long long;

// Dense row-major integer matrix.  All normal-form routines below are exact.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<i64> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  i64& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  i64 operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

// P * input * Q = D with P, Q unimodular, D diagonal, nonnegative, and
// d(i,i) | d(i+1,i+1).  pinv and qinv are the exact inverses of p and q.
struct Snf {
  Mat d;
  Mat p, pinv;
  Mat q, qinv;
  int rank = 0;

  std::vector<i64> diag() const {
    std::vector<i64> out;
    int n = d.rows < d.cols ? d.rows : d.cols;
    for (int i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

inline void snf_swap_rows(Snf& s, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < s.d.cols; ++c) std::swap(s.d(i, c), s.d(j, c));
  for (int c = 0; c < s.p.cols; ++c) std::swap(s.p(i, c), s.p(j, c));
  for (int r = 0; r < s.pinv.rows; ++r) std::swap(s.pinv(r, i), s.pinv(r, j));
}

inline void snf_swap_cols(Snf& s, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < s.d.rows; ++r) std::swap(s.d(r, i), s.d(r, j));
  for (int r = 0; r < s.q.rows; ++r) std::swap(s.q(r, i), s.q(r, j));
  for (int c = 0; c < s.qinv.cols; ++c) std::swap(s.qinv(i, c), s.qinv(j, c));
}

// row i += f * row j
inline void snf_add_row(Snf& s, int i, int j, i64 f) {
  if (f == 0) return;
  for (int c = 0; c < s.d.cols; ++c) s.d(i, c) += f * s.d(j, c);
  for (int c = 0; c < s.p.cols; ++c) s.p(i, c) += f * s.p(j, c);
  for (int r = 0; r < s.pinv.rows; ++r) s.pinv(r, j) -= f * s.pinv(r, i);
}

// col i += f * col j
inline void snf_add_col(Snf& s, int i, int j, i64 f) {
  if (f == 0) return;
  for (int r = 0; r < s.d.rows; ++r) s.d(r, i) += f * s.d(r, j);
  for (int r = 0; r < s.q.rows; ++r) s.q(r, i) += f * s.q(r, j);
  for (int c = 0; c < s.qinv.cols; ++c) s.qinv(j, c) -= f * s.qinv(i, c);
}

inline void snf_neg_row(Snf& s, int i) {
  for (int c = 0; c < s.d.cols; ++c) s.d(i, c) = -s.d(i, c);
  for (int c = 0; c < s.p.cols; ++c) s.p(i, c) = -s.p(i, c);
  for (int r = 0; r < s.pinv.rows; ++r) s.pinv(r, i) = -s.pinv(r, i);
}

}  // namespace detail

// Pivot rule: minimal absolute value among nonzero entries of the trailing
// submatrix, ties broken by lowest row then lowest column.
inline Snf smith_normal_form(const Mat& in) {
  Snf s;
  s.d = in;
  s.p = Mat::identity(in.rows);
  s.pinv = Mat::identity(in.rows);
  s.q = Mat::identity(in.cols);
  s.qinv = Mat::identity(in.cols);

  int n = in.rows < in.cols ? in.rows : in.cols;
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      i64 best = 0;
      for (int i = t; i < s.d.rows; ++i)
        for (int j = t; j < s.d.cols; ++j) {
          i64 v = std::llabs(s.d(i, j));
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = n;  // trailing submatrix is zero
        break;
      }
      detail::snf_swap_rows(s, t, pi);
      detail::snf_swap_cols(s, t, pj);
      if (s.d(t, t) < 0) detail::snf_neg_row(s, t);

      i64 piv = s.d(t, t);
      bool clean = true;
      for (int i = t + 1; i < s.d.rows; ++i) {
        i64 f = s.d(i, t) / piv;
        detail::snf_add_row(s, i, t, -f);
        if (s.d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < s.d.cols; ++j) {
        i64 f = s.d(t, j) / piv;
        detail::snf_add_col(s, j, t, -f);
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders exist; re-pick pivot

      // Enforce divisibility of the interior by the pivot.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < s.d.rows && bi < 0; ++i)
        for (int j = t + 1; j < s.d.cols; ++j)
          if (s.d(i, j) % piv != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      detail::snf_add_row(s, t, bi, 1);
    }
  }
  s.rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.d(i, i) != 0) ++s.rank;
  return s;
}

// Basis of the integer kernel {v : m v = 0}, returned as rows.
inline Mat kernel_basis(const Mat& m) {
  if (m.rows == 0) return Mat::identity(m.cols);
  Snf s = smith_normal_form(m);
  Mat out(m.cols - s.rank, m.cols);
  for (int k = s.rank; k < m.cols; ++k)
    for (int r = 0; r < m.cols; ++r) out(k - s.rank, r) = s.q(r, k);
  return out;
}

// Row Hermite normal form of the lattice spanned by the rows of m: zero rows
// dropped, pivots positive with increasing column positions, entries above
// each pivot reduced into [0, pivot).
inline Mat row_hnf(const Mat& in) {
  Mat h = in;
  int r0 = 0;
  for (int c = 0; c < h.cols && r0 < h.rows; ++c) {
    for (;;) {
      int pi = -1;
      i64 best = 0;
      for (int i = r0; i < h.rows; ++i) {
        i64 v = std::llabs(h(i, c));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
        }
      }
      if (pi < 0) break;
      if (pi != r0)
        for (int j = 0; j < h.cols; ++j) std::swap(h(r0, j), h(pi, j));
      if (h(r0, c) < 0)
        for (int j = 0; j < h.cols; ++j) h(r0, j) = -h(r0, j);
      bool done = true;
      for (int i = r0 + 1; i < h.rows; ++i) {
        i64 f = h(i, c) / h(r0, c);
        if (f != 0)
          for (int j = 0; j < h.cols; ++j) h(i, j) -= f * h(r0, j);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r0, c) != 0) {
      for (int i = 0; i < r0; ++i) {
        i64 f = h(i, c) / h(r0, c);
        if (h(i, c) % h(r0, c) < 0) --f;  // reduce into [0, pivot)
        if (f != 0)
          for (int j = 0; j < h.cols; ++j) h(i, j) -= f * h(r0, j);
      }
      ++r0;
    }
  }
  Mat out(r0, h.cols);
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < h.cols; ++j) out(i, j) = h(i, j);
  return out;
}

// Solve x * h = v over the integers for h in row HNF.  Returns false when v
// is not in the row lattice.
inline bool hnf_solve(const Mat& h, const std::vector<i64>& v, std::vector<i64>& x) {
  assert(static_cast<int>(v.size()) == h.cols);
  std::vector<i64> w = v;
  x.assign(h.rows, 0);
  for (int i = 0; i < h.rows; ++i) {
    int c = 0;
    while (c < h.cols && h(i, c) == 0) ++c;
    if (c == h.cols) continue;
    if (w[c] % h(i, c) != 0) return false;
    i64 f = w[c] / h(i, c);
    x[i] = f;
    if (f != 0)
      for (int j = 0; j < h.cols; ++j) w[j] -= f * h(i, j);
  }
  for (i64 t : w)
    if (t != 0) return false;
  return true;
}

}  // namespace parcoh
