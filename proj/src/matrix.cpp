#include "toric/matrix.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/common.hpp"

namespace toric {

namespace {

// Row-reduction state for the Smith normal form. Row operations are mirrored
// into u (and inversely into u_inv) when tracking is on; column operations
// touch only the working matrix.
template <class T>
struct SnfState {
  Mat<T> a;
  Mat<T> u, uinv;
  bool track;

  explicit SnfState(const MatI& m, bool track_transforms) : track(track_transforms) {
    a = Mat<T>(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) a(i, j) = T(m(i, j));
    if (track) {
      u = Mat<T>::identity(m.rows);
      uinv = Mat<T>::identity(m.rows);
    }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a(i, c), a(j, c));
    if (track) {
      for (int c = 0; c < u.cols; ++c) std::swap(u(i, c), u(j, c));
      for (int r = 0; r < uinv.rows; ++r) std::swap(uinv(r, i), uinv(r, j));
    }
  }

  // row[dst] += q * row[src]; u_inv gets the inverse column operation.
  void add_row(int dst, int src, const T& q) {
    if (q == T(0)) return;
    for (int c = 0; c < a.cols; ++c) a(dst, c) += q * a(src, c);
    if (track) {
      for (int c = 0; c < u.cols; ++c) u(dst, c) += q * u(src, c);
      for (int r = 0; r < uinv.rows; ++r) uinv(r, src) -= q * uinv(r, dst);
    }
  }

  void neg_row(int i) {
    for (int c = 0; c < a.cols; ++c) a(i, c) = -a(i, c);
    if (track) {
      for (int c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
      for (int r = 0; r < uinv.rows; ++r) uinv(r, i) = -uinv(r, i);
    }
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a(r, i), a(r, j));
  }

  void add_col(int dst, int src, const T& q) {
    if (q == T(0)) return;
    for (int r = 0; r < a.rows; ++r) a(r, dst) += q * a(r, src);
  }
};

template <class T>
SmithResult snf_core(const MatI& m, bool with_transforms) {
  SnfState<T> s(m, with_transforms);
  const int rows = m.rows, cols = m.cols;
  const int bound = std::min(rows, cols);
  int t = 0;
  while (t < bound) {
    // Smallest-magnitude pivot keeps growth down; boundary matrices are
    // mostly +-1 so the reduction below rarely iterates.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s.a(i, j) != T(0) &&
            (pi < 0 || abs_val(s.a(i, j)) < abs_val(s.a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool again = false;
      for (int i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == T(0)) continue;
        s.add_row(i, t, -(s.a(i, t) / s.a(t, t)));
        if (s.a(i, t) != T(0)) {
          s.swap_rows(t, i);  // remainder is a strictly smaller pivot
          again = true;
        }
      }
      if (again) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == T(0)) continue;
        s.add_col(j, t, -(s.a(t, j) / s.a(t, t)));
        if (s.a(t, j) != T(0)) {
          s.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // Divisibility: pull in a row with a non-multiple so the next pass
      // shrinks the pivot to the gcd; guarantees d1 | d2 | ...
      const T& p = s.a(t, t);
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (s.a(i, j) % p != T(0)) {
            s.add_row(t, i, T(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (s.a(t, t) < T(0)) s.neg_row(t);
    ++t;
  }

  SmithResult res;
  res.rank = t;
  res.divisors.reserve(t);
  for (int i = 0; i < t; ++i) res.divisors.push_back(to_big(s.a(i, i)));
  res.with_transforms = with_transforms;
  if (with_transforms) {
    res.u = MatB(rows, rows);
    res.u_inv = MatB(rows, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) {
        res.u(i, j) = to_big(s.u(i, j));
        res.u_inv(i, j) = to_big(s.uinv(i, j));
      }
  }
  return res;
}

template <class T>
BigInt det_core(const MatI& m) {
  const int n = m.rows;
  Mat<T> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = T(m(i, j));
  // Bareiss fraction-free elimination; every division is exact.
  T prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != T(0)) {
          piv = i;
          break;
        }
      if (piv < 0) return BigInt(0);
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  BigInt d = to_big(a(n - 1, n - 1));
  return sign < 0 ? BigInt(-d) : d;
}

}  // namespace

SmithResult smith_normal_form(const MatI& m, bool with_transforms) {
  return run_lanes([&](auto tag) {
    using T = decltype(tag);
    return snf_core<T>(m, with_transforms);
  });
}

BigInt determinant(const MatI& m) {
  if (m.rows != m.cols) throw Error("determinant of non-square matrix");
  if (m.rows == 0) return BigInt(1);
  return run_lanes([&](auto tag) {
    using T = decltype(tag);
    return det_core<T>(m);
  });
}

std::vector<BigInt> mat_vec(const MatB& m, const std::vector<BigInt>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw Error("mat_vec size mismatch");
  std::vector<BigInt> out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

MatI inverse_unimodular(const MatI& q) {
  using Rat = boost::multiprecision::cpp_rational;
  if (q.rows != q.cols) throw Error("matrix inverse: non-square matrix");
  const int k = q.rows;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(k),
                                  std::vector<Rat>(2 * static_cast<size_t>(k), Rat(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = q(i, j);
    a[i][static_cast<size_t>(k + i)] = 1;
  }
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int i = col; i < k; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error("matrix inverse: singular matrix");
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
    Rat scale = Rat(1) / a[col][col];
    for (int j = 0; j < 2 * k; ++j) a[col][j] *= scale;
    for (int i = 0; i < k; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  MatI out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Rat& v = a[i][static_cast<size_t>(k + j)];
      if (denominator(v) != 1) throw Error("matrix inverse: not integral");
      out(i, j) = to_int64(BigInt(numerator(v)));
    }
  return out;
}

}  // namespace toric
