#pragma once

#include <cstdint>
#include <vector>

#include "toric/bigint.hpp"

namespace toric {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  T& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using MatI = Mat<std::int64_t>;
using MatB = Mat<BigInt>;

/// Smith normal form over Z. divisors are the positive invariant factors
/// d1 | d2 | ... When with_transforms, u is unimodular with
/// (u * input) column-reduced to diag(divisors), and u_inv = u^-1.
/// Column transforms are never tracked; no caller needs them.
struct SmithResult {
  std::vector<BigInt> divisors;
  int rank = 0;
  MatB u, u_inv;
  bool with_transforms = false;
};

SmithResult smith_normal_form(const MatI& m, bool with_transforms = false);

BigInt determinant(const MatI& m);

/// Exact inverse of an integer matrix whose inverse is again integral
/// (determinant +-1); throws otherwise.
MatI inverse_unimodular(const MatI& q);

std::vector<BigInt> mat_vec(const MatB& m, const std::vector<BigInt>& v);

}  // namespace toric
