#pragma once
// Small dense complex matrices for the unitary side; sizes stay at or below
// the model cap, so no sparsity or blocking is needed.

#include <complex>
#include <cstddef>
#include <vector>

namespace maslov {

struct CMat {
  int rows = 0, cols = 0;
  std::vector<std::complex<double>> a;
  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

inline CMat cidentity(int n) {
  CMat M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = 1.0;
  return M;
}

inline CMat cmul(const CMat& A, const CMat& B) {
  CMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      auto v = A.at(i, k);
      if (v == std::complex<double>(0.0)) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

inline std::complex<double> ctrace(const CMat& A) {
  std::complex<double> t = 0.0;
  for (int i = 0; i < A.rows && i < A.cols; ++i) t += A.at(i, i);
  return t;
}

inline double max_abs_diff(const CMat& A, const CMat& B) {
  double m = 0.0;
  for (std::size_t i = 0; i < A.a.size(); ++i) m = std::max(m, std::abs(A.a[i] - B.a[i]));
  return m;
}

// max |A - s I|
inline double scalar_residual(const CMat& A, std::complex<double> s) {
  double m = 0.0;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      m = std::max(m, std::abs(A.at(i, j) - (i == j ? s : std::complex<double>(0.0))));
  return m;
}

}  // namespace maslov
