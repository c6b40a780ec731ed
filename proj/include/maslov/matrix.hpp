#pragma once
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maslov {

// Dense row-major matrix over an exact field element type. Vectors are
// columns: a map is applied as y = A x, and a bilinear form as x^T G y.
// Zero-by-n and n-by-zero shapes are legal everywhere.
template <class E>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  E& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  E* row_ptr(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const E* row_ptr(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

template <class F>
using MatOf = Mat<typename F::Elem>;

template <class F>
Mat<typename F::Elem> identity(const F& f, int n) {
  Mat<typename F::Elem> I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = f.one();
  return I;
}

template <class E>
Mat<E> transpose(const Mat<E>& A) {
  Mat<E> T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

template <class F>
Mat<typename F::Elem> mul(const F& f, const Mat<typename F::Elem>& A, const Mat<typename F::Elem>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mul: shape mismatch");
  Mat<typename F::Elem> C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const auto& c = A.at(i, k);
      if (!f.is_zero(c)) f.row_axpy(C.row_ptr(i), B.row_ptr(k), c, static_cast<std::size_t>(B.cols));
    }
  }
  return C;
}

template <class F>
Mat<typename F::Elem> add(const F& f, const Mat<typename F::Elem>& A, const Mat<typename F::Elem>& B) {
  if (!A.same_shape(B)) throw std::invalid_argument("add: shape mismatch");
  Mat<typename F::Elem> C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.add(C.a[i], B.a[i]);
  return C;
}

template <class F>
Mat<typename F::Elem> sub(const F& f, const Mat<typename F::Elem>& A, const Mat<typename F::Elem>& B) {
  if (!A.same_shape(B)) throw std::invalid_argument("sub: shape mismatch");
  Mat<typename F::Elem> C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.sub(C.a[i], B.a[i]);
  return C;
}

template <class F>
Mat<typename F::Elem> neg(const F& f, const Mat<typename F::Elem>& A) {
  Mat<typename F::Elem> C = A;
  for (auto& x : C.a) x = f.neg(x);
  return C;
}

template <class F>
Mat<typename F::Elem> scalar_mul(const F& f, const typename F::Elem& c, const Mat<typename F::Elem>& A) {
  Mat<typename F::Elem> C = A;
  for (auto& x : C.a) x = f.mul(c, x);
  return C;
}

template <class F>
bool mat_eq(const F& f, const Mat<typename F::Elem>& A, const Mat<typename F::Elem>& B) {
  if (!A.same_shape(B)) return false;
  for (std::size_t i = 0; i < A.a.size(); ++i)
    if (!f.eq(A.a[i], B.a[i])) return false;
  return true;
}

template <class F>
bool is_zero_mat(const F& f, const Mat<typename F::Elem>& A) {
  for (const auto& x : A.a)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class E>
Mat<E> hcat(const Mat<E>& A, const Mat<E>& B) {
  if (A.rows != B.rows) throw std::invalid_argument("hcat: row mismatch");
  Mat<E> C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

template <class E>
Mat<E> vcat(const Mat<E>& A, const Mat<E>& B) {
  if (A.cols != B.cols) throw std::invalid_argument("vcat: col mismatch");
  Mat<E> C(A.rows + B.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

template <class E>
Mat<E> submat(const Mat<E>& A, int r0, int c0, int nr, int nc) {
  Mat<E> C(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) C.at(i, j) = A.at(r0 + i, c0 + j);
  return C;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class F>
std::vector<int> rref_inplace(const F& f, Mat<typename F::Elem>& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i) {
      if (!f.is_zero(A.at(i, c))) { sel = i; break; }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    }
    auto d = f.inv(A.at(r, c));
    if (!f.eq(d, f.one())) f.row_scale(A.row_ptr(r), d, static_cast<std::size_t>(A.cols));
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      const auto& x = A.at(i, c);
      if (!f.is_zero(x)) f.row_axpy(A.row_ptr(i), A.row_ptr(r), f.neg(x), static_cast<std::size_t>(A.cols));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(const F& f, Mat<typename F::Elem> A) {
  return static_cast<int>(rref_inplace(f, A).size());
}

// Basis (as rows) of { x : A x = 0 }.
template <class F>
Mat<typename F::Elem> kernel_mat(const F& f, Mat<typename F::Elem> A) {
  auto piv = rref_inplace(f, A);
  std::vector<char> is_piv(A.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  int nf = A.cols - static_cast<int>(piv.size());
  Mat<typename F::Elem> K(nf, A.cols);
  int row = 0;
  for (int c = 0; c < A.cols; ++c) {
    if (is_piv[c]) continue;
    K.at(row, c) = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r) K.at(row, piv[r]) = f.neg(A.at(static_cast<int>(r), c));
    ++row;
  }
  return K;
}

template <class F>
Mat<typename F::Elem> inverse(const F& f, const Mat<typename F::Elem>& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
  auto aug = hcat(A, identity(f, A.rows));
  auto piv = rref_inplace(f, aug);
  if (static_cast<int>(piv.size()) != A.rows) throw std::domain_error("inverse: singular");
  return submat(aug, 0, A.rows, A.rows, A.rows);
}

// One solution x of A x = b, or empty if inconsistent.
template <class F>
bool solve(const F& f, const Mat<typename F::Elem>& A, const std::vector<typename F::Elem>& b,
           std::vector<typename F::Elem>& x) {
  Mat<typename F::Elem> aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[static_cast<std::size_t>(i)];
  }
  auto piv = rref_inplace(f, aug);
  if (!piv.empty() && piv.back() == A.cols) return false;
  x.assign(static_cast<std::size_t>(A.cols), f.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), A.cols);
  return true;
}

template <class F>
std::vector<typename F::Elem> apply(const F& f, const Mat<typename F::Elem>& A,
                                    const std::vector<typename F::Elem>& x) {
  if (static_cast<int>(x.size()) != A.cols) throw std::invalid_argument("apply: shape mismatch");
  std::vector<typename F::Elem> y(static_cast<std::size_t>(A.rows), f.zero());
  for (int i = 0; i < A.rows; ++i) {
    auto acc = f.zero();
    for (int j = 0; j < A.cols; ++j) acc = f.add(acc, f.mul(A.at(i, j), x[j]));
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

// x^T G y
template <class F>
typename F::Elem bilinear(const F& f, const Mat<typename F::Elem>& G,
                          const std::vector<typename F::Elem>& x,
                          const std::vector<typename F::Elem>& y) {
  auto gy = apply(f, G, y);
  auto acc = f.zero();
  for (std::size_t i = 0; i < gy.size(); ++i) acc = f.add(acc, f.mul(x[i], gy[i]));
  return acc;
}

template <class F>
typename F::Elem det(const F& f, Mat<typename F::Elem> A) {
  if (A.rows != A.cols) throw std::invalid_argument("det: not square");
  auto out = f.one();
  for (int c = 0; c < A.cols; ++c) {
    int sel = -1;
    for (int i = c; i < A.rows; ++i) {
      if (!f.is_zero(A.at(i, c))) { sel = i; break; }
    }
    if (sel < 0) return f.zero();
    if (sel != c) {
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(c, j));
      out = f.neg(out);
    }
    out = f.mul(out, A.at(c, c));
    auto inv = f.inv(A.at(c, c));
    for (int i = c + 1; i < A.rows; ++i) {
      const auto& x = A.at(i, c);
      if (!f.is_zero(x)) f.row_axpy(A.row_ptr(i), A.row_ptr(c), f.neg(f.mul(x, inv)), static_cast<std::size_t>(A.cols));
    }
  }
  return out;
}

template <class F>
bool is_symmetric(const F& f, const Mat<typename F::Elem>& G) {
  if (G.rows != G.cols) return false;
  for (int i = 0; i < G.rows; ++i)
    for (int j = i + 1; j < G.cols; ++j)
      if (!f.eq(G.at(i, j), G.at(j, i))) return false;
  return true;
}

}  // namespace maslov
