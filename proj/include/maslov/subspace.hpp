#pragma once
#include <stdexcept>
#include <vector>

#include "maslov/matrix.hpp"

namespace maslov {

// Subspace of F^N held as its reduced row echelon basis. The RREF rows are a
// canonical form, so equality of subspaces is equality of matrices.
template <class F>
struct Subspace {
  using E = typename F::Elem;
  Mat<E> rows;             // dim x N, RREF, no zero rows
  std::vector<int> pivots; // pivot column of each basis row

  int dim() const { return rows.rows; }
  int ambient() const { return rows.cols; }

  static Subspace from_rows(const F& f, Mat<E> M) {
    auto piv = rref_inplace(f, M);
    Subspace s;
    s.rows = submat(M, 0, 0, static_cast<int>(piv.size()), M.cols);
    s.pivots = piv;
    return s;
  }

  static Subspace zero(const F&, int N) {
    Subspace s;
    s.rows = Mat<E>(0, N);
    return s;
  }

  static Subspace full(const F& f, int N) { return from_rows(f, identity(f, N)); }

  bool equals(const F& f, const Subspace& o) const { return mat_eq(f, rows, o.rows); }

  // coefficients of v in the RREF basis; valid only when v lies in the span
  std::vector<E> coords(const F& f, const std::vector<E>& v) const {
    std::vector<E> c(static_cast<std::size_t>(dim()), f.zero());
    for (int r = 0; r < dim(); ++r) c[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(pivots[r])];
    return c;
  }

  bool contains_vec(const F& f, const std::vector<E>& v) const {
    auto c = coords(f, v);
    std::vector<E> rec(static_cast<std::size_t>(ambient()), f.zero());
    for (int r = 0; r < dim(); ++r)
      for (int j = 0; j < ambient(); ++j)
        rec[static_cast<std::size_t>(j)] = f.add(rec[static_cast<std::size_t>(j)], f.mul(c[static_cast<std::size_t>(r)], rows.at(r, j)));
    for (int j = 0; j < ambient(); ++j)
      if (!f.eq(rec[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)])) return false;
    return true;
  }

  bool contains(const F& f, const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i) {
      std::vector<E> v(o.rows.row_ptr(i), o.rows.row_ptr(i) + o.ambient());
      if (!contains_vec(f, v)) return false;
    }
    return true;
  }

  // standard basis vectors at the non-pivot columns: representatives of a
  // basis of F^N modulo this subspace
  Mat<E> complement_std(const F& f) const {
    std::vector<char> is_piv(static_cast<std::size_t>(ambient()), 0);
    for (int c : pivots) is_piv[static_cast<std::size_t>(c)] = 1;
    Mat<E> M(ambient() - dim(), ambient());
    int r = 0;
    for (int c = 0; c < ambient(); ++c) {
      if (is_piv[static_cast<std::size_t>(c)]) continue;
      M.at(r, c) = f.one();
      ++r;
    }
    return M;
  }
};

template <class F>
Subspace<F> sum(const F& f, const Subspace<F>& A, const Subspace<F>& B) {
  return Subspace<F>::from_rows(f, vcat(A.rows, B.rows));
}

// Zassenhaus: reduce [A|A ; B|0], rows with zero left half carry the
// intersection in their right half.
template <class F>
Subspace<F> intersect(const F& f, const Subspace<F>& A, const Subspace<F>& B) {
  int N = A.ambient();
  if (B.ambient() != N) throw std::invalid_argument("intersect: ambient mismatch");
  Mat<typename F::Elem> M(A.dim() + B.dim(), 2 * N);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < N; ++j) M.at(i, j) = M.at(i, N + j) = A.rows.at(i, j);
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < N; ++j) M.at(A.dim() + i, j) = B.rows.at(i, j);
  auto piv = rref_inplace(f, M);
  Mat<typename F::Elem> R(0, N);
  for (int r = 0; r < static_cast<int>(piv.size()); ++r) {
    if (piv[static_cast<std::size_t>(r)] >= N) {
      R = vcat(R, submat(M, r, N, static_cast<int>(piv.size()) - r, N));
      break;
    }
  }
  return Subspace<F>::from_rows(f, R);
}

// rows A with S = { x : A x = 0 }
template <class F>
Mat<typename F::Elem> annihilator(const F& f, const Subspace<F>& S) {
  return kernel_mat(f, S.rows);
}

template <class F>
Subspace<F> kernel_space(const F& f, const Mat<typename F::Elem>& A) {
  return Subspace<F>::from_rows(f, kernel_mat(f, A));
}

// image of the columns of A (the image of the map x -> A x)
template <class F>
Subspace<F> column_space(const F& f, const Mat<typename F::Elem>& A) {
  return Subspace<F>::from_rows(f, transpose(A));
}

// F^N modulo a subspace W: class coordinates and a fixed lift per class.
// proj * lifts^T = I and proj kills W.
template <class F>
struct Quotient {
  using E = typename F::Elem;
  Subspace<F> W;
  Mat<E> lifts;  // q x N rows: representatives of a quotient basis
  Mat<E> proj;   // q x N: class coordinates of x are proj * x
  int q = 0;

  static Quotient make(const F& f, const Subspace<F>& W) {
    Quotient out;
    out.W = W;
    int N = W.ambient();
    out.lifts = W.complement_std(f);
    out.q = out.lifts.rows;
    Mat<E> S = vcat(W.rows, out.lifts);  // N x N, invertible
    Mat<E> Sinv_T = transpose(inverse(f, S));
    out.proj = submat(Sinv_T, W.dim(), 0, out.q, N);
    return out;
  }

  std::vector<E> cls(const F& f, const std::vector<E>& x) const { return apply(f, proj, x); }
};

}  // namespace maslov
