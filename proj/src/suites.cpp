#include "maslov/suites.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "maslov/bar.hpp"
#include "maslov/chain.hpp"
#include "maslov/cone.hpp"
#include "maslov/dual.hpp"
#include "maslov/kashiwara.hpp"
#include "maslov/sheaf.hpp"
#include "maslov/weil.hpp"
#include "maslov/witt.hpp"

namespace maslov {

namespace {

template <class F>
std::vector<typename F::Elem> random_kernel_vec(const F& f, const Core<F>& c,
                                                std::mt19937_64& rng) {
  auto coeff = random_vector(f, c.k, rng);
  return apply(f, transpose(c.K.rows), coeff);
}

template <class F>
bool radical_check(const F& f, const Core<F>& c) {
  auto radE = radical_in_E(f, c);
  if (radE.dim() != rank(f, c.partial)) return false;
  for (int j = 0; j < c.partial.cols; ++j) {
    std::vector<typename F::Elem> col;
    for (int r = 0; r < c.partial.rows; ++r) col.push_back(c.partial.at(r, j));
    if (!radE.contains_vec(f, col)) return false;
  }
  return true;
}

template <class F>
bool dims_check(const F& f, const Core<F>& c) {
  (void)f;
  int ca = c.cap_all.dim();
  return c.k == c.n * c.m - 2 * c.m + ca && c.tdim == (c.n - 2) * c.m - c.D + 2 * ca;
}

template <class F>
bool alternate_check(const F& f, const Core<F>& c, std::mt19937_64& rng) {
  for (int it = 0; it < 4; ++it) {
    auto v = random_kernel_vec(f, c, rng);
    auto w = random_kernel_vec(f, c, rng);
    auto bv = block_vectors(f, c, v);
    auto bw = block_vectors(f, c, w);
    auto upper = f.zero();
    for (int i = 0; i < c.n; ++i)
      for (int j = i + 1; j < c.n; ++j)
        upper = f.add(upper, sym_B(f, c.J, bv[static_cast<std::size_t>(i)],
                                   bw[static_cast<std::size_t>(j)]));
    if (!f.eq(q_form(f, c, v, w), f.neg(upper))) return false;
  }
  return true;
}

template <class F>
bool dihedral_check(const F& f, const Core<F>& c, std::mt19937_64& rng) {
  LagTuple<F> rot, rev;
  rot.m = rev.m = c.m;
  rot.n = rev.n = c.n;
  for (int i = 0; i < c.n; ++i) {
    rot.L.push_back(c.t.L[static_cast<std::size_t>((i + 1) % c.n)]);
    rev.L.push_back(c.t.L[static_cast<std::size_t>(c.n - 1 - i)]);
  }
  auto cr = compute_core(f, rot);
  auto cv = compute_core(f, rev);
  auto permute = [&](const std::vector<typename F::Elem>& x, bool reversed) {
    std::vector<typename F::Elem> out(static_cast<std::size_t>(c.edim), f.zero());
    for (int i = 0; i < c.n; ++i) {
      int src = reversed ? c.n - 1 - i : (i + 1) % c.n;
      for (int r = 0; r < c.m; ++r)
        out[static_cast<std::size_t>(i * c.m + r)] =
            x[static_cast<std::size_t>(src * c.m + r)];
    }
    return out;
  };
  for (int it = 0; it < 3; ++it) {
    auto v = random_kernel_vec(f, c, rng);
    auto w = random_kernel_vec(f, c, rng);
    auto q = q_form(f, c, v, w);
    if (!f.eq(q_form(f, cr, permute(v, false), permute(w, false)), q)) return false;
    if (!f.eq(q_form(f, cv, permute(v, true), permute(w, true)), f.neg(q))) return false;
  }
  return true;
}

template <class F>
Mat<typename F::Elem> pullback(const F& f, const Mat<typename F::Elem>& G,
                               const Mat<typename F::Elem>& M) {
  return mul(f, transpose(M), mul(f, G, M));
}

template <class F>
bool chain_isometry_check(const F& f, const Core<F>& c, std::mt19937_64& rng, int& k0_out,
                          ChainSplit<F>& cs_out) {
  int k0 = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(c.n - 3));
  k0_out = k0;
  auto cs = chain_split(f, c, k0);
  if (cs.sub.dim != cs.left.tdim + cs.right.tdim) return false;
  auto M = hcat(cs.mu1, cs.mu2);
  if (rank(f, M) != cs.sub.dim) return false;
  auto got = pullback(f, cs.sub.G, M);
  Mat<typename F::Elem> want(cs.sub.dim, cs.sub.dim);
  for (int r = 0; r < cs.left.tdim; ++r)
    for (int q = 0; q < cs.left.tdim; ++q) want.at(r, q) = cs.left.G_T.at(r, q);
  for (int r = 0; r < cs.right.tdim; ++r)
    for (int q = 0; q < cs.right.tdim; ++q)
      want.at(cs.left.tdim + r, cs.left.tdim + q) = cs.right.G_T.at(r, q);
  cs_out = cs;
  return mat_eq(f, got, want);
}

template <class F>
bool bar_check(const F& f, const Core<F>& c) {
  auto b = bar_space(f, c);
  if (b.Q.q != (c.n + 2) * c.m - c.D) return false;
  if (b.radical.dim() != rank(f, b.dtilde)) return false;
  for (int j = 0; j < b.dtilde.cols; ++j) {
    std::vector<typename F::Elem> col;
    for (int r = 0; r < b.dtilde.rows; ++r) col.push_back(b.dtilde.at(r, j));
    if (!b.radical.contains_vec(f, col)) return false;
  }
  if (b.sub.dim != c.tdim) return false;
  if (rank(f, b.iso) != c.tdim) return false;
  return mat_eq(f, pullback(f, c.G_T, b.iso), b.sub.G);
}

template <class F>
bool cone_check(const F& f, const Core<F>& c) {
  auto cd = core_datum(f, c);
  auto co = make_cone(f, cd);
  if (!mat_eq(f, mul(f, co.e, co.b), cd.sigma)) return false;
  if (!mat_eq(f, mul(f, co.b, cd.d), mul(f, co.c, cd.phim1))) return false;
  if (!mat_eq(f, pullback(f, co.F0, co.b), cd.phi0)) return false;
  if (co.H0.dim != c.tdim) return false;
  auto Phi = cone_class_of_T(f, c, co);
  if (rank(f, Phi) != c.tdim) return false;
  return mat_eq(f, pullback(f, co.H0.G, Phi), c.G_T);
}

template <class F>
bool dual_check(const F& f, const Core<F>& c) {
  auto ds = dual_space(f, c);
  if (!is_symmetric(f, ds.gram)) return false;
  if (rank(f, ds.Lambda) != c.tdim) return false;
  auto want = mul(f, transpose(ds.Lambda), mul(f, inverse(f, c.G_T), ds.Lambda));
  if (!mat_eq(f, ds.gram, want)) return false;
  int lhs = 0, rhs = 0;
  for (int x : ds.d) lhs += 2 * x;
  for (int i = 0; i < c.n; ++i) {
    const auto& a = c.t.L[static_cast<std::size_t>(i)];
    const auto& b = c.t.L[static_cast<std::size_t>((i + 1) % c.n)];
    rhs += sum(f, a, b).dim() - intersect(f, a, b).dim();
  }
  return lhs == rhs;
}

template <class F>
bool sheaf_check(const F& f, const Core<F>& c, std::mt19937_64& rng) {
  for (int which = 0; which < 2; ++which) {
    auto S = which == 0 ? radial_complex(f, c) : fan_complex(f, c);
    auto h = h_dims(f, S);
    int ca = c.cap_all.dim();
    if (h[0] != ca || h[1] != c.tdim || h[2] != ca) return false;
    for (int it = 0; it < 3; ++it) {
      auto v = random_kernel_vec(f, c, rng);
      auto w = random_kernel_vec(f, c, rng);
      auto a = kernel_cocycle(f, c, S, v);
      auto b = kernel_cocycle(f, c, S, w);
      auto q = q_form(f, c, v, w);
      if (!f.eq(cup_value(f, c.J, S, a, b), f.neg(q))) return false;
      if (!f.eq(cup_value(f, c.J, S, a, b, true), q)) return false;
    }
  }
  return true;
}

int sig_diff(const QField& f, const Mat<mpq_class>& G) {
  auto s = signature(f, G);
  return s.first - s.second;
}

}  // namespace

SuiteResult run_invariant_suite_fp(unsigned p, int m, int n, std::uint64_t seed) {
  FpField f(p);
  std::mt19937_64 rng(seed);
  auto c = compute_core(f, mixed_tuple(f, m, n, rng));
  SuiteResult out;
  out.emplace_back("radical_is_boundary_image", radical_check(f, c));
  out.emplace_back("dimension_formulas", dims_check(f, c));
  out.emplace_back("alternate_form_agrees", alternate_check(f, c, rng));
  out.emplace_back("dihedral_symmetry", dihedral_check(f, c, rng));
  if (c.n >= 4) {
    int k0 = 0;
    ChainSplit<FpField> cs;
    bool iso = chain_isometry_check(f, c, rng, k0, cs);
    out.emplace_back("chain_isometry", iso);
    bool wadd = iso && witt_equal(witt_class(f, c.G_T),
                                  witt_add(f, witt_class(f, cs.left.G_T),
                                           witt_class(f, cs.right.G_T)));
    out.emplace_back("chain_witt_additive", wadd);
  }
  if (c.n == 3) {
    auto kw = kashiwara_compare(f, c);
    bool pull = rank(f, kw.mubar) == c.k &&
                mat_eq(f, pullback(f, c.G_K, kw.mubar), kw.sub.G);
    out.emplace_back("kashiwara_witness", pull);
    out.emplace_back("kashiwara_witt_equal",
                     witt_equal(witt_class(f, kw.G), witt_class(f, c.G_T)));
  }
  out.emplace_back("bar_space_class", bar_check(f, c));
  out.emplace_back("cone_factorization", cone_check(f, c));
  if (c.tdim <= 6) out.emplace_back("dual_form_inverse", dual_check(f, c));
  out.emplace_back("sheaf_cup_is_minus_q", sheaf_check(f, c, rng));
  return out;
}

SuiteResult run_invariant_suite_q(int m, int n, std::uint64_t seed) {
  QField f;
  std::mt19937_64 rng(seed);
  auto c = compute_core(f, mixed_tuple(f, m, n, rng));
  SuiteResult out;
  out.emplace_back("radical_is_boundary_image", radical_check(f, c));
  out.emplace_back("dimension_formulas", dims_check(f, c));
  out.emplace_back("alternate_form_agrees", alternate_check(f, c, rng));
  out.emplace_back("dihedral_symmetry", dihedral_check(f, c, rng));
  if (c.n >= 4) {
    int k0 = 0;
    ChainSplit<QField> cs;
    bool iso = chain_isometry_check(f, c, rng, k0, cs);
    out.emplace_back("chain_isometry", iso);
    bool sadd = iso && sig_diff(f, c.G_T) ==
                           sig_diff(f, cs.left.G_T) + sig_diff(f, cs.right.G_T);
    out.emplace_back("chain_signature_additive", sadd);
  }
  if (c.n == 3) {
    auto kw = kashiwara_compare(f, c);
    bool pull = rank(f, kw.mubar) == c.k &&
                mat_eq(f, pullback(f, c.G_K, kw.mubar), kw.sub.G);
    out.emplace_back("kashiwara_witness", pull);
    out.emplace_back("kashiwara_signature_equal", sig_diff(f, kw.G) == sig_diff(f, c.G_T));
  }
  out.emplace_back("bar_space_class", bar_check(f, c));
  out.emplace_back("cone_factorization", cone_check(f, c));
  if (c.tdim <= 6) out.emplace_back("dual_form_inverse", dual_check(f, c));
  out.emplace_back("sheaf_cup_is_minus_q", sheaf_check(f, c, rng));
  return out;
}

WeilTrial run_weil_trial(unsigned p, int m, int n, unsigned psi_twist, std::uint64_t seed,
                         double tol) {
  FpField f(p);
  Psi psi(f, static_cast<std::uint16_t>(psi_twist % p));
  std::mt19937_64 rng(seed);
  auto c = compute_core(f, mixed_tuple(f, m, n, rng));
  auto co = cycle_operator(f, psi, c);
  WeilTrial w;
  w.residual = co.residual;
  w.scalarsum = co.scalar;
  w.predicted = predicted_scalar(f, psi, c);
  w.ok = co.residual <= tol && std::abs(co.scalar - w.predicted) <= tol;
  return w;
}

namespace {

template <class F>
bool cup_matches(const F& f, const Core<F>& c, const SheafComplex<F>& S, bool flipped) {
  std::vector<std::vector<typename F::Elem>> cocy;
  for (int r = 0; r < c.k; ++r) {
    std::vector<typename F::Elem> v(c.K.rows.row_ptr(r), c.K.rows.row_ptr(r) + c.edim);
    cocy.push_back(kernel_cocycle(f, c, S, v));
  }
  for (int a = 0; a < c.k; ++a)
    for (int b = 0; b < c.k; ++b) {
      auto want = flipped ? c.G_K.at(a, b) : f.neg(c.G_K.at(a, b));
      if (!f.eq(cup_value(f, c.J, S, cocy[static_cast<std::size_t>(a)],
                          cocy[static_cast<std::size_t>(b)], flipped),
                want))
        return false;
    }
  return true;
}

template <class F>
ordered_json cup_lines(const F& f, const Core<F>& c) {
  ordered_json out = ordered_json::array();
  int ca = c.cap_all.dim();
  for (int which = 0; which < 2; ++which) {
    auto S = which == 0 ? radial_complex(f, c) : fan_complex(f, c);
    auto h = h_dims(f, S);
    bool straight = cup_matches(f, c, S, false);
    bool flipped = cup_matches(f, c, S, true);
    ordered_json j;
    j["triangulation"] = which == 0 ? "radial" : "fan";
    j["h"] = ordered_json::array({h[0], h[1], h[2]});
    j["h_expected"] = ordered_json::array({ca, c.tdim, ca});
    j["cup_vs_q"] = straight ? "cup = -q: exact" : "MISMATCH";
    j["flipped_vs_q"] = flipped ? "cup = +q: exact" : "MISMATCH";
    j["ok"] = straight && flipped && h[0] == ca && h[1] == c.tdim && h[2] == ca;
    out.push_back(std::move(j));
  }
  return out;
}

template <class F>
ordered_json dims_json(const F& f, const Core<F>& c) {
  (void)f;
  ordered_json d;
  d["E"] = c.edim;
  d["K"] = c.k;
  ordered_json caps = ordered_json::array();
  for (const auto& s : c.cap) caps.push_back(s.dim());
  d["cap"] = std::move(caps);
  d["cap_all"] = c.cap_all.dim();
  d["T"] = c.tdim;
  d["bar"] = (c.n + 2) * c.m - c.D;
  return d;
}

}  // namespace

ordered_json compute_report(const Problem& pr) {
  ordered_json rep;
  double tol = pr.has_tolerance ? pr.tolerance : 1e-9;
  if (pr.rational) {
    QField f;
    auto c = compute_core(f, build_tuple(f, pr));
    rep["field"] = ordered_json{{"kind", "rational"}};
    rep["m"] = c.m;
    rep["n"] = c.n;
    rep["dims"] = dims_json(f, c);
    rep["gram_T"] = rat_mat_json(c.G_T);
    auto s = signature(f, c.G_T);
    rep["signature"] = ordered_json{{"pos", s.first}, {"neg", s.second}};
    bool cup = cup_matches(f, c, radial_complex(f, c), false) &&
               cup_matches(f, c, fan_complex(f, c), false);
    rep["cup_agrees"] = cup;
    return rep;
  }
  FpField f(pr.p);
  if (pr.psi_twist % f.p == 0) throw ProblemError("psi_twist must be invertible mod p");
  Psi psi(f, static_cast<std::uint16_t>(pr.psi_twist % f.p));
  auto c = compute_core(f, build_tuple(f, pr));
  rep["field"] = ordered_json{{"kind", "prime"}, {"p", pr.p}};
  rep["m"] = c.m;
  rep["n"] = c.n;
  rep["psi_twist"] = pr.psi_twist;
  rep["dims"] = dims_json(f, c);
  rep["gram_T"] = fp_mat_json(c.G_T);
  auto w = witt_class(f, c.G_T);
  ordered_json wd = ordered_json::array();
  for (auto x : w.diag) wd.push_back(int(x));
  rep["witt"] = ordered_json{{"rank", w.rank}, {"diag", std::move(wd)}};
  rep["gamma_tau"] = complex_json(gamma_of_witt(f, psi, w));
  rep["gamma_minus_tau"] = complex_json(gamma_of_witt(f, psi, witt_neg(f, w)));
  bool cup = cup_matches(f, c, radial_complex(f, c), false) &&
             cup_matches(f, c, fan_complex(f, c), false);
  rep["cup_agrees"] = cup;
  double sz = std::pow(double(f.p), c.m);
  if (sz <= double(kModelCap)) {
    auto co = cycle_operator(f, psi, c);
    auto pred = predicted_scalar(f, psi, c);
    ordered_json wj;
    wj["scalar"] = complex_json(co.scalar);
    wj["predicted"] = complex_json(pred);
    wj["residual"] = co.residual;
    wj["matches"] = co.residual <= tol && std::abs(co.scalar - pred) <= tol;
    rep["weil"] = std::move(wj);
  }
  return rep;
}

ordered_json cup_report(const Problem& pr) {
  if (pr.rational) {
    QField f;
    auto c = compute_core(f, build_tuple(f, pr));
    return cup_lines(f, c);
  }
  FpField f(pr.p);
  auto c = compute_core(f, build_tuple(f, pr));
  return cup_lines(f, c);
}

int thread_count_from_env() {
  const char* s = std::getenv("MASLOV_THREADS");
  if (s != nullptr) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v <= 64) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(hw > 8 ? 8 : hw);
}

void run_parallel(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  if (threads > count) threads = count;
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace maslov
