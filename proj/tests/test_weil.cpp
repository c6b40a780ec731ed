#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "maslov/weil.hpp"

using namespace maslov;
using cplx = std::complex<double>;

namespace {

std::vector<std::uint16_t> rnd_vec(const FpField& f, int len, std::mt19937_64& rng) {
  std::vector<std::uint16_t> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = static_cast<std::uint16_t>(rng() % f.p);
  return v;
}

Subspace<FpField> fline(const FpField& f, int a, int b) {
  Mat<std::uint16_t> r(1, 2);
  r.at(0, 0) = f.from_int(a);
  r.at(0, 1) = f.from_int(b);
  return Subspace<FpField>::from_rows(f, r);
}

std::vector<std::uint16_t> random_K_elem(const FpField& f, const Core<FpField>& c,
                                         std::mt19937_64& rng) {
  std::vector<std::uint16_t> v(static_cast<std::size_t>(c.edim), 0);
  for (int r = 0; r < c.k; ++r)
    f.row_axpy(v.data(), c.K.rows.row_ptr(r), static_cast<std::uint16_t>(rng() % f.p),
               static_cast<std::size_t>(c.edim));
  return v;
}

}  // namespace

TEST_CASE("model transversal indexing") {
  std::mt19937_64 rng(91);
  for (unsigned p : {3u, 5u}) {
    FpField f(p);
    for (int m : {1, 2}) {
      auto L = random_lagrangian(f, m, rng);
      auto md = make_model(f, L);
      CHECK(md.dim == static_cast<int>(std::pow(p, m)));
      for (int it = 0; it < 20; ++it) {
        auto v = rnd_vec(f, 2 * m, rng);
        auto [idx, a] = model_index(f, md, v);
        CHECK(L.contains_vec(f, a));
        for (int r = 0; r < 2 * m; ++r)
          CHECK(f.eq(v[static_cast<std::size_t>(r)],
                     f.add(md.pts[static_cast<std::size_t>(idx)][static_cast<std::size_t>(r)],
                           a[static_cast<std::size_t>(r)])));
      }
    }
  }
}

TEST_CASE("heisenberg action") {
  std::mt19937_64 rng(92);
  FpField f(3);
  Psi psi(f);
  for (int m : {1, 2}) {
    auto J = symplectic_J(f, m);
    auto L = random_lagrangian(f, m, rng);
    auto md = make_model(f, L);
    for (int it = 0; it < 10; ++it) {
      auto v = rnd_vec(f, 2 * m, rng);
      auto w = rnd_vec(f, 2 * m, rng);
      auto t = static_cast<std::uint16_t>(rng() % f.p);
      auto s = static_cast<std::uint16_t>(rng() % f.p);
      // group law rho(v,t) rho(w,s) = rho(v+w, t+s+B(v,w)/2)
      auto lhs = cmul(rho_matrix(f, psi, J, md, v, t), rho_matrix(f, psi, J, md, w, s));
      std::vector<std::uint16_t> vw(v.size());
      for (std::size_t r = 0; r < v.size(); ++r) vw[r] = f.add(v[r], w[r]);
      auto u = f.add(f.add(t, s), f.mul(f.half(), sym_B(f, J, v, w)));
      CHECK(max_abs_diff(lhs, rho_matrix(f, psi, J, md, vw, u)) < 1e-12);

      // trace is p^m psi(t) at the identity translation, zero elsewhere
      auto tr = ctrace(rho_matrix(f, psi, J, md, v, t));
      bool zero = true;
      for (auto x : v) zero = zero && x == 0;
      cplx want = zero ? static_cast<double>(md.dim) * psi(t) : cplx(0.0);
      CHECK(std::abs(tr - want) < 1e-9);
    }
    // a nonzero translation inside l also kills the trace
    std::vector<std::uint16_t> a(static_cast<std::size_t>(2 * m), 0);
    f.row_axpy(a.data(), L.rows.row_ptr(0), 1, static_cast<std::size_t>(2 * m));
    CHECK(std::abs(ctrace(rho_matrix(f, psi, J, md, a, 1))) < 1e-9);
  }
}

TEST_CASE("intertwiner of a model with itself is the identity") {
  std::mt19937_64 rng(93);
  FpField f(5);
  Psi psi(f);
  for (int m : {1, 2}) {
    auto J = symplectic_J(f, m);
    auto L = random_lagrangian(f, m, rng);
    auto md = make_model(f, L);
    CHECK(max_abs_diff(intertwiner(f, psi, J, md, md), cidentity(md.dim)) < 1e-12);
  }
}

TEST_CASE("transverse pair gives the discrete fourier kernel") {
  for (unsigned p : {3u, 5u, 7u}) {
    FpField f(p);
    Psi psi(f);
    auto J = symplectic_J(f, 1);
    auto me = make_model(f, fline(f, 1, 0));
    auto mf = make_model(f, fline(f, 0, 1));
    // transversal of span(e) is the f-axis and vice versa
    auto N = intertwiner(f, psi, J, me, mf);
    double nrm = 1.0 / std::sqrt(static_cast<double>(p));
    for (int a = 0; a < static_cast<int>(p); ++a)
      for (int c = 0; c < static_cast<int>(p); ++c) {
        auto cc = static_cast<std::uint16_t>(c);
        auto aa = static_cast<std::uint16_t>(a);
        CHECK(std::abs(N.at(a, c) - nrm * psi(f.neg(f.mul(aa, cc)))) < 1e-12);
      }
  }
}

TEST_CASE("intertwining property") {
  std::mt19937_64 rng(94);
  for (unsigned p : {3u, 5u}) {
    FpField f(p);
    Psi psi(f);
    for (int m : {1, 2}) {
      if (std::pow(p, m) > kModelCap) continue;
      auto J = symplectic_J(f, m);
      for (int it = 0; it < 6; ++it) {
        auto mi = make_model(f, random_lagrangian(f, m, rng));
        auto mj = make_model(f, random_lagrangian(f, m, rng));
        auto N = intertwiner(f, psi, J, mi, mj);
        auto v = rnd_vec(f, 2 * m, rng);
        auto t = static_cast<std::uint16_t>(rng() % f.p);
        auto lhs = cmul(N, rho_matrix(f, psi, J, mi, v, t));
        auto rhs = cmul(rho_matrix(f, psi, J, mj, v, t), N);
        CHECK(max_abs_diff(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("two lagrangians compose to the identity") {
  std::mt19937_64 rng(95);
  FpField f(5);
  Psi psi(f);
  LagTuple<FpField> t;
  t.m = 1;
  t.n = 2;
  t.L = {random_lagrangian(f, 1, rng), random_lagrangian(f, 1, rng)};
  auto c = compute_core(f, t);
  auto co = cycle_operator(f, psi, c);
  CHECK(co.residual < 1e-9);
  CHECK(std::abs(co.scalar - cplx(1.0)) < 1e-9);
}

TEST_CASE("three lines over F_3 give -i") {
  FpField f(3);
  Psi psi(f);
  LagTuple<FpField> t;
  t.m = 1;
  t.n = 3;
  t.L = {fline(f, 1, 0), fline(f, 1, 1), fline(f, 0, 1)};
  auto c = compute_core(f, t);
  auto co = cycle_operator(f, psi, c);
  CHECK(co.residual < 1e-12);
  CHECK(std::abs(co.scalar - cplx(0, -1)) < 1e-12);
  CHECK(std::abs(predicted_scalar(f, psi, c) - cplx(0, -1)) < 1e-12);
}

TEST_CASE("cycle scalar equals the conjugated gauss constant") {
  std::mt19937_64 rng(96);
  for (unsigned p : {3u, 5u}) {
    FpField f(p);
    Psi psi(f);
    for (int n : {3, 4, 5}) {
      for (int it = 0; it < 8; ++it) {
        auto c = compute_core(f, mixed_tuple(f, 1, n, rng));
        auto co = cycle_operator(f, psi, c);
        CHECK(co.residual < 1e-9);
        CHECK(std::abs(co.scalar - predicted_scalar(f, psi, c)) < 1e-9);
      }
    }
  }
}

TEST_CASE("twisted character") {
  std::mt19937_64 rng(97);
  FpField f(5);
  Psi psi(f, 2);
  for (int it = 0; it < 6; ++it) {
    auto c = compute_core(f, mixed_tuple(f, 1, 4, rng));
    auto co = cycle_operator(f, psi, c);
    CHECK(co.residual < 1e-9);
    CHECK(std::abs(co.scalar - predicted_scalar(f, psi, c)) < 1e-9);
  }
}

TEST_CASE("kernel product matches the dual pairing pointwise") {
  std::mt19937_64 rng(98);
  for (unsigned p : {3u, 5u}) {
    FpField f(p);
    Psi psi(f);
    int n = (p == 3) ? 4 : 3;
    for (int rep = 0; rep < 3; ++rep) {
      auto c = compute_core(f, mixed_tuple(f, 1, n, rng));
      auto ds = dual_space(f, c);
      std::vector<LagrangianModel> models;
      for (int i = 0; i < c.n; ++i) models.push_back(make_model(f, c.t.L[static_cast<std::size_t>(i)]));
      int dsum = 0;
      for (int x : ds.d) dsum += x;
      double nrm = std::pow(static_cast<double>(p), -0.5 * dsum);

      long long total = 1;
      for (int i = 0; i < c.n * c.m; ++i) total *= p;
      REQUIRE(total <= 20000);
      cplx sum = 0.0;
      std::vector<std::uint16_t> x(static_cast<std::size_t>(c.n * c.m), 0);
      for (long long it = 0; it < total; ++it) {
        auto jv = jay_value(f, psi, c, models, x);
        sum += jv;
        if (ds.Es.contains_vec(f, x)) {
          auto qs = dual_pairing(f, c, ds, x, x);
          cplx want = nrm * psi(f.neg(f.mul(f.half(), qs)));
          CHECK(std::abs(jv - want) < 1e-12);
        } else {
          CHECK(std::abs(jv) < 1e-15);
        }
        for (int i = c.n * c.m - 1; i >= 0; --i) {
          x[static_cast<std::size_t>(i)] = f.add(x[static_cast<std::size_t>(i)], 1);
          if (x[static_cast<std::size_t>(i)] != 0) break;
        }
      }
      auto co = cycle_operator(f, psi, c);
      CHECK(std::abs(sum - co.scalar * std::pow(static_cast<double>(p), c.m)) < 1e-8);
    }
  }
}

TEST_CASE("moment translation traces") {
  std::mt19937_64 rng(99);
  FpField f(3);
  Psi psi(f);
  for (int it = 0; it < 10; ++it) {
    auto c = compute_core(f, mixed_tuple(f, 1, 4, rng));
    auto md = make_model(f, c.t.L[0]);
    // a kernel element: trace is p^m psi(q(v,v)/2)
    auto v = random_K_elem(f, c, rng);
    auto q2 = f.mul(f.half(), q_form(f, c, v, v));
    std::vector<std::uint16_t> sv(static_cast<std::size_t>(2 * c.m), 0);
    for (const auto& bl : block_vectors(f, c, v))
      for (int r = 0; r < 2 * c.m; ++r) sv[static_cast<std::size_t>(r)] =
          f.add(sv[static_cast<std::size_t>(r)], bl[static_cast<std::size_t>(r)]);
    auto tr = ctrace(rho_matrix(f, psi, c.J, md, sv, q2));
    CHECK(std::abs(tr - static_cast<double>(md.dim) * psi(q2)) < 1e-9);

    // outside the kernel the summed translation is nonzero and the trace dies
    auto w = rnd_vec(f, c.edim, rng);
    std::vector<std::uint16_t> sw(static_cast<std::size_t>(2 * c.m), 0);
    for (const auto& bl : block_vectors(f, c, w))
      for (int r = 0; r < 2 * c.m; ++r) sw[static_cast<std::size_t>(r)] =
          f.add(sw[static_cast<std::size_t>(r)], bl[static_cast<std::size_t>(r)]);
    bool inK = true;
    for (auto xx : sw) inK = inK && xx == 0;
    if (!inK) {
      auto q2w = f.mul(f.half(), q_form(f, c, w, w));
      CHECK(std::abs(ctrace(rho_matrix(f, psi, c.J, md, sw, q2w))) < 1e-9);
    }
  }
}

TEST_CASE("kernel gauss sum") {
  std::mt19937_64 rng(100);
  for (unsigned p : {3u, 5u}) {
    FpField f(p);
    Psi psi(f);
    for (int it = 0; it < 6; ++it) {
      auto c = compute_core(f, mixed_tuple(f, 1, 3 + static_cast<int>(rng() % 3), rng));
      auto s = trace_sigma_kernel(f, psi, c);
      int r = c.k - c.tdim;
      cplx want = std::pow(static_cast<double>(p), 0.5 * (c.k + r)) *
                  gamma_of_witt(f, psi, witt_class(f, c.G_T));
      CHECK(std::abs(s - want) < 1e-8);
    }
  }
}
