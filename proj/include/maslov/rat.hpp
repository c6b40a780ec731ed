#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>

namespace maslov {

// Exact rationals. Same surface as FpField so the linear algebra is generic.
struct QField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of 0");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem half() const { return Elem(1, 2); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

  void row_axpy(Elem* dst, const Elem* src, const Elem& c, std::size_t len) const {
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < len; ++i) dst[i] += c * src[i];
  }
  void row_scale(Elem* row, const Elem& c, std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) row[i] *= c;
  }
};

// true iff a is the square of a rational
inline bool is_rational_square(const mpq_class& a) {
  if (sgn(a) < 0) return false;
  if (sgn(a) == 0) return true;
  mpq_class c = a;
  c.canonicalize();
  return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(c.get_den().get_mpz_t());
}

}  // namespace maslov
