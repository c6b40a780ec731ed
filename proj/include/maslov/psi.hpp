#pragma once
#include <complex>
#include <stdexcept>
#include <vector>

#include "maslov/fp.hpp"

namespace maslov {

// Additive character of F_p: psi(x) = exp(-2 pi i x / p) on canonical
// residues, optionally twisted to psi_a(x) = psi(a x).
struct Psi {
  const FpField* f;
  std::uint16_t a;
  std::vector<std::complex<double>> tab;

  explicit Psi(const FpField& field, std::uint16_t twist = 1)
      : f(&field), a(static_cast<std::uint16_t>(twist % field.p)) {
    if (a == 0) throw std::invalid_argument("character twist must be nonzero mod p");
    tab.resize(field.p);
    const double two_pi = 6.283185307179586476925286766559;
    for (unsigned r = 0; r < field.p; ++r)
      tab[r] = std::polar(1.0, -two_pi * static_cast<double>(r) / field.p);
  }

  std::complex<double> operator()(std::uint16_t x) const { return tab[f->mul(a, x)]; }
};

}  // namespace maslov
