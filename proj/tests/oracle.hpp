#pragma once

// Independent numeric oracles: evaluate exact objects in complex floating
// point and compare against the exact results.

#include <cmath>
#include <complex>

#include "qfrob/cyclo.hpp"
#include "qfrob/laurent.hpp"

namespace qfrob::oracle {

inline std::complex<double> root_of_unity(int n, long k) {
  const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

inline std::complex<double> to_complex(const CycloElem& x, int n) {
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    s += x.coeffs()[j].get_d() * root_of_unity(n, static_cast<long>(j));
  return s;
}

inline std::complex<double> eval(const LaurentPoly& p, std::complex<double> z) {
  std::complex<double> s = 0;
  for (int e = p.low(); e <= p.high() && !p.is_zero(); ++e) s += p.coeff(e).get_d() * std::pow(z, e);
  return s;
}

// Product formula for the q-binomial, evaluated directly at z.
inline std::complex<double> qbinom_at(long m, long t, int d, std::complex<double> z) {
  std::complex<double> r = 1;
  for (long s = 1; s <= t; ++s) {
    auto num = std::pow(z, d * (m - s + 1)) - std::pow(z, -d * (m - s + 1));
    auto den = std::pow(z, d * s) - std::pow(z, -d * s);
    r *= num / den;
  }
  return r;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace qfrob::oracle
