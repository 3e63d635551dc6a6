#pragma once

// Dense univariate polynomials over Q. Used for reductions modulo cyclotomic
// polynomials and for exact division of Laurent polynomials.

#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(int k, const Rational& c = 1);
  // k-th cyclotomic polynomial, cached.
  static const QPoly& cyclotomic(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int k) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& s) const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  // a = q*b + r with deg r < deg b. b must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  // Monic gcd, and Bezout coefficients s, t with s*a + t*b = g.
  static QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

 private:
  void trim();
  std::vector<Rational> c_;
};

int euler_phi(int n);

}  // namespace qfrob
