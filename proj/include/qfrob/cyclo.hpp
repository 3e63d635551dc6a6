#pragma once

// Elements of Q(z) with z a primitive N-th root of unity, stored as residues
// modulo the N-th cyclotomic polynomial.
//
// An element with modulus 0 is a rational constant. It combines with an
// element of any field, which lets default-constructed values act as zero.

#include <string>
#include <vector>

#include "qfrob/qpoly.hpp"
#include "qfrob/rational.hpp"

namespace qfrob {

class CycloField {
 public:
  static const CycloField& get(int n);

  int modulus() const { return n_; }
  int degree() const { return phi_; }
  const QPoly& minimal_polynomial() const { return min_poly_; }
  // Coefficients of z^k reduced modulo the minimal polynomial, 0 <= k < N.
  const std::vector<Rational>& power(int k) const;

 private:
  explicit CycloField(int n);
  int n_;
  int phi_;
  QPoly min_poly_;
  std::vector<std::vector<Rational>> powers_;
};

class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(long c) : c_{Rational(c)} { trim_constant(); }  // NOLINT
  CycloElem(const Rational& c) : c_{c} { trim_constant(); }  // NOLINT
  CycloElem(int n, std::vector<Rational> coeffs);

  // z^k in Q(zeta_n).
  static CycloElem zeta_power(int n, long k);

  int modulus() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  // Coefficient vector of length phi(N) (length <= 1 for constants).
  const std::vector<Rational>& coeffs() const { return c_; }

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  CycloElem inverse() const;
  std::string to_string() const;

 private:
  void promote(int n);
  void trim_constant();

  int n_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycloElem& x) { return x.is_zero(); }
inline std::string to_string(const CycloElem& x) { return x.to_string(); }

}  // namespace qfrob
