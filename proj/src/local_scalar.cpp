#include "qfrob/local_scalar.hpp"

#include <stdexcept>

namespace qfrob {

namespace {

// Removes common factors Phi_k from p and q, greedily in k.
void cancel_cyclotomic(QPoly& p, QPoly& q) {
  // phi(k) >= k/6 in the range that matters, so this bound is safe.
  const int kmax = 6 * q.degree() + 6;
  for (int k = 1; k <= kmax; ++k) {
    if (euler_phi(k) > q.degree() || euler_phi(k) > p.degree()) continue;
    const QPoly& phi = QPoly::cyclotomic(k);
    while (q.degree() >= phi.degree()) {
      QPoly qq, qr, pq, pr;
      QPoly::divmod(q, phi, qq, qr);
      if (!qr.is_zero()) break;
      QPoly::divmod(p, phi, pq, pr);
      if (!pr.is_zero()) break;
      p = std::move(pq);
      q = std::move(qq);
    }
  }
}

}  // namespace

LocalScalar::LocalScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("LocalScalar: zero denominator");
  normalize();
}

void LocalScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move monomial factors of the denominator into the numerator.
  const int shift = den_.low();
  if (shift != 0) {
    num_ = num_ * LaurentPoly::v_pow(-shift);
    den_ = den_ * LaurentPoly::v_pow(-shift);
  }
  if (den_.is_monomial()) {
    Rational c = den_.coeff(0);
    num_ = num_ * LaurentPoly(Rational(1) / c);
    den_ = LaurentPoly(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = LaurentPoly(1);
    return;
  }
  const int nlow = num_.low();
  QPoly p = num_.to_qpoly();
  QPoly q = den_.to_qpoly();
  cancel_cyclotomic(p, q);
  Rational lead = q.lead();
  p = p.scaled(Rational(1) / lead);
  q = q.scaled(Rational(1) / lead);
  num_ = LaurentPoly(nlow, p.coeffs());
  den_ = LaurentPoly(0, q.coeffs());
}

LocalScalar LocalScalar::operator-() const {
  LocalScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalScalar operator+(const LocalScalar& a, const LocalScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    LocalScalar r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    if (!r.is_laurent()) r.normalize();
    else if (r.num_.is_zero()) r.den_ = LaurentPoly(1);
    return r;
  }
  return LocalScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LocalScalar operator*(const LocalScalar& a, const LocalScalar& b) {
  if (a.is_laurent() && b.is_laurent()) {
    LocalScalar r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return LocalScalar(a.num_ * b.num_, a.den_ * b.den_);
}

LocalScalar operator/(const LocalScalar& a, const LocalScalar& b) {
  if (b.is_zero()) throw std::domain_error("LocalScalar: division by zero");
  return LocalScalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool LocalScalar::regular_at(int n) const { return !den_.eval(n).is_zero(); }

std::string LocalScalar::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

CycloElem local_eval(const LocalScalar& x, int n) {
  CycloElem d = x.den().eval(n);
  if (d.is_zero()) throw std::domain_error("local_eval: value outside the localization at zeta");
  if (x.is_laurent()) return x.num().eval(n);
  return x.num().eval(n) / d;
}

}  // namespace qfrob
