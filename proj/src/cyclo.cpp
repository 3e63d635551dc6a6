#include "qfrob/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qfrob {

const CycloField& CycloField::get(int n) {
  if (n < 1) throw std::invalid_argument("CycloField: modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new CycloField(n));
  return *slot;
}

CycloField::CycloField(int n)
    : n_(n), phi_(euler_phi(n)), min_poly_(QPoly::cyclotomic(n)) {
  powers_.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    QPoly q, r;
    QPoly::divmod(QPoly::monomial(k), min_poly_, q, r);
    std::vector<Rational> v(static_cast<std::size_t>(phi_));
    for (int j = 0; j <= r.degree(); ++j) v[static_cast<std::size_t>(j)] = r.coeff(j);
    powers_.push_back(std::move(v));
  }
}

const std::vector<Rational>& CycloField::power(int k) const {
  k %= n_;
  if (k < 0) k += n_;
  return powers_[static_cast<std::size_t>(k)];
}

CycloElem::CycloElem(int n, std::vector<Rational> coeffs) : n_(n) {
  if (n == 0) {
    c_ = std::move(coeffs);
    if (c_.size() > 1) throw std::invalid_argument("CycloElem: constant with several coefficients");
    trim_constant();
    return;
  }
  const CycloField& f = CycloField::get(n);
  // Reduce an arbitrary-length coefficient vector modulo the minimal polynomial.
  c_.assign(static_cast<std::size_t>(f.degree()), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (qfrob::is_zero(coeffs[k])) continue;
    const auto& p = f.power(static_cast<int>(k));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!qfrob::is_zero(p[j])) c_[j] += coeffs[k] * p[j];
  }
}

CycloElem CycloElem::zeta_power(int n, long k) {
  const CycloField& f = CycloField::get(n);
  long r = k % n;
  if (r < 0) r += n;
  CycloElem z;
  z.n_ = n;
  z.c_ = f.power(static_cast<int>(r));
  return z;
}

void CycloElem::trim_constant() {
  if (n_ == 0 && c_.size() == 1 && qfrob::is_zero(c_[0])) c_.clear();
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (!qfrob::is_zero(x)) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!qfrob::is_zero(c_[j])) return false;
  return true;
}

void CycloElem::promote(int n) {
  if (n_ == n || n == 0) return;
  if (n_ != 0) throw std::logic_error("CycloElem: mixing different cyclotomic fields");
  const CycloField& f = CycloField::get(n);
  Rational c = c_.empty() ? Rational(0) : c_[0];
  c_.assign(static_cast<std::size_t>(f.degree()), Rational(0));
  c_[0] = c;
  n_ = n;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (o.c_.empty()) return *this;
  if (n_ == 0 && o.n_ == 0) {
    if (c_.empty()) c_.push_back(0);
    c_[0] += o.c_[0];
    trim_constant();
    return *this;
  }
  promote(o.n_);
  if (o.n_ == 0) {
    c_[0] += o.c_[0];
    return *this;
  }
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  if (c_.empty()) {
    if (o.n_ != 0) promote(o.n_);
    return *this;
  }
  if (o.c_.empty()) {
    int n = n_ != 0 ? n_ : o.n_;
    c_.clear();
    n_ = 0;
    if (n != 0) promote(n);
    return *this;
  }
  if (o.n_ == 0) {
    for (auto& x : c_) x *= o.c_[0];
    trim_constant();
    return *this;
  }
  if (n_ == 0) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (n_ != o.n_) throw std::logic_error("CycloElem: mixing different cyclotomic fields");
  const CycloField& f = CycloField::get(n_);
  const std::size_t phi = c_.size();
  std::vector<Rational> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (qfrob::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (!qfrob::is_zero(o.c_[j])) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rational> out(phi);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (qfrob::is_zero(prod[k])) continue;
    if (k < phi) {
      out[k] += prod[k];
      continue;
    }
    const auto& p = f.power(static_cast<int>(k));
    for (std::size_t j = 0; j < phi; ++j)
      if (!qfrob::is_zero(p[j])) out[j] += prod[k] * p[j];
  }
  c_ = std::move(out);
  return *this;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.n_ == b.n_) {
    if (a.n_ == 0) return a.c_ == b.c_;
    return a.c_ == b.c_;
  }
  CycloElem x = a, y = b;
  int n = a.n_ != 0 ? a.n_ : b.n_;
  if (a.n_ != 0 && b.n_ != 0) throw std::logic_error("CycloElem: comparing different fields");
  x.promote(n);
  y.promote(n);
  return x.c_ == y.c_;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
  if (n_ == 0) return CycloElem(Rational(1) / c_[0]);
  const CycloField& f = CycloField::get(n_);
  QPoly a(c_), s, t;
  QPoly g = QPoly::ext_gcd(a, f.minimal_polynomial(), s, t);
  if (g.degree() != 0) throw std::domain_error("CycloElem: element is not invertible");
  std::vector<Rational> v(s.coeffs());
  return CycloElem(n_, std::move(v));
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& x = c_[j];
    if (qfrob::is_zero(x)) continue;
    if (!first) os << (sgn(x) < 0 ? " - " : " + ");
    else if (sgn(x) < 0) os << "-";
    Rational ax = abs(x);
    if (j == 0) {
      os << ax.get_str();
    } else {
      if (ax != 1) os << ax.get_str() << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qfrob
