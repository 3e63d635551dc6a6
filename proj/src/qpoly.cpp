#include "qfrob/qpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qfrob {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && qfrob::is_zero(c_.back())) c_.pop_back();
}

QPoly QPoly::monomial(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return QPoly(std::move(v));
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (qfrob::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& s) const {
  QPoly r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::domain_error("QPoly::divmod: division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<Rational> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  const Rational inv = 1 / b.lead();
  for (int k = da; k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (qfrob::is_zero(top)) continue;
    Rational f = top * inv;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k - db)] = f;
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly QPoly::ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0({Rational(1)}), s1, t0, t1({Rational(1)});
  while (!r1.is_zero()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  Rational inv = 1 / r0.lead();
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

const QPoly& QPoly::cyclotomic(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // x^k - 1 divided by Phi_d for every proper divisor d.
  QPoly p = monomial(k) - QPoly({Rational(1)});
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto jt = cache.find(d);
    QPoly phid;
    if (jt == cache.end()) {
      // Recursion would re-enter the lock; build the divisor chain explicitly.
      QPoly pd = monomial(d) - QPoly({Rational(1)});
      for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        QPoly q, r;
        divmod(pd, cache.at(e), q, r);
        pd = q;
      }
      cache.emplace(d, pd);
      phid = pd;
    } else {
      phid = jt->second;
    }
    QPoly q, r;
    divmod(p, phid, q, r);
    p = q;
  }
  return cache.emplace(k, p).first->second;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace qfrob
