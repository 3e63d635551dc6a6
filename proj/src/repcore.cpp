#include "qfrob/repcore.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qfrob {

namespace {

CMatrix specialize(const LMatrix& m, const QParams& p) {
  return m.map([&](const LocalScalar& x) { return p.eval(x); });
}

std::string first_nonzero(const CMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) {
      const auto& [j, x] = m.row(i).front();
      std::ostringstream os;
      os << "entry (" << i << "," << j << ") = " << x.to_string();
      return os.str();
    }
  return "none";
}

void expect_zero(Report& r, const CMatrix& m, const std::string& name) {
  if (m.is_zero_matrix()) r.pass(name);
  else r.fail(name, "nonzero residual matrix", first_nonzero(m));
}

std::string vname(const WeightModule& m, const char* g, int i) {
  std::string s = g;
  if (m.rank() > 1) s += "_" + std::to_string(i + 1);
  return s;
}

}  // namespace

CMatrix WeightModule::k_diag(int i, long power) const {
  std::vector<CycloElem> d;
  d.reserve(dim());
  const long di = params.d[static_cast<std::size_t>(i)];
  for (const auto& w : weights) d.push_back(params.zeta_pow(power * di * datum.pairing(i, w)));
  return CMatrix::diagonal(d);
}

CMatrix WeightModule::kbinom_diag(int i, long m, long t) const {
  std::map<long, CycloElem> cache;
  std::vector<CycloElem> d;
  d.reserve(dim());
  const int di = params.d[static_cast<std::size_t>(i)];
  for (const auto& w : weights) {
    const long top = datum.pairing(i, w) + m;
    auto it = cache.find(top);
    if (it == cache.end()) it = cache.emplace(top, params.eval(qbinom(top, t, di))).first;
    d.push_back(it->second);
  }
  return CMatrix::diagonal(d);
}

CMatrix WeightModule::kint_diag(int i, long m) const {
  std::vector<CycloElem> d;
  d.reserve(dim());
  const int di = params.d[static_cast<std::size_t>(i)];
  for (const auto& w : weights) d.push_back(params.eval(qint(datum.pairing(i, w) + m, di)));
  return CMatrix::diagonal(d);
}

LMatrix WeightModule::k_diag_generic(int i, long power) const {
  std::vector<LocalScalar> d;
  d.reserve(dim());
  const long di = params.d[static_cast<std::size_t>(i)];
  for (const auto& w : weights)
    d.emplace_back(LaurentPoly::v_pow(static_cast<int>(power * di * datum.pairing(i, w))));
  return LMatrix::diagonal(d);
}

namespace {

CMatrix divided(const WeightModule& m, const std::vector<CMatrix>& gen, const std::vector<CMatrix>& div,
                int i, long k) {
  const long l = m.params.ell_i[static_cast<std::size_t>(i)];
  if (k == 0) return CMatrix::identity(m.dim());
  if (k == l) return div[static_cast<std::size_t>(i)];
  if (k < 0 || k > l) throw std::invalid_argument("divided power out of range");
  CycloElem f = m.params.eval(qfact(k, m.params.d[static_cast<std::size_t>(i)]));
  return f.inverse() * power(gen[static_cast<std::size_t>(i)], static_cast<int>(k));
}

}  // namespace

CMatrix WeightModule::divided_e(int i, long k) const { return divided(*this, e, div_e, i, k); }
CMatrix WeightModule::divided_f(int i, long k) const { return divided(*this, f, div_f, i, k); }

std::vector<const CMatrix*> WeightModule::generators() const {
  std::vector<const CMatrix*> g;
  for (const auto* fam : {&e, &f, &div_e, &div_f})
    for (const auto& x : *fam) g.push_back(&x);
  return g;
}

std::vector<std::size_t> WeightModule::basis_of_weight(const Weight& lam) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (weights[k] == lam) out.push_back(k);
  return out;
}

std::map<Weight, std::size_t> WeightModule::weight_multiplicities() const {
  std::map<Weight, std::size_t> m;
  for (const auto& w : weights) ++m[w];
  return m;
}

WeightModule trivial_module(const RootDatum& rd, const QParams& p) {
  WeightModule m{rd, p, {rd.zero()}, {}, {}, {}, {}, std::nullopt, "trivial"};
  GenericLift g;
  for (int i = 0; i < rd.rank(); ++i) {
    for (auto* fam : {&m.e, &m.f, &m.div_e, &m.div_f}) fam->emplace_back(1, 1);
    for (auto* fam : {&g.e, &g.f, &g.div_e, &g.div_f}) fam->emplace_back(1, 1);
  }
  m.generic = std::move(g);
  return m;
}

WeightModule weyl_module(long lam, const QParams& p) {
  if (lam < 0) throw std::invalid_argument("weyl_module: negative highest weight");
  RootDatum rd = RootDatum::build("A1");
  if (p.d != rd.d()) throw std::invalid_argument("weyl_module: parameters are not for type A1");
  const std::size_t n = static_cast<std::size_t>(lam) + 1;
  Matrix<LaurentPoly> e(n, n), f(n, n);
  // F v_k = [k+1] v_{k+1}; E v_k = c_k v_{k-1}, with c_k forced by
  // E F v_{k-1} = F E v_{k-1} + [<alpha^vee, wt v_{k-1}>] v_{k-1}.
  LaurentPoly c_prev;  // c_0 = 0
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 < n) f.set(k + 1, k, qint(static_cast<long>(k) + 1, 1));
    if (k == 0) continue;
    const long kk = static_cast<long>(k);
    LaurentPoly num = c_prev * qint(kk - 1, 1) + qint(lam - 2 * kk + 2, 1);
    auto ck = num.divide_exact(qint(kk, 1));
    if (!ck) throw std::logic_error("weyl_module: structure constant is not a Laurent polynomial");
    e.set(k - 1, k, *ck);
    c_prev = *ck;
  }
  const long l = p.ell_i[0];
  GenericLift g;
  auto to_local = [](const Matrix<LaurentPoly>& m) {
    return m.map([](const LaurentPoly& x) { return LocalScalar(x); });
  };
  g.e.push_back(to_local(e));
  g.f.push_back(to_local(f));
  g.div_e.push_back(matrix_divide_exact(power(e, static_cast<int>(l)), qfact(l, 1), p.n));
  g.div_f.push_back(matrix_divide_exact(power(f, static_cast<int>(l)), qfact(l, 1), p.n));

  WeightModule m;
  m.datum = rd;
  m.params = p;
  for (std::size_t k = 0; k < n; ++k) m.weights.push_back({lam - 2 * static_cast<long>(k)});
  m.e.push_back(specialize(g.e[0], p));
  m.f.push_back(specialize(g.f[0], p));
  m.div_e.push_back(specialize(g.div_e[0], p));
  m.div_f.push_back(specialize(g.div_f[0], p));
  m.generic = std::move(g);
  m.name = "W(" + std::to_string(lam) + ")";
  // Highest-weight postcondition.
  if (!m.e[0].apply(basis_vector(0)).empty() || !m.div_e[0].apply(basis_vector(0)).empty())
    throw std::logic_error("weyl_module: highest-weight vector is not primitive");
  return m;
}

Report grading_check(const WeightModule& m) {
  Report r;
  for (int i = 0; i < m.rank(); ++i) {
    const Weight a = m.datum.simple_root(i);
    const long l = m.params.ell_i[static_cast<std::size_t>(i)];
    struct Fam {
      const char* name;
      const CMatrix* mat;
      long shift;
    };
    const Fam fams[] = {{"E", &m.e[static_cast<std::size_t>(i)], 1},
                        {"F", &m.f[static_cast<std::size_t>(i)], -1},
                        {"E^(l)", &m.div_e[static_cast<std::size_t>(i)], l},
                        {"F^(l)", &m.div_f[static_cast<std::size_t>(i)], -l}};
    for (const auto& fam : fams) {
      std::string bad;
      if (fam.mat->rows() != m.dim() || fam.mat->cols() != m.dim()) bad = "wrong shape";
      for (std::size_t p = 0; p < fam.mat->rows() && bad.empty(); ++p)
        for (const auto& [q, x] : fam.mat->row(p)) {
          Weight expect = m.weights[q];
          for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += fam.shift * a[k];
          if (expect != m.weights[p]) {
            bad = "entry (" + std::to_string(p) + "," + std::to_string(q) + ") maps weight " +
                  weight_to_string(m.weights[q]) + " to " + weight_to_string(m.weights[p]);
            break;
          }
        }
      std::string name = "grading " + vname(m, fam.name, i);
      if (bad.empty()) r.pass(name);
      else r.fail(name, "generator does not shift weights by the prescribed root multiple", bad);
    }
  }
  return r;
}

Report relation_check(const WeightModule& m) {
  Report r = grading_check(m);
  const int rk = m.rank();
  for (int i = 0; i < rk; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const long l = m.params.ell_i[si];
    const int di = m.params.d[si];
    const CMatrix& E = m.e[si];
    const CMatrix& F = m.f[si];
    for (int j = 0; j < rk; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      CMatrix c = commutator(E, m.f[sj]);
      if (i == j) c = c - m.kint_diag(i, 0);
      expect_zero(r, c, "[" + vname(m, "E", i) + "," + vname(m, "F", j) + "] = delta (K-K^-1)/(v^d-v^-d)");
      if (i == j) continue;
      const long nn = 1 - m.datum.a(i, j);
      CMatrix se(m.dim(), m.dim()), sf(m.dim(), m.dim());
      for (long s = 0; s <= nn; ++s) {
        CycloElem c0 = m.params.eval(qbinom(nn, s, di));
        if (s % 2 == 1) c0 = -c0;
        se = se + c0 * (power(E, static_cast<int>(nn - s)) * m.e[sj] * power(E, static_cast<int>(s)));
        sf = sf + c0 * (power(F, static_cast<int>(nn - s)) * m.f[sj] * power(F, static_cast<int>(s)));
      }
      expect_zero(r, se, "Serre relation for E (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      expect_zero(r, sf, "Serre relation for F (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      expect_zero(r, commutator(E, m.div_f[sj]), "[" + vname(m, "E", i) + "," + vname(m, "F^(l)", j) + "] = 0");
      expect_zero(r, commutator(m.div_e[si], m.f[sj]),
                  "[" + vname(m, "E^(l)", i) + "," + vname(m, "F", j) + "] = 0");
      expect_zero(r, commutator(m.div_e[si], m.div_f[sj]),
                  "[" + vname(m, "E^(l)", i) + "," + vname(m, "F^(l)", j) + "] = 0");
    }
    expect_zero(r, power(E, static_cast<int>(l)), vname(m, "E", i) + "^l = 0 at zeta");
    expect_zero(r, power(F, static_cast<int>(l)), vname(m, "F", i) + "^l = 0 at zeta");
    expect_zero(r, commutator(E, m.div_e[si]), "[" + vname(m, "E", i) + "," + vname(m, "E^(l)", i) + "] = 0");
    expect_zero(r, commutator(F, m.div_f[si]), "[" + vname(m, "F", i) + "," + vname(m, "F^(l)", i) + "] = 0");
    expect_zero(r, commutator(E, m.div_f[si]) - m.divided_f(i, l - 1) * m.kint_diag(i, 1 - l),
                "[" + vname(m, "E", i) + "," + vname(m, "F^(l)", i) + "] = F^(l-1) [K;1-l;1]");
    expect_zero(r, commutator(m.div_e[si], F) - m.divided_e(i, l - 1) * m.kint_diag(i, l - 1),
                "[" + vname(m, "E^(l)", i) + "," + vname(m, "F", i) + "] = E^(l-1) [K;l-1;1]");
    if (m.generic) {
      const GenericLift& g = *m.generic;
      const LaurentPoly fact = qfact(l, di);
      const LocalScalar lf(fact);
      bool ok_e = lf * g.div_e[si] == power(g.e[si], static_cast<int>(l));
      bool ok_f = lf * g.div_f[si] == power(g.f[si], static_cast<int>(l));
      r.expect(ok_e, vname(m, "E^(l)", i) + " = E^l/[l]! in the localization", "generic-v identity",
               "generic matrices differ");
      r.expect(ok_f, vname(m, "F^(l)", i) + " = F^l/[l]! in the localization", "generic-v identity",
               "generic matrices differ");
      bool spec = specialize(g.e[si], m.params) == E && specialize(g.f[si], m.params) == F &&
                  specialize(g.div_e[si], m.params) == m.div_e[si] &&
                  specialize(g.div_f[si], m.params) == m.div_f[si];
      r.expect(spec, "generic lift specializes to the matrices at zeta " + vname(m, "", i), "",
               "specialization mismatch");
    }
  }
  return r;
}

std::vector<CMatrix> tensor_divided_e_at_zeta(const WeightModule& a, const WeightModule& b) {
  std::vector<CMatrix> out;
  for (int i = 0; i < a.rank(); ++i) {
    const long l = a.params.ell_i[static_cast<std::size_t>(i)];
    const long d = a.params.d[static_cast<std::size_t>(i)];
    CMatrix acc(a.dim() * b.dim(), a.dim() * b.dim());
    for (long x = 0; x <= l; ++x) {
      const long y = l - x;
      CMatrix left = a.divided_e(i, x) * a.k_diag(i, y);
      CMatrix right = b.divided_e(i, y);
      if (left.is_zero_matrix() || right.is_zero_matrix()) continue;
      acc = acc + a.params.zeta_pow(d * x * y) * kron(left, right);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<CMatrix> tensor_divided_f_at_zeta(const WeightModule& a, const WeightModule& b) {
  std::vector<CMatrix> out;
  for (int i = 0; i < a.rank(); ++i) {
    const long l = a.params.ell_i[static_cast<std::size_t>(i)];
    const long d = a.params.d[static_cast<std::size_t>(i)];
    CMatrix acc(a.dim() * b.dim(), a.dim() * b.dim());
    for (long x = 0; x <= l; ++x) {
      const long y = l - x;
      CMatrix left = a.divided_f(i, x);
      CMatrix right = b.k_diag(i, -x) * b.divided_f(i, y);
      if (left.is_zero_matrix() || right.is_zero_matrix()) continue;
      acc = acc + a.params.zeta_pow(-d * x * y) * kron(left, right);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

WeightModule tensor_product(const WeightModule& a, const WeightModule& b) {
  if (a.datum.type() != b.datum.type() || a.params.ell != b.params.ell)
    throw std::invalid_argument("tensor_product: modules over different data");
  WeightModule m;
  m.datum = a.datum;
  m.params = a.params;
  m.name = a.name + "*" + b.name;
  for (const auto& wa : a.weights)
    for (const auto& wb : b.weights) {
      Weight w = wa;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += wb[k];
      m.weights.push_back(std::move(w));
    }
  const CMatrix ia = CMatrix::identity(a.dim()), ib = CMatrix::identity(b.dim());
  for (int i = 0; i < a.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    m.e.push_back(kron(a.e[si], ib) + kron(a.k_diag(i, 1), b.e[si]));
    m.f.push_back(kron(a.f[si], b.k_diag(i, -1)) + kron(ia, b.f[si]));
  }
  if (a.generic && b.generic) {
    GenericLift g;
    const LMatrix la = LMatrix::identity(a.dim()), lb = LMatrix::identity(b.dim());
    for (int i = 0; i < a.rank(); ++i) {
      const auto si = static_cast<std::size_t>(i);
      const long l = a.params.ell_i[si];
      const LaurentPoly fact = qfact(l, a.params.d[si]);
      g.e.push_back(kron(a.generic->e[si], lb) + kron(a.k_diag_generic(i, 1), b.generic->e[si]));
      g.f.push_back(kron(a.generic->f[si], b.k_diag_generic(i, -1)) + kron(la, b.generic->f[si]));
      g.div_e.push_back(matrix_divide_exact(power(g.e.back(), static_cast<int>(l)), fact, a.params.n));
      g.div_f.push_back(matrix_divide_exact(power(g.f.back(), static_cast<int>(l)), fact, a.params.n));
      m.div_e.push_back(specialize(g.div_e.back(), m.params));
      m.div_f.push_back(specialize(g.div_f.back(), m.params));
    }
    m.generic = std::move(g);
  } else {
    m.div_e = tensor_divided_e_at_zeta(a, b);
    m.div_f = tensor_divided_f_at_zeta(a, b);
  }
  return m;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
  WeightModule m;
  m.datum = a.datum;
  m.params = a.params;
  m.name = a.name + "+" + b.name;
  m.weights = a.weights;
  m.weights.insert(m.weights.end(), b.weights.begin(), b.weights.end());
  for (int i = 0; i < a.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    m.e.push_back(qfrob::direct_sum(a.e[si], b.e[si]));
    m.f.push_back(qfrob::direct_sum(a.f[si], b.f[si]));
    m.div_e.push_back(qfrob::direct_sum(a.div_e[si], b.div_e[si]));
    m.div_f.push_back(qfrob::direct_sum(a.div_f[si], b.div_f[si]));
  }
  if (a.generic && b.generic) {
    GenericLift g;
    for (int i = 0; i < a.rank(); ++i) {
      const auto si = static_cast<std::size_t>(i);
      g.e.push_back(qfrob::direct_sum(a.generic->e[si], b.generic->e[si]));
      g.f.push_back(qfrob::direct_sum(a.generic->f[si], b.generic->f[si]));
      g.div_e.push_back(qfrob::direct_sum(a.generic->div_e[si], b.generic->div_e[si]));
      g.div_f.push_back(qfrob::direct_sum(a.generic->div_f[si], b.generic->div_f[si]));
    }
    m.generic = std::move(g);
  }
  return m;
}

WeightModule perturb_entry(const WeightModule& m, int family, int vertex, std::size_t row, std::size_t col,
                           const CycloElem& delta) {
  WeightModule out = m;
  std::vector<CMatrix>* fams[] = {&out.e, &out.f, &out.div_e, &out.div_f};
  if (family < 0 || family > 3) throw std::invalid_argument("perturb_entry: bad family");
  CMatrix& mat = (*fams[family]).at(static_cast<std::size_t>(vertex));
  mat.add_to(row, col, delta);
  out.generic.reset();
  out.name = m.name + " (perturbed)";
  return out;
}

CVector basis_vector(std::size_t k) { return {{k, CycloElem(1)}}; }

Submodule::Submodule(std::shared_ptr<const WeightModule> parent, Echelon<CycloElem> span)
    : parent_(std::move(parent)), span_(std::move(span)) {
  span_.fully_reduce();
}

std::vector<CVector> Submodule::basis() const {
  std::vector<CVector> b;
  for (const auto& [lead, row] : span_.pivots()) b.push_back(row);
  return b;
}

bool Submodule::stable() const {
  for (const auto& v : basis())
    for (const CMatrix* g : parent_->generators())
      if (!span_.contains(g->apply(v))) return false;
  return true;
}

namespace {

// Re-expresses a generator in a new basis given by coordinate extraction.
template <class Coord>
CMatrix induced(const CMatrix& g, const std::vector<CVector>& basis, std::size_t target_dim, Coord coord) {
  CMatrix out(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CVector img = g.apply(basis[j]);
    for (const auto& [k, x] : coord(img)) out.set(k, j, x);
  }
  return out;
}

}  // namespace

WeightModule Submodule::as_module() const {
  const WeightModule& p = *parent_;
  WeightModule m;
  m.datum = p.datum;
  m.params = p.params;
  m.name = "sub(" + p.name + ")";
  std::vector<std::size_t> leads;
  std::vector<CVector> b;
  for (const auto& [lead, row] : span_.pivots()) {
    leads.push_back(lead);
    b.push_back(row);
    m.weights.push_back(p.weights[lead]);
  }
  auto coord = [&](const CVector& v) {
    CVector c;
    CVector rem = v;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      CycloElem x = sparse_get(v, leads[k]);
      if (x.is_zero()) continue;
      c.emplace_back(k, x);
      rem = axpy(rem, CycloElem(-x), b[k]);
    }
    if (!rem.empty()) throw std::logic_error("Submodule: subspace is not stable");
    return c;
  };
  for (int i = 0; i < p.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    m.e.push_back(induced(p.e[si], b, b.size(), coord));
    m.f.push_back(induced(p.f[si], b, b.size(), coord));
    m.div_e.push_back(induced(p.div_e[si], b, b.size(), coord));
    m.div_f.push_back(induced(p.div_f[si], b, b.size(), coord));
  }
  return m;
}

WeightModule Submodule::quotient() const {
  const WeightModule& p = *parent_;
  WeightModule m;
  m.datum = p.datum;
  m.params = p.params;
  m.name = p.name + "/sub";
  std::vector<std::size_t> free = span_.free_columns();
  std::map<std::size_t, std::size_t> index;
  std::vector<CVector> b;
  for (std::size_t k = 0; k < free.size(); ++k) {
    index[free[k]] = k;
    b.push_back(basis_vector(free[k]));
    m.weights.push_back(p.weights[free[k]]);
  }
  auto coord = [&](const CVector& v) {
    CVector rem = span_.reduce(v);
    // The span is fully reduced, so the remainder lives on free columns.
    CVector c;
    for (const auto& [k, x] : rem) c.emplace_back(index.at(k), x);
    return c;
  };
  for (int i = 0; i < p.rank(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    m.e.push_back(induced(p.e[si], b, b.size(), coord));
    m.f.push_back(induced(p.f[si], b, b.size(), coord));
    m.div_e.push_back(induced(p.div_e[si], b, b.size(), coord));
    m.div_f.push_back(induced(p.div_f[si], b, b.size(), coord));
  }
  return m;
}

Submodule submodule_closure(std::shared_ptr<const WeightModule> m, const std::vector<CVector>& seeds) {
  Echelon<CycloElem> span(m->dim());
  std::deque<CVector> queue;
  for (const auto& s : seeds) {
    CVector r = span.reduce(s);
    if (r.empty()) continue;
    span.insert(r);
    queue.push_back(r);
  }
  const auto gens = m->generators();
  while (!queue.empty()) {
    CVector v = std::move(queue.front());
    queue.pop_front();
    for (const CMatrix* g : gens) {
      CVector r = span.reduce(g->apply(v));
      if (r.empty()) continue;
      span.insert(r);
      queue.push_back(std::move(r));
    }
  }
  return Submodule(std::move(m), std::move(span));
}

Submodule submodule_closure(const WeightModule& m, const std::vector<CVector>& seeds) {
  return submodule_closure(std::make_shared<const WeightModule>(m), seeds);
}

namespace {

std::size_t top_index(const WeightModule& m) {
  if (m.rank() != 1) throw std::invalid_argument("top weight selection requires type A1");
  std::size_t best = 0;
  for (std::size_t k = 1; k < m.dim(); ++k)
    if (m.weights[k] > m.weights[best]) best = k;
  return best;
}

}  // namespace

Submodule maximal_proper_submodule(const WeightModule& w) {
  auto shared = std::make_shared<const WeightModule>(w);
  for (const auto& [lam, mult] : w.weight_multiplicities())
    if (mult > 1)
      throw std::invalid_argument("maximal_proper_submodule: weight " + weight_to_string(lam) +
                                  " has multiplicity > 1");
  Echelon<CycloElem> total(w.dim());
  if (w.dim() == 0) return Submodule(shared, total);
  const std::size_t top = top_index(w);
  for (std::size_t k = 0; k < w.dim(); ++k) {
    if (k == top) continue;
    Submodule s = submodule_closure(shared, {basis_vector(k)});
    if (s.contains(basis_vector(top))) continue;
    for (const auto& v : s.basis()) total.insert(v);
  }
  return Submodule(shared, std::move(total));
}

namespace {

// Highest-weight submodule S generated by a top vector, and its radical
// computed as the annihilator of the dual closure of the top functional.
struct HeadData {
  Submodule s;
  Submodule rad;
  Weight highest;
};

HeadData head_data(std::shared_ptr<const WeightModule> m) {
  const std::size_t top = top_index(*m);
  Submodule s = submodule_closure(m, {basis_vector(top)});
  auto sm = std::make_shared<const WeightModule>(s.as_module());
  const std::size_t stop = top_index(*sm);
  // Closure of the coordinate functional at the top vector under transposes.
  Echelon<CycloElem> dual(sm->dim());
  std::deque<CVector> queue;
  dual.insert(basis_vector(stop));
  queue.push_back(basis_vector(stop));
  std::vector<CMatrix> transposes;
  for (const CMatrix* g : sm->generators()) transposes.push_back(g->transpose());
  while (!queue.empty()) {
    CVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : transposes) {
      CVector r = dual.reduce(t.apply(v));
      if (r.empty()) continue;
      dual.insert(r);
      queue.push_back(std::move(r));
    }
  }
  Echelon<CycloElem> rad(sm->dim());
  for (const auto& v : dual.orthogonal_complement()) rad.insert(v);
  return {s, Submodule(sm, std::move(rad)), m->weights[top]};
}

void collect_factors(std::shared_ptr<const WeightModule> m, std::vector<Factor>& out) {
  if (m->dim() == 0) return;
  HeadData h = head_data(m);
  out.push_back({h.highest, h.s.dim() - h.rad.dim()});
  if (h.rad.dim() > 0) collect_factors(std::make_shared<const WeightModule>(h.rad.as_module()), out);
  if (h.s.dim() < m->dim()) collect_factors(std::make_shared<const WeightModule>(h.s.quotient()), out);
}

}  // namespace

std::vector<Factor> composition_factors(const WeightModule& m) {
  std::vector<Factor> out;
  collect_factors(std::make_shared<const WeightModule>(m), out);
  std::sort(out.begin(), out.end());
  return out;
}

WeightModule simple_head(const WeightModule& w) {
  HeadData h = head_data(std::make_shared<const WeightModule>(w));
  WeightModule l = h.rad.quotient();
  l.name = "L(" + weight_to_string(h.highest) + ")";
  return l;
}

std::vector<CMatrix> solve_intertwiners(std::size_t rows, std::size_t cols,
                                        const std::vector<std::pair<const CMatrix*, const CMatrix*>>& gens,
                                        const std::function<bool(std::size_t, std::size_t)>& allowed) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t p = 0; p < rows; ++p)
    for (std::size_t q = 0; q < cols; ++q)
      if (allowed(p, q)) {
        idx[{p, q}] = unknowns.size();
        unknowns.push_back({p, q});
      }
  Echelon<CycloElem> eqs(unknowns.size());
  for (const auto& [ga, gb] : gens) {
    const CMatrix ta = ga->transpose();
    // (X A - B X)[p][q] = sum_r X[p][r] A[r][q] - sum_r B[p][r] X[r][q]
    for (std::size_t p = 0; p < rows; ++p)
      for (std::size_t q = 0; q < cols; ++q) {
        std::map<std::size_t, CycloElem> row;
        for (const auto& [r, x] : ta.row(q)) {
          auto it = idx.find({p, r});
          if (it != idx.end()) row[it->second] += x;
        }
        for (const auto& [r, x] : gb->row(p)) {
          auto it = idx.find({r, q});
          if (it != idx.end()) row[it->second] -= x;
        }
        CVector v;
        for (auto& [k, x] : row)
          if (!x.is_zero()) v.emplace_back(k, x);
        if (!v.empty()) eqs.insert(v);
      }
  }
  std::vector<CMatrix> out;
  for (const auto& sol : eqs.orthogonal_complement()) {
    CMatrix x(rows, cols);
    for (const auto& [k, val] : sol) x.set(unknowns[k].first, unknowns[k].second, val);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CMatrix> intertwiners(const WeightModule& a, const WeightModule& b) {
  const auto ga = a.generators();
  const auto gb = b.generators();
  std::vector<std::pair<const CMatrix*, const CMatrix*>> gens;
  for (std::size_t g = 0; g < ga.size(); ++g) gens.emplace_back(ga[g], gb[g]);
  return solve_intertwiners(b.dim(), a.dim(), gens,
                            [&](std::size_t p, std::size_t q) { return b.weights[p] == a.weights[q]; });
}

std::optional<CMatrix> find_isomorphism(const WeightModule& a, const WeightModule& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  auto basis = intertwiners(a, b);
  if (basis.empty()) return a.dim() == 0 ? std::optional<CMatrix>(CMatrix(0, 0)) : std::nullopt;
  // Deterministic combinations; a generic one is invertible when any is.
  for (long trial = 0; trial < 8; ++trial) {
    CMatrix x(b.dim(), a.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const long c = 1 + static_cast<long>((k * 7 + static_cast<std::size_t>(trial) * 13) % 29);
      x = x + CycloElem(c) * basis[k];
    }
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

}  // namespace qfrob
