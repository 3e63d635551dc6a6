#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qfrob/hopfcore.hpp"

namespace qfrob {

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul(a, b) == identity) return b;
  throw std::logic_error("FiniteGroup: element without inverse");
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

FiniteGroup FiniteGroup::make(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("group: no elements");
  if (table.size() != n) throw std::invalid_argument("group: table has the wrong size");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group: table has the wrong size");
    for (std::size_t x : row)
      if (x >= n) throw std::invalid_argument("group: product out of range");
  }
  FiniteGroup g{std::move(names), std::move(table), 0};
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group: no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    std::set<std::size_t> row(g.table[a].begin(), g.table[a].end());
    if (row.size() != n) throw std::invalid_argument("group: element " + g.names[a] + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group: not associative at (" + g.names[a] + ", " + g.names[b] + ", " +
                                      g.names[c] + ")");
  return g;
}

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string strip(const std::string& s) {
  const auto hash = s.find('#');
  std::string t = s.substr(0, hash);
  const auto b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

}  // namespace

GroupFile parse_group_file(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<long>> table;
  std::vector<std::size_t> subgroup;
  bool have_subgroup = false;
  std::string line;
  std::size_t lineno = 0;
  auto err = [&](const std::string& what) {
    throw GroupFileError("line " + std::to_string(lineno) + ": " + what);
  };
  auto lookup = [&](const std::string& w) {
    auto it = index.find(w);
    if (it == index.end()) err("unknown element '" + w + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("elements:", 0) == 0) {
      if (!names.empty()) err("duplicate elements header");
      names = words(s.substr(9));
      if (names.empty()) err("empty elements header");
      for (std::size_t k = 0; k < names.size(); ++k)
        if (!index.emplace(names[k], k).second) err("duplicate element '" + names[k] + "'");
      table.assign(names.size(), std::vector<long>(names.size(), -1));
      continue;
    }
    if (names.empty()) err("expected the elements header first");
    if (s.rfind("subgroup:", 0) == 0) {
      if (have_subgroup) err("duplicate subgroup line");
      have_subgroup = true;
      for (const auto& w : words(s.substr(9))) subgroup.push_back(lookup(w));
      continue;
    }
    const auto w = words(s);
    if (w.size() != 4 || w[2] != "->") err("expected 'x y -> z'");
    const std::size_t x = lookup(w[0]), y = lookup(w[1]), z = lookup(w[3]);
    if (table[x][y] >= 0) err("duplicate product for " + w[0] + " " + w[1]);
    table[x][y] = static_cast<long>(z);
  }
  if (names.empty()) throw GroupFileError("missing elements header");
  if (!have_subgroup) throw GroupFileError("missing subgroup line");
  std::vector<std::vector<std::size_t>> t(names.size(), std::vector<std::size_t>(names.size()));
  for (std::size_t x = 0; x < names.size(); ++x)
    for (std::size_t y = 0; y < names.size(); ++y) {
      if (table[x][y] < 0) throw GroupFileError("missing product for " + names[x] + " " + names[y]);
      t[x][y] = static_cast<std::size_t>(table[x][y]);
    }
  GroupFile f;
  try {
    f.group = FiniteGroup::make(names, std::move(t));
  } catch (const std::invalid_argument& e) {
    throw GroupFileError(e.what());
  }
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (!is_subgroup(f.group, subgroup)) throw GroupFileError("the listed elements do not form a subgroup");
  f.subgroup = std::move(subgroup);
  return f;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  const std::set<std::size_t> s(h.begin(), h.end());
  if (!s.count(g.identity)) return false;
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (!s.count(g.mul(a, g.inverse(b)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  if (!is_subgroup(g, h)) return false;
  const std::set<std::size_t> s(h.begin(), h.end());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t a : s)
      if (!s.count(g.mul(g.mul(x, a), g.inverse(x)))) return false;
  return true;
}

HopfAlgebraFD function_algebra(const FiniteGroup& g, const std::string& name) {
  const std::size_t n = g.order();
  CMatrix delta(n * n, n), counit(1, n), mult(n, n * n), unit(n, 1), antipode(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) delta.set(x * n + y, g.mul(x, y), CycloElem(1));
    mult.set(x, x * n + x, CycloElem(1));
    unit.set(x, 0, CycloElem(1));
    antipode.set(g.inverse(x), x, CycloElem(1));
  }
  counit.set(0, g.identity, CycloElem(1));
  return HopfAlgebraFD::make(CoalgebraFD::make(std::move(delta), std::move(counit), name), std::move(mult),
                             std::move(unit), std::move(antipode));
}

TripleFD finite_group_triple(const FiniteGroup& g, const std::vector<std::size_t>& normal) {
  if (!is_subgroup(g, normal)) throw std::invalid_argument("finite_group_triple: not a subgroup");
  if (!is_normal(g, normal)) throw std::invalid_argument("finite_group_triple: the subgroup is not normal");
  std::vector<std::size_t> sub = normal;
  std::sort(sub.begin(), sub.end());
  const std::size_t n = g.order(), m = sub.size();

  // Cosets x H', numbered by first appearance.
  std::vector<std::size_t> coset(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    for (std::size_t h : sub) coset[g.mul(x, h)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t q = reps.size();
  std::vector<std::string> qnames;
  std::vector<std::vector<std::size_t>> qtable(q, std::vector<std::size_t>(q));
  for (std::size_t c = 0; c < q; ++c) {
    qnames.push_back(g.names[reps[c]] + "H");
    for (std::size_t d = 0; d < q; ++d) qtable[c][d] = coset[g.mul(reps[c], reps[d])];
  }
  const FiniteGroup quotient = FiniteGroup::make(qnames, qtable);

  std::vector<std::string> snames;
  std::vector<std::size_t> slot(n, m);
  for (std::size_t k = 0; k < m; ++k) {
    snames.push_back(g.names[sub[k]]);
    slot[sub[k]] = k;
  }
  std::vector<std::vector<std::size_t>> stable(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) stable[a][b] = slot[g.mul(sub[a], sub[b])];
  const FiniteGroup subgroup = FiniteGroup::make(snames, stable);

  HopfAlgebraFD O = function_algebra(quotient, "O_H");
  HopfAlgebraFD A = function_algebra(g, "O_H''");
  HopfAlgebraFD a = function_algebra(subgroup, "O_H'");
  CMatrix iota(n, q), pi(m, n), action(m, m * n);
  for (std::size_t x = 0; x < n; ++x) iota.set(x, coset[x], CycloElem(1));
  for (std::size_t k = 0; k < m; ++k) {
    pi.set(k, sub[k], CycloElem(1));
    action.set(k, k * n + sub[k], CycloElem(1));
  }
  return TripleFD::make(std::move(O), std::move(A), std::move(a.coalg), std::move(action), std::move(iota),
                        std::move(pi), static_cast<int>(g.exponent()), "finite group triple");
}

TripleFD self_triple(const HopfAlgebraFD& h, int root_order) {
  return TripleFD::make(h, h, CoalgebraFD::ground_field(), h.coalg.counit, CMatrix::identity(h.dim()),
                        h.coalg.counit, root_order, "(A, A, k)");
}

TripleFD degenerate_triple(const HopfAlgebraFD& h, int root_order) {
  return TripleFD::make(h, h, h.coalg, h.mult, CMatrix::identity(h.dim()), CMatrix::identity(h.dim()), root_order,
                        "(A, A, A)");
}

TripleFD shrink_O(const TripleFD& t) {
  const CMatrix one = CMatrix::identity(1);
  HopfAlgebraFD k = HopfAlgebraFD::make(CoalgebraFD::ground_field(), one, one, one);
  return TripleFD::make(std::move(k), t.A, t.a, t.a_action, t.A.unit, t.pi, t.root_order, t.name + " with O = k");
}

}  // namespace qfrob
