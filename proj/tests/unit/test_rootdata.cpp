#include "doctest.h"

#include <deque>
#include <set>

#include "gen.hpp"
#include "qfrob/rootdata.hpp"

using namespace qfrob;

namespace {

// Closure of lam under dot reflections and +-phi(alpha_j^vee) translations,
// restricted to a box of half-width `box`. Independent of canonicalization.
std::set<Weight> bfs_orbit(const AffineWeyl& w, const Weight& lam, long box) {
  std::set<Weight> seen{lam};
  std::deque<Weight> queue{lam};
  auto inside = [&](const Weight& x) {
    for (long c : x)
      if (c < -box || c > box) return false;
    return true;
  };
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    std::vector<Weight> next;
    for (int i = 0; i < w.datum().rank(); ++i) {
      next.push_back(w.dot_reflect(i, x));
      next.push_back(w.translate(i, 1, x));
      next.push_back(w.translate(i, -1, x));
    }
    for (auto& y : next)
      if (inside(y) && seen.insert(y).second) queue.push_back(y);
  }
  return seen;
}

}  // namespace

TEST_CASE("root datum construction") {
  auto a1 = RootDatum::build("A1");
  CHECK(a1.rank() == 1);
  CHECK(a1.a(0, 0) == 2);
  CHECK(a1.simple_root(0) == Weight{2});
  CHECK(a1.rho() == Weight{1});
  auto a2 = RootDatum::build("A2");
  CHECK(a2.a(0, 1) == -1);
  CHECK(a2.a(1, 0) == -1);
  CHECK(a2.positive_roots().size() == 3);
  auto b2 = RootDatum::build("B2");
  CHECK(b2.d() == std::vector<int>{1, 2});
  CHECK(b2.positive_roots().size() == 4);
  long longest = 0;
  for (const auto& r : b2.positive_roots()) longest = std::max(longest, 2 * r.d);
  CHECK(longest == 4);
  auto g2 = RootDatum::build("G2");
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.highest_root().alpha == std::vector<long>{3, 2});
  CHECK(b2.highest_root().alpha == std::vector<long>{2, 1});
  CHECK_THROWS(RootDatum::build("E8"));
  for (const auto* rd : {&a1, &a2, &b2, &g2})
    for (int i = 0; i < rd->rank(); ++i)
      for (int j = 0; j < rd->rank(); ++j) {
        CHECK(rd->d()[i] * rd->a(i, j) == rd->d()[j] * rd->a(j, i));
        CHECK(rd->pairing(i, rd->simple_root(j)) == rd->a(i, j));
      }
}

TEST_CASE("phi and phi_sc") {
  auto a1 = RootDatum::build("A1");
  auto p4 = a1.params(4);
  CHECK(phi(a1, a1.simple_coroot(0), p4) == Weight{8});
  CHECK(phi(a1, CoWeight{0}, p4) == Weight{0});
  CHECK(phi_sc(a1, CoWeight{1}, p4) == Weight{4});
  CHECK(phi_sc(a1, CoWeight{2}, p4) == Weight{8});
  CHECK_THROWS(phi(a1, CoWeight{1}, p4));
  auto a2 = RootDatum::build("A2");
  CHECK(phi(a2, a2.simple_coroot(0), a2.params(6)) == Weight{12, -6});

  testgen::Gen g(3);
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rd = RootDatum::build(t);
    auto p = rd.params(6);
    auto form = EllForm::make(rd, p);
    for (int i = 0; i < rd.rank(); ++i) {
      std::vector<long> ei(rd.rank(), 0);
      ei[i] = 1;
      CHECK(form(ei, ei) == 2 * p.ell_i[i]);
      CHECK(phi(rd, rd.simple_coroot(i), p) == [&] {
        Weight w = rd.simple_root(i);
        for (auto& x : w) x *= p.ell_i[i];
        return w;
      }());
    }
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<long> c(rd.rank());
      for (auto& x : c) x = g.integer(-4, 4);
      CoWeight mu(rd.rank(), 0);
      for (int i = 0; i < rd.rank(); ++i)
        for (int k = 0; k < rd.rank(); ++k) mu[k] += c[i] * rd.a(i, k);
      Weight ph = phi(rd, mu, p);
      for (int i = 0; i < rd.rank(); ++i) {
        std::vector<long> ei(rd.rank(), 0);
        ei[i] = 1;
        CHECK(rd.pairing(i, ph) == form(ei, c));
      }
      CHECK(coroot_coordinates(rd, mu) == c);
    }
  }
}

TEST_CASE("dot action") {
  auto a1 = RootDatum::build("A1");
  for (long l = -10; l <= 10; ++l) CHECK(dot_reflect(a1, 0, Weight{l}) == Weight{-l - 2});
  testgen::Gen g(5);
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rd = RootDatum::build(t);
    AffineWeyl w(rd, rd.params(6));
    Weight mrho = rd.rho();
    for (auto& x : mrho) x = -x;
    for (int i = 0; i < rd.rank(); ++i) CHECK(w.dot_reflect(i, mrho) == mrho);
    const int m = rd.rank() == 1 ? 1 : (t == std::string("A2") ? 3 : t == std::string("B2") ? 4 : 6);
    for (int trial = 0; trial < 100; ++trial) {
      Weight lam(rd.rank());
      for (auto& x : lam) x = g.integer(-15, 15);
      for (int i = 0; i < rd.rank(); ++i) CHECK(w.dot_reflect(i, w.dot_reflect(i, lam)) == lam);
      if (rd.rank() == 2) {
        Weight x = lam;
        for (int k = 0; k < m; ++k) x = w.dot_reflect(0, w.dot_reflect(1, x));
        CHECK(x == lam);
        CHECK(w.translate(0, 1, w.translate(1, 1, lam)) == w.translate(1, 1, w.translate(0, 1, lam)));
      }
      CHECK(w.dot_reflect_affine(w.dot_reflect_affine(lam)) == lam);
    }
  }
}

TEST_CASE("same_block examples") {
  auto a1 = RootDatum::build("A1");
  AffineWeyl w(a1, a1.params(4));
  CHECK(w.same_block({5}, {5}));
  CHECK(w.same_block({0}, {6}));
  CHECK(!w.same_block({0}, {1}));
  CHECK(w.same_block({4}, {2}));
  CHECK(w.canonical({3}).singular);
  CHECK(w.canonical({7}).singular);
  CHECK(!w.canonical({0}).singular);
  CHECK(w.canonical({-1}).singular);
}

TEST_CASE("same_block agrees with BFS orbits") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rd = RootDatum::build(t);
    for (int ell : {4, 6}) {
      if (ell % rd.d().back() != 0) continue;
      AffineWeyl w(rd, rd.params(ell));
      testgen::Gen g(17 + ell);
      for (int trial = 0; trial < (rd.rank() == 1 ? 20 : 6); ++trial) {
        Weight lam(rd.rank());
        for (auto& x : lam) x = g.integer(-6, 6);
        const long box = rd.rank() == 1 ? 60 : 26;
        auto orbit = bfs_orbit(w, lam, box);
        const Weight rep = w.canonical(lam).rep;
        for (const auto& x : orbit) CHECK(w.canonical(x).rep == rep);
        // Points near the centre not in the BFS orbit must differ.
        for (int probe = 0; probe < 20; ++probe) {
          Weight y(rd.rank());
          for (auto& c : y) c = g.integer(-8, 8);
          CHECK(w.same_block(lam, y) == (orbit.count(y) > 0));
        }
      }
    }
  }
}

TEST_CASE("same_block is an equivalence relation invariant under generators") {
  auto rd = RootDatum::build("B2");
  AffineWeyl w(rd, rd.params(4));
  testgen::Gen g(23);
  for (int trial = 0; trial < 60; ++trial) {
    Weight a{g.integer(-10, 10), g.integer(-10, 10)};
    Weight b = w.dot_reflect(static_cast<int>(g.integer(0, 1)), a);
    Weight c = w.translate(static_cast<int>(g.integer(0, 1)), g.integer(-2, 2), b);
    CHECK(w.same_block(a, a));
    CHECK(w.same_block(a, b) == w.same_block(b, a));
    CHECK(w.same_block(a, c));
    CHECK(w.same_block(a, w.dot_reflect_affine(a)));
    Weight d{g.integer(-10, 10), g.integer(-10, 10)};
    if (w.same_block(a, d) && w.same_block(d, c)) CHECK(w.same_block(a, c));
  }
}

TEST_CASE("orbit_in_window") {
  auto a1 = RootDatum::build("A1");
  AffineWeyl w(a1, a1.params(4));
  auto o = orbit_in_window(w, {0}, {-10}, {10});
  CHECK(o == std::set<Weight>{{-10}, {-8}, {-2}, {0}, {6}, {8}});
  auto mr = orbit_in_window(w, {-1}, {-20}, {20});
  CHECK(mr == std::set<Weight>{{-17}, {-9}, {-1}, {7}, {15}});
  CHECK(orbit_in_window(w, {0}, {1}, {5}).empty());
  CHECK(orbit_in_window(w, {3}, {3}, {3}) == std::set<Weight>{{3}});
  for (const char* t : {"A2", "G2"}) {
    auto rd = RootDatum::build(t);
    AffineWeyl wr(rd, rd.params(6));
    Weight lam{1, 0};
    auto pts = orbit_in_window(wr, lam, {-12, -12}, {12, 12});
    auto bfs = bfs_orbit(wr, lam, 40);
    std::set<Weight> clipped;
    for (const auto& x : bfs)
      if (std::abs(x[0]) <= 12 && std::abs(x[1]) <= 12) clipped.insert(x);
    CHECK(pts == clipped);
  }
}

TEST_CASE("steinberg_decompose") {
  auto a1 = RootDatum::build("A1");
  auto p4 = a1.params(4);
  auto s = steinberg_decompose(a1, {9}, p4);
  CHECK(s.lam1 == Weight{1});
  CHECK(s.mu == CoWeight{2});
  s = steinberg_decompose(a1, {3}, p4);
  CHECK(s.lam1 == Weight{3});
  CHECK(s.mu == CoWeight{0});
  CHECK_THROWS(steinberg_decompose(a1, {-1}, p4));
  testgen::Gen g(29);
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto rd = RootDatum::build(t);
    auto p = rd.params(6);
    for (int trial = 0; trial < 200; ++trial) {
      Weight lam(rd.rank());
      for (auto& x : lam) x = g.integer(0, 40);
      auto sd = steinberg_decompose(rd, lam, p);
      Weight back = phi_sc(rd, sd.mu, p);
      for (int i = 0; i < rd.rank(); ++i) {
        back[i] += sd.lam1[i];
        CHECK(sd.lam1[i] >= 0);
        CHECK(sd.lam1[i] < p.ell_i[i]);
        CHECK(sd.mu[i] >= 0);
      }
      CHECK(back == lam);
    }
  }
}
