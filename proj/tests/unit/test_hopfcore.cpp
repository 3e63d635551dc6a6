#include "doctest.h"

#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "groups.hpp"
#include "qfrob/hopfcore.hpp"

using namespace qfrob;

namespace {

TripleFD z4_triple() { return finite_group_triple(groups::cyclic(4), {0, 2}); }
TripleFD s3_triple() { return finite_group_triple(groups::symmetric3(), groups::alternating3()); }

ComoduleFD trivial_a(const TripleFD& t) {
  return {1, CMatrix::from_columns(t.a.n, {t.unit_a()}), Side::left, "k"};
}

bool all_ok(const Report& r) {
  if (const Check* c = r.find_failure()) {
    MESSAGE("failed: ", c->name, " ", c->details, " ", c->counterexample.value_or(""));
    return false;
  }
  return true;
}

bool same_actions(const TripleObject& x, const TripleObject& y) {
  return x.dim == y.dim && x.action == y.action && x.coaction == y.coaction;
}

std::size_t sum_of_squares(const std::vector<ComoduleFD>& s) {
  std::size_t n = 0;
  for (const auto& m : s) n += m.dim * m.dim;
  return n;
}

// Graded line over functions on Z/2.
ComoduleFD line(std::size_t degree, Side side) {
  CMatrix rho(2, 1);
  rho.set(degree, 0, CycloElem(1));
  return {1, rho, side, "line"};
}

}  // namespace

TEST_CASE("function algebras satisfy the Hopf axioms and corrupted tensors are rejected") {
  const HopfAlgebraFD h = function_algebra(groups::symmetric3(), "O_S3");
  CHECK(h.dim() == 6);
  CHECK(all_ok(hopf_axioms(h.coalg, h.mult, h.unit, h.antipode)));
  CMatrix bad = h.coalg.delta;
  bad.set(0, 1, CycloElem(1));
  CHECK_THROWS_AS(CoalgebraFD::make(bad, h.coalg.counit, "bad"), std::invalid_argument);
  CMatrix bad_s = h.antipode;
  bad_s.set(0, 1, CycloElem(2));
  CHECK_THROWS_AS(HopfAlgebraFD::make(h.coalg, h.mult, h.unit, bad_s), std::invalid_argument);
  CHECK_THROWS_AS(ComoduleFD::make(h.coalg, CMatrix(6, 1), Side::left, "zero"), std::invalid_argument);
}

TEST_CASE("cotensor of graded lines") {
  const CoalgebraFD z2 = function_algebra(groups::cyclic(2), "O_Z2").coalg;
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t h = 0; h < 2; ++h)
      CHECK(cotensor(z2, line(g, Side::right), line(h, Side::left)).dim() == (g == h ? 1u : 0u));
  const CoalgebraFD k = CoalgebraFD::ground_field();
  const ComoduleFD r3{3, CMatrix::identity(3), Side::right, "r"};
  const ComoduleFD l2{2, CMatrix::identity(2), Side::left, "l"};
  CHECK(cotensor(k, r3, l2).dim() == 6);
}

TEST_CASE("finite group triples: dimensions and simple counts") {
  const TripleFD z4 = z4_triple();
  CHECK(z4.O.dim() == 2);
  CHECK(z4.A.dim() == 4);
  CHECK(z4.a.n == 2);
  CHECK(simple_comodules(z4.O.coalg, z4.root_order).size() == 2);
  CHECK(simple_comodules(z4.A.coalg, z4.root_order).size() == 4);
  CHECK(simple_comodules(z4.a, z4.root_order).size() == 2);

  const TripleFD s3 = s3_triple();
  CHECK(s3.O.dim() == 2);
  CHECK(s3.A.dim() == 6);
  CHECK(s3.a.n == 3);
  const auto sa = simple_comodules(s3.a, s3.root_order);
  const auto sA = simple_comodules(s3.A.coalg, s3.root_order);
  CHECK(sa.size() == 3);
  CHECK(sA.size() == groups::class_count(groups::symmetric3()));
  CHECK(sA.size() == 3);
  CHECK(sum_of_squares(sA) == 6);
  CHECK(sum_of_squares(sa) == 3);
  for (const auto& s : sA) CHECK(comodule_morphisms(s3.A.coalg, s, s).size() == 1);
  CHECK(simple_comodules(z4.A.coalg, z4.root_order).size() == groups::class_count(groups::cyclic(4)));
}

TEST_CASE("group files") {
  std::ifstream in(std::string(QFROB_DATA_DIR) + "/s3_a3.group");
  REQUIRE(in);
  const GroupFile f = parse_group_file(in);
  CHECK(f.group.order() == 6);
  CHECK(f.subgroup.size() == 3);
  CHECK(is_normal(f.group, f.subgroup));
  CHECK(groups::class_count(f.group) == 3);

  std::ifstream nn(std::string(QFROB_DATA_DIR) + "/non_normal.group");
  const GroupFile g = parse_group_file(nn);
  CHECK(is_subgroup(g.group, g.subgroup));
  CHECK_FALSE(is_normal(g.group, g.subgroup));
  CHECK_THROWS_AS(finite_group_triple(g.group, g.subgroup), std::invalid_argument);

  const char* missing = "elements: a b\na a -> a\na b -> b\nb a -> b\nsubgroup: a\n";
  std::istringstream m1(missing);
  CHECK_THROWS_AS(parse_group_file(m1), GroupFileError);
  const char* unknown = "elements: a\na c -> a\nsubgroup: a\n";
  std::istringstream m2(unknown);
  CHECK_THROWS_AS(parse_group_file(m2), GroupFileError);
  const char* not_group = "elements: a b\na a -> a\na b -> b\nb a -> b\nb b -> b\nsubgroup: a\n";
  std::istringstream m3(not_group);
  CHECK_THROWS_AS(parse_group_file(m3), GroupFileError);
  const char* not_sub = "elements: 0 1\n0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> 0\nsubgroup: 1\n";
  std::istringstream m4(not_sub);
  CHECK_THROWS_AS(parse_group_file(m4), GroupFileError);
}

TEST_CASE("conditions on finite group triples and controls") {
  for (const TripleFD& t : {z4_triple(), s3_triple()}) {
    const ConditionReport c = check_conditions(t, 20261016);
    CHECK(all_ok(c.report));
    CHECK(c.i);
    CHECK(c.ii);
    CHECK(c.iii);
    CHECK(c.iv_a_free);
    CHECK(c.iv_b);
    CHECK(c.satisfied());
  }
  const HopfAlgebraFD a = function_algebra(groups::cyclic(4), "O_Z4");
  const ConditionReport self = check_conditions(self_triple(a, 4));
  CHECK(self.satisfied());
  const ConditionReport degenerate = check_conditions(degenerate_triple(a, 4));
  CHECK_FALSE(degenerate.iii);
  CHECK_FALSE(degenerate.i);
  const ConditionReport shrunk = check_conditions(shrink_O(z4_triple()));
  CHECK_FALSE(shrunk.ii);
  CHECK_FALSE(shrunk.satisfied());
}

TEST_CASE("Ind and Psi on the standard objects") {
  for (const TripleFD& t : {z4_triple(), s3_triple()}) {
    const TripleObject A = object_A(t), O = object_O(t);
    CHECK(all_ok(object_axioms(t, A)));
    CHECK(all_ok(object_axioms(t, O)));
    CHECK(object_isomorphism(t, induce(t, regular_comodule(t.a)).object, A));
    CHECK(object_isomorphism(t, induce(t, trivial_a(t)).object, O));
    CHECK(comodule_isomorphism(t.a, psi(t, A).comodule, regular_comodule(t.a)));
    CHECK(comodule_isomorphism(t.a, psi(t, O).comodule, trivial_a(t)));
    std::vector<ComoduleFD> ns = simple_comodules(t.A.coalg, t.root_order);
    ns.push_back(regular_comodule(t.A.coalg));
    for (const auto& n : ns) {
      const TripleObject free = free_object(t, n);
      CHECK(all_ok(object_axioms(t, free)));
      CHECK(object_isomorphism(t, induce(t, t.restrict(n)).object, free));
      CHECK(comodule_isomorphism(t.a, psi(t, free).comodule, t.restrict(n)));
    }
  }
}

TEST_CASE("adjunction maps are bijective on the catalog") {
  for (const TripleFD& t : {z4_triple(), s3_triple(), finite_group_triple(groups::symmetric3(), {0})}) {
    CHECK(all_ok(verify_equivalence(t, standard_catalog(t))));
  }
  const HopfAlgebraFD a = function_algebra(groups::symmetric3(), "O_S3");
  const TripleFD self = self_triple(a, 6);
  const Catalog c = standard_catalog(self);
  CHECK(all_ok(verify_equivalence(self, c)));
  // Every object of Cat_A is free: N = A (x) Psi(N).
  for (const auto& n : c.objects) CHECK(psi(self, n).comodule.dim * a.dim() == n.dim);
}

TEST_CASE("adjunction: Hom dimensions agree") {
  const TripleFD t = s3_triple();
  const Catalog c = standard_catalog(t);
  for (const auto& n : c.objects)
    for (const auto& m : c.comodules) {
      const std::size_t lhs = object_morphisms(t, n, induce(t, m).object).size();
      const std::size_t rhs = comodule_morphisms(t.a, psi(t, n).comodule, m).size();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("random objects in group triples") {
  testgen::Gen gen(20261016);
  const TripleFD t = s3_triple();
  const auto sA = simple_comodules(t.A.coalg, t.root_order);
  const auto sa = simple_comodules(t.a, t.root_order);
  for (int trial = 0; trial < 4; ++trial) {
    ComoduleFD n = sA[static_cast<std::size_t>(gen.integer(0, 2))];
    ComoduleFD m = sa[static_cast<std::size_t>(gen.integer(0, 2))];
    const long extra = gen.integer(0, 1);
    for (long k = 0; k < extra; ++k) {
      n = direct_sum(t.A.coalg, n, sA[static_cast<std::size_t>(gen.integer(0, 2))]);
      m = direct_sum(t.a, m, sa[static_cast<std::size_t>(gen.integer(0, 2))]);
    }
    const TripleObject obj = free_object(t, n);
    const CMatrix u = adjunction_unit(t, obj);
    CHECK(is_invertible(u));
    CHECK(is_invertible(adjunction_counit(t, m)));
  }
}

TEST_CASE("twists by points of Spec O") {
  testgen::Gen gen(7);
  const TripleFD t = s3_triple();
  const auto pts = basis_points(t.O);
  REQUIRE(pts.size() == 2);
  const Point e = identity_point(t.O);
  const TripleObject x = free_object(t, simple_comodules(t.A.coalg, t.root_order).back());
  CHECK(same_actions(twist(t, e, x), x));
  for (const auto& g1 : pts)
    for (const auto& g2 : pts) {
      CHECK(same_actions(twist(t, g1, twist(t, g2, x)), twist(t, point_product(t.O, g1, g2), x)));
      CHECK(all_ok(object_axioms(t, twist(t, g1, x))));
    }
  for (int trial = 0; trial < 4; ++trial) {
    const Point& a = pts[static_cast<std::size_t>(gen.integer(0, 1))];
    const Point& b = pts[static_cast<std::size_t>(gen.integer(0, 1))];
    const Point& c = pts[static_cast<std::size_t>(gen.integer(0, 1))];
    const TripleObject left = twist(t, a, twist(t, b, twist(t, c, x)));
    const TripleObject right = twist(t, point_product(t.O, point_product(t.O, a, b), c), x);
    CHECK(same_actions(left, right));
  }
  Point bad = e;
  bad[0] = CycloElem(2);
  CHECK_THROWS_AS(twist(t, bad, x), std::invalid_argument);

  // The nontrivial point conjugates A3 by a transposition and swaps the two
  // nontrivial characters.
  const auto sa = simple_comodules(t.a, t.root_order);
  const Point& s = is_point(t.O, pts[0]) && pts[0] == e ? pts[1] : pts[0];
  std::size_t fixed = 0;
  for (const auto& m : sa)
    if (comodule_isomorphism(t.a, twist_comodule(t, s, m), m)) ++fixed;
  CHECK(fixed == 1);
}

TEST_CASE("equivariant reconstruction") {
  const TripleFD t = s3_triple();
  const auto sA = simple_comodules(t.A.coalg, t.root_order);
  std::size_t simple_fibers = 0;
  for (const auto& n : sA) {
    const ComoduleFD back = equivariant_reconstruct(t, canonical_equivariance(t, n));
    CHECK(comodule_isomorphism(t.A.coalg, back, n));
    if (comodule_morphisms(t.A.coalg, back, back).size() == 1) ++simple_fibers;
  }
  CHECK(simple_fibers == groups::class_count(groups::symmetric3()));
  const ComoduleFD reg = regular_comodule(t.A.coalg);
  CHECK(comodule_isomorphism(t.A.coalg, equivariant_reconstruct(t, canonical_equivariance(t, reg)), reg));

  EquivariantComodule bad = canonical_equivariance(t, sA.back());
  bad.o_coaction.set(0, 1, CycloElem(1));
  CHECK_THROWS_AS(equivariant_reconstruct(t, bad), std::invalid_argument);
}

TEST_CASE("the ideal proposition") {
  CHECK(all_ok(verify_ideal_prop(z4_triple())));
  CHECK(all_ok(verify_ideal_prop(s3_triple())));
  const HopfAlgebraFD a = function_algebra(groups::cyclic(4), "O_Z4");
  CHECK(all_ok(verify_ideal_prop(self_triple(a, 4))));
  const Report shrunk = verify_ideal_prop(shrink_O(z4_triple()));
  const Check* f = shrunk.find_failure();
  REQUIRE(f);
  CHECK(f->name == "condition (ii)");
}

TEST_CASE("extensions of comodules") {
  const TripleFD t = s3_triple();
  const auto sA = simple_comodules(t.A.coalg, t.root_order);
  for (const auto& x : sA)
    for (const auto& y : sA) CHECK(ext1_dim(t.A.coalg, x, y) == 0);
  CHECK(ext_blocks(t.A.coalg, sA) == std::vector<std::size_t>{0, 1, 2});

  // Path coalgebra g, h, x with Delta x = g (x) x + x (x) h.
  CMatrix delta(9, 3), counit(1, 3);
  delta.set(0 * 3 + 0, 0, CycloElem(1));
  delta.set(1 * 3 + 1, 1, CycloElem(1));
  delta.set(0 * 3 + 2, 2, CycloElem(1));
  delta.set(2 * 3 + 1, 2, CycloElem(1));
  counit.set(0, 0, CycloElem(1));
  counit.set(0, 1, CycloElem(1));
  const CoalgebraFD c = CoalgebraFD::make(delta, counit, "path");
  auto grouplike = [&](std::size_t k) {
    CMatrix rho(3, 1);
    rho.set(k, 0, CycloElem(1));
    return ComoduleFD::make(c, rho, Side::left, "k" + std::to_string(k));
  };
  const ComoduleFD kg = grouplike(0), kh = grouplike(1);
  CHECK(ext1_dim(c, kh, kg) + ext1_dim(c, kg, kh) == 1);
  CHECK(ext1_dim(c, kg, kg) == 0);
  CHECK(ext_blocks(c, {kg, kh}) == std::vector<std::size_t>{0, 0});
}
