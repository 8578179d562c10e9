#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whapar/constructors.hpp"

using namespace whapar;

TEST_CASE("groupoid validation rejects broken tables") {
  FiniteGroupoid g = cyclic_group(2);
  g.comp[1][1] = 1;  // g*g = g breaks inverses
  CHECK_THROWS_AS(g.validate(), InputError);
}

TEST_CASE("Z2 group algebra is a 2-dimensional Hopf algebra") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2));
  CHECK(h.dim() == 2);
  LegOps two(2, 2);
  // group case: Delta(1) = 1 (x) 1
  CHECK(h.coalg.delta(h.alg.unit) == LegOps::tensor(h.alg.unit, 1, h.alg.unit, 1, 2));
  CHECK(check_weak_hopf(h).ok());
}

TEST_CASE("discrete groupoid on two objects has a truly weak unit") {
  WeakHopfAlgebra h = groupoid_algebra(discrete_groupoid(2));
  CHECK(h.dim() == 2);
  CHECK(h.alg.unit == Vec{Rat(1), Rat(1)});
  CHECK(h.coalg.delta(h.alg.unit) != LegOps::tensor(h.alg.unit, 1, h.alg.unit, 1, 2));
  CHECK(check_weak_hopf(h).ok());
}

TEST_CASE("pair groupoid on two objects gives a 4-dimensional weak Hopf algebra") {
  WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2));
  CHECK(h.dim() == 4);
  CHECK(check_weak_hopf(h).ok());
  // oracle: QG of the pair groupoid is the 2x2 matrix coalgebra pattern,
  // arrows a_ij with a_ij a_jk = a_ik
  FiniteGroupoid g = pair_groupoid(2);
  int a12 = 1, a21 = 2;  // row-major (i,j) arrows: a11,a12,a21,a22
  CHECK(g.compose(a12, a21) == 0);
  CHECK(g.compose(a21, a12) == 3);
  CHECK(g.compose(a12, a12) == -1);
}

TEST_CASE("groupoid algebras are cocommutative with involutive antipode") {
  for (auto gg : {cyclic_group(3), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(gg);
    CHECK(check_weak_hopf(h).ok());
    CHECK(is_cocommutative(h));
    CHECK(h.antipode * h.antipode == Matrix::identity(h.dim()));
  }
}

TEST_CASE("sweedler pair matches its defining table") {
  WeakHopfAlgebra h = sweedler_pair();
  CHECK(h.dim() == 8);
  // basis order e1,ex,eg,eh,f1,fx,fg,fh
  auto e = [&](std::size_t i) { return unit_vec(8, i); };
  CHECK(h.coalg.eps(e(2)) == Rat(1));      // eps(e_g) = 1
  CHECK(h.coalg.eps(e(1)) == Rat(0));      // eps(e_x) = 0
  CHECK(is_zero(h.alg.multiply(e(1), e(5))));  // e_x f_x = 0
  CHECK(h.alg.multiply(e(2), e(2)) == e(0));   // e_g e_g = e_1
  CHECK(h.alg.multiply(e(1), e(2)) == e(3));   // e_x e_g = e_h
  CHECK(h.alg.multiply(e(2), e(1)) == Rat(-1) * e(3));  // e_g e_x = -e_h
  // Delta(e_x) = e_x (x) e_1 + e_g (x) e_x
  Vec dx(64);
  dx[1 * 8 + 0] = Rat(1);
  dx[2 * 8 + 1] = Rat(1);
  CHECK(h.coalg.delta(e(1)) == dx);
  // S(e_x) = e_h, S(e_h) = -e_x
  CHECK(h.S(e(1)) == e(3));
  CHECK(h.S(e(3)) == Rat(-1) * e(1));
  CHECK(check_weak_hopf(h).ok());
}

TEST_CASE("birget-rhodes expansion of Z2 has the three known elements") {
  BirgetRhodesGroupoid br = birget_rhodes(cyclic_group(2));
  REQUIRE(br.elements.size() == 3);
  // ({e},e), ({e,g},e), ({e,g},g) under mask bit0=e, bit1=g
  CHECK(br.elements[0] == std::pair<std::uint64_t, int>{0b01, 0});
  CHECK(br.elements[1] == std::pair<std::uint64_t, int>{0b11, 0});
  CHECK(br.elements[2] == std::pair<std::uint64_t, int>{0b11, 1});
}

TEST_CASE("birget-rhodes sizes by brute force and by counting formula") {
  CHECK(birget_rhodes(cyclic_group(1)).elements.size() == 1);
  CHECK(birget_rhodes(cyclic_group(3)).elements.size() == 8);
  for (auto g : {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                 klein_four_group()}) {
    BirgetRhodesGroupoid br = birget_rhodes(g);
    CHECK(br.elements.size() == birget_rhodes_count_group(g));
    CHECK_NOTHROW(br.gpd.validate());
  }
  CHECK(birget_rhodes(cyclic_group(4)).elements.size() == 20);
  CHECK(birget_rhodes(klein_four_group()).elements.size() == 20);
}

TEST_CASE("birget-rhodes expansion of small groupoids") {
  CHECK(birget_rhodes(discrete_groupoid(2)).elements.size() == 2);
  CHECK(birget_rhodes(pair_groupoid(2)).elements.size() == 6);
  BirgetRhodesGroupoid br = birget_rhodes(pair_groupoid(2));
  CHECK_NOTHROW(br.gpd.validate());
  WeakHopfAlgebra h = groupoid_algebra(br.gpd);
  CHECK(check_weak_hopf(h).ok());
}
