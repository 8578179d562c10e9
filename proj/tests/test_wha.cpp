#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whapar/constructors.hpp"

using namespace whapar;

namespace {

FinDimAlgebra one_dim_algebra() {
  FinDimAlgebra a(1);
  a.mult.at(0, 0, 0) = Rat(1);
  a.unit[0] = Rat(1);
  return a;
}

bool has_failure(const CheckReport& r, const std::string& axiom) {
  for (const auto& f : r.failures)
    if (f.axiom.find(axiom) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("one-dimensional algebra passes") {
  CHECK(check_algebra(one_dim_algebra()).ok());
}

TEST_CASE("group algebra of Z2 passes the algebra axioms") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2));
  CHECK(check_algebra(h.alg).ok());
  // oracle: the group multiplication table
  CHECK(h.alg.multiply(unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0));
}

TEST_CASE("perturbed multiplication fails at a named triple") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2));
  h.alg.mult.at(0, 1, 1) = Rat(2);  // e*g := 2g
  CheckReport r = check_algebra(h.alg);
  REQUIRE(!r.ok());
  CHECK(has_failure(r, "ALG-assoc"));
  CHECK(!r.failures.front().idx.empty());
}

TEST_CASE("weak Hopf axioms hold on the bundled constructors") {
  for (auto h : {groupoid_algebra(cyclic_group(1)), groupoid_algebra(cyclic_group(2)),
                 groupoid_algebra(cyclic_group(3)), groupoid_algebra(cyclic_group(4)),
                 groupoid_algebra(discrete_groupoid(2)), groupoid_algebra(pair_groupoid(2)),
                 sweedler_pair(), sweedler_h4()}) {
    CheckReport r = check_weak_hopf(h);
    INFO(r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("erasing a counit value breaks weak multiplicativity") {
  WeakHopfAlgebra h = sweedler_pair();
  h.coalg.counit[2] = Rat(0);  // eps(e_g) := 0
  CheckReport r = check_weak_hopf(h);
  CHECK(!r.ok());
  CHECK(has_failure(r, "WHA-iv"));
}

TEST_CASE("counital projections of a group algebra are the line through 1") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2));
  CanonicalProjections cp = canonical_projections(h);
  CHECK(cp.Ht.dim() == 1);
  CHECK(cp.Hs.dim() == 1);
  CHECK(cp.Ht.contains(h.alg.unit));
  CHECK(cp.Hs == cp.Ht);
}

TEST_CASE("counital projections of the sweedler pair have dimension two") {
  WeakHopfAlgebra h = sweedler_pair();
  CanonicalProjections cp = canonical_projections(h);
  CHECK(cp.Ht.dim() == 2);
  CHECK(cp.Hs.dim() == 2);
  // span{e_1, f_1}
  CHECK(cp.Ht.contains(unit_vec(8, 0)));
  CHECK(cp.Ht.contains(unit_vec(8, 4)));
  CHECK(cp.Hs == cp.Ht);
}

TEST_CASE("counital maps fix the unit and are idempotent") {
  for (auto h : {groupoid_algebra(cyclic_group(2)), groupoid_algebra(discrete_groupoid(2)),
                 sweedler_pair()}) {
    CHECK(h.eps_t(h.alg.unit) == h.alg.unit);
    CHECK(h.eps_s(h.alg.unit) == h.alg.unit);
    CanonicalProjections cp = canonical_projections(h);
    CHECK(cp.eps_t * cp.eps_t == cp.eps_t);
    CHECK(cp.eps_s * cp.eps_s == cp.eps_s);
  }
}

TEST_CASE("counital antipode identities hold") {
  for (auto h : {groupoid_algebra(cyclic_group(2)), groupoid_algebra(cyclic_group(3)),
                 groupoid_algebra(pair_groupoid(2)), sweedler_pair()}) {
    CheckReport r = lemma21_suite(h);
    INFO(r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("S fixes the unit of the sweedler pair") {
  WeakHopfAlgebra h = sweedler_pair();
  // 1_H = e_1 + f_1 and S fixes each block's 1
  CHECK(h.S(h.alg.unit) == h.alg.unit);
}

TEST_CASE("cocommutativity") {
  CHECK(is_cocommutative(groupoid_algebra(cyclic_group(2))));
  CHECK(is_cocommutative(groupoid_algebra(pair_groupoid(2))));
  CHECK(is_cocommutative(trivial_group_algebra()));
  CHECK(!is_cocommutative(sweedler_pair()));
}

TEST_CASE("antipode inverse bookkeeping") {
  WeakHopfAlgebra h = sweedler_pair();
  REQUIRE(h.has_antipode_inv());
  Matrix id = Matrix::identity(8);
  CHECK(h.antipode * (*h.antipode_inv) == id);
  CHECK((*h.antipode_inv) * h.antipode == id);

  WeakHopfAlgebra g = h;
  g.antipode_inv.reset();
  CheckReport r = ensure_antipode_inverse(g);
  CHECK(r.ok());
  CHECK(g.antipode * (*g.antipode_inv) == id);

  // a singular "antipode" is reported, not silently accepted
  WeakHopfAlgebra bad = h;
  bad.antipode = Matrix(8, 8);
  bad.antipode_inv.reset();
  CHECK(!ensure_antipode_inverse(bad).ok());
}

TEST_CASE("sampled mode stays deterministic and accepts a valid algebra") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(12));
  SamplePlan plan;
  plan.exhaustive = false;
  plan.exhaustive_below = 4;  // force the sampled path
  plan.budget = 500;
  CheckReport a = check_algebra(h.alg, plan);
  CheckReport b = check_algebra(h.alg, plan);
  CHECK(a.ok());
  CHECK(a.passed == b.passed);
  CHECK(!a.notes.empty());
}
