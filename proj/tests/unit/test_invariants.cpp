#include <gtest/gtest.h>

#include "logpair/errors.hpp"
#include "logpair/invariants.hpp"
#include "logpair/worked_examples.hpp"
#include "support/oracles.hpp"

namespace logpair {
namespace {

DualGraph line_triangle() {
  return DualGraph({{"L1", 0, 1}, {"L2", 0, 1}, {"L3", 0, 1}}, {{"L1", "L2", 1}, {"L2", "L3", 1}, {"L3", "L1", 1}});
}

TEST(LogChern, ExampleTwo) {
  const auto data = example2_data();
  const auto inv = log_chern(data.model, data.D, example2_graph(data));
  EXPECT_EQ(inv.D_sq, 4);
  EXPECT_EQ(inv.KD, -2);
  EXPECT_EQ(inv.c1bar_sq, 1);
  EXPECT_EQ(inv.c2bar, 5);
  EXPECT_EQ(inv.pa_D, 2);
  EXPECT_EQ(inv.l, 4);
  EXPECT_EQ(inv.r, 3);
  EXPECT_EQ(inv.euler_S, 11);
  EXPECT_EQ(inv.chi_bar, 2);
  EXPECT_EQ(inv.e_open, 5);
  EXPECT_EQ(inv.e_open_additive, 9);
  EXPECT_TRUE(inv.additivity_mismatch);
  EXPECT_EQ(inv.pg_log, 2);
  EXPECT_EQ(inv.h1_log, 0);
  EXPECT_TRUE(noether_check(inv, inv.D_sq));
}

TEST(LogChern, HandComputationOracle) {
  // Example 2 from the Gram matrix by hand: D = 6H - 2 sum E, K = -3H + sum E.
  const Rational d_sq = 36 - 8 * 4;
  const Rational kd = -18 + 8 * 2;
  const Rational c1 = d_sq + 2 * kd + (9 - 8);
  const auto data = example2_data();
  const auto inv = log_chern(data.model, data.D, example2_graph(data));
  EXPECT_EQ(inv.c1bar_sq, c1);
  EXPECT_EQ(Rational(inv.c2bar), 11 + 2 * ((d_sq + kd) / 2 + 1 - 1 - 4));
}

TEST(LogChern, LineTriangle) {
  const auto p2 = SurfaceModel::plane_blowup(0);
  const auto inv = log_chern(p2, DivisorClass{3}, line_triangle());
  EXPECT_EQ(inv.pa_D, 1);
  EXPECT_EQ(inv.l, 3);
  EXPECT_EQ(inv.c2bar, -3);
  // The complement of three general lines is (C*)^2, with Euler number 0.
  EXPECT_EQ(inv.e_open_additive, 0);
}

TEST(LogChern, RejectsZeroAndInconsistentInput) {
  const auto p2 = SurfaceModel::plane_blowup(0);
  EXPECT_THROW(log_chern(p2, DivisorClass{0}, DualGraph({{"L", 0, 1}}, {})), InputError);
  // Graph claims a line, class is a conic: p_a agrees (0) but D^2 does not.
  EXPECT_THROW(log_chern(p2, DivisorClass{2}, DualGraph({{"L", 0, 1}}, {})), InputError);
  // A cubic described as a rational curve: p_a disagrees.
  EXPECT_THROW(log_chern(p2, DivisorClass{3}, DualGraph({{"C", 0, 9}}, {})), InputError);
  EXPECT_THROW(log_chern(SurfaceModel::custom(RationalMatrix{{1}}), DivisorClass{1}, DualGraph({{"L", 0, 1}}, {})),
               InputError);
}

TEST(Noether, PerturbationBreaksIdentity) {
  const auto data = example2_data();
  auto inv = log_chern(data.model, data.D, example2_graph(data));
  inv.c2bar += 1;
  EXPECT_FALSE(noether_check(inv, inv.D_sq));
}

TEST(Noether, HoldsForRandomBoundDivisors) {
  testing::Gen gen(61);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 120; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 6));
    const auto m = SurfaceModel::plane_blowup(n);
    std::vector<DivisorClass> pool;
    for (std::size_t p = 0; p < n; ++p) pool.push_back(m.exceptional(p));
    for (int extra = 0; extra < 6; ++extra) {
      std::vector<Rational> mu(n);
      for (auto& x : mu) x = gen.integer(0, 1);
      pool.push_back(plane_class(m, gen.integer(1, 3), mu));
    }
    std::shuffle(pool.begin(), pool.end(), gen.engine());
    pool.resize(static_cast<std::size_t>(gen.integer(1, 4)));
    bool ok = true;
    std::vector<long> genera;
    DivisorClass D = DivisorClass::zero(m.rank());
    for (std::size_t a = 0; a < pool.size(); ++a) {
      const Rational pa = arithmetic_genus(m, pool[a]);
      ok = ok && pa >= 0;
      genera.push_back(ok ? to_long(pa) : 0);
      for (std::size_t b = a + 1; b < pool.size(); ++b) ok = ok && intersect(m, pool[a], pool[b]) >= 0 && pool[a] != pool[b];
      D += pool[a];
    }
    if (!ok) continue;
    std::vector<std::string> ids;
    for (std::size_t a = 0; a < pool.size(); ++a) ids.push_back("C" + std::to_string(a));
    const auto g = DualGraph::from_classes(m, ids, pool, genera);
    const auto inv = log_chern(m, D, g);
    EXPECT_TRUE(noether_check(inv, inv.D_sq));
    EXPECT_EQ(inv.e_open, inv.c2bar);
    EXPECT_EQ(inv.e_open_additive - inv.e_open, inv.l);
    EXPECT_EQ(inv.chi_bar, 1 + (inv.KD + inv.D_sq) / 2);
    ++checked;
  }
  EXPECT_GE(checked, 60);
}

TEST(EulerBound, ExampleTwo) {
  const auto run = run_example2();
  EXPECT_FALSE(run.euler.hypothesis);
  EXPECT_EQ(run.euler.hypothesis_rhs, 0);
  EXPECT_EQ(run.euler.chi_log_forms, -2);
  EXPECT_EQ(run.euler.bound_general, true);
  EXPECT_EQ(run.euler.bound_pg_zero, false);
  EXPECT_NE(run.euler.note.find("hypothesis fails"), std::string::npos);
}

TEST(EulerBound, LineInPlaneBoundaryCase) {
  const auto p2 = SurfaceModel::plane_blowup(0);
  const auto inv = log_chern(p2, DivisorClass{1}, DualGraph({{"L", 0, 1}}, {}));
  const auto rep = euler_bound_check(inv, *p2.hodge());
  EXPECT_TRUE(rep.hypothesis);
  EXPECT_EQ(rep.hypothesis_rhs, 0);
}

TEST(Bmy, Examples) {
  EXPECT_TRUE(bmy_check(1, 0, 5));
  EXPECT_TRUE(bmy_check(0, 0, 0));
  EXPECT_FALSE(bmy_check(9, 0, 2));
  EXPECT_TRUE(bmy_check(ratio(4, 3), ratio(-1, 3), 5));
}

TEST(GenusBound, ClosedForms) {
  EXPECT_EQ(genus_bound(2, 4), 3);
  EXPECT_EQ(genus_bound(1, 0), 1);
  EXPECT_EQ(genus_bound(3, 9), ratio(5, 2) + 1);
  EXPECT_THROW(genus_bound(0, 1), InputError);
  EXPECT_EQ(main1_proof_bound(100, 0, false), Rational(3 * 102 * 203) / 20000);
  EXPECT_EQ(main1_proof_bound(100, 0, true), Rational(3 * 102 * 102) / 20000);
}

TEST(SharpCompletion, SingleMinusTwoCurve) {
  const auto m = SurfaceModel::plane_blowup(2);
  const DivisorClass F{1, -1, 0};
  const DivisorClass C[] = {DivisorClass{0, 1, -1}};
  const auto r = sharp_completion(m, F, C);
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{ratio(1, 2)}));
  EXPECT_EQ(r.X_sharp_sq, r.X_sq + ratio(1, 2));
  EXPECT_EQ(intersect(m, r.X_sharp, C[0]), 0);
}

TEST(SharpCompletion, TwoOrthogonalCurves) {
  const auto m = SurfaceModel::plane_blowup(4);
  const DivisorClass F{1, -1, 0, -1, 0};
  const DivisorClass C[] = {DivisorClass{0, 1, -1, 0, 0}, DivisorClass{0, 0, 0, 1, -1}};
  const auto r = sharp_completion(m, F, C);
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{ratio(1, 2), ratio(1, 2)}));
}

TEST(SharpCompletion, NoComponentsIsIdentity) {
  const auto m = SurfaceModel::plane_blowup(1);
  const auto r = sharp_completion(m, DivisorClass{2, -1}, {});
  EXPECT_EQ(r.X_sharp, (DivisorClass{2, -1}));
  EXPECT_EQ(r.X_sharp_sq, r.X_sq);
}

TEST(SharpCompletion, SquareNeverDecreases) {
  testing::Gen gen(62);
  const auto m = SurfaceModel::plane_blowup(6);
  for (int i = 0; i < 200; ++i) {
    // Disjoint (-2)-curves E1 - E2, E3 - E4, E5 - E6, any subset.
    std::vector<DivisorClass> comps;
    for (std::size_t p = 0; p < 6; p += 2) {
      if (!gen.chance(60)) continue;
      DivisorClass c = DivisorClass::zero(m.rank());
      c[p + 1] = 1;
      c[p + 2] = -1;
      comps.push_back(c);
    }
    const auto X = gen.divisor(m, 4);
    const auto r = sharp_completion(m, X, comps);
    EXPECT_GE(r.X_sharp_sq, r.X_sq);
    for (const auto& c : comps) EXPECT_EQ(intersect(m, r.X_sharp, c), 0);
  }
}

TEST(LogGenus, RationalClosedForms) {
  const auto hodge = *SurfaceModel::plane_blowup(0).hodge();
  const auto ex2 = log_genus_rational(example2_graph(example2_data()), hodge);
  EXPECT_EQ(ex2.pg_log, 2);
  EXPECT_EQ(ex2.h1_log, 0);
  EXPECT_EQ(ex2.m, 1);
  const auto two = log_genus_rational(DualGraph({{"A", 0, -1}, {"B", 0, -1}}, {}), hodge);
  EXPECT_EQ(two.pg_log, 0);
  EXPECT_EQ(two.h1_log, 1);
  EXPECT_EQ(two.m, 2);
  const auto ell = log_genus_rational(DualGraph({{"E", 1, 0}}, {}), hodge);
  EXPECT_EQ(ell.pg_log, 1);
  EXPECT_EQ(ell.h1_log, 0);
  EXPECT_THROW(log_genus_rational(DualGraph({{"E", 1, 0}}, {}), HodgeData{1, 0, 2, 0}), InputError);
}

TEST(TheoremPredicate, Clauses) {
  EXPECT_TRUE(main_theorem_predicate(1, 1, 5).pass);
  const auto bad = main_theorem_predicate(2, 2, 3);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.clauses[0].pass);
  const auto both = main_theorem_predicate(2, 1, 2, 0);
  EXPECT_TRUE(both.pass);
  EXPECT_TRUE(both.clauses[1].applicable);
  EXPECT_FALSE(main_theorem_predicate(2, 1, 2, 1).pass);
  EXPECT_FALSE(main_theorem_predicate(1, 2, 3).clauses[1].pass);
  EXPECT_FALSE(main_theorem_predicate(5, 5, 1).clauses[0].applicable);
  EXPECT_TRUE(main_theorem_predicate(5, 5, 1).pass);
  EXPECT_THROW(main_theorem_predicate(1, 0, 2), InputError);
}

TEST(TheoremPredicate, MainOne) {
  EXPECT_TRUE(main1_predicate(5, false).pass);
  EXPECT_FALSE(main1_predicate(6, false).pass);
  EXPECT_TRUE(main1_predicate(3, true).pass);
  EXPECT_FALSE(main1_predicate(4, true).pass);
}

}  // namespace
}  // namespace logpair
