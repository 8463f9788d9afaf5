#include <gtest/gtest.h>

#include "logpair/errors.hpp"
#include "logpair/pencil.hpp"
#include "logpair/worked_examples.hpp"
#include "support/oracles.hpp"

namespace logpair {
namespace {

TEST(DimensionBounds, PlaneCurves) {
  const long ones8[] = {1, 1, 1, 1, 1, 1, 1, 1};
  const long twos8[] = {2, 2, 2, 2, 2, 2, 2, 2};
  EXPECT_EQ(dim_lower_bound_p2(3, ones8), 1);
  EXPECT_EQ(dim_lower_bound_p2(6, twos8), 3);
  EXPECT_EQ(dim_lower_bound_p2(0, {}), 0);
}

TEST(DimensionBounds, HirzebruchCurves) {
  for (long a0 = 0; a0 < 4; ++a0) {
    for (long e = 0; e < 4; ++e) EXPECT_EQ(dim_lower_bound_hirzebruch(2, a0, e, {}), 3 * (a0 + e) + 2);
  }
  const std::vector<long> twos(44, 2);
  EXPECT_EQ(dim_lower_bound_hirzebruch(8, 1, 3, twos), -7);
  EXPECT_EQ(dim_lower_bound_hirzebruch(0, 0, 5, {}), 0);
}

TEST(Bigness, PlaneAndHirzebruch) {
  const long ones8[] = {1, 1, 1, 1, 1, 1, 1, 1};
  const long ones9[] = {1, 1, 1, 1, 1, 1, 1, 1, 1};
  EXPECT_TRUE(is_big_p2(3, ones8));
  EXPECT_FALSE(is_big_p2(3, ones9));
  std::vector<long> ex3(5, 1);
  ex3[0] = 2;  // a = 2: (3; 2, 1^4)
  EXPECT_TRUE(is_big_p2(3, ex3));
  EXPECT_TRUE(is_big_hirzebruch(1, 1, 0, {}));
  const long two[] = {2};
  EXPECT_FALSE(is_big_hirzebruch(2, 0, 0, two));
}

TEST(Bigness, ExampleFourAdjointMatchesClosedForm) {
  for (long g = 2; g <= 12; ++g) {
    for (long e = 0; e <= g; ++e) {
      const Example4Instance inst{g, e, 8, 1};
      const auto d = example4_data(inst);
      const DivisorClass adj = canonical_class(d.model) + d.D;
      const auto w = bigness(d.model, adj);
      EXPECT_EQ(w.big, example4_constraints(inst).big) << g << " " << e;
    }
  }
}

TEST(Pencil, ExampleTwo) {
  const auto run = run_example2();
  const auto& p = run.pencil;
  EXPECT_TRUE(p.big.big);
  EXPECT_EQ(p.big.value, 1);
  ASSERT_EQ(p.fixed_parts.size(), 1u);
  EXPECT_EQ(p.fixed_parts[0].pairing, -1);
  EXPECT_EQ(p.fixed_parts[0].G_sq, -3);
  EXPECT_EQ(p.residual, (DivisorClass{1, 0, 0, 0, 0, 0, 0, 0, -1}));
  EXPECT_TRUE(p.pencil_detected);
  EXPECT_EQ(p.n, 1);
  EXPECT_EQ(p.F_sq, 0);
  EXPECT_EQ(p.fiber_genus, 0);
  EXPECT_EQ(p.base_genus, 0);
  EXPECT_EQ(p.k, 4);
}

TEST(Pencil, ExampleThreeAtTwo) {
  const auto run = run_example3(2);
  const auto& p = run.pencil;
  EXPECT_EQ(run.data.D, (DivisorClass{6, -3, -2, -2, -2, -2}));
  EXPECT_EQ(run.data.fixed_candidates[0], (DivisorClass{1, 0, -1, -1, -1, -1}));
  EXPECT_EQ(p.residual, (DivisorClass{2, -2, 0, 0, 0, 0}));
  EXPECT_EQ(p.n, 2);
  EXPECT_EQ(p.F, (DivisorClass{1, -1, 0, 0, 0, 0}));
  EXPECT_EQ(p.k, 3);
  EXPECT_TRUE(run.residual_matches);
}

TEST(Pencil, ExampleThreeSweep) {
  for (long a = 2; a <= 8; ++a) {
    const auto run = run_example3(a);
    EXPECT_EQ(run.pencil.fixed_parts.at(0).pairing, -1);
    EXPECT_EQ(run.pencil.fixed_parts.at(0).G_sq, 1 - 2 * a);
    EXPECT_EQ(run.pencil.k, 3);
    EXPECT_EQ(run.k_stated, 3 * a);
    EXPECT_TRUE(run.residual_matches);
  }
  EXPECT_THROW(run_example3(1), InputError);
}

TEST(Pencil, ExampleFourSymbolicIntersection) {
  for (long g = 0; g <= 10; ++g) {
    for (long e = 0; e <= g; ++e) {
      for (long x = 0; x <= 9; x += 3) {
        for (long y = -2; y <= 2; ++y) {
          const auto d = example4_data({g, e, x, y});
          EXPECT_EQ(intersect(d.model, d.D, d.F), x * (g + 1 + e) + 2 * y - 8 * g - 8);
          EXPECT_EQ(testing::formula_pairing(ModelKind::HirzebruchBlowup, e, d.D, d.F), intersect(d.model, d.D, d.F));
        }
      }
    }
  }
}

TEST(Pencil, ExampleFourAdjointMinusMIsF) {
  for (long g = 2; g <= 10; ++g) {
    for (long e = 0; e <= g; ++e) {
      const auto run = run_example4({g, e, 8, 1});
      EXPECT_TRUE(run.residual_is_F);
      EXPECT_EQ(run.adjoint_dot_M, run.constraints.fixed_lattice_value);
      // (K + D).M > 0 at x = 8, y = 1, so M is never extracted.
      if (run.constraints.feasible()) EXPECT_FALSE(run.pencil.pencil_detected);
    }
  }
}

TEST(Pencil, InvariantsOnRandomCandidates) {
  testing::Gen gen(71);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const auto m = SurfaceModel::plane_blowup(n);
    std::vector<Rational> mu(n);
    for (auto& x : mu) x = gen.integer(0, 3);
    const DivisorClass D = plane_class(m, gen.integer(1, 8), mu);
    // Exceptional curves off a line through the first three points: a
    // negative definite configuration, so extraction must terminate.
    std::vector<DivisorClass> cands;
    const std::size_t first = n >= 3 ? 3 : 0;
    for (std::size_t p = first; p < n; ++p) cands.push_back(m.exceptional(p));
    if (n >= 3) {
      std::vector<Rational> line(n, Rational(0));
      line[0] = line[1] = line[2] = 1;
      cands.push_back(plane_class(m, 1, line));
    }
    const auto r = analyze_adjoint_system(m, D, cands);
    DivisorClass current = r.adjoint;
    for (const auto& f : r.fixed_parts) {
      EXPECT_LT(f.pairing, 0);
      EXPECT_EQ(f.pairing, intersect(m, current, f.G));
      EXPECT_LT(f.G_sq, 0);
      current -= f.G;
    }
    EXPECT_EQ(current, r.residual);
    if (r.pencil_detected) {
      EXPECT_EQ(r.F_sq, 0);
      EXPECT_GE(r.n, 1);
      EXPECT_EQ(Rational(r.n) * r.F, r.residual);
      EXPECT_EQ(r.k, intersect(m, D, r.F));
    } else {
      EXPECT_FALSE(r.reason.empty());
    }
  }
}

TEST(Pencil, SemidefiniteCandidatesHitExtractionCap) {
  // E1 and the line through both points have a square-zero sum, so the
  // pairing never settles.
  const auto m = SurfaceModel::plane_blowup(2);
  const std::vector<DivisorClass> cands{m.exceptional(0), DivisorClass{1, -1, -1}};
  EXPECT_THROW(analyze_adjoint_system(m, DivisorClass{0, 0, 0}, cands), InputError);
}

}  // namespace
}  // namespace logpair
