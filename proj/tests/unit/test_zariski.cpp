#include <gtest/gtest.h>

#include "logpair/peeling.hpp"
#include "logpair/worked_examples.hpp"
#include "logpair/zariski.hpp"
#include "support/oracles.hpp"

namespace logpair {
namespace {

std::vector<DivisorClass> minus_one_curves(const SurfaceModel& m) {
  const std::size_t n = m.num_points();
  std::vector<DivisorClass> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(m.exceptional(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> mu(n, Rational(0));
      mu[i] = mu[j] = 1;
      pool.push_back(plane_class(m, 1, mu));
    }
  }
  return pool;
}

TEST(Zariski, NothingToPeel) {
  const auto m = SurfaceModel::plane_blowup(1);
  const DivisorClass cands[] = {m.exceptional(0)};
  const auto z = zariski_decompose(m, DivisorClass{1, 0}, cands);
  EXPECT_EQ(z.P, (DivisorClass{1, 0}));
  EXPECT_TRUE(z.N.is_zero());
  EXPECT_TRUE(z.support.empty());
}

TEST(Zariski, LineWithDoubledExceptional) {
  // (H + 2E1 - a E1).E1 = -2 + a, so a = 2: P = H, N = 2E1.
  const auto m = SurfaceModel::plane_blowup(1);
  const DivisorClass cands[] = {m.exceptional(0)};
  const auto z = zariski_decompose(m, DivisorClass{1, 2}, cands);
  EXPECT_EQ(z.P, (DivisorClass{1, 0}));
  EXPECT_EQ(z.N, (DivisorClass{0, 2}));
  EXPECT_EQ(z.N_coeffs, (std::vector<Rational>{2}));
  EXPECT_EQ(intersect(m, z.P, DivisorClass{1, -1}), 1);
  EXPECT_TRUE(verify_decomposition(m, z, cands).ok());
}

TEST(Zariski, AdjointOfMinimalPairSplitsAsSharpPlusBark) {
  const auto run = run_example2();
  const auto& g = run.graph;
  EXPECT_EQ(run.zariski.P, canonical_class(run.data.model) + sharp_class(g, run.bark));
  EXPECT_EQ(run.zariski.N, bark_class(g, run.bark));
  EXPECT_EQ(run.P_sq, ratio(4, 3));
  EXPECT_EQ(run.N_sq, ratio(-1, 3));
}

TEST(Zariski, TamperedCoefficientFailsOrthogonality) {
  const auto m = SurfaceModel::plane_blowup(1);
  const DivisorClass cands[] = {m.exceptional(0)};
  auto z = zariski_decompose(m, DivisorClass{1, 2}, cands);
  z.N_coeffs[0] = 1;
  z.N = DivisorClass{0, 1};
  z.P = DivisorClass{1, 1};
  const auto check = verify_decomposition(m, z, cands);
  EXPECT_FALSE(check.orthogonal);
  EXPECT_FALSE(check.ok());
  EXPECT_FALSE(check.failures.empty());
}

TEST(Zariski, NotNegativeDefiniteSupport) {
  // X = -H pairs negatively with the fibre class H - E1 of square 0.
  const auto m = SurfaceModel::plane_blowup(1);
  const DivisorClass cands[] = {DivisorClass{1, -1}};
  EXPECT_THROW(zariski_decompose(m, DivisorClass{-1, 0}, cands), NotDecomposable);
}

TEST(Zariski, DuplicateCandidatesRejected) {
  const auto m = SurfaceModel::plane_blowup(1);
  const DivisorClass cands[] = {m.exceptional(0), m.exceptional(0)};
  EXPECT_THROW(zariski_decompose(m, DivisorClass{1, 2}, cands), InputError);
}

TEST(Zariski, RandomisedProperties) {
  testing::Gen gen(51);
  for (int i = 0; i < 150; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const auto m = SurfaceModel::plane_blowup(n);
    auto pool = minus_one_curves(m);
    std::shuffle(pool.begin(), pool.end(), gen.engine());
    pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(gen.integer(1, 8))));
    DivisorClass X = DivisorClass::zero(m.rank());
    X[0] = gen.integer(0, 3);
    for (const auto& c : pool) X += Rational(gen.integer(0, 3)) * c;

    const auto z = zariski_decompose(m, X, pool);
    EXPECT_TRUE(verify_decomposition(m, z, pool).ok());
    EXPECT_EQ(z.P + z.N, X);
    EXPECT_EQ(intersect(m, z.P, X), self_intersection(m, z.P));
    EXPECT_LE(z.rounds, pool.size() + 1);

    // Independent orthogonality and nefness checks.
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const Rational p = intersect(m, z.P, pool[k]);
      EXPECT_GE(p, 0);
      if (std::find(z.support.begin(), z.support.end(), k) != z.support.end()) EXPECT_EQ(p, 0);
    }
    std::vector<std::size_t> sup = z.support;
    if (!sup.empty() && sup.size() <= 7) {
      testing::Mat gram(sup.size(), std::vector<Rational>(sup.size()));
      for (std::size_t a = 0; a < sup.size(); ++a) {
        for (std::size_t b = 0; b < sup.size(); ++b) gram[a][b] = intersect(m, pool[sup[a]], pool[sup[b]]);
      }
      EXPECT_TRUE(testing::sylvester_negative_definite(gram));
    }

    auto perm = pool;
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    const auto zp = zariski_decompose(m, X, perm);
    EXPECT_EQ(zp.P, z.P);
    EXPECT_EQ(zp.N, z.N);

    const auto again = zariski_decompose(m, z.P, pool);
    EXPECT_TRUE(again.N.is_zero());
  }
}

}  // namespace
}  // namespace logpair
