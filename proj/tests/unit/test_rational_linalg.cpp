#include <gtest/gtest.h>

#include "logpair/errors.hpp"
#include "logpair/linalg.hpp"
#include "logpair/rational.hpp"
#include "support/oracles.hpp"

namespace logpair {
namespace {

using testing::Gen;
using testing::Mat;

RationalMatrix to_matrix(const Mat& m) { return RationalMatrix::from_rows(m); }

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(parse_rational("4/6"), ratio(2, 3));
  EXPECT_EQ(to_string(parse_rational(" -4/6 ")), "-2/3");
  EXPECT_EQ(to_string(parse_rational("+6/3")), "2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_EQ(to_string(ratio(3, -9)), "-1/3");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "1//2", "--1", "6/-3"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
  EXPECT_THROW(ratio(1, 0), InputError);
}

TEST(Rational, TextRoundTripProperty) {
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational q = gen.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Rational, ToLong) {
  EXPECT_EQ(to_long(Rational(-12)), -12);
  EXPECT_THROW(to_long(ratio(1, 2)), InputError);
  EXPECT_TRUE(is_integer(ratio(6, 3)));
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const Mat m = gen.matrix(n, 4);
    EXPECT_EQ(determinant(to_matrix(m)), testing::leibniz_det(m));
  }
}

TEST(Linalg, NegativeDefiniteExamples) {
  EXPECT_TRUE(is_negative_definite(RationalMatrix{{-2}}));
  EXPECT_TRUE(is_negative_definite(RationalMatrix{{-2, 1}, {1, -2}}));
  EXPECT_FALSE(is_negative_definite(RationalMatrix{{0}}));
  EXPECT_TRUE(is_negative_definite(RationalMatrix()));
  EXPECT_THROW(is_negative_definite(RationalMatrix{{-2, 1}, {0, -2}}), InputError);
}

TEST(Linalg, NegativeDefiniteAgreesWithSylvesterOracle) {
  Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    Mat m = gen.chance(50) ? gen.negative_definite(n, 2) : gen.matrix(n, 3);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) m[r][c] = m[c][r];
    }
    EXPECT_EQ(is_negative_definite(to_matrix(m)), testing::sylvester_negative_definite(m));
  }
}

TEST(Linalg, SolveMatchesCramer) {
  Gen gen(14);
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const Mat m = gen.matrix(n, 5);
    std::vector<Rational> rhs(n);
    for (auto& x : rhs) x = gen.rational(10, 5);
    if (testing::leibniz_det(m) == 0) {
      EXPECT_THROW(solve(to_matrix(m), rhs), InputError);
      continue;
    }
    ++solved;
    const auto x = solve(to_matrix(m), rhs);
    EXPECT_EQ(x, testing::cramer_solve(m, rhs));
    EXPECT_EQ(to_matrix(m).multiply(x), rhs);
  }
  EXPECT_GT(solved, 200);
}

TEST(Linalg, PrincipalSubmatrixAndMinors) {
  const RationalMatrix m{{-2, 1, 0}, {1, -3, 1}, {0, 1, -2}};
  const std::size_t idx[] = {2, 0};
  EXPECT_EQ(m.principal_submatrix(idx), (RationalMatrix{{-2, 0}, {0, -2}}));
  EXPECT_EQ(leading_principal_minors(m), (std::vector<Rational>{-2, 5, -8}));
}

}  // namespace
}  // namespace logpair
