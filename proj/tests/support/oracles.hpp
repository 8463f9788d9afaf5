#pragma once

// Independent reference computations and random input generators for tests.
// Nothing here calls into the library's own linear algebra or pairing code.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "logpair/dualgraph.hpp"
#include "logpair/lattice.hpp"
#include "logpair/linalg.hpp"
#include "logpair/rational.hpp"

namespace logpair::testing {

using Mat = std::vector<std::vector<Rational>>;

inline Mat to_mat(const RationalMatrix& m) {
  Mat out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

/// Leibniz expansion over all permutations. Fine up to n = 8.
inline Rational leibniz_det(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    long inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Sylvester's criterion on leading minors, each by Leibniz expansion.
inline bool sylvester_negative_definite(const Mat& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Mat lead(k, std::vector<Rational>(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) lead[r][c] = m[r][c];
    }
    const Rational d = leibniz_det(lead);
    if (k % 2 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

/// Cramer's rule with Leibniz determinants.
inline std::vector<Rational> cramer_solve(const Mat& m, const std::vector<Rational>& rhs) {
  const Rational det = leibniz_det(m);
  std::vector<Rational> x(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    Mat mc = m;
    for (std::size_t r = 0; r < m.size(); ++r) mc[r][c] = rhs[r];
    x[c] = leibniz_det(mc) / det;
  }
  return x;
}

/// The intersection pairing written out from the basis conventions.
inline Rational formula_pairing(ModelKind kind, long e, const DivisorClass& a, const DivisorClass& b) {
  Rational s = 0;
  std::size_t first_exc = 1;
  if (kind == ModelKind::PlaneBlowup) {
    s = a[0] * b[0];
  } else {
    s = e * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
    first_exc = 2;
  }
  for (std::size_t i = first_exc; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(int percent) { return integer(0, 99) < percent; }
  Rational rational(long range, long max_den) {
    const long num = integer(-range, range);
    return ratio(num, integer(1, max_den));
  }
  std::mt19937_64& engine() { return rng_; }

  SurfaceModel model(std::size_t max_points) {
    const auto n = static_cast<std::size_t>(integer(0, static_cast<long>(max_points)));
    return chance(50) ? SurfaceModel::plane_blowup(n) : SurfaceModel::hirzebruch_blowup(integer(0, 4), n);
  }

  DivisorClass divisor(const SurfaceModel& m, long range) {
    DivisorClass c = DivisorClass::zero(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) c[i] = integer(-range, range);
    return c;
  }

  DivisorClass rational_divisor(const SurfaceModel& m, long range, long max_den) {
    DivisorClass c = DivisorClass::zero(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) c[i] = rational(range, max_den);
    return c;
  }

  Mat matrix(std::size_t n, long range) {
    Mat m(n, std::vector<Rational>(n));
    for (auto& row : m) {
      for (auto& x : row) x = integer(-range, range);
    }
    return m;
  }

  /// -(A^T A) - I: always negative definite.
  Mat negative_definite(std::size_t n, long range) {
    const Mat a = matrix(n, range);
    Mat out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) out[i][j] -= a[k][i] * a[k][j];
      }
      out[i][i] -= 1;
    }
    return out;
  }

  /// A forest of mostly admissible rational vertices with occasional
  /// (-1)-curves, non-negative curves, elliptic vertices and double edges.
  DualGraph graph(int max_vertices) {
    const long n = integer(1, max_vertices);
    std::vector<GraphVertex> vs;
    for (long i = 0; i < n; ++i) {
      const long kind = integer(0, 99);
      const std::string id = "v" + std::to_string(i);
      if (kind < 75) {
        vs.push_back({id, 0, -integer(2, 5)});
      } else if (kind < 90) {
        vs.push_back({id, 0, integer(-1, 1)});
      } else {
        vs.push_back({id, 1, integer(-2, 1)});
      }
    }
    std::vector<GraphEdge> es;
    for (long i = 1; i < n; ++i) {
      if (!chance(85)) continue;
      es.push_back({"v" + std::to_string(i), "v" + std::to_string(integer(0, i - 1)), chance(5) ? 2L : 1L});
    }
    return DualGraph(std::move(vs), std::move(es));
  }

 private:
  std::mt19937_64 rng_;
};

inline Mat chain_gram(const std::vector<long>& selfs) {
  Mat m(selfs.size(), std::vector<Rational>(selfs.size(), Rational(0)));
  for (std::size_t i = 0; i < selfs.size(); ++i) {
    m[i][i] = selfs[i];
    if (i + 1 < selfs.size()) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

}  // namespace logpair::testing
