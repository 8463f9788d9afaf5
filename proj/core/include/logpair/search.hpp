#pragma once

// Exact evaluation of the inequality system for adjoint pencils on blown-up
// Hirzebruch surfaces: the boundary D = x D + y G - 2 sum E_i over the 4g+4
// base points of a pencil of hyperelliptic genus-g curves in |2D + aG|.

#include <cstddef>
#include <optional>
#include <vector>

#include "logpair/rational.hpp"

namespace logpair {

struct Example4Instance {
  long g = 0;
  long e = 0;
  long x = 0;
  long y = 0;

  long a() const { return g + 1 - e; }
  long points() const { return 4 * g + 4; }
};

/// Throws InputError unless 0 <= e <= g (so a = g + 1 - e > 0).
void validate(const Example4Instance& inst);

struct ConstraintReport {
  Example4Instance inst;
  /// (x+1)(y + ex/2) + x - 3(4g+4) > 0: |D| has positive expected dimension.
  Rational D_value;
  bool D = false;
  /// (x-2)(y+e-2 + (x-2)e/2) - (4g+4)/2 > 0: K + D is big.
  Rational big_value;
  bool big = false;
  /// (x-3)(y+e-a-1 + (x-4)e/2) > 0: M is effective.
  Rational effective_value;
  bool effective = false;
  /// (x-4)(x-2) + (x-2)(y+e-a-2) + (x-4)(y+e-2) < 0, as the fixed-part test is
  /// usually written.
  Rational fixed_value;
  bool fixed = false;
  /// (K + D) . M computed in the lattice: the first term carries a factor e.
  Rational fixed_lattice_value;
  bool fixed_lattice = false;
  /// k = D . F = x(g+1+e) + 2y - 8g - 8
  Rational k;

  bool feasible() const { return D && big && effective && fixed; }
  bool feasible_lattice() const { return D && big && effective && fixed_lattice; }
};

ConstraintReport example4_constraints(const Example4Instance& inst);

/// Inclusive integer range; lo > hi is an error when searching.
struct IntRange {
  long lo = 0;
  long hi = 0;
  std::size_t size() const { return lo > hi ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

/// x = 8, y = 1 reductions for one g.
struct IntervalRow {
  long g = 0;
  Rational lower_D;          // (12g - 5) / 36
  Rational lower_D_alt;      // (12g - 13) / 36
  Rational lower_big;        // (g + 4) / 12
  Rational lower_effective;  // (g + 1) / 4
  Rational upper_fixed;      // (3g - 4) / 8
  /// Integers e in [0, g] satisfying all four inequalities exactly.
  std::vector<long> feasible_e;
  /// Integers strictly inside ((12g - 13) / 36, (3g - 4) / 8).
  std::vector<long> alt_interval_e;
  /// (3g-4)/8 > (12g-13)/36 > (g+1)/4 > (g+4)/12
  bool ordering_holds = false;
  /// Each reduction agrees with direct evaluation for every e in [0, g].
  bool reductions_match = false;
};

IntervalRow example4_interval(long g);

struct SearchResult {
  /// Every evaluated instance, ordered by (g, e, x, y).
  std::vector<ConstraintReport> rows;
  std::size_t feasible_count = 0;
  std::size_t feasible_lattice_count = 0;
  std::vector<IntervalRow> interval;
  /// g >= 27 in range whose ((12g-13)/36, (3g-4)/8) contains no integer.
  std::vector<long> alt_interval_gaps;
  /// g >= 27 in range with no feasible e under the exact reductions.
  std::vector<long> exact_gaps;
  unsigned threads_used = 1;
};

/// Thread count from LOGPAIR_THREADS, else the hardware concurrency.
unsigned search_thread_count();

/// Evaluates every (g, e, x, y) with e in `e_range` intersected with [0, g]
/// (all of [0, g] when no e range is given). Output does not depend on the
/// thread count. Throws InputError on an empty range.
SearchResult example4_search(IntRange g_range, IntRange x_range, IntRange y_range,
                             std::optional<IntRange> e_range = std::nullopt, unsigned threads = 0);

}  // namespace logpair
