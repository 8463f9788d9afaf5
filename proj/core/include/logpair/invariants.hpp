#pragma once

// Numerical invariants of a log pair (S, D): log Chern numbers, the log
// Noether identity, Euler characteristic bounds, BMY, the fiber genus bound
// and the main theorem predicates.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logpair/dualgraph.hpp"
#include "logpair/lattice.hpp"

namespace logpair {

struct LogInvariants {
  Rational D_sq;
  Rational KD;
  /// (K + D)^2
  Rational c1bar_sq;
  /// e(S) + 2(p_a(D) - 1 - l)
  long c2bar = 0;
  long pa_D = 0;
  long l = 0;
  long r = 0;
  /// Connected components of D.
  long m = 0;
  long euler_S = 0;
  Rational chi_O;
  /// chi(O_S) + (K + D).D / 2
  Rational chi_bar;
  /// h^{1,1} + 2p_g - 4q + 2p_a(D) - 2l; must equal c2bar.
  long e_open = 0;
  /// e(S) - e(D) with e(D) = sum (2 - 2g_i) - l, counting each node once.
  long e_open_additive = 0;
  /// Set when e_open_additive differs from e_open (exactly when l > 0).
  bool additivity_mismatch = false;
  /// Rational-surface closed forms; empty for other Hodge data.
  std::optional<long> pg_log;
  std::optional<long> h1_log;
  std::string cohomology_note;
};

/// Requires a model with canonical class and Hodge data, D != 0, and a graph
/// describing D: p_a from the graph and from adjunction must agree and
/// D^2 = sum C_i^2 + 2l. When the graph carries classes they must sum to D.
LogInvariants log_chern(const SurfaceModel& model, const DivisorClass& D, const DualGraph& g);

/// c1bar^2 + c2bar + 6(p_a - 1) + D^2 + 2l = 12 chi_bar.
bool noether_check(const LogInvariants& inv, const Rational& D_sq);

struct EulerBoundReport {
  /// p_a(D) <= 2(l + q) + 1 - h^{1,1}
  bool hypothesis = false;
  long hypothesis_rhs = 0;
  /// chi(Omega^1(log D)) = 2(q + l) + 1 - h^{1,1} - p_a(D)
  long chi_log_forms = 0;
  /// e(S - D) <= 2 p_g(S, D) + 1; empty without p_g(S, D).
  std::optional<bool> bound_general;
  /// e(S - D) <= p_g(S, D) + 1, only evaluated when p_g(S) = 0.
  std::optional<bool> bound_pg_zero;
  std::string note;
};

EulerBoundReport euler_bound_check(const LogInvariants& inv, const HodgeData& hodge);

/// P^2 / 3 <= c2bar - N^2 / 4.
bool bmy_check(const Rational& P_sq, const Rational& N_sq, const Rational& c2bar);

/// (n + 2) / (2 n^2) * P^2 + 1. Throws InputError for n < 1.
Rational genus_bound(long n, const Rational& P_sq);

/// Right-hand side of g - 1 <= 3(n+2)(2n+3 - N^2/4) / (2n^2), or of
/// g - 1 <= 3(n+2)(n+2 - N^2/4) / (2n^2) when p_g(S) = 0.
Rational main1_proof_bound(long n, const Rational& N_sq, bool pg_zero);

struct CorrectionResult {
  DivisorClass X_sharp;
  std::vector<Rational> coefficients;
  Rational X_sq;
  Rational X_sharp_sq;
  /// X . D_j <= 0 for every component.
  bool nonpositive_pairings = true;
};

/// X# = X + sum a_i D_i with X# . D_j = 0 for every j. Throws InputError if
/// the components' Gram matrix is not negative definite. (X#)^2 = X^2 - a^T G a
/// is never smaller than X^2.
CorrectionResult sharp_completion(const SurfaceModel& model, const DivisorClass& X,
                                  std::span<const DivisorClass> components);

struct LogGenus {
  long pg_log = 0;
  long h1_log = 0;
  long m = 0;
};

/// p_g(S, D) and h^1(S, K + D) of a rational surface from the graph alone.
/// Throws InputError unless q = p_g = 0.
LogGenus log_genus_rational(const DualGraph& g, const HodgeData& hodge);

struct PredicateClause {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

struct TheoremReport {
  std::vector<PredicateClause> clauses;
  bool pass = true;
  std::string discrepancy;
};

/// (1) b >= 2 implies 2 <= g + k <= 3; (2) g + k = 3 implies b <= 2 and
/// h^1(S, K + D) = 0. Throws InputError for k <= 0.
TheoremReport main_theorem_predicate(long g, long k, long b, std::optional<long> h1_log = std::nullopt);

/// g <= 5, or g <= 3 when p_g(S) = 0.
TheoremReport main1_predicate(long g, bool pg_zero);

}  // namespace logpair
