#include "logpair/invariants.hpp"

#include "logpair/errors.hpp"
#include "logpair/linalg.hpp"

namespace logpair {

namespace {

const char* const kBoundShapes =
    "the fibration bound is stated in three shapes: 2 <= g+k <= 3 (b >= 2), 3 <= 2g+k <= 9 with 2g+k <= 6 when "
    "p_g(S) = 0, and g <= 5 with g <= 3 when p_g(S) = 0; main_theorem_predicate evaluates the first, "
    "main1_predicate the last";

}  // namespace

LogInvariants log_chern(const SurfaceModel& model, const DivisorClass& D, const DualGraph& g) {
  if (!model.has_canonical()) throw InputError("log_chern: model has no canonical class");
  const auto hodge = model.hodge();
  if (!hodge) throw InputError("log_chern: model has no Hodge data");
  if (D.size() != model.rank()) throw InputError("log_chern: divisor does not match the model rank");
  if (D.is_zero()) throw InputError("log_chern: D = 0 is not a boundary");
  if (g.empty()) throw InputError("log_chern: empty dual graph");
  if (g.has_binding()) {
    if (!(g.binding()->model == model)) throw InputError("log_chern: graph classes live on a different model");
    if (*g.total_class() != D) throw InputError("log_chern: graph classes do not sum to D");
  }

  LogInvariants inv;
  const DivisorClass K = canonical_class(model);
  inv.D_sq = self_intersection(model, D);
  inv.KD = intersect(model, K, D);
  inv.l = g.total_edge_weight();
  inv.r = static_cast<long>(g.size());
  inv.m = static_cast<long>(g.connected_components().size());

  long self_sum = 0;
  long genus_sum = 0;
  for (const auto& v : g.vertices()) {
    self_sum += v.self_int;
    genus_sum += v.genus;
  }
  if (inv.D_sq != self_sum + 2 * inv.l) {
    throw InputError("log_chern: D^2 = " + to_string(inv.D_sq) + " but the graph gives " +
                     std::to_string(self_sum + 2 * inv.l));
  }
  const Rational pa_adjunction = arithmetic_genus(model, D);
  const long pa_graph = graph_arithmetic_genus(g);
  if (pa_adjunction != pa_graph) {
    throw InputError("log_chern: inconsistent p_a(D): adjunction gives " + to_string(pa_adjunction) +
                     ", the dual graph gives " + std::to_string(pa_graph));
  }
  inv.pa_D = pa_graph;

  inv.euler_S = hodge->euler_e;
  inv.c1bar_sq = self_intersection(model, K + D);
  // Component by component: each C_i adds 2(p_a(C_i) - 1).
  inv.c2bar = inv.euler_S + 2 * (genus_sum - inv.r);
  inv.e_open = hodge->h11 + 2 * hodge->p_g - 4 * hodge->q + 2 * inv.pa_D - 2 * inv.l;
  if (inv.c2bar != inv.e_open) {
    throw InternalError("log_chern: c2bar = " + std::to_string(inv.c2bar) + " but e(S-D) = " +
                        std::to_string(inv.e_open) + (hodge->satisfies_euler_relation() ? "" : " (e(S) inconsistent)"));
  }
  inv.e_open_additive = inv.euler_S - (2 * inv.r - 2 * genus_sum) + inv.l;
  inv.additivity_mismatch = inv.e_open_additive != inv.e_open;

  inv.chi_O = 1 - hodge->q + hodge->p_g;
  inv.chi_bar = inv.chi_O + (inv.KD + inv.D_sq) / 2;

  if (hodge->is_rational_type()) {
    const auto lg = log_genus_rational(g, *hodge);
    inv.pg_log = lg.pg_log;
    inv.h1_log = lg.h1_log;
  } else {
    inv.cohomology_note = "p_g(S,D) and h^1(S,K+D) require cohomology: unsupported for q > 0 or p_g > 0";
  }
  return inv;
}

bool noether_check(const LogInvariants& inv, const Rational& D_sq) {
  return inv.c1bar_sq + inv.c2bar + 6 * (inv.pa_D - 1) + D_sq + 2 * inv.l == 12 * inv.chi_bar;
}

EulerBoundReport euler_bound_check(const LogInvariants& inv, const HodgeData& hodge) {
  EulerBoundReport r;
  r.hypothesis_rhs = 2 * (inv.l + hodge.q) + 1 - hodge.h11;
  r.hypothesis = inv.pa_D <= r.hypothesis_rhs;
  r.chi_log_forms = r.hypothesis_rhs - inv.pa_D;
  if (inv.pg_log) {
    r.bound_general = inv.e_open <= 2 * *inv.pg_log + 1;
    if (hodge.p_g == 0) r.bound_pg_zero = inv.e_open <= *inv.pg_log + 1;
  } else {
    r.note = "p_g(S,D) unavailable; conclusions not evaluated";
  }
  if (!r.hypothesis) {
    r.note = r.note.empty() ? "hypothesis fails" : "hypothesis fails; " + r.note;
  }
  return r;
}

bool bmy_check(const Rational& P_sq, const Rational& N_sq, const Rational& c2bar) {
  return P_sq / 3 <= c2bar - N_sq / 4;
}

Rational genus_bound(long n, const Rational& P_sq) {
  if (n < 1) throw InputError("genus_bound: n must be positive");
  return ratio(n + 2, 2 * n * n) * P_sq + 1;
}

Rational main1_proof_bound(long n, const Rational& N_sq, bool pg_zero) {
  if (n < 1) throw InputError("main1_proof_bound: n must be positive");
  const Rational inner = (pg_zero ? Rational(n + 2) : Rational(2 * n + 3)) - N_sq / 4;
  return ratio(3 * (n + 2), 2 * n * n) * inner;
}

CorrectionResult sharp_completion(const SurfaceModel& model, const DivisorClass& X,
                                  std::span<const DivisorClass> components) {
  CorrectionResult out;
  out.X_sq = self_intersection(model, X);
  const std::size_t t = components.size();
  RationalMatrix gram(t, t);
  std::vector<Rational> rhs(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) gram(i, j) = intersect(model, components[i], components[j]);
    const Rational xd = intersect(model, X, components[i]);
    if (xd > 0) out.nonpositive_pairings = false;
    rhs[i] = -xd;
  }
  if (!is_negative_definite(gram)) throw InputError("sharp_completion: components are not negative definite");
  out.coefficients = solve(gram, rhs);
  out.X_sharp = X;
  for (std::size_t i = 0; i < t; ++i) out.X_sharp += out.coefficients[i] * components[i];
  out.X_sharp_sq = self_intersection(model, out.X_sharp);
  for (std::size_t j = 0; j < t; ++j) {
    if (intersect(model, out.X_sharp, components[j]) != 0) {
      throw InternalError("sharp_completion: corrected class is not orthogonal to component " + std::to_string(j));
    }
  }
  if (out.X_sharp_sq < out.X_sq) throw InternalError("sharp_completion: correction decreased the square");
  return out;
}

LogGenus log_genus_rational(const DualGraph& g, const HodgeData& hodge) {
  if (!hodge.is_rational_type()) throw InputError("log_genus_rational: needs q = p_g = 0");
  LogGenus out;
  out.m = static_cast<long>(g.connected_components().size());
  out.h1_log = out.m - 1;
  out.pg_log = graph_arithmetic_genus(g) + out.h1_log;
  return out;
}

TheoremReport main_theorem_predicate(long g, long k, long b, std::optional<long> h1_log) {
  if (k <= 0) throw InputError("main_theorem_predicate: needs k > 0");
  TheoremReport rep;
  rep.discrepancy = kBoundShapes;

  PredicateClause c1{"b>=2 implies 2<=g+k<=3", b >= 2, true, ""};
  if (c1.applicable) {
    c1.pass = 2 <= g + k && g + k <= 3;
    c1.detail = "g+k = " + std::to_string(g + k);
  } else {
    c1.detail = "b < 2: no constraint";
  }

  PredicateClause c2{"g+k=3 implies b<=2 and h1(K+D)=0", b >= 2 && g + k == 3, true, ""};
  if (c2.applicable) {
    c2.pass = b <= 2;
    c2.detail = "b = " + std::to_string(b);
    if (h1_log) {
      c2.pass = c2.pass && *h1_log == 0;
      c2.detail += ", h1 = " + std::to_string(*h1_log);
    } else {
      c2.detail += ", h1 not supplied";
    }
  } else {
    c2.detail = "g+k != 3 or b < 2";
  }

  rep.clauses = {c1, c2};
  for (const auto& c : rep.clauses) rep.pass = rep.pass && c.pass;
  return rep;
}

TheoremReport main1_predicate(long g, bool pg_zero) {
  TheoremReport rep;
  rep.discrepancy = kBoundShapes;
  rep.clauses.push_back({"g<=5", true, g <= 5, "g = " + std::to_string(g)});
  rep.clauses.push_back({"p_g(S)=0 implies g<=3", pg_zero, !pg_zero || g <= 3, pg_zero ? "p_g(S) = 0" : "p_g(S) > 0"});
  for (const auto& c : rep.clauses) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace logpair
