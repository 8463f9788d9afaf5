#include "logpair/acceptance/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "logpair/errors.hpp"
#include "logpair/invariants.hpp"
#include "logpair/peeling.hpp"
#include "logpair/pencil.hpp"
#include "logpair/search.hpp"
#include "logpair/worked_examples.hpp"
#include "logpair/zariski.hpp"

namespace logpair::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates named checks; the criterion passes when all of them do.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      details_.push_back("FAILED: " + what);
    }
  }
  void note(std::string text) { details_.push_back(std::move(text)); }
  bool pass() const { return pass_; }
  std::vector<std::string> take() { return std::move(details_); }

 private:
  bool pass_ = true;
  std::vector<std::string> details_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CriterionResult run(int id, std::string title, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.seconds = seconds_since(t0);
  r.pass = c.pass();
  r.details = c.take();
  return r;
}

std::vector<Rational> unit_mults(std::size_t n, std::initializer_list<std::size_t> points) {
  std::vector<Rational> v(n, Rational(0));
  for (auto p : points) v[p] = 1;
  return v;
}

// --- 1 -------------------------------------------------------------------

void example2_end_to_end(Checks& c) {
  const auto t0 = Clock::now();
  const auto run = run_example2();
  const double elapsed = seconds_since(t0);
  const auto& model = run.data.model;
  const auto& p = run.pencil;

  c.expect(p.big.big && p.big.value == 1, "bigness witness 9 - 8 = 1 > 0 (got " + to_string(p.big.value) + ")");
  const DivisorClass G = plane_class(model, 2, unit_mults(8, {0, 1, 2, 3, 4, 5, 6}));
  c.expect(p.fixed_parts.size() == 1 && p.fixed_parts[0].G == G, "fixed part is 2H - E1 - ... - E7");
  c.expect(!p.fixed_parts.empty() && p.fixed_parts[0].pairing == -1, "(K+D).G = -1");
  const DivisorClass residual = plane_class(model, 1, unit_mults(8, {7}));
  c.expect(p.residual == residual, "residual is H - E8");
  c.expect(self_intersection(model, residual) == 0 && p.residual_sq == 0, "(H - E8)^2 = 0");
  c.expect(p.pencil_detected && p.n == 1, "pencil detected with n = 1");
  c.expect(p.fiber_genus == 0 && p.base_genus == 0, "g = b = 0");
  c.expect(p.k == 4, "k = D.F = 4 (got " + to_string(p.k) + ")");
  c.expect(elapsed < 1.0, "runtime < 1 s");
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << elapsed;
  c.note("k = " + to_string(p.k) + ", g = " + to_string(p.fiber_genus) + ", runtime " + os.str() + " s");
}

// --- 2 -------------------------------------------------------------------

void example2_invariants(Checks& c) {
  const auto run = run_example2();
  const auto& model = run.data.model;
  const auto& inv = run.invariants;

  // Adjunction by hand: D^2 = 36 - 8*4, K.D = -18 + 8*2.
  const Rational d_sq = 36 - 8 * 4;
  const Rational kd = -18 + 8 * 2;
  const Rational pa_hand = (d_sq + kd) / 2 + 1;
  const Rational pa_adj = arithmetic_genus(model, run.data.D);
  const long pa_graph = graph_arithmetic_genus(run.graph);
  c.expect(pa_hand == 2 && pa_adj == 2, "p_a(D) = 2 by adjunction");
  c.expect(run.graph.size() == 3 && run.graph.total_edge_weight() == 4, "dual graph has r = 3, l = 4");
  c.expect(pa_graph == 2, "p_a(D) = 2 from the dual graph");

  c.expect(inv.c1bar_sq == 1 && inv.c2bar == 5 && inv.pa_D == 2 && inv.D_sq == 4 && inv.l == 4 && inv.chi_bar == 2,
           "c1bar^2 = 1, c2bar = 5, p_a = 2, D^2 = 4, l = 4, chi_bar = 2");
  const Rational lhs = inv.c1bar_sq + inv.c2bar + 6 * (inv.pa_D - 1) + inv.D_sq + 2 * inv.l;
  c.expect(lhs == 24 && 12 * inv.chi_bar == 24, "1 + 5 + 6 + 4 + 8 = 24 = 12 * 2");
  c.expect(run.noether, "noether_check");
  c.expect(inv.e_open == 5 && inv.e_open == inv.c2bar, "e(S-D) = c2bar = 5");
  c.expect(run.bmy, "BMY: P^2/3 <= c2bar - N^2/4");
  c.note("P^2 = " + to_string(run.P_sq) + ", N^2 = " + to_string(run.N_sq));
  c.note("Euler additivity e(S) - e(D) gives " + std::to_string(inv.e_open_additive) +
         " (flagged: additivity_mismatch = " + (inv.additivity_mismatch ? "true" : "false") + ")");
}

// --- 3 -------------------------------------------------------------------

// A tip chain of the given self-intersections hanging off an elliptic vertex.
DualGraph twig_graph(const std::vector<long>& selfs) {
  std::vector<GraphVertex> vs{{"B", 1, -1}};
  std::vector<GraphEdge> es;
  for (std::size_t i = 0; i < selfs.size(); ++i) {
    vs.push_back({"T" + std::to_string(i + 1), 0, selfs[i]});
    es.push_back({"T" + std::to_string(i + 1), i + 1 < selfs.size() ? "T" + std::to_string(i + 2) : "B", 1});
  }
  return DualGraph(vs, es);
}

DualGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_int_distribution<int> pct(0, 99);
  std::uniform_int_distribution<long> neg(2, 5);
  const int n = size(rng);
  std::vector<GraphVertex> vs;
  for (int i = 0; i < n; ++i) {
    const int kind = pct(rng);
    if (kind < 75) {
      vs.push_back({"v" + std::to_string(i), 0, -neg(rng)});
    } else if (kind < 90) {
      vs.push_back({"v" + std::to_string(i), 0, static_cast<long>(pct(rng) % 3) - 1});
    } else {
      vs.push_back({"v" + std::to_string(i), 1, static_cast<long>(pct(rng) % 4) - 2});
    }
  }
  std::vector<GraphEdge> es;
  for (int i = 1; i < n; ++i) {
    if (pct(rng) >= 85) continue;
    std::uniform_int_distribution<int> parent(0, i - 1);
    es.push_back({"v" + std::to_string(i), "v" + std::to_string(parent(rng)), pct(rng) < 5 ? 2L : 1L});
  }
  return DualGraph(vs, es);
}

void peeling_suite(Checks& c) {
  for (long d = 2; d <= 9; ++d) {
    const auto b = bark(twig_graph({-d}));
    const Rational expected_sharp = 1 - ratio(1, d);
    c.expect(b.sharp_coeffs[1] == expected_sharp,
             "(-" + std::to_string(d) + ") twig tip: D# multiplicity " + to_string(b.sharp_coeffs[1]) + " = 1 - 1/d");
    c.expect(b.coefficients[1] == ratio(1, d), "(-" + std::to_string(d) + ") twig tip: bark 1/d");
  }
  c.note("(-d) twig tips: D# multiplicity 1 - 1/d and bark coefficient 1/d for d = 2..9");

  for (long r = 1; r <= 8; ++r) {
    const auto b = bark(twig_graph(std::vector<long>(static_cast<std::size_t>(r), -2)));
    c.expect(b.coefficients[1] == ratio(r, r + 1), "(-2)-chain of length " + std::to_string(r) + ": tip bark r/(r+1)");
  }
  c.note("(-2)-chain twig tips: bark r/(r+1) for r = 1..8");

  const DualGraph d4({{"c", 0, -2}, {"a1", 0, -2}, {"a2", 0, -2}, {"a3", 0, -2}},
                     {{"c", "a1", 1}, {"c", "a2", 1}, {"c", "a3", 1}});
  const auto b4 = bark(d4);
  c.expect(b4.report.forks.size() == 1, "D4 is recognised as a fork");
  c.expect(std::all_of(b4.coefficients.begin(), b4.coefficients.end(), [](const Rational& a) { return a == 1; }),
           "D4 bark = (1, 1, 1, 1)");
  c.expect(b4.bark_square == -2, "D4 Bk^2 = -2");

  std::mt19937_64 rng(0x5eed0003);
  int graphs = 0;
  int attempts = 0;
  while (graphs < 250 && attempts < 20000) {
    ++attempts;
    const DualGraph g = random_graph(rng);
    const auto b = bark(g);
    if (b.segments.empty()) continue;
    ++graphs;
    c.expect(b.disjointness_violations.empty(), "segments are disjoint and do not meet");
    c.expect(b.bark_square >= -b.tips_count, "Bk^2 >= -t");
    const auto full = g.gram().multiply(b.coefficients);
    Rational quad = 0;
    for (std::size_t i = 0; i < g.size(); ++i) quad += b.coefficients[i] * full[i];
    c.expect(quad == b.bark_square, "Bk^2 agrees with the full quadratic form");
    const auto sp = sharp_pairings(g, b);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (b.in_support(i)) c.expect(sp[i] == 0, "(K + D#) . C = 0 on the bark support");
    }
    if (!c.pass()) break;
  }
  c.expect(graphs >= 200, "at least 200 random graphs with non-empty bark");
  c.note("random admissible graphs checked: " + std::to_string(graphs));
}

// --- 4 -------------------------------------------------------------------

std::vector<DivisorClass> minus_one_curves(const SurfaceModel& m) {
  const std::size_t n = m.num_points();
  std::vector<DivisorClass> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(m.exceptional(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pool.push_back(plane_class(m, 1, unit_mults(n, {i, j})));
  }
  if (n >= 5) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<Rational> mults(n, Rational(1));
      if (n == 6) {
        mults[skip] = 0;
      } else if (skip > 0) {
        break;
      }
      pool.push_back(plane_class(m, 2, mults));
    }
  }
  return pool;
}

void zariski_suite(Checks& c) {
  {
    const auto m = SurfaceModel::plane_blowup(1);
    const DivisorClass X{1, 2};
    const std::vector<DivisorClass> cands{m.exceptional(0)};
    const auto z = zariski_decompose(m, X, cands);
    const auto text = [](const DivisorClass& d) { return "(" + to_string(d[0]) + ", " + to_string(d[1]) + ")"; };
    c.expect(z.P == DivisorClass{1, 1} && z.N == DivisorClass{0, 1},
             "H + 2E1 = (H + E1) + E1 expected; computed P = " + text(z.P) + ", N = " + text(z.N) +
                 " since (H + 2E1 - aE1).E1 = -2 + a vanishes at a = 2");
    c.expect(verify_decomposition(m, z, cands).ok(), "H + 2E1 decomposition re-verifies");
  }
  const bool fixed_case_ok = c.pass();

  std::mt19937_64 rng(0x5eed0004);
  int ok = 0;
  int attempts = 0;
  while (ok < 100 && attempts < 1000) {
    ++attempts;
    const auto n = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 6)(rng));
    const auto m = SurfaceModel::plane_blowup(n);
    auto pool = minus_one_curves(m);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(8, pool.size()))(rng);
    std::vector<DivisorClass> cands(pool.begin(), pool.begin() + static_cast<long>(k));
    std::uniform_int_distribution<int> coef(0, 3);
    DivisorClass X = DivisorClass::zero(m.rank());
    X[0] = coef(rng);
    for (const auto& cand : cands) X += Rational(coef(rng)) * cand;

    const auto z = zariski_decompose(m, X, cands);
    ++ok;
    const auto check = verify_decomposition(m, z, cands);
    c.expect(check.ok(), "all four defining properties hold");
    auto permuted = cands;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    const auto zp = zariski_decompose(m, X, permuted);
    c.expect(zp.P == z.P && zp.N == z.N, "candidate order does not change P and N");
    const auto again = zariski_decompose(m, z.P, cands);
    c.expect(again.N.is_zero() && again.P == z.P, "decomposing P again gives N = 0");
    c.expect(intersect(m, z.P, X) == self_intersection(m, z.P), "P.X = P^2");
    if (fixed_case_ok && !c.pass()) break;
  }
  c.expect(ok >= 100, "100 randomized decompositions");
  c.note("randomized decompositions: " + std::to_string(ok) + " over PlaneBlowup(n <= 6), up to 8 candidates");
}

// --- 5 -------------------------------------------------------------------

void example3_sweep(Checks& c) {
  std::string ks;
  for (long a = 2; a <= 6; ++a) {
    const auto run = run_example3(a);
    const auto& model = run.data.model;
    const auto& p = run.pencil;
    const std::string tag = "a = " + std::to_string(a) + ": ";
    c.expect(p.fixed_parts.size() == 1 && p.fixed_parts[0].pairing == -1, tag + "fixed-part pairing -1");
    const DivisorClass expected = Rational(2 * a - 2) * plane_class(model, 1, unit_mults(model.num_points(), {0}));
    c.expect(p.residual == expected, tag + "residual (2a-2)(H - E0)");
    c.expect(p.pencil_detected && p.n == 2 * a - 2 && p.fiber_genus == 0, tag + "pencil of lines through p0");
    c.expect(p.k == 3, tag + "k = 3");
    bool flagged = false;
    for (const auto& d : run.discrepancies) {
      if (d.quantity == "k = D.F") flagged = !d.agrees && d.stated == std::to_string(3 * a) && d.computed == "3";
    }
    c.expect(flagged, tag + "discrepancy flag against stated k = 3a");
    ks += (ks.empty() ? "" : ", ") + to_string(p.k) + " vs " + std::to_string(3 * a);
  }
  c.note("computed k vs stated 3a: " + ks);
}

// --- 6 -------------------------------------------------------------------

void example4_search_suite(Checks& c) {
  for (long g = 0; g <= 30; ++g) {
    for (long e = 0; e <= g; ++e) {
      const auto d = example4_data({g, e, 0, 0});
      c.expect(self_intersection(d.model, d.F) == 0, "F^2 = 0 at g=" + std::to_string(g) + " e=" + std::to_string(e));
      c.expect(arithmetic_genus(d.model, d.F) == g, "p_a(F) = g at g=" + std::to_string(g) + " e=" + std::to_string(e));
    }
    if (!c.pass()) return;
  }
  c.note("F^2 = 0 and p_a(F) = g for 0 <= e <= g <= 30");

  int grid = 0;
  for (long g = 10; g < 20; ++g) {
    for (long e = 0; e < 10; ++e) {
      for (long x = 5; x < 10; ++x) {
        for (long y = 0; y < 5; ++y) {
          const auto d = example4_data({g, e, x, y});
          const Rational lattice = intersect(d.model, d.D, d.F);
          c.expect(lattice == x * (g + 1 + e) + 2 * y - 8 * g - 8, "D.F closed form");
          ++grid;
        }
      }
    }
  }
  c.note("D.F = x(g+1+e) + 2y - 8g - 8 on " + std::to_string(grid) + " grid points");

  for (long g = 8; g <= 40; ++g) {
    for (long e = 0; e <= g; ++e) {
      const auto r = example4_constraints({g, e, 8, 1});
      c.expect(r.effective == (4 * e > g + 1), "effective <=> e > (g+1)/4");
      c.expect(r.fixed == (8 * e < 3 * g - 4), "fixed part <=> e < (3g-4)/8");
      c.expect(r.k == 8 * e + 2, "k = 8e + 2");
    }
  }
  c.note("x=8, y=1 reductions e > (g+1)/4 and e < (3g-4)/8 agree on g in [8, 40]");

  const auto run = run_example4({10, 3, 8, 1});
  c.expect(!run.constraints.D && run.constraints.D_value == -7, "(g,e) = (10,3): inequality (D) evaluates to -7");
  bool flagged = false;
  for (const auto& d : run.discrepancies) {
    if (d.quantity.rfind("all four inequalities", 0) == 0) flagged = !d.agrees;
  }
  c.expect(flagged, "(10,3) feasibility claim flagged");
  c.note("(g,e) = (10,3): (D) value " + to_string(run.constraints.D_value) + ", flagged");

  const auto t0 = Clock::now();
  const auto result = example4_search({8, 40}, {5, 12}, {0, 5});
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 5.0, "grid g in [8,40], x in [5,12], y in [0,5] in < 5 s");
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << elapsed;
  c.note("grid: " + std::to_string(result.rows.size()) + " instances, " + std::to_string(result.feasible_count) +
         " feasible, " + os.str() + " s");
  std::string gaps;
  for (long g : result.alt_interval_gaps) gaps += (gaps.empty() ? "" : ",") + std::to_string(g);
  c.note("g >= 27 with empty ((12g-13)/36, (3g-4)/8) interval: " + (gaps.empty() ? std::string("none") : gaps));
}

// --- 7 -------------------------------------------------------------------

void blow_up_invariance(Checks& c) {
  std::mt19937_64 rng(0x5eed0007);
  std::uniform_int_distribution<int> pts(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> base(-2, 6);
  std::uniform_int_distribution<int> mult(-1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(pts(rng));
    const SurfaceModel m = coin(rng) ? SurfaceModel::plane_blowup(n)
                                     : SurfaceModel::hirzebruch_blowup(std::uniform_int_distribution<int>(0, 3)(rng), n);
    DivisorClass D = DivisorClass::zero(m.rank());
    for (std::size_t i = 0; i < m.base_rank(); ++i) D[i] = base(rng);
    for (std::size_t p = 0; p < n; ++p) D[m.exceptional_index(p)] = -mult(rng);
    const Rational pa = arithmetic_genus(m, D);
    const DivisorClass one[] = {D};

    const Rational m1[] = {1};
    const auto smooth = blow_up(m, one, m1);
    c.expect(smooth.canonical && *smooth.canonical == canonical_class(smooth.model), "K' = pullback(K) + E");
    c.expect(arithmetic_genus(smooth.model, smooth.classes[0]) == pa, "smooth point: p_a preserved");

    const Rational m2[] = {2};
    const auto node = blow_up(m, one, m2);
    const DivisorClass E = node.model.exceptional(n);
    c.expect(arithmetic_genus(node.model, node.classes[0]) == pa - 1, "node: strict transform drops p_a by 1");
    c.expect(arithmetic_genus(node.model, node.classes[0] + E) == pa, "node: strict transform + E keeps p_a");
    if (!c.pass()) return;
  }
  c.note("100 random (model, class) pairs, m = 1 and m = 2");
}

// --- 8 -------------------------------------------------------------------

void theorem_predicates(Checks& c) {
  const std::pair<long, long> pairs[] = {{1, 1}, {1, 2}, {2, 1}};
  std::string rejected;
  for (const auto& [g, k] : pairs) {
    for (long b = 2; b <= 10; ++b) {
      const auto rep = main_theorem_predicate(g, k, b);
      const std::string tag = "(" + std::to_string(g) + "," + std::to_string(k) + "," + std::to_string(b) + ")";
      c.expect(rep.clauses[0].applicable && rep.clauses[0].pass, tag + " clause (1): 2 <= g+k <= 3");
      if (!rep.pass) rejected += (rejected.empty() ? "" : " ") + tag;
    }
  }
  c.expect(rejected.empty(), "predicate passes on every listed triple; rejected by clause (2), which bounds b <= 2 "
                             "when g+k = 3: " + rejected);
  c.expect(main_theorem_predicate(2, 1, 2, 0).pass, "(2,1,2) with h1 = 0 passes both clauses");
  const auto bad = main_theorem_predicate(2, 2, 3);
  c.expect(!bad.pass && !bad.clauses[0].pass, "(2,2,3) fails clause (1)");
  c.expect(genus_bound(2, 4) == 3, "genus_bound(2, 4) = 3");
  c.expect(genus_bound(1, 0) == 1, "genus_bound(1, 0) = 1");
  c.note("triples checked: (1,1,b), (1,2,b), (2,1,b) for b = 2..10, and (2,2,3)");
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {
      run(1, "Example 2 end-to-end", example2_end_to_end),
      run(2, "Example 2 invariants", example2_invariants),
      run(3, "Peeling suite", peeling_suite),
      run(4, "Zariski suite", zariski_suite),
      run(5, "Example 3 sweep a = 2..6", example3_sweep),
      run(6, "Example 4 search", example4_search_suite),
      run(7, "Blow-up invariance of p_a", blow_up_invariance),
      run(8, "Theorem predicates", theorem_predicates),
  };
}

bool print_report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds;
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << t.str() << " s)\n";
    for (const auto& d : r.details) out << "       " << d << "\n";
  }
  out << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << "\n";
  return all;
}

}  // namespace logpair::acceptance
