#include "logpair/worked_examples.hpp"

#include "logpair/errors.hpp"

namespace logpair {

namespace {

std::vector<Rational> ones(std::size_t count, std::size_t offset = 0, std::size_t total = 0) {
  std::vector<Rational> v(std::max(total, offset + count), Rational(0));
  for (std::size_t i = offset; i < offset + count; ++i) v[i] = 1;
  return v;
}

Discrepancy compare(std::string quantity, const Rational& stated, const Rational& computed) {
  return {std::move(quantity), to_string(stated), to_string(computed), stated == computed};
}

}  // namespace

Example2Data example2_data() {
  Example2Data d;
  d.model = SurfaceModel::plane_blowup(8);
  const std::vector<Rational> twos(8, Rational(2));
  d.D = plane_class(d.model, 6, twos);
  // C1 through p1..p7, C2 through p1..p4 and p8, C3 through p5..p8.
  std::vector<Rational> c2 = ones(4, 0, 8);
  c2[7] = 1;
  d.ids = {"C1", "C2", "C3"};
  d.components = {plane_class(d.model, 2, ones(7, 0, 8)), plane_class(d.model, 2, c2),
                  plane_class(d.model, 2, ones(4, 4, 8))};
  d.fixed_candidates = {d.components[0]};
  return d;
}

DualGraph example2_graph(const Example2Data& data) {
  return DualGraph::from_classes(data.model, data.ids, data.components, std::vector<long>(data.components.size(), 0));
}

Example2Run run_example2() {
  Example2Run run;
  run.data = example2_data();
  const auto& model = run.data.model;
  run.graph = example2_graph(run.data);
  run.pencil = analyze_adjoint_system(model, run.data.D, run.data.fixed_candidates);
  run.invariants = log_chern(model, run.data.D, run.graph);
  run.noether = noether_check(run.invariants, run.invariants.D_sq);
  run.euler = euler_bound_check(run.invariants, *model.hodge());
  run.bark = bark(run.graph);

  std::vector<DivisorClass> candidates = run.data.components;
  for (std::size_t p = 0; p < model.num_points(); ++p) candidates.push_back(model.exceptional(p));
  run.zariski = zariski_decompose(model, run.pencil.adjoint, candidates);
  run.P_sq = self_intersection(model, run.zariski.P);
  run.N_sq = self_intersection(model, run.zariski.N);
  if (run.zariski.N != bark_class(run.graph, run.bark)) {
    throw InternalError("example 2: negative part of K + D differs from the bark");
  }
  run.bmy = bmy_check(run.P_sq, run.N_sq, run.invariants.c2bar);

  run.discrepancies.push_back(compare("k = D.F", 4, run.pencil.k));
  run.discrepancies.push_back(compare("fixed part pairing (K+D).C1", -1,
                                      run.pencil.fixed_parts.empty() ? Rational(0) : run.pencil.fixed_parts[0].pairing));
  run.discrepancies.push_back(compare("e(S-D) from the log Chern formula vs Euler additivity",
                                      run.invariants.e_open, run.invariants.e_open_additive));
  return run;
}

Example3Data example3_data(long a) {
  if (a < 2) throw InputError("example 3 needs a >= 2");
  Example3Data d;
  d.a = a;
  const std::size_t doubles = static_cast<std::size_t>(4 * a - 4);
  d.model = SurfaceModel::plane_blowup(doubles + 1);
  std::vector<Rational> mults(doubles + 1, Rational(2));
  mults[0] = 3 * a - 3;
  d.D = plane_class(d.model, 3 * a, mults);
  std::vector<Rational> gm(doubles + 1, Rational(1));
  gm[0] = a - 2;
  d.fixed_candidates = {plane_class(d.model, a - 1, gm)};
  return d;
}

Example3Run run_example3(long a) {
  Example3Run run;
  run.data = example3_data(a);
  const auto& model = run.data.model;
  run.pencil = analyze_adjoint_system(model, run.data.D, run.data.fixed_candidates);
  const std::vector<Rational> e0{Rational(1)};
  const DivisorClass line_pencil = plane_class(model, 1, e0);
  run.residual_matches = run.pencil.residual == Rational(2 * a - 2) * line_pencil;
  run.k_stated = 3 * a;

  run.discrepancies.push_back({"fixed part pairing (K+D).G", "< 0",
                               run.pencil.fixed_parts.empty() ? "none" : to_string(run.pencil.fixed_parts[0].pairing),
                               !run.pencil.fixed_parts.empty() && run.pencil.fixed_parts[0].pairing < 0});
  run.discrepancies.push_back(compare("k = D.F", run.k_stated, run.pencil.k));
  return run;
}

Example4Data example4_data(const Example4Instance& inst) {
  validate(inst);
  Example4Data d;
  d.inst = inst;
  const auto pts = static_cast<std::size_t>(inst.points());
  d.model = SurfaceModel::hirzebruch_blowup(inst.e, pts);
  d.D = hirzebruch_class(d.model, inst.x, inst.y, std::vector<Rational>(pts, Rational(2)));
  d.F = hirzebruch_class(d.model, 2, inst.a(), std::vector<Rational>(pts, Rational(1)));
  d.M = hirzebruch_class(d.model, inst.x - 4, inst.y + inst.e - inst.a() - 2, {});
  return d;
}

Example4Run run_example4(const Example4Instance& inst) {
  Example4Run run;
  run.data = example4_data(inst);
  const auto& model = run.data.model;
  run.constraints = example4_constraints(inst);
  const DivisorClass adjoint = canonical_class(model) + run.data.D;
  run.adjoint_dot_M = intersect(model, adjoint, run.data.M);
  if (run.adjoint_dot_M != run.constraints.fixed_lattice_value) {
    throw InternalError("example 4: lattice pairing (K+D).M disagrees with its closed form");
  }
  run.residual_is_F = adjoint - run.data.M == run.data.F;
  const DivisorClass candidates[] = {run.data.M};
  run.pencil = analyze_adjoint_system(model, run.data.D, candidates);

  run.discrepancies.push_back(compare("(K+D).M", run.constraints.fixed_value, run.adjoint_dot_M));
  run.discrepancies.push_back(
      compare("k = D.F", run.constraints.k, intersect(model, run.data.D, run.data.F)));
  if (inst.g == 10 && inst.e == 3 && inst.x == 8 && inst.y == 1) {
    run.discrepancies.push_back({"all four inequalities hold at g=10, e=3", "true",
                                 run.constraints.feasible() ? "true" : "false", run.constraints.feasible()});
  }
  return run;
}

}  // namespace logpair
