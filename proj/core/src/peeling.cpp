#include "logpair/peeling.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "logpair/errors.hpp"

namespace logpair {

std::vector<Rational> orthogonal_correction(const RationalMatrix& gram, std::span<const Rational> rhs) {
  if (gram.rows() != rhs.size()) throw InputError("orthogonal_correction: Gram size and right-hand side length differ");
  if (!is_negative_definite(gram)) throw InputError("orthogonal_correction: Gram matrix is not negative definite");
  return solve(gram, rhs);
}

namespace {

std::string segment_name(const DualGraph& g, const Segment& s) {
  return std::string(to_string(s.kind)) + "@" + g.vertex(s.vertices.front()).id;
}

const ClassBinding& require_binding(const DualGraph& g, const char* what) {
  if (!g.has_binding()) throw InputError(std::string(what) + " needs a dual graph with a class map");
  return *g.binding();
}

}  // namespace

BarkResult bark(const DualGraph& g) {
  BarkResult result;
  result.report = classify_segments(g);
  result.coefficients.assign(g.size(), Rational(0));

  std::vector<int> owner(g.size(), -1);
  const auto segments = result.report.all_segments();
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Segment& seg = *segments[s];
    if (!seg.negative_definite) {
      throw InternalError("segment " + segment_name(g, seg) + " was classified but is not negative definite");
    }
    std::vector<Rational> rhs;
    long tips = 0;
    for (auto v : seg.vertices) {
      const long beta = branching_number(g, v);
      rhs.emplace_back(-2 + beta);
      tips += std::max(0L, 2 - beta);
    }
    SegmentBark sb{seg, orthogonal_correction(g.gram(seg.vertices), rhs), 0, tips};
    for (std::size_t i = 0; i < seg.vertices.size(); ++i) {
      const Rational& a = sb.coefficients[i];
      if (a <= 0 || a > 1) {
        throw InternalError("bark coefficient " + to_string(a) + " of " + g.vertex(seg.vertices[i]).id +
                            " lies outside (0, 1]");
      }
      sb.square += a * rhs[i];
      const auto v = seg.vertices[i];
      if (owner[v] >= 0) {
        result.disjointness_violations.push_back(segment_name(g, *segments[owner[v]]) + " and " +
                                                 segment_name(g, seg) + " share " + g.vertex(v).id);
      }
      owner[v] = static_cast<int>(s);
      result.coefficients[v] += a;
    }
    result.bark_square += sb.square;
    result.tips_count += tips;
    result.segments.push_back(std::move(sb));
  }

  for (const auto& e : g.edges()) {
    const auto u = g.index_of(e.u);
    const auto v = g.index_of(e.v);
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      result.disjointness_violations.push_back(segment_name(g, *segments[owner[u]]) + " and " +
                                               segment_name(g, *segments[owner[v]]) + " meet along " + e.u + "-" +
                                               e.v);
    }
  }

  if (!result.disjointness_violations.empty()) {
    // Segment squares no longer add up; use the full quadratic form.
    const RationalMatrix full = g.gram();
    const auto ga = full.multiply(result.coefficients);
    result.bark_square = 0;
    for (std::size_t i = 0; i < g.size(); ++i) result.bark_square += result.coefficients[i] * ga[i];
  }

  result.sharp_coeffs.reserve(g.size());
  for (const auto& a : result.coefficients) result.sharp_coeffs.push_back(1 - a);
  return result;
}

bool bark_square_bound_check(const BarkResult& b) { return b.bark_square >= -b.tips_count; }

std::vector<Rational> sharp_pairings(const DualGraph& g, const BarkResult& b) {
  if (b.coefficients.size() != g.size()) throw InputError("sharp_pairings: bark does not belong to this graph");
  std::vector<Rational> out;
  out.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    Rational adjoint = 2 * g.vertex(j).genus - 2;
    Rational bark_dot = b.coefficients[j] * g.vertex(j).self_int;
    for (const auto& [nb, w] : g.neighbors(j)) {
      adjoint += w;
      bark_dot += b.coefficients[nb] * w;
    }
    out.push_back(adjoint - bark_dot);
  }
  return out;
}

DivisorClass sharp_class(const DualGraph& g, const BarkResult& b) {
  const auto& binding = require_binding(g, "sharp_class");
  DivisorClass total = DivisorClass::zero(binding.model.rank());
  for (std::size_t i = 0; i < g.size(); ++i) total += b.sharp_coeffs.at(i) * binding.classes[i];
  return total;
}

DivisorClass bark_class(const DualGraph& g, const BarkResult& b) {
  const auto& binding = require_binding(g, "bark_class");
  DivisorClass total = DivisorClass::zero(binding.model.rank());
  for (std::size_t i = 0; i < g.size(); ++i) total += b.coefficients.at(i) * binding.classes[i];
  return total;
}

std::optional<std::string> negative_curve_violation(const DualGraph& g, const DivisorClass& e) {
  const auto& binding = require_binding(g, "negative_curve_violation");
  const auto& model = binding.model;
  const Rational e_sq = self_intersection(model, e);
  const DivisorClass adjoint = canonical_class(model) + *g.total_class();
  const Rational pairing = intersect(model, adjoint, e);
  if (e_sq > -2 || pairing >= 0) return std::nullopt;
  for (const auto& c : binding.classes) {
    if (c == e) return std::nullopt;
  }
  return "class with square " + to_string(e_sq) + " and (K+D).E = " + to_string(pairing) +
         " is not a component of D, so it cannot be an irreducible curve";
}

MinimalizationResult almost_minimalize(const DualGraph& g, std::span<const DivisorClass> test_classes) {
  const auto& binding = require_binding(g, "almost_minimalize");
  if (!binding.model.has_canonical()) throw InputError("almost_minimalize needs a model with a canonical class");

  SurfaceModel model = binding.model;
  std::vector<DivisorClass> classes = binding.classes;
  std::vector<DivisorClass> tests(test_classes.begin(), test_classes.end());
  for (const auto& t : tests) {
    if (t.size() != model.rank()) throw InputError("almost_minimalize: test class does not match the model rank");
  }
  std::vector<std::string> ids;
  std::vector<long> genera;
  for (const auto& v : g.vertices()) {
    ids.push_back(v.id);
    genera.push_back(v.genus);
  }

  MinimalizationResult out{model, g, {}, {}, {}, {}, {}};
  std::set<std::string> skipped;

  for (;;) {
    out.bark = bark(out.graph);
    const DivisorClass adjoint_sharp = canonical_class(model) + sharp_class(out.graph, out.bark);

    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& v = out.graph.vertex(i);
      if (v.self_int != -1 || v.genus != 0) continue;
      if (intersect(model, adjoint_sharp, classes[i]) >= 0) continue;
      if (basis_exceptional_point(model, classes[i])) continue;
      if (skipped.insert(v.id).second) {
        out.warnings.push_back("component " + v.id + " is a (-1)-curve with negative (K+D#) pairing but not a basis "
                               "exceptional class; skipped");
      }
    }

    std::optional<std::size_t> target;
    Rational target_pairing;
    for (std::size_t p = 0; p < model.num_points(); ++p) {
      const Rational pr = intersect(model, adjoint_sharp, model.exceptional(p));
      if (pr < 0) {
        target = p;
        target_pairing = pr;
        break;
      }
    }
    if (!target) break;

    const DivisorClass e = model.exceptional(*target);
    MinimalizationStep step;
    step.point = *target;
    step.contracted = model.basis_labels()[model.exceptional_index(*target)];
    step.pairing = target_pairing;

    std::vector<DivisorClass> kept;
    std::vector<std::string> kept_ids;
    std::vector<long> kept_genera;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i] == e) {
        step.removed_components.push_back(ids[i]);
        continue;
      }
      const long m = to_long(intersect(model, classes[i], e));
      if (m >= 2) step.warnings.push_back("image of " + ids[i] + " acquires a point of multiplicity " + std::to_string(m));
      kept.push_back(classes[i]);
      kept_ids.push_back(ids[i]);
      kept_genera.push_back(genera[i] + m * (m - 1) / 2);
    }

    auto contracted = contract_exceptional(model, *target, kept);
    auto contracted_tests = contract_exceptional(model, *target, tests);
    model = contracted.model;
    classes = std::move(contracted.classes);
    tests = std::move(contracted_tests.classes);
    ids = std::move(kept_ids);
    genera = std::move(kept_genera);
    out.graph = DualGraph::from_classes(model, ids, classes, genera);
    for (const auto& w : snc_violations(out.graph)) step.warnings.push_back("after contraction: " + w);
    out.log.push_back(std::move(step));
  }

  out.model = model;
  const DivisorClass adjoint_sharp = canonical_class(model) + sharp_class(out.graph, out.bark);
  auto& cert = out.certificate;
  cert.scope =
      "K+D# is certified nef only against the D-components, the basis exceptional classes and the supplied test "
      "classes";
  auto record = [&](std::string name, const DivisorClass& c) {
    const Rational p = intersect(model, adjoint_sharp, c);
    if (p < 0) cert.nef_on_test_set = false;
    cert.pairings.push_back({std::move(name), p});
  };
  for (std::size_t i = 0; i < classes.size(); ++i) record(ids[i], classes[i]);
  const auto labels = model.basis_labels();
  for (std::size_t p = 0; p < model.num_points(); ++p) {
    record(labels[model.exceptional_index(p)], model.exceptional(p));
  }
  for (std::size_t t = 0; t < tests.size(); ++t) {
    record("test" + std::to_string(t), tests[t]);
    if (auto why = negative_curve_violation(out.graph, tests[t])) {
      out.negative_curve_violations.push_back("test" + std::to_string(t) + ": " + *why);
    }
  }
  return out;
}

}  // namespace logpair
