#include "logpair/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "logpair/errors.hpp"

namespace logpair::io {

namespace {

const Json& field(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(where) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

long integer_field(const Json& j, const char* key, std::string_view where) {
  const Json& v = field(j, key, where);
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) return to_long(parse_rational(v.get<std::string>()));
  throw InputError(std::string(where) + ": field '" + key + "' must be an integer");
}

long integer_field_or(const Json& j, const char* key, long fallback, std::string_view where) {
  return j.contains(key) ? integer_field(j, key, where) : fallback;
}

std::string string_field(const Json& j, const char* key, std::string_view where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(std::string(where) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

Json rationals(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json optional_rational(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json vertex_ids(const DualGraph& g, std::span<const std::size_t> idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(g.vertex(i).id);
  return out;
}

Json discrepancies(const std::vector<Discrepancy>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(origin) + ": invalid JSON: " + e.what());
  }
}

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  LoadedFile f{path, ss.str(), {}};
  f.json = parse_json(f.bytes, path);
  return f;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational as a string or an integer, got " + j.dump());
}

Json to_json(const DivisorClass& c) { return rationals(c.coeffs()); }

DivisorClass class_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("a class must be a JSON array, got " + j.dump());
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return DivisorClass(std::move(v));
}

DivisorClass parse_class_arg(std::string_view text) {
  const auto start = text.find_first_not_of(" \t");
  if (start != std::string_view::npos && text[start] == '[') return class_from_json(parse_json(text, "class argument"));
  std::vector<Rational> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    v.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DivisorClass(std::move(v));
}

std::vector<DivisorClass> classes_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "candidates", "candidate file") : j;
  if (!arr.is_array()) throw InputError("candidate list must be an array of classes");
  std::vector<DivisorClass> out;
  for (const auto& c : arr) out.push_back(class_from_json(c));
  return out;
}

Json to_json(const SurfaceModel& m) {
  Json j;
  j["points"] = m.num_points();
  switch (m.kind()) {
    case ModelKind::PlaneBlowup: j["kind"] = "p2_blowup"; break;
    case ModelKind::HirzebruchBlowup:
      j["kind"] = "hirzebruch";
      j["e"] = m.degree_e();
      break;
    case ModelKind::CustomGram: {
      j["kind"] = "custom";
      const std::size_t base = m.base_rank();
      Json gram = Json::array();
      for (std::size_t r = 0; r < base; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < base; ++c) row.push_back(to_json(m.gram_entry(r, c)));
        gram.push_back(row);
      }
      j["gram"] = gram;
      if (m.base_canonical()) j["canonical"] = to_json(*m.base_canonical());
      if (auto h = m.hodge()) {
        const long n = static_cast<long>(m.num_points());
        j["hodge"] = {{"q", h->q}, {"p_g", h->p_g}, {"h11", h->h11 - n}, {"e", h->euler_e - n}};
      }
      break;
    }
  }
  return j;
}

SurfaceModel model_from_json(const Json& j) {
  const char* where = "model";
  const std::string kind = string_field(j, "kind", where);
  const long points = integer_field_or(j, "points", 0, where);
  if (points < 0) throw InputError("model: points must be non-negative");
  const auto n = static_cast<std::size_t>(points);
  if (kind == "p2_blowup" || kind == "plane") return SurfaceModel::plane_blowup(n);
  if (kind == "hirzebruch") return SurfaceModel::hirzebruch_blowup(integer_field(j, "e", where), n);
  if (kind == "custom") {
    const Json& rows = field(j, "gram", where);
    if (!rows.is_array()) throw InputError("model: gram must be an array of rows");
    std::vector<std::vector<Rational>> data;
    for (const auto& row : rows) {
      if (!row.is_array()) throw InputError("model: gram must be an array of rows");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_from_json(x));
      data.push_back(std::move(r));
    }
    for (const auto& r : data) {
      if (r.size() != data.size()) throw InputError("model: gram must be square");
    }
    std::optional<DivisorClass> canonical;
    if (j.contains("canonical")) canonical = class_from_json(j.at("canonical"));
    std::optional<HodgeData> hodge;
    if (j.contains("hodge")) {
      const Json& h = j.at("hodge");
      hodge = HodgeData{integer_field(h, "q", "hodge"), integer_field(h, "p_g", "hodge"), integer_field(h, "h11", "hodge"),
                        integer_field(h, "e", "hodge")};
    }
    return SurfaceModel::custom(RationalMatrix::from_rows(data), canonical, hodge).with_points(n);
  }
  throw InputError("model: unknown kind '" + kind + "' (expected p2_blowup, hirzebruch or custom)");
}

Json to_json(const DualGraph& g) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}, {"self", v.self_int}});
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
  j["vertices"] = vs;
  j["edges"] = es;
  if (g.has_binding()) {
    j["model"] = to_json(g.binding()->model);
    Json cls = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) cls[g.vertex(i).id] = to_json(g.binding()->classes[i]);
    j["classes"] = cls;
  }
  return j;
}

DualGraph graph_from_json(const Json& j, const std::optional<SurfaceModel>& model) {
  const char* where = "graph";
  const Json& vs = field(j, "vertices", where);
  if (!vs.is_array()) throw InputError("graph: vertices must be an array");
  std::vector<GraphVertex> vertices;
  for (const auto& v : vs) {
    vertices.push_back({string_field(v, "id", "graph vertex"), integer_field_or(v, "genus", 0, "graph vertex"),
                        integer_field(v, "self", "graph vertex")});
  }
  std::vector<GraphEdge> edges;
  if (j.contains("edges")) {
    const Json& es = j.at("edges");
    if (!es.is_array()) throw InputError("graph: edges must be an array");
    for (const auto& e : es) {
      edges.push_back({string_field(e, "u", "graph edge"), string_field(e, "v", "graph edge"),
                       integer_field_or(e, "mult", 1, "graph edge")});
    }
  }
  std::optional<ClassBinding> binding;
  if (j.contains("classes")) {
    std::optional<SurfaceModel> m = model;
    if (j.contains("model")) m = model_from_json(j.at("model"));
    if (!m) throw InputError("graph: classes given without a model");
    const Json& cls = j.at("classes");
    if (!cls.is_object()) throw InputError("graph: classes must map vertex ids to classes");
    ClassBinding b{*m, {}};
    for (const auto& v : vertices) {
      if (!cls.contains(v.id)) throw InputError("graph: no class for vertex '" + v.id + "'");
      b.classes.push_back(class_from_json(cls.at(v.id)));
    }
    if (cls.size() != vertices.size()) throw InputError("graph: classes mention unknown vertices");
    binding = std::move(b);
  }
  return DualGraph(std::move(vertices), std::move(edges), std::move(binding));
}

Json to_json(const BarkResult& b, const DualGraph& g) {
  Json j;
  Json coeffs = Json::object();
  Json sharp = Json::object();
  Json pairings = Json::object();
  const auto sp = sharp_pairings(g, b);
  for (std::size_t i = 0; i < g.size(); ++i) {
    coeffs[g.vertex(i).id] = to_json(b.coefficients[i]);
    sharp[g.vertex(i).id] = to_json(b.sharp_coeffs[i]);
    pairings[g.vertex(i).id] = to_json(sp[i]);
  }
  j["coefficients"] = coeffs;
  j["sharp_coefficients"] = sharp;
  j["sharp_pairings"] = pairings;
  j["bark_square"] = to_json(b.bark_square);
  j["tips"] = b.tips_count;
  j["bound_ok"] = bark_square_bound_check(b);
  Json segs = Json::array();
  for (const auto& s : b.segments) {
    segs.push_back({{"kind", std::string(to_string(s.segment.kind))},
                    {"vertices", vertex_ids(g, s.segment.vertices)},
                    {"attachment", s.segment.attachment ? Json(g.vertex(*s.segment.attachment).id) : Json(nullptr)},
                    {"coefficients", rationals(s.coefficients)},
                    {"square", to_json(s.square)},
                    {"tips", s.tips}});
  }
  j["segments"] = segs;
  Json excluded = Json::array();
  for (const auto& e : b.report.excluded) excluded.push_back({{"vertices", vertex_ids(g, e.vertices)}, {"reason", e.reason}});
  j["excluded"] = excluded;
  j["disjointness_violations"] = b.disjointness_violations;
  return j;
}

Json to_json(const MinimalizationResult& r) {
  Json j;
  j["model"] = to_json(r.model);
  j["graph"] = to_json(r.graph);
  j["bark"] = to_json(r.bark, r.graph);
  Json steps = Json::array();
  for (const auto& s : r.log) {
    steps.push_back({{"point", s.point},
                     {"contracted", s.contracted},
                     {"pairing", to_json(s.pairing)},
                     {"removed_components", s.removed_components},
                     {"warnings", s.warnings}});
  }
  j["steps"] = steps;
  j["warnings"] = r.warnings;
  j["negative_curve_violations"] = r.negative_curve_violations;
  Json pairs = Json::array();
  for (const auto& e : r.certificate.pairings) pairs.push_back({{"name", e.name}, {"pairing", to_json(e.pairing)}});
  j["certificate"] = {{"pairings", pairs}, {"nef_on_test_set", r.certificate.nef_on_test_set}, {"scope", r.certificate.scope}};
  return j;
}

Json to_json(const ZariskiDecomposition& z) {
  return {{"X", to_json(z.X)},       {"P", to_json(z.P)},         {"N", to_json(z.N)},
          {"support", z.support},    {"N_coeffs", rationals(z.N_coeffs)}, {"rounds", z.rounds},
          {"scope", z.scope}};
}

Json to_json(const DecompositionCheck& c) {
  return {{"sum_ok", c.sum_ok},
          {"coefficients_ok", c.coefficients_ok},
          {"negative_definite", c.negative_definite},
          {"orthogonal", c.orthogonal},
          {"nef_on_candidates", c.nef_on_candidates},
          {"ok", c.ok()},
          {"failures", c.failures},
          {"scope", c.scope}};
}

Json to_json(const LogInvariants& inv) {
  Json j{{"D_square", to_json(inv.D_sq)},
         {"KD", to_json(inv.KD)},
         {"c1bar_sq", to_json(inv.c1bar_sq)},
         {"c2bar", inv.c2bar},
         {"pa_D", inv.pa_D},
         {"l", inv.l},
         {"r", inv.r},
         {"m", inv.m},
         {"euler_S", inv.euler_S},
         {"chi_O", to_json(inv.chi_O)},
         {"chi_bar", to_json(inv.chi_bar)},
         {"e_open", inv.e_open},
         {"e_open_additive", inv.e_open_additive},
         {"additivity_mismatch", inv.additivity_mismatch},
         {"pg_log", optional_value(inv.pg_log)},
         {"h1_log", optional_value(inv.h1_log)}};
  if (!inv.cohomology_note.empty()) j["cohomology_note"] = inv.cohomology_note;
  return j;
}

Json to_json(const EulerBoundReport& r) {
  return {{"hypothesis", r.hypothesis},
          {"hypothesis_rhs", r.hypothesis_rhs},
          {"chi_log_forms", r.chi_log_forms},
          {"bound_general", optional_value(r.bound_general)},
          {"bound_pg_zero", optional_value(r.bound_pg_zero)},
          {"note", r.note}};
}

Json to_json(const TheoremReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"clauses", clauses}, {"pass", r.pass}, {"discrepancy", r.discrepancy}};
}

Json to_json(const PencilReport& r) {
  Json fixed = Json::array();
  for (const auto& f : r.fixed_parts) {
    fixed.push_back({{"candidate", f.candidate},
                     {"class", to_json(f.G)},
                     {"pairing", to_json(f.pairing)},
                     {"square", to_json(f.G_sq)},
                     {"expected_dim", optional_rational(f.expected_dim)}});
  }
  Json j{{"D", to_json(r.D)},
         {"adjoint", to_json(r.adjoint)},
         {"big", {{"big", r.big.big}, {"value", to_json(r.big.value)}, {"formula", r.big.formula}}},
         {"fixed_parts", fixed},
         {"residual", to_json(r.residual)},
         {"residual_square", to_json(r.residual_sq)},
         {"pencil_detected", r.pencil_detected},
         {"notes", r.notes}};
  if (r.pencil_detected) {
    j["F"] = to_json(r.F);
    j["n"] = r.n;
    j["F_square"] = to_json(r.F_sq);
    j["g"] = to_json(r.fiber_genus);
    j["b"] = r.base_genus;
    j["k"] = to_json(r.k);
  } else {
    j["reason"] = r.reason;
  }
  return j;
}

Json to_json(const Discrepancy& d) {
  return {{"quantity", d.quantity}, {"stated", d.stated}, {"computed", d.computed}, {"agrees", d.agrees}};
}

Json to_json(const ConstraintReport& r) {
  return {{"g", r.inst.g},
          {"e", r.inst.e},
          {"x", r.inst.x},
          {"y", r.inst.y},
          {"a", r.inst.a()},
          {"D", r.D},
          {"D_value", to_json(r.D_value)},
          {"big", r.big},
          {"big_value", to_json(r.big_value)},
          {"effective", r.effective},
          {"effective_value", to_json(r.effective_value)},
          {"fixed_part", r.fixed},
          {"fixed_part_value", to_json(r.fixed_value)},
          {"fixed_part_lattice", r.fixed_lattice},
          {"fixed_part_lattice_value", to_json(r.fixed_lattice_value)},
          {"k", to_json(r.k)},
          {"feasible", r.feasible()},
          {"feasible_lattice", r.feasible_lattice()}};
}

Json to_json(const IntervalRow& r) {
  return {{"g", r.g},
          {"lower_D", to_json(r.lower_D)},
          {"lower_D_alt", to_json(r.lower_D_alt)},
          {"lower_big", to_json(r.lower_big)},
          {"lower_effective", to_json(r.lower_effective)},
          {"upper_fixed", to_json(r.upper_fixed)},
          {"feasible_e", r.feasible_e},
          {"alt_interval_e", r.alt_interval_e},
          {"ordering_holds", r.ordering_holds},
          {"reductions_match", r.reductions_match}};
}

Json to_json(const SearchResult& r, bool feasible_only) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    if (!feasible_only || row.feasible()) rows.push_back(to_json(row));
  }
  Json interval = Json::array();
  for (const auto& row : r.interval) interval.push_back(to_json(row));
  return {{"rows", rows},
          {"evaluated", r.rows.size()},
          {"feasible_count", r.feasible_count},
          {"feasible_lattice_count", r.feasible_lattice_count},
          {"interval_x8_y1", interval},
          {"alt_interval_gaps_g_ge_27", r.alt_interval_gaps},
          {"exact_gaps_g_ge_27", r.exact_gaps}};
}

Json to_json(const Example2Run& r) {
  return {{"example", "ex2"},
          {"model", to_json(r.data.model)},
          {"D", to_json(r.data.D)},
          {"graph", to_json(r.graph)},
          {"pencil", to_json(r.pencil)},
          {"invariants", to_json(r.invariants)},
          {"noether", r.noether},
          {"euler_bound", to_json(r.euler)},
          {"bark", to_json(r.bark, r.graph)},
          {"zariski", to_json(r.zariski)},
          {"P_square", to_json(r.P_sq)},
          {"N_square", to_json(r.N_sq)},
          {"bmy", r.bmy},
          {"discrepancies", discrepancies(r.discrepancies)}};
}

Json to_json(const Example3Run& r) {
  bool k_agrees = true;
  for (const auto& d : r.discrepancies) {
    if (d.quantity == "k = D.F") k_agrees = d.agrees;
  }
  return {{"example", "ex3"},
          {"a", r.data.a},
          {"model", to_json(r.data.model)},
          {"D", to_json(r.data.D)},
          {"pencil", to_json(r.pencil)},
          {"residual_matches", r.residual_matches},
          {"k_stated", to_json(r.k_stated)},
          {"k_discrepancy", !k_agrees},
          {"discrepancies", discrepancies(r.discrepancies)}};
}

Json to_json(const Example4Run& r) {
  return {{"example", "ex4"},
          {"instance", to_json(r.constraints)},
          {"model", to_json(r.data.model)},
          {"D", to_json(r.data.D)},
          {"F", to_json(r.data.F)},
          {"M", to_json(r.data.M)},
          {"adjoint_dot_M", to_json(r.adjoint_dot_M)},
          {"residual_is_F", r.residual_is_F},
          {"pencil", to_json(r.pencil)},
          {"discrepancies", discrepancies(r.discrepancies)}};
}

}  // namespace logpair::io
