#pragma once

// JSON interchange for models, classes, graphs and results. Rationals travel
// as strings ("p/q" in lowest terms, or "p"); object keys are sorted, so
// equal values always serialize to identical bytes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "logpair/dualgraph.hpp"
#include "logpair/invariants.hpp"
#include "logpair/lattice.hpp"
#include "logpair/peeling.hpp"
#include "logpair/pencil.hpp"
#include "logpair/search.hpp"
#include "logpair/worked_examples.hpp"
#include "logpair/zariski.hpp"

namespace logpair::io {

using Json = nlohmann::json;

/// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

/// Parses text; throws InputError with `origin` in the message on bad JSON.
Json parse_json(std::string_view text, std::string_view origin);

struct LoadedFile {
  std::string path;
  std::string bytes;
  Json json;
};
LoadedFile load_json_file(const std::string& path);

Json to_json(const Rational& q);
/// Accepts a string ("3", "-2/5") or an integer number. Floats are rejected.
Rational rational_from_json(const Json& j);

Json to_json(const DivisorClass& c);
DivisorClass class_from_json(const Json& j);
/// "1,-1,0" or a JSON array.
DivisorClass parse_class_arg(std::string_view text);
std::vector<DivisorClass> classes_from_json(const Json& j);

Json to_json(const SurfaceModel& m);
SurfaceModel model_from_json(const Json& j);

Json to_json(const DualGraph& g);
/// {"vertices": [...], "edges": [...]} with an optional "classes" map from
/// vertex id to class. Classes need a model: either `model` or a "model"
/// entry inside the document.
DualGraph graph_from_json(const Json& j, const std::optional<SurfaceModel>& model = std::nullopt);

Json to_json(const BarkResult& b, const DualGraph& g);
Json to_json(const MinimalizationResult& r);
Json to_json(const ZariskiDecomposition& z);
Json to_json(const DecompositionCheck& c);
Json to_json(const LogInvariants& inv);
Json to_json(const EulerBoundReport& r);
Json to_json(const TheoremReport& r);
Json to_json(const PencilReport& r);
Json to_json(const Discrepancy& d);
Json to_json(const ConstraintReport& r);
Json to_json(const IntervalRow& r);
Json to_json(const SearchResult& r, bool feasible_only);
Json to_json(const Example2Run& r);
Json to_json(const Example3Run& r);
Json to_json(const Example4Run& r);

}  // namespace logpair::io
