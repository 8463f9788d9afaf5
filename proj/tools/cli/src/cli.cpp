#include "logpair/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logpair/acceptance/acceptance.hpp"
#include "logpair/errors.hpp"
#include "logpair/io/digest.hpp"
#include "logpair/io/json_io.hpp"

#ifndef LOGPAIR_VERSION_STRING
#define LOGPAIR_VERSION_STRING "0.0.0"
#endif

namespace logpair::cli {

namespace {

using io::Json;

struct Context {
  std::vector<io::LoadedFile> inputs;

  const Json& load(const std::string& path) {
    inputs.push_back(io::load_json_file(path));
    return inputs.back().json;
  }
};

IntRange parse_range(const std::string& text, const char* flag) {
  try {
    const auto colon = text.find(':');
    std::size_t used = 0;
    IntRange r;
    r.lo = std::stol(text.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? text.size() : colon)) throw std::invalid_argument(text);
    if (colon == std::string::npos) {
      r.hi = r.lo;
    } else {
      const std::string hi = text.substr(colon + 1);
      r.hi = std::stol(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(text);
    }
    return r;
  } catch (const std::logic_error&) {
    throw InputError(std::string(flag) + ": expected an integer or lo:hi, got '" + text + "'");
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (is_flat_array(j)) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    rows.emplace_back(prefix, s + "]");
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, scalar_text(j));
  }
}

// Generic key/value rendering for nested documents.
std::string render_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
  return os.str();
}

// Aligned columns for one row per instance.
std::string render_search_table(const Json& doc) {
  static const char* const cols[] = {"g", "e", "x", "y", "a", "D", "big", "effective", "fixed_part",
                                     "fixed_part_lattice", "k", "feasible", "feasible_lattice"};
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(std::begin(cols), std::end(cols));
  for (const auto& row : doc.at("rows")) {
    std::vector<std::string> line;
    for (const char* c : cols) line.push_back(scalar_text(row.at(c)));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(std::size(cols), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << std::right << std::setw(static_cast<int>(width[i])) << line[i] << (i + 1 < line.size() ? "  " : "\n");
    }
  }
  Json summary = doc;
  summary.erase("rows");
  os << "\n" << render_table(summary);
  return os.str();
}

std::string render(const Json& doc, const std::string& format, bool search_rows) {
  if (format == "table") return search_rows ? render_search_table(doc) : render_table(doc);
  return io::dump_canonical(doc);
}

std::vector<DivisorClass> load_candidates(Context& ctx, const std::string& path) {
  if (path.empty()) return {};
  return io::classes_from_json(ctx.load(path));
}

void check_rank(const SurfaceModel& m, const DivisorClass& c, const char* what) {
  if (c.size() != m.rank()) {
    throw InputError(std::string(what) + " has " + std::to_string(c.size()) + " coefficients; the model has rank " +
                     std::to_string(m.rank()));
  }
}

Json manifest(const std::vector<std::string>& args, const Context& ctx, const std::string& output, int code) {
  Json inputs = Json::array();
  for (const auto& f : ctx.inputs) inputs.push_back({{"path", f.path}, {"sha256", io::sha256_hex(f.bytes)}});
  return {{"command", args},
          {"inputs", inputs},
          {"version", LOGPAIR_VERSION_STRING},
          {"outputs", Json::array({{{"stream", "stdout"}, {"sha256", io::sha256_hex(output)}, {"bytes", output.size()}}})},
          {"exit_code", code}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice computations for log surfaces: peeling, Zariski decomposition, log invariants, "
               "adjoint pencils and parameter search.",
               "logpair"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", LOGPAIR_VERSION_STRING);

  std::string format = "json";
  std::string manifest_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--manifest", manifest_path, "Write a run manifest (inputs, digests, exit code) to this file");

  // peel
  auto* peel = app.add_subcommand("peel", "Bark, D# and (optionally) almost-minimalization of a dual graph");
  std::string peel_graph, peel_model, peel_tests;
  bool peel_minimalize = false;
  peel->add_option("graph", peel_graph, "Dual graph JSON")->required();
  peel->add_option("--model", peel_model, "Model JSON for the graph's classes");
  peel->add_flag("--minimalize", peel_minimalize, "Contract (-1)-curves until K + D# is nef on the test set");
  peel->add_option("--test-classes", peel_tests, "Extra classes for the nefness certificate (JSON array)");

  // zariski
  auto* zar = app.add_subcommand("zariski", "Zariski decomposition relative to a candidate set");
  std::string zar_model, zar_class, zar_cands;
  zar->add_option("model", zar_model, "Model JSON")->required();
  zar->add_option("--class", zar_class, "Class to decompose: 1,-2,0 or a JSON array")->required();
  zar->add_option("--candidates", zar_cands, "Candidate negative curves (JSON array of classes)")->required();

  // invariants
  auto* inv = app.add_subcommand("invariants", "Log Chern numbers and checks for (S, D)");
  std::string inv_model, inv_graph, inv_class;
  inv->add_option("model", inv_model, "Model JSON")->required();
  inv->add_option("graph", inv_graph, "Dual graph JSON")->required();
  inv->add_option("--class", inv_class, "Class of D")->required();

  // pencil
  auto* pen = app.add_subcommand("pencil", "Fixed-part extraction and pencil detection for |K + D|");
  std::string pen_model, pen_div, pen_cands;
  pen->add_option("model", pen_model, "Model JSON")->required();
  pen->add_option("--divisor", pen_div, "Class of D")->required();
  pen->add_option("--candidates", pen_cands, "Fixed-part candidates (JSON array of classes)");

  // example run
  auto* ex = app.add_subcommand("example", "Worked examples");
  auto* ex_run = ex->add_subcommand("run", "Run a worked example");
  ex->require_subcommand(1);
  std::string ex_name;
  long ex_a = 2, ex_g = 10, ex_e = 3, ex_x = 8, ex_y = 1;
  ex_run->add_option("name", ex_name, "ex2, ex3 or ex4")->required()->check(CLI::IsMember({"ex2", "ex3", "ex4"}));
  ex_run->add_option("--a", ex_a, "ex3: parameter a >= 2");
  ex_run->add_option("--g", ex_g, "ex4: fiber genus");
  ex_run->add_option("--e", ex_e, "ex4: Hirzebruch degree");
  ex_run->add_option("--x", ex_x, "ex4: coefficient of the positive section");
  ex_run->add_option("--y", ex_y, "ex4: coefficient of the fiber");

  // search
  auto* se = app.add_subcommand("search", "Parameter search");
  std::string se_name, se_g = "8:40", se_x = "5:12", se_y = "0:5", se_e;
  bool se_feasible_only = false;
  se->add_option("name", se_name, "Search family")->required()->check(CLI::IsMember({"ex4"}));
  se->add_option("--g", se_g, "Genus range lo:hi");
  se->add_option("--x", se_x, "x range lo:hi");
  se->add_option("--y", se_y, "y range lo:hi");
  se->add_option("--e", se_e, "e range lo:hi (default 0:g)");
  se->add_flag("--feasible-only", se_feasible_only, "Only list feasible rows");

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Context ctx;
  std::string output;
  int code = 0;
  try {
    if (peel->parsed()) {
      std::optional<SurfaceModel> model;
      if (!peel_model.empty()) model = io::model_from_json(ctx.load(peel_model));
      const DualGraph g = io::graph_from_json(ctx.load(peel_graph), model);
      if (peel_minimalize) {
        const auto tests = load_candidates(ctx, peel_tests);
        output = render(io::to_json(almost_minimalize(g, tests)), format, false);
      } else {
        Json doc = io::to_json(bark(g), g);
        doc["snc_violations"] = snc_violations(g);
        output = render(doc, format, false);
      }
    } else if (zar->parsed()) {
      const SurfaceModel m = io::model_from_json(ctx.load(zar_model));
      const DivisorClass X = io::parse_class_arg(zar_class);
      check_rank(m, X, "--class");
      const auto cands = load_candidates(ctx, zar_cands);
      const auto z = zariski_decompose(m, X, cands);
      const auto check = verify_decomposition(m, z, cands);
      if (!check.ok()) throw InternalError("decomposition failed re-verification");
      Json doc = io::to_json(z);
      doc["check"] = io::to_json(check);
      doc["P_square"] = io::to_json(self_intersection(m, z.P));
      doc["N_square"] = io::to_json(self_intersection(m, z.N));
      output = render(doc, format, false);
    } else if (inv->parsed()) {
      const SurfaceModel m = io::model_from_json(ctx.load(inv_model));
      const DualGraph g = io::graph_from_json(ctx.load(inv_graph), m);
      const DivisorClass D = io::parse_class_arg(inv_class);
      check_rank(m, D, "--class");
      const auto li = log_chern(m, D, g);
      Json doc = io::to_json(li);
      Json checks{{"noether", noether_check(li, li.D_sq)},
                  {"pa_consistent", true},
                  {"snc_violations", snc_violations(g)}};
      if (auto h = m.hodge()) {
        checks["euler_bound"] = io::to_json(euler_bound_check(li, *h));
      }
      doc["checks"] = checks;
      output = render(doc, format, false);
    } else if (pen->parsed()) {
      const SurfaceModel m = io::model_from_json(ctx.load(pen_model));
      const DivisorClass D = io::parse_class_arg(pen_div);
      check_rank(m, D, "--divisor");
      const auto cands = load_candidates(ctx, pen_cands);
      for (const auto& c : cands) check_rank(m, c, "candidate");
      output = render(io::to_json(analyze_adjoint_system(m, D, cands)), format, false);
    } else if (ex_run->parsed()) {
      Json doc;
      if (ex_name == "ex2") {
        doc = io::to_json(run_example2());
      } else if (ex_name == "ex3") {
        doc = io::to_json(run_example3(ex_a));
      } else {
        doc = io::to_json(run_example4({ex_g, ex_e, ex_x, ex_y}));
      }
      output = render(doc, format, false);
    } else if (se->parsed()) {
      std::optional<IntRange> e_range;
      if (!se_e.empty()) e_range = parse_range(se_e, "--e");
      const auto result = example4_search(parse_range(se_g, "--g"), parse_range(se_x, "--x"),
                                          parse_range(se_y, "--y"), e_range);
      output = render(io::to_json(result, se_feasible_only), format, true);
    } else if (self->parsed()) {
      std::ostringstream os;
      const bool ok = acceptance::print_report(acceptance::run_all(), os);
      output = os.str();
      code = ok ? 0 : 2;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  }

  out << output;
  if (!manifest_path.empty()) {
    std::ofstream mf(manifest_path, std::ios::binary);
    if (!mf) {
      err << "error: cannot write manifest " << manifest_path << "\n";
      return code == 0 ? 1 : code;
    }
    mf << io::dump_canonical(manifest(args, ctx, output, code));
  }
  return code;
}

}  // namespace logpair::cli
