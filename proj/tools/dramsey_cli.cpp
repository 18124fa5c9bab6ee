// Command-line front end for libdramsey. Talks to the library exclusively
// through the C API in dramsey/dramsey.h.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dramsey/dramsey.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string error;
  std::string message;
};

struct ConfigDeleter {
  void operator()(dr_config* c) const { dr_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<dr_config, ConfigDeleter>;

struct EstimateDeleter {
  void operator()(dr_spread_estimate* e) const { dr_spread_estimate_destroy(e); }
};
using EstimatePtr = std::unique_ptr<dr_spread_estimate, EstimateDeleter>;

void check(dr_status s) {
  if (s == DR_OK) return;
  const bool usage = s == DR_ERR_PARSE || s == DR_ERR_IO;
  throw Failure{usage ? kExitUsage : kExitDomain, dr_status_name(s), dr_last_error()};
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  dr_string_free(s);
  return out;
}

struct Options {
  std::string command;
  std::string input;
  std::string target;
  std::string format;
  std::string out;
  std::string kind;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::size_t samples = 100000;
  std::size_t restarts = 64;
  std::size_t oracle_samples = 0;
  std::size_t ambient_dim = 0;
  unsigned threads = 0;
  std::optional<double> radius;
  std::optional<double> shell;
  std::optional<double> alpha;
  double side = 1.0;
  std::size_t dim = 2;
  double delta = 0.01;
};

dr_format resolve_format(const Options& o, const std::string& path) {
  if (o.format == "csv") return DR_FORMAT_CSV;
  if (o.format == "json") return DR_FORMAT_JSON;
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return DR_FORMAT_CSV;
  return DR_FORMAT_JSON;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "IoError", "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConfigPtr load_config(const Options& o, const std::string& path, const char* flag) {
  if (path.empty()) throw Failure{kExitUsage, "Usage", std::string(flag) + " is required"};
  const std::string text = read_source(path);
  dr_config* c = nullptr;
  check(dr_config_parse(text.c_str(), resolve_format(o, path), &c));
  return ConfigPtr(c);
}

json config_json(const dr_config* c) {
  char* s = nullptr;
  check(dr_config_to_json(c, &s));
  return json::parse(take_string(s));
}

double require_value(const std::optional<double>& v, const char* flag) {
  if (!v) throw Failure{kExitUsage, "Usage", std::string(flag) + " is required"};
  return *v;
}

double tol_or_default(const Options& o) { return o.tol.value_or(1e-9); }

// Each handler fills `inputs` (echo) and `outputs`; `artifact` is what --out
// writes when it differs from the full report.
struct Result {
  json inputs = json::object();
  json outputs = json::object();
  std::optional<std::string> artifact;
  std::string summary;
};

Result run_diameter(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  double d = 0.0;
  check(dr_diameter(c.get(), &d));
  size_t m = 0;
  check(dr_affine_dimension(c.get(), tol_or_default(o), &m));
  const size_t n = dr_config_size(c.get());
  std::vector<double> dm(n * n);
  check(dr_distance_matrix(c.get(), dm.data()));
  json rows = json::array();
  for (size_t i = 0; i < n; ++i) rows.push_back(std::vector<double>(dm.begin() + i * n, dm.begin() + (i + 1) * n));
  r.outputs = {{"diameter", d}, {"affine_dimension", m}, {"distance_matrix", rows}};
  r.summary = "diameter = " + std::to_string(d);
  return r;
}

Result run_meb(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  std::vector<double> center(dr_config_dim(c.get()));
  double radius = 0.0;
  check(dr_min_enclosing_ball(c.get(), o.seed, center.data(), &radius));
  r.outputs = {{"center", center}, {"radius", radius}};
  r.summary = "minimum enclosing ball radius = " + std::to_string(radius);
  return r;
}

Result run_circumsphere(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  r.inputs["tol"] = tol_or_default(o);
  std::vector<double> center(dr_config_dim(c.get()));
  double radius = 0.0, residual = 0.0;
  size_t hull = 0;
  check(dr_circumsphere(c.get(), tol_or_default(o), center.data(), &radius, &residual, &hull));
  r.outputs = {{"center", center}, {"radius", radius}, {"residual", residual},
               {"hull_dimension", hull}};
  r.summary = "circumradius = " + std::to_string(radius);
  return r;
}

Result run_jung(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  double bound = 0.0, diam = 0.0, meb = 0.0;
  size_t m = 0;
  check(dr_jung_bound(c.get(), &bound));
  check(dr_diameter(c.get(), &diam));
  check(dr_affine_dimension(c.get(), 1e-9, &m));
  check(dr_min_enclosing_ball(c.get(), o.seed, nullptr, &meb));
  r.outputs = {{"jung_bound", bound}, {"affine_dimension", m}, {"diameter", diam},
               {"meb_radius", meb}, {"holds", meb <= bound + 1e-9}};
  r.summary = "Jung bound = " + std::to_string(bound) + ", MEB radius = " + std::to_string(meb);
  return r;
}

json verdict_json(const dr_verdict& v) {
  return {{"status", v.not_diameter_ramsey ? "NotDiameterRamsey" : "Unknown"},
          {"circumradius", v.circumradius},
          {"diameter", v.diameter},
          {"threshold", v.threshold},
          {"margin", v.margin}};
}

Result run_obstruct(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  r.inputs["tol"] = tol_or_default(o);
  dr_verdict v{};
  check(dr_obstruction_verdict(c.get(), tol_or_default(o), &v));
  r.outputs = verdict_json(v);
  r.summary = std::string(v.not_diameter_ramsey ? "NotDiameterRamsey" : "Unknown") +
              " (margin " + std::to_string(v.margin) + ")";
  return r;
}

Result run_triangle(const Options& o) {
  const double alpha = require_value(o.alpha, "--alpha");
  Result r;
  r.inputs = {{"alpha_deg", alpha}, {"side", o.side}};
  double circ = 0.0;
  check(dr_triangle_circumradius(o.side, alpha, &circ));
  dr_verdict v{};
  check(dr_classify_triangle(alpha, o.side, &v));
  r.outputs = verdict_json(v);
  r.outputs["triangle_circumradius"] = circ;
  r.summary = std::string(v.not_diameter_ramsey ? "NotDiameterRamsey" : "Unknown") +
              " (circumradius " + std::to_string(circ) + ")";
  return r;
}

Result run_conjecture(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  Result r;
  r.inputs["configuration"] = config_json(c.get());
  r.inputs["tol"] = tol_or_default(o);
  int in_hull = 0;
  check(dr_conjecture_classification(c.get(), tol_or_default(o), &in_hull));
  const char* label = in_hull ? "ConjecturedDiameterRamsey" : "ConjecturedNotDiameterRamsey";
  r.outputs = {{"label", label}, {"circumcenter_in_hull", in_hull == 1}, {"conjectural", true}};
  r.summary = std::string(label) + " (conjecture, not a theorem)";
  return r;
}

Result run_estimate_c(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  const double radius = require_value(o.radius, "--radius");
  dr_spread_options opts;
  dr_spread_options_default(&opts);
  opts.restarts = o.restarts;
  opts.seed = o.seed;
  opts.oracle_samples = o.oracle_samples;
  opts.ambient_dim = o.ambient_dim;
  opts.threads = o.threads;
  if (o.tol) opts.tolerance = *o.tol;

  Result r;
  r.inputs = {{"configuration", config_json(c.get())}, {"radius", radius}};
  dr_spread_estimate* raw = nullptr;
  check(dr_estimate_c(c.get(), radius, &opts, &raw));
  EstimatePtr est(raw);
  char* s = nullptr;
  check(dr_spread_estimate_to_json(est.get(), &s));
  r.outputs = json::parse(take_string(s));
  if (!dr_spread_estimate_feasible(est.get())) {
    throw Failure{kExitDomain, "Infeasible",
                  "no congruent copy fits in the ball of radius " + std::to_string(radius)};
  }
  r.summary = "c estimate (upper bound) = " + std::to_string(dr_spread_estimate_value(est.get()));
  return r;
}

Result run_oracle(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  const double radius = require_value(o.radius, "--radius");
  Result r;
  r.inputs = {{"configuration", config_json(c.get())}, {"radius", radius},
              {"samples", o.samples}, {"ambient_dim", o.ambient_dim}};
  double v = 0.0;
  check(dr_sample_spread_oracle(c.get(), radius, o.ambient_dim, o.samples, o.seed, &v));
  r.outputs = {{"min_spread", v}, {"samples", o.samples}};
  r.summary = "sampled minimum spread = " + std::to_string(v);
  return r;
}

Result run_color(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  const double shell = require_value(o.shell, "--shell");
  Result r;
  r.inputs = {{"configuration", config_json(c.get())}, {"shell", shell}};
  std::vector<int64_t> colors(dr_config_size(c.get()));
  check(dr_color_configuration(c.get(), shell, colors.data()));
  r.outputs = {{"configuration", r.inputs["configuration"]}, {"colors", colors}};
  if (o.radius) {
    int64_t k = 0;
    check(dr_num_colors(*o.radius, shell, &k));
    r.inputs["radius"] = *o.radius;
    r.outputs["num_colors"] = k;
  }
  r.artifact = json{{"configuration", r.inputs["configuration"]}, {"colors", colors}}.dump(2);
  r.summary = "coloured " + std::to_string(colors.size()) + " points";
  return r;
}

Result run_falsify(const Options& o) {
  auto c = load_config(o, o.input, "--input");
  const double radius = require_value(o.radius, "--radius");
  const double shell = require_value(o.shell, "--shell");
  Result r;
  r.inputs = {{"configuration", config_json(c.get())}, {"radius", radius}, {"shell", shell},
              {"samples", o.samples}, {"ambient_dim", o.ambient_dim}};
  dr_falsify_report rep{};
  check(dr_falsify_coloring(c.get(), radius, shell, o.samples, o.seed, o.ambient_dim, &rep));
  r.outputs = {{"samples", rep.samples},
               {"monochromatic", rep.monochromatic},
               {"num_colors", rep.num_colors},
               {"ambient_dim", rep.ambient_dim},
               {"vacuous", rep.vacuous == 1},
               {"min_spread", rep.vacuous ? json(nullptr) : json(rep.min_spread)},
               {"min_color_span", rep.vacuous ? json(nullptr) : json(rep.min_color_span)},
               {"first_violation",
                rep.first_violation < 0 ? json(nullptr) : json(rep.first_violation)}};
  r.summary = std::to_string(rep.monochromatic) + " monochromatic copies in " +
              std::to_string(rep.samples) + " samples";
  return r;
}

Result run_find_copy(const Options& o) {
  if (o.input.empty()) throw Failure{kExitUsage, "Usage", "--input is required"};
  const std::string text = read_source(o.input);
  dr_config* braw = nullptr;
  int64_t* colors = nullptr;
  size_t n_colors = 0;
  check(dr_colored_config_parse(text.c_str(), &braw, &colors, &n_colors));
  ConfigPtr b(braw);
  std::vector<int64_t> cols(colors, colors + n_colors);
  dr_colors_free(colors);
  auto a = load_config(o, o.target, "--target");

  Result r;
  r.inputs = {{"colored_configuration", {{"configuration", config_json(b.get())}, {"colors", cols}}},
              {"target", config_json(a.get())}};
  if (o.tol) r.inputs["tol"] = *o.tol;
  std::vector<size_t> idx(dr_config_size(a.get()));
  int found = 0;
  check(dr_find_monochromatic_copy(b.get(), cols.data(), a.get(), o.tol.value_or(0.0), idx.data(),
                                   &found));
  r.outputs = {{"found", found == 1}, {"indices", found ? json(idx) : json(nullptr)}};
  r.summary = found ? "monochromatic copy found" : "no monochromatic copy";
  return r;
}

Result run_construct(const Options& o) {
  dr_config* raw = nullptr;
  Result r;
  if (o.kind == "regular") {
    r.inputs = {{"kind", o.kind}, {"dim", o.dim}};
    check(dr_regular_simplex(o.dim, &raw));
  } else if (o.kind == "cor3") {
    r.inputs = {{"kind", o.kind}, {"dim", o.dim}, {"delta", o.delta}};
    check(dr_cor3_simplex(o.dim, o.delta, &raw));
  } else {
    const double alpha = require_value(o.alpha, "--alpha");
    r.inputs = {{"kind", o.kind}, {"alpha_deg", alpha}, {"side", o.side}};
    check(dr_obtuse_triangle(alpha, o.side, &raw));
  }
  ConfigPtr c(raw);
  r.outputs["configuration"] = config_json(c.get());
  double circ = 0.0, diam = 0.0, measure = 0.0;
  check(dr_circumradius(c.get(), &circ));
  check(dr_diameter(c.get(), &diam));
  r.outputs["circumradius"] = circ;
  r.outputs["diameter"] = diam;
  if (dr_almost_regular_measure(c.get(), &measure) == DR_OK) {
    r.outputs["almost_regular_measure"] = measure;
  }
  if (o.format == "csv") {
    char* s = nullptr;
    check(dr_config_to_csv(c.get(), &s));
    r.artifact = take_string(s);
  } else {
    r.artifact = r.outputs["configuration"].dump(2) + "\n";
  }
  r.summary = o.kind + " construction with " + std::to_string(dr_config_size(c.get())) +
              " points, circumradius " + std::to_string(circ);
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "IoError", "cannot write '" + path + "'"};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameter-Ramsey obstruction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--input", o.input, "Input configuration (JSON or CSV, '-' for stdin)");
  app.add_option("--format", o.format, "Input/construct output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for every random choice");
  app.add_option("--tol", o.tol, "Numeric tolerance");
  app.add_option("--samples", o.samples, "Sample count for oracle/falsify");
  app.add_option("--restarts", o.restarts, "Optimizer restarts for estimate-c");
  app.add_option("--radius", o.radius, "Ball radius r");
  app.add_option("--shell", o.shell, "Shell width c");
  app.add_option("--out", o.out, "Write the result to this path");
  app.add_option("--target", o.target, "Target configuration for find-copy");
  app.add_option("--alpha", o.alpha, "Angle in degrees");
  app.add_option("--side", o.side, "Side length");
  app.add_option("--dim", o.dim, "Dimension for construct");
  app.add_option("--delta", o.delta, "Perturbation for construct cor3");
  app.add_option("--ambient-dim", o.ambient_dim, "Ambient dimension D (0: affine dim + 1)");
  app.add_option("--oracle-samples", o.oracle_samples, "Cross-check estimate-c with the sampler");
  app.add_option("--threads", o.threads, "Worker threads (0: all cores)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"diameter", "Diameter, distance matrix and affine dimension"},
      {"meb", "Minimum enclosing ball"},
      {"circumsphere", "Circumsphere within the affine hull"},
      {"jung", "Jung bound versus the minimum enclosing ball"},
      {"obstruct", "Circumradius obstruction verdict"},
      {"triangle", "Triangle circumradius and angle classification"},
      {"conjecture", "Circumcentre-in-hull conjecture label"},
      {"estimate-c", "Estimate the minimal spread constant c(A, r)"},
      {"oracle", "Sampling oracle for the minimal spread"},
      {"color", "Shell colouring of a configuration"},
      {"falsify", "Search for monochromatic copies under the shell colouring"},
      {"find-copy", "Exhaustive monochromatic congruent copy search"},
      {"construct", "Generate regular, cor3 or obtuse configurations"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&o, name = name] { o.command = name; });
    if (name == "construct") {
      sub->add_option("kind", o.kind, "regular | cor3 | obtuse")
          ->required()
          ->check(CLI::IsMember({"regular", "cor3", "obtuse"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kExitOk;
    std::cerr << json{{"command", o.command},
                      {"error", "UsageError"},
                      {"exit_code", kExitUsage},
                      {"message", e.what()}}
                     .dump()
              << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Result res;
    if (o.command == "diameter") res = run_diameter(o);
    else if (o.command == "meb") res = run_meb(o);
    else if (o.command == "circumsphere") res = run_circumsphere(o);
    else if (o.command == "jung") res = run_jung(o);
    else if (o.command == "obstruct") res = run_obstruct(o);
    else if (o.command == "triangle") res = run_triangle(o);
    else if (o.command == "conjecture") res = run_conjecture(o);
    else if (o.command == "estimate-c") res = run_estimate_c(o);
    else if (o.command == "oracle") res = run_oracle(o);
    else if (o.command == "color") res = run_color(o);
    else if (o.command == "falsify") res = run_falsify(o);
    else if (o.command == "find-copy") res = run_find_copy(o);
    else res = run_construct(o);

    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json report{{"command", o.command},
                {"tool_version", dr_version()},
                {"seed", o.seed},
                {"inputs", res.inputs},
                {"outputs", res.outputs},
                {"summary", res.summary},
                {"timings", {{"elapsed_ms", elapsed}}}};
    std::cout << report.dump(2) << "\n";
    if (!o.out.empty()) write_file(o.out, res.artifact.value_or(report.dump(2) + "\n"));
    return kExitOk;
  } catch (const Failure& f) {
    json err{{"command", o.command}, {"error", f.error}, {"message", f.message},
             {"exit_code", f.exit_code}};
    std::cerr << err.dump() << "\n";
    std::cout << o.command << ": " << f.error << ": " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    json err{{"command", o.command}, {"error", "Internal"}, {"message", e.what()},
             {"exit_code", kExitDomain}};
    std::cerr << err.dump() << "\n";
    std::cout << o.command << ": Internal: " << e.what() << "\n";
    return kExitDomain;
  }
}
