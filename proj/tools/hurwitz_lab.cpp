// hurwitz-lab: command-line front end for the hurwitz_lab library.
//
// Exit codes: 0 success, 1 verification failure (or internal error),
// 2 argument error, 3 size guard violation.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz_lab/hurwitz_lab.hpp"
#include "verify_suites.hpp"

namespace hl = hurwitz_lab;
using hl::cli::IntRange;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kArgError = 2, kGuardError = 3 };

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Effective settings: defaults, then the config file, then flags.
struct RunConfig {
  std::optional<int> max_degree;
  std::optional<int> max_genus;
  std::optional<int> max_steps;
  std::string output_format;
  std::string output_path;
  bool acknowledge_huge = false;
  json guard_overrides = json::object();

  hl::Guards guards() const {
    hl::Guards g;
    if (max_degree) g.max_dp_degree = g.max_cayley_degree = *max_degree;
    if (max_genus) g.max_genus = *max_genus;
    if (max_steps) g.max_brute_steps = g.max_orbit_steps = *max_steps;
    for (const auto& [key, value] : guard_overrides.items()) {
      int v = value.get<int>();
      if (key == "max_dp_degree") g.max_dp_degree = v;
      else if (key == "max_brute_degree") g.max_brute_degree = v;
      else if (key == "max_brute_steps") g.max_brute_steps = v;
      else if (key == "max_orbit_steps") g.max_orbit_steps = v;
      else if (key == "max_genus") g.max_genus = v;
      else if (key == "max_cayley_degree") g.max_cayley_degree = v;
      else throw ArgumentError("unknown guard '" + key + "'");
    }
    return g;
  }

  json to_json() const {
    const auto g = guards();
    return {{"output_format", output_format},
            {"guards",
             {{"max_dp_degree", g.max_dp_degree},
              {"max_brute_degree", g.max_brute_degree},
              {"max_brute_steps", g.max_brute_steps},
              {"max_orbit_steps", g.max_orbit_steps},
              {"max_genus", g.max_genus},
              {"max_cayley_degree", g.max_cayley_degree}}}};
  }
};

void load_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ArgumentError("config file " + path + ": " + e.what());
  }
  try {
    if (j.contains("max_degree")) config.max_degree = j["max_degree"].get<int>();
    if (j.contains("max_genus")) config.max_genus = j["max_genus"].get<int>();
    if (j.contains("max_steps")) config.max_steps = j["max_steps"].get<int>();
    if (j.contains("output_format")) config.output_format = j["output_format"].get<std::string>();
    if (j.contains("output_path")) config.output_path = j["output_path"].get<std::string>();
    if (j.contains("i_know_this_is_huge")) config.acknowledge_huge = j["i_know_this_is_huge"].get<bool>();
    if (j.contains("guards")) config.guard_overrides = j["guards"];
  } catch (const json::exception& e) {
    throw ArgumentError("config file " + path + ": " + e.what());
  }
}

IntRange parse_range(const std::string& text, const std::string& name) {
  try {
    auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    IntRange r{std::stoi(text.substr(0, dots), &used), 0};
    if (used != dots) throw std::invalid_argument(text);
    const std::string tail = text.substr(dots + 2);
    r.hi = std::stoi(tail, &used);
    if (used != tail.size() || r.hi < r.lo) throw std::invalid_argument(text);
    return r;
  } catch (const std::exception&) {
    throw ArgumentError("bad range for --" + name + ": '" + text + "'");
  }
}

/// Writes to stdout, or to `path` via a temporary file and rename.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ArgumentError("cannot write " + path);
    out << text;
    if (!out.flush()) throw ArgumentError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ArgumentError("cannot move output into place at " + path);
  }
}

std::string envelope(const std::string& command, const RunConfig& config, json data) {
  json doc = {{"meta", {{"version", hl::kVersion}, {"command", command}, {"config", config.to_json()}}},
              {"data", std::move(data)}};
  return doc.dump(2) + "\n";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (config.output_format == f) return;
  throw ArgumentError("format '" + config.output_format + "' is not available for this command");
}

// --- hurwitz ---------------------------------------------------------------

struct HurwitzArgs {
  int genus = 0;
  int degree = 0;
  std::string variant = "monotone";
  bool refine = false;
  std::string alpha;
  std::string beta;
};

int run_hurwitz(const HurwitzArgs& a, const RunConfig& config) {
  require_format(config, {"json", "csv"});
  if (a.variant != "monotone" && a.variant != "classical") throw ArgumentError("unknown variant " + a.variant);
  const auto variant = a.variant == "monotone" ? hl::HurwitzVariant::monotone : hl::HurwitzVariant::classical;
  const auto guards = config.guards();

  hl::CountTable table;
  if (!a.alpha.empty() || !a.beta.empty()) {
    if (a.alpha.empty() || a.beta.empty()) throw ArgumentError("--alpha and --beta go together");
    auto alpha = hl::parse_cycle_type(a.alpha);
    auto beta = hl::parse_cycle_type(a.beta);
    if (alpha.degree() != a.degree || beta.degree() != a.degree)
      throw ArgumentError("--alpha/--beta must be partitions of --degree");
    table = hl::double_hurwitz({a.genus, alpha, beta, variant, a.refine}, guards);
  } else {
    if (a.degree < 1) throw ArgumentError("--degree must be positive");
    table = hl::hurwitz_table(a.genus, a.degree, variant, a.refine, guards);
  }

  if (config.output_format == "csv") {
    std::string out = a.refine ? "genus,variant,alpha,beta,colours,count\n" : "genus,variant,alpha,beta,count\n";
    for (const auto& [key, count] : table.cells()) {
      out += std::to_string(a.genus) + "," + a.variant + "," + csv_quote(key.alpha.str()) + "," +
             csv_quote(key.beta.str()) + ",";
      if (a.refine) out += std::to_string(key.colours) + ",";
      out += hl::to_decimal(count) + "\n";
    }
    emit(out, config.output_path);
    return kOk;
  }
  json cells = json::array();
  for (const auto& [key, count] : table.cells()) {
    json cell = {{"alpha", key.alpha.str()}, {"beta", key.beta.str()}, {"count", hl::to_decimal(count)}};
    if (a.refine) cell["colours"] = key.colours;
    cells.push_back(cell);
  }
  json data = {{"genus", a.genus},     {"degree", a.degree},
               {"variant", a.variant}, {"colour_refined", a.refine},
               {"cells", cells},       {"total", hl::to_decimal(table.total())}};
  emit(envelope("hurwitz", config, data), config.output_path);
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string genus = "0..2";
  std::string degree = "1..5";
  std::string steps = "0..5";
  bool exhaustive = false;
  std::int64_t samples = 10000;
  std::uint64_t seed = 20140101;
};

int run_verify(const VerifyArgs& a, const RunConfig& config) {
  require_format(config, {"json", "csv"});
  const auto guards = config.guards();
  const IntRange genus = parse_range(a.genus, "genus");
  const IntRange degree = parse_range(a.degree, "degree");
  const IntRange steps = parse_range(a.steps, "steps");
  if (degree.lo < 1 && a.suite != "coxeter") throw ArgumentError("degrees start at 1");
  if (genus.lo < 0 || steps.lo < 0) throw ArgumentError("ranges must be non-negative");

  hl::cli::VerifyReport report;
  if (a.suite == "inequalities") {
    report = hl::cli::verify_inequalities(genus, degree, guards);
  } else if (a.suite == "closedforms") {
    report = hl::cli::verify_closed_forms(degree, guards);
  } else if (a.suite == "coxeter") {
    report = hl::cli::verify_coxeter(degree, steps, a.exhaustive, a.samples, a.seed, guards);
  } else if (a.suite == "roundtrip") {
    report = hl::cli::verify_roundtrip(genus, degree, guards);
  } else if (a.suite == "oracle") {
    report = hl::cli::verify_oracle(degree, steps, guards);
  } else {
    throw ArgumentError("unknown suite " + a.suite);
  }

  if (config.output_format == "csv") {
    std::string out = "suite,check,status,detail\n";
    out += report.suite + ",all," + (report.passed() ? "pass" : "fail") + "," +
           std::to_string(report.checks) + " checks\n";
    for (const auto& f : report.failures)
      out += report.suite + "," + f["check"].get<std::string>() + ",fail," +
             csv_quote(f["detail"].get<std::string>()) + "\n";
    emit(out, config.output_path);
  } else {
    json data = {{"suite", report.suite},
                 {"passed", report.passed()},
                 {"checks", report.checks},
                 {"failure_count", report.failure_count},
                 {"failures", report.failures},
                 {"rows", report.rows}};
    emit(envelope("verify", config, data), config.output_path);
  }
  if (!report.passed()) {
    std::cerr << "verify " << report.suite << ": " << report.failure_count << " of " << report.checks
              << " checks failed\n";
    return kVerifyFailed;
  }
  return kOk;
}

// --- series ----------------------------------------------------------------

struct SeriesArgs {
  std::string kind;
  int genus = 0;
  int dmax = 5;
  int kmax = 50;
  int window = 4;
};

int run_series(const SeriesArgs& a, const RunConfig& config) {
  require_format(config, {"json", "csv"});
  const auto guards = config.guards();
  hl::CoefficientSeries s;
  if (a.kind == "fg")
    s = hl::fg_coefficients(a.genus, a.dmax, guards);
  else if (a.kind == "sg")
    s = hl::sg_coefficients(a.genus, a.dmax, guards);
  else if (a.kind == "hypergeom")
    s = hl::hypergeometric_coefficients(a.kmax);
  else
    throw ArgumentError("unknown series " + a.kind);

  std::optional<hl::RadiusDiagnostics> diag;
  std::string diag_note;
  try {
    diag = hl::radius_diagnostics(s, a.window);
  } catch (const std::invalid_argument& e) {
    diag_note = e.what();
  }

  if (config.output_format == "csv") {
    std::map<int, std::string> ratio, root;
    if (diag) {
      for (const auto& r : diag->ratios) ratio[r.index] = hl::to_fraction(r.ratio);
      for (const auto& r : diag->root_estimates) {
        std::ostringstream os;
        os.precision(17);
        os << r.estimate;
        root[r.index] = os.str();
      }
    }
    std::string out = "index,term,ratio,root_estimate\n";
    for (int i = s.first_index; i <= s.last_index(); ++i)
      out += std::to_string(i) + "," + hl::to_fraction(s.term(i)) + "," + ratio[i] + "," + root[i] + "\n";
    emit(out, config.output_path);
    return kOk;
  }

  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(hl::to_fraction(t));
  json data = {{"label", s.label}, {"first_index", s.first_index}, {"terms", terms}};
  if (diag) {
    json ratios = json::array(), roots = json::array();
    for (const auto& r : diag->ratios)
      ratios.push_back({{"index", r.index}, {"ratio", hl::to_fraction(r.ratio)}, {"approx", hl::to_double(r.ratio)}});
    for (const auto& r : diag->root_estimates) roots.push_back({{"index", r.index}, {"estimate", r.estimate}});
    data["diagnostics"] = {{"heuristic", true},
                           {"ratios", ratios},
                           {"root_estimates", roots},
                           {"window_extrapolation",
                            diag->window_extrapolation ? json(*diag->window_extrapolation) : json(nullptr)}};
  } else {
    data["diagnostics"] = {{"heuristic", true}, {"unavailable", diag_note}};
  }
  emit(envelope("series", config, data), config.output_path);
  return kOk;
}

// --- weingarten ------------------------------------------------------------

struct WeingartenArgs {
  int degree = 0;
  std::string type;
  std::optional<int> N;
  int rmax = 40;
};

int run_weingarten(const WeingartenArgs& a, const RunConfig& config) {
  require_format(config, {"json", "csv"});
  if (a.rmax < 0) throw ArgumentError("--rmax must be non-negative");
  const auto type = hl::parse_cycle_type(a.type);
  if (type.degree() != a.degree) throw ArgumentError("--type must be a partition of --degree");
  if (a.N && *a.N < a.degree) throw ArgumentError("N must be at least the degree");
  const auto e = hl::expansion(a.degree, type, a.rmax, config.guards());

  std::optional<hl::WeingartenEvaluation> ev;
  if (a.N) ev = hl::evaluate(e, *a.N, a.rmax);

  if (config.output_format == "csv") {
    std::string out = a.N ? "r,coefficient,partial_sum\n" : "r,coefficient\n";
    for (int r = 0; r <= e.r_max(); ++r) {
      out += std::to_string(r) + "," + hl::to_decimal(e.coefficients[r]);
      if (a.N) out += "," + hl::to_fraction(hl::evaluate(e, *a.N, r).partial_sum);
      out += "\n";
    }
    emit(out, config.output_path);
    return kOk;
  }
  json coeffs = json::array();
  for (const auto& c : e.coefficients) coeffs.push_back(hl::to_decimal(c));
  json data = {{"degree", a.degree}, {"type", type.str()}, {"r_max", a.rmax}, {"coefficients", coeffs}};
  if (ev) {
    data["evaluation"] = {
        {"N", ev->N},
        {"partial_sum", hl::to_fraction(ev->partial_sum)},
        {"approx", hl::to_double(ev->partial_sum)},
        {"tail", {{"heuristic", true},
                  {"observed_ratio", ev->observed_ratio ? json(*ev->observed_ratio) : json(nullptr)},
                  {"estimate", ev->tail_estimate ? json(*ev->tail_estimate) : json(nullptr)}}}};
  }
  emit(envelope("weingarten", config, data), config.output_path);
  return kOk;
}

// --- cayley ----------------------------------------------------------------

int run_cayley(int degree, const RunConfig& config) {
  require_format(config, {"dot", "json", "csv"});
  const std::string dot = hl::cayley_dot_export(degree, config.guards());
  if (config.output_format == "dot") {
    emit(dot, config.output_path);
    return kOk;
  }
  json vertices = json::array(), edges = json::array();
  std::string csv = "from,to,colour\n";
  for (const auto& p : hl::all_permutations(degree)) {
    vertices.push_back(p.one_line());
    for (auto tau : hl::all_transpositions(degree)) {
      auto q = p * tau;
      if (!(p < q)) continue;
      edges.push_back({{"from", p.one_line()}, {"to", q.one_line()}, {"colour", tau.colour()}});
      csv += p.one_line() + "," + q.one_line() + "," + std::to_string(tau.colour()) + "\n";
    }
  }
  if (config.output_format == "csv")
    emit(csv, config.output_path);
  else
    emit(envelope("cayley", config, {{"degree", degree}, {"vertices", vertices}, {"edges", edges}}),
         config.output_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of monotone and classical Hurwitz numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format;
  std::string out_path;
  std::optional<int> max_degree, max_genus, max_steps;
  bool huge = false;
  app.add_option("--config", config_path, "JSON config file (default: $HURWITZ_LAB_CONFIG)");
  app.add_option("--format", format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--out", out_path, "Output file (written atomically); stdout if omitted");
  app.add_option("--max-degree", max_degree, "Raise the DP and Cayley degree guard");
  app.add_option("--max-genus", max_genus, "Raise the genus guard");
  app.add_option("--max-steps", max_steps, "Raise the brute-force and orbit length guard");
  app.add_flag("--i-know-this-is-huge", huge, "Acknowledge raised guards");

  HurwitzArgs hurwitz_args;
  auto* hurwitz = app.add_subcommand("hurwitz", "Double Hurwitz number table");
  hurwitz->add_option("--genus", hurwitz_args.genus)->required()->check(CLI::NonNegativeNumber);
  hurwitz->add_option("--degree", hurwitz_args.degree)->required()->check(CLI::PositiveNumber);
  hurwitz->add_option("--variant", hurwitz_args.variant)->check(CLI::IsMember({"monotone", "classical"}));
  hurwitz->add_flag("--refine", hurwitz_args.refine, "Split counts by number of distinct colours");
  hurwitz->add_option("--alpha", hurwitz_args.alpha, "Single start type, e.g. 1^3");
  hurwitz->add_option("--beta", hurwitz_args.beta, "Single end type, e.g. 3");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
  verify->add_option("suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember({"inequalities", "closedforms", "coxeter", "roundtrip", "oracle"}));
  verify->add_option("--genus", verify_args.genus, "Genus or range a..b");
  verify->add_option("--degree", verify_args.degree, "Degree or range a..b");
  verify->add_option("--steps", verify_args.steps, "Walk length or range a..b");
  verify->add_flag("--exhaustive", verify_args.exhaustive, "Coxeter: every walk instead of samples");
  verify->add_option("--samples", verify_args.samples, "Coxeter: random walks to test");
  verify->add_option("--seed", verify_args.seed, "Coxeter: random seed");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Exact coefficient series and radius diagnostics");
  series->add_option("kind", series_args.kind)->required()->check(CLI::IsMember({"fg", "sg", "hypergeom"}));
  series->add_option("--genus", series_args.genus)->check(CLI::NonNegativeNumber);
  series->add_option("--dmax", series_args.dmax)->check(CLI::PositiveNumber);
  series->add_option("--kmax", series_args.kmax)->check(CLI::NonNegativeNumber);
  series->add_option("--window", series_args.window, "Ratios used by the extrapolation")->check(CLI::PositiveNumber);

  WeingartenArgs wg_args;
  auto* weingarten = app.add_subcommand("weingarten", "1/N expansion coefficients and partial sums");
  weingarten->add_option("--degree", wg_args.degree)->required()->check(CLI::PositiveNumber);
  weingarten->add_option("--type", wg_args.type, "Cycle type of rho^-1 sigma")->required();
  weingarten->add_option("--N", wg_args.N, "Evaluate at this N (N >= degree)");
  weingarten->add_option("--rmax", wg_args.rmax)->check(CLI::NonNegativeNumber);

  int cayley_degree = 0;
  auto* cayley = app.add_subcommand("cayley", "DOT export of the coloured Cayley graph");
  cayley->add_option("--degree", cayley_degree)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgError;
  }

  try {
    RunConfig config;
    if (config_path.empty())
      if (const char* env = std::getenv("HURWITZ_LAB_CONFIG")) config_path = env;
    if (!config_path.empty()) load_config_file(config_path, config);
    if (max_degree) config.max_degree = max_degree;
    if (max_genus) config.max_genus = max_genus;
    if (max_steps) config.max_steps = max_steps;
    if (huge) config.acknowledge_huge = true;
    if (!out_path.empty()) config.output_path = out_path;
    if (!format.empty()) config.output_format = format;
    if (config.output_format.empty()) config.output_format = cayley->parsed() ? "dot" : "json";
    if (config.guards().exceeds_defaults() && !config.acknowledge_huge)
      throw ArgumentError("raising a size guard requires --i-know-this-is-huge");

    if (hurwitz->parsed()) return run_hurwitz(hurwitz_args, config);
    if (verify->parsed()) return run_verify(verify_args, config);
    if (series->parsed()) return run_series(series_args, config);
    if (weingarten->parsed()) return run_weingarten(wg_args, config);
    if (cayley->parsed()) return run_cayley(cayley_degree, config);
  } catch (const hl::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardError;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kArgError;
}
