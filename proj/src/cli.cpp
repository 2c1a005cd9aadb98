#include "prismcurv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "prismcurv/contact_stream.hpp"
#include "prismcurv/curvature.hpp"
#include "prismcurv/errors.hpp"
#include "prismcurv/generators.hpp"
#include "prismcurv/prism.hpp"
#include "prismcurv/stats.hpp"
#include "prismcurv/verify.hpp"

namespace prismcurv {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string model;
  GeneratorConfig gen;
  std::optional<double> window;
  double window_start = 0;
  double bin_width = 5;
  int slice_gap = 3;
  std::string weight_fn = "reciprocal";
  double diagonal_factor = 0.5;
  std::optional<int> max_dim;
  bool consecutive_only = false;
  std::string out_dir;
  std::string figure = "all";
  std::size_t oracle_cap = 5000;
  double tolerance = SuiteOptions{}.weighted_tolerance;
};

void add_source_options(CLI::App& cmd, RunConfig& rc) {
  auto* input = cmd.add_option("--input", rc.input, "contact file (t i j per line)");
  auto* model = cmd.add_option("--model", rc.model, "synthetic model: er, ad or bursty");
  input->excludes(model);
  cmd.add_option("--n", rc.gen.n_nodes, "number of nodes")->capture_default_str();
  cmd.add_option("--T", rc.gen.horizon, "time horizon (steps for ad)")->capture_default_str();
  cmd.add_option("--lambda", rc.gen.rate, "ER per-pair contact rate")->capture_default_str();
  cmd.add_option("--a-min", rc.gen.a_min, "AD minimum activity")->capture_default_str();
  cmd.add_option("--a-max", rc.gen.a_max, "AD maximum activity")->capture_default_str();
  cmd.add_option("--alpha", rc.gen.alpha, "AD activity exponent")->capture_default_str();
  cmd.add_option("--m", rc.gen.links_per_activation, "AD links per activation")->capture_default_str();
  cmd.add_option("--shape", rc.gen.weibull_shape, "bursty Weibull shape")->capture_default_str();
  cmd.add_option("--scale", rc.gen.weibull_scale, "bursty Weibull scale")->capture_default_str();
  cmd.add_option("--seed", rc.gen.seed, "master seed")->capture_default_str();
}

void add_build_options(CLI::App& cmd, RunConfig& rc) {
  cmd.add_option("--window", rc.window, "keep contacts in [start, start + W)");
  cmd.add_option("--window-start", rc.window_start, "window start")->capture_default_str();
  cmd.add_option("--bin-width", rc.bin_width, "bin width ΔT")->capture_default_str();
  cmd.add_option("--slice-gap", rc.slice_gap, "maximum prism gap K")->capture_default_str();
  cmd.add_option("--weight-fn", rc.weight_fn, "unit, reciprocal or exp:LAMBDA")->capture_default_str();
  cmd.add_option("--diagonal-factor", rc.diagonal_factor, "diagonal edge attenuation")->capture_default_str();
  cmd.add_option("--max-dim", rc.max_dim, "cap on clique dimension");
  cmd.add_flag("--consecutive-only", rc.consecutive_only, "prism only adjacent active slices");
}

void add_out_option(CLI::App& cmd, RunConfig& rc) {
  cmd.add_option("--out", rc.out_dir, std::string("output directory (default $") + kOutDirEnv + ", else stdout)");
}

ContactSequence load_source(const RunConfig& rc) {
  if (rc.input.empty() == rc.model.empty()) throw UsageError("give exactly one of --input or --model");
  if (!rc.input.empty()) {
    if (!std::filesystem::is_regular_file(rc.input)) throw UsageError("cannot open input file '" + rc.input + "'");
    return read_contacts_file(rc.input);
  }
  return generate(parse_model(rc.model), rc.gen);
}

ContactSequence prepared(const RunConfig& rc) {
  auto seq = load_source(rc);
  if (rc.window) seq = window(seq, rc.window_start, rc.window_start + *rc.window);
  return bin(seq, rc.bin_width);
}

BuildOptions build_options(const RunConfig& rc) {
  BuildOptions opt;
  opt.slice_gap = rc.slice_gap;
  opt.weights.g = GapWeight::parse(rc.weight_fn);
  opt.weights.diagonal_factor = rc.diagonal_factor;
  opt.max_dim = rc.max_dim;
  opt.consecutive_only = rc.consecutive_only;
  return opt;
}

PrismComplex built(const RunConfig& rc) { return build_kst(prepared(rc), build_options(rc)); }

// Writes `payload` to DIR/name when an output directory is set, else to `out`.
void emit(const RunConfig& rc, const std::string& name, const std::string& payload, std::ostream& out) {
  if (rc.out_dir.empty()) {
    out << payload;
    return;
  }
  std::filesystem::create_directories(rc.out_dir);
  const auto path = std::filesystem::path(rc.out_dir) / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path.string() + "'");
  file << payload;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string complex_text(const PrismComplex& pc) {
  std::ostringstream s;
  const auto f = pc.complex.f_vector();
  s << "# f-vector:";
  for (auto c : f) s << ' ' << c;
  s << "\n# snapshots: " << pc.snapshots.size() << "  slice pairs: " << pc.stacks.size() << "\n";
  write_complex(s, pc.complex);
  return s.str();
}

nlohmann::json run_header(const RunConfig& rc, const PrismComplex& pc) {
  nlohmann::json j;
  j["source"] = rc.input.empty() ? rc.model : rc.input;
  if (!rc.model.empty()) j["seed"] = rc.gen.seed;
  j["bin_width"] = rc.bin_width;
  j["slice_gap"] = rc.slice_gap;
  j["weight_fn"] = pc.weights.g.to_string();
  j["diagonal_factor"] = pc.weights.diagonal_factor;
  j["f_vector"] = pc.complex.f_vector();
  return j;
}

std::string summary_text(const RunConfig& rc, const PrismComplex& pc, const std::vector<CurvatureRecord>& records) {
  auto j = run_header(rc, pc);
  j["stats"] = records.empty() ? nlohmann::json(nullptr) : table_stats(records).to_json();
  nlohmann::json h = nlohmann::json::array();
  for (const auto& row : h_factor_table(pc.weights.g, rc.slice_gap))
    h.push_back({{"dt", row.dt}, {"g", row.g}, {"h", row.h}});
  j["h_factor"] = h;
  return json_text(j);
}

std::string verify_text(const RunConfig& rc, const PrismComplex& pc, const VerificationReport& report) {
  auto j = run_header(rc, pc);
  j["report"] = report.to_json();
  return json_text(j);
}

void write_figures(const RunConfig& rc, const std::vector<CurvatureRecord>& records, std::ostream& out) {
  if (rc.figure == "all") {
    for (auto kind : {FigureKind::Scatter, FigureKind::Hist, FigureKind::ByClass, FigureKind::DtDep})
      emit(rc, figure_file_name(kind), figure_data(records, kind), out);
    return;
  }
  const auto kind = parse_figure_kind(rc.figure);
  emit(rc, figure_file_name(kind), figure_data(records, kind), out);
}

}  // namespace

std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      args.push_back("--" + line);
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    args.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
  }
  return args;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  // Config-file values go right after the subcommand so explicit flags,
  // which come later, win.
  std::vector<std::string> args, extra;
  try {
    for (std::size_t k = 0; k < raw_args.size(); ++k) {
      const auto& a = raw_args[k];
      std::vector<std::string> more;
      if (a == "--config" && k + 1 < raw_args.size())
        more = config_file_args(raw_args[++k]);
      else if (a.rfind("--config=", 0) == 0)
        more = config_file_args(a.substr(9));
      else
        args.push_back(a);
      extra.insert(extra.end(), more.begin(), more.end());
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.empty() || a[0] != '-'; });
  args.insert(sub == args.end() ? sub : sub + 1, extra.begin(), extra.end());

  RunConfig rc;
  CLI::App app{"prismcurv: Forman–Ricci curvature on spatiotemporal prism complexes"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", "key=value file of defaults (handled before parsing)");

  auto* generate_cmd = app.add_subcommand("generate", "emit a synthetic contact sequence");
  add_source_options(*generate_cmd, rc);
  add_out_option(*generate_cmd, rc);

  auto* build_cmd = app.add_subcommand("build", "build the prism complex and dump its simplices");
  auto* curvature_cmd = app.add_subcommand("curvature", "per-edge F and F_aug as CSV");
  auto* verify_cmd = app.add_subcommand("verify", "run the identity checks; JSON report");
  auto* stats_cmd = app.add_subcommand("stats", "summary statistics as JSON");
  auto* figdata_cmd = app.add_subcommand("figdata", "figure CSV payloads");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "generate, build, verify and write every output");
  for (auto* cmd : {build_cmd, curvature_cmd, verify_cmd, stats_cmd, figdata_cmd, pipeline_cmd}) {
    add_source_options(*cmd, rc);
    add_build_options(*cmd, rc);
    add_out_option(*cmd, rc);
  }
  for (auto* cmd : {verify_cmd, pipeline_cmd})
    cmd->add_option("--oracle-cap", rc.oracle_cap, "largest complex for the inclusion–exclusion oracle")
        ->capture_default_str();
  for (auto* cmd : {verify_cmd, pipeline_cmd})
    cmd->add_option("--tolerance", rc.tolerance, "absolute tolerance of the weighted checks")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  figdata_cmd->add_option("--figure", rc.figure, "scatter, hist, by_class, dt_dep or all")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }
  // A subcommand's own --help is raised inside parse too, so reaching here
  // means a real run.
  if (rc.out_dir.empty())
    if (const char* env = std::getenv(kOutDirEnv); env && *env) rc.out_dir = env;

  try {
    if (*generate_cmd) {
      if (rc.model.empty()) throw UsageError("generate needs --model");
      rc.gen.validate();
      emit(rc, "contacts.txt", serialize_contacts(load_source(rc)), out);
      return 0;
    }
    if (*build_cmd) {
      emit(rc, "complex.txt", complex_text(built(rc)), out);
      return 0;
    }
    if (*curvature_cmd) {
      emit(rc, "curvature.csv", curvature_csv(curvature_records(built(rc))), out);
      return 0;
    }
    if (*verify_cmd) {
      const auto pc = built(rc);
      SuiteOptions opt;
      opt.oracle_cap = rc.oracle_cap;
      opt.weighted_tolerance = rc.tolerance;
      const auto report = run_suite(pc, opt);
      emit(rc, "verify.json", verify_text(rc, pc, report), out);
      return exit_code_for(report);
    }
    if (*stats_cmd) {
      const auto pc = built(rc);
      emit(rc, "summary.json", summary_text(rc, pc, curvature_records(pc)), out);
      return 0;
    }
    if (*figdata_cmd) {
      write_figures(rc, curvature_records(built(rc)), out);
      return 0;
    }
    if (*pipeline_cmd) {
      if (rc.out_dir.empty()) throw UsageError("pipeline needs --out DIR (or $" + std::string(kOutDirEnv) + ")");
      auto source = load_source(rc);
      emit(rc, "contacts.txt", serialize_contacts(source), out);
      if (rc.window) source = window(source, rc.window_start, rc.window_start + *rc.window);
      const auto pc = build_kst(bin(source, rc.bin_width), build_options(rc));
      const auto records = curvature_records(pc);
      emit(rc, "curvature.csv", curvature_csv(records), out);
      SuiteOptions opt;
      opt.oracle_cap = rc.oracle_cap;
      opt.weighted_tolerance = rc.tolerance;
      const auto report = run_suite(pc, opt);
      emit(rc, "verify.json", verify_text(rc, pc, report), out);
      emit(rc, "summary.json", summary_text(rc, pc, records), out);
      rc.figure = "all";
      write_figures(rc, records, out);
      return exit_code_for(report);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace prismcurv
