#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "prismcurv/cli.hpp"

namespace fs = std::filesystem;
using prismcurv::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("prismcurv_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

const std::vector<std::string> kPipelineArgs{"pipeline", "--model", "er",   "--n",           "25", "--T",
                                             "50",       "--lambda", "0.01", "--bin-width", "5",  "--slice-gap",
                                             "3",        "--seed",   "7"};

}  // namespace

TEST_CASE("pipeline writes every output") {
  const auto dir = scratch("pipeline");
  auto args = kPipelineArgs;
  args.insert(args.end(), {"--out", dir.string()});
  const auto r = cli(args);
  CHECK(r.code == 0);
  for (const char* f : {"contacts.txt", "curvature.csv", "verify.json", "summary.json", "scatter.csv", "hist.csv",
                        "by_class.csv", "dt_dep.csv"})
    CHECK(fs::exists(dir / f));
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["stats"]["n_edges"].get<int>() > 0);
}

TEST_CASE("repeated runs are byte-identical") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const auto& model : {"er", "ad", "bursty"}) {
    auto args = kPipelineArgs;
    args[2] = model;
    auto args_a = args, args_b = args;
    args_a.insert(args_a.end(), {"--out", a.string()});
    args_b.insert(args_b.end(), {"--out", b.string()});
    REQUIRE(cli(args_a).code == 0);
    REQUIRE(cli(args_b).code == 0);
    for (const auto& entry : fs::directory_iterator(a)) {
      INFO(model << " " << entry.path().filename().string());
      CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
  }
  CHECK(cli({"curvature", "--model", "bursty", "--seed", "3"}).out ==
        cli({"curvature", "--model", "bursty", "--seed", "3"}).out);
}

TEST_CASE("stdout subcommands") {
  const auto gen = cli({"generate", "--model", "er", "--seed", "1"});
  CHECK(gen.code == 0);
  CHECK_FALSE(gen.out.empty());

  const auto in = scratch("input.txt");
  std::ofstream(in) << gen.out;
  const auto build = cli({"build", "--input", in.string(), "--bin-width", "5"});
  CHECK(build.code == 0);
  CHECK(build.out.rfind("# f-vector:", 0) == 0);

  // Same contacts from the file and from the generator.
  CHECK(cli({"curvature", "--input", in.string()}).out == cli({"curvature", "--model", "er", "--seed", "1"}).out);

  const auto fig = cli({"figdata", "--model", "er", "--figure", "dt_dep"});
  CHECK(fig.code == 0);
  CHECK(fig.out.rfind("edge_id,class,dt,diff\n", 0) == 0);

  const auto stats = cli({"stats", "--model", "ad"});
  CHECK(stats.code == 0);
  CHECK(nlohmann::json::parse(stats.out).contains("h_factor"));
}

TEST_CASE("window and binning") {
  const auto in = scratch("window.txt");
  std::ofstream(in) << "100 1 2\n400 1 2\n1240 2 3\n4000 1 3\n";
  const auto r = cli({"build", "--input", in.string(), "--window", "3600", "--bin-width", "300"});
  CHECK(r.code == 0);
  // Slices 0, 1 and 4; the 4000 s contact is outside the hour.
  CHECK(r.out.find("1:0") != std::string::npos);
  CHECK(r.out.find("2:4") != std::string::npos);
  CHECK(r.out.find("3:13") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"build", "--model", "er", "--bogus"}).code == 2);
  CHECK(cli({"build", "--input", "/nonexistent/contacts.txt"}).code == 2);
  CHECK(cli({"build"}).code == 2);
  CHECK(cli({"build", "--model", "er", "--slice-gap", "0"}).code == 2);
  CHECK(cli({"build", "--model", "er", "--weight-fn", "cubic"}).code == 2);
  CHECK(cli({"figdata", "--model", "er", "--figure", "pie"}).code == 2);
  CHECK(cli({"generate", "--model", "ad", "--m", "30"}).code == 2);
  const auto bad = scratch("bad.txt");
  std::ofstream(bad) << "0 1 2\n0 3 3\n";
  const auto r = cli({"build", "--input", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(cli({"verify", "--model", "er", "--seed", "7"}).code == 0);
  // With a zero tolerance rounding noise in the weighted checks counts as a
  // hard failure.
  CHECK(cli({"verify", "--model", "er", "--seed", "7", "--tolerance", "0"}).code == 1);
}

TEST_CASE("config file and output directory from the environment") {
  const auto cfg = scratch("run.cfg");
  std::ofstream(cfg) << "# defaults\nmodel = bursty\nseed=4\nslice-gap=2\n";
  const auto from_cfg = cli({"curvature", "--config", cfg.string()});
  CHECK(from_cfg.code == 0);
  CHECK(from_cfg.out == cli({"curvature", "--model", "bursty", "--seed", "4", "--slice-gap", "2"}).out);
  // Explicit flags override the file.
  CHECK(cli({"curvature", "--config", cfg.string(), "--seed", "5"}).out ==
        cli({"curvature", "--model", "bursty", "--seed", "5", "--slice-gap", "2"}).out);
  CHECK(cli({"curvature", "--config", "/nonexistent.cfg"}).code == 2);

  const auto dir = scratch("env_out");
  ::setenv(prismcurv::kOutDirEnv, dir.string().c_str(), 1);
  const auto r = cli({"stats", "--model", "er"});
  ::unsetenv(prismcurv::kOutDirEnv);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(dir / "summary.json"));
}
