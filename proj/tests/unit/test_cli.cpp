#include "doctest.h"

#include "cli.hpp"

#include "divlab/extended_real.hpp"
#include "divlab/report.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "divlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = divlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Workdir {
 public:
  Workdir() : path_(fs::temp_directory_path() / ("divlab_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path_);
    write("r.json", R"({"dim":2,"re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]})");
    write("s.json", R"({"dim":2,"re":[[0.75,0],[0,0.25]]})");
    write("plus.json", R"({"dim":2,"re":[[0.5,0.5],[0.5,0.5]]})");
    write("e0.json", R"({"dim":2,"re":[[1,0],[0,0]]})");
    write("e1.json", R"({"dim":2,"re":[[0,0],[0,1]]})");
    write("bad.json", R"({"dim":2,"re":[[1,2],[2,1]]})");
  }
  ~Workdir() { fs::remove_all(path_); }

  std::string operator[](const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  fs::path path_;
};

double result(const nlohmann::json& j, const std::string& label) {
  for (const auto& v : j.at("results")) {
    if (v.at("label") == label) return divlab::extended_from_json(v.at("value"));
  }
  FAIL("missing label " << label);
  return 0.0;
}

}  // namespace

TEST_CASE("compute") {
  const Workdir w;
  const Run r = run({"compute", "--f", "t_log_t", "--rho", w["r.json"], "--sigma", w["s.json"], "--method", "both"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("command") == "compute");
  CHECK(result(j, "spectral") == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-12));
  CHECK(std::abs(result(j, "variational") - 0.5 * std::log(4.0 / 3.0)) <= 1e-3);
  CHECK(result(j, "agreement_gap") <= 1e-3);

  const Run same = run({"compute", "--f", "neg_log", "--rho", w["s.json"], "--sigma", w["s.json"]});
  REQUIRE(same.code == 0);
  CHECK(std::abs(result(nlohmann::json::parse(same.out), "spectral")) < 1e-14);

  const Run plus = run({"compute", "--f", "t_log_t", "--rho", w["plus.json"], "--sigma", w["s.json"]});
  CHECK(result(nlohmann::json::parse(plus.out), "spectral") == doctest::Approx(0.836988).epsilon(1e-6));

  const Run inf = run({"compute", "--f", "power:1.5", "--rho", w["e0.json"], "--sigma", w["e1.json"], "--method",
                       "both", "--nmax", "1024"});
  REQUIRE(inf.code == 0);
  const auto ji = nlohmann::json::parse(inf.out);
  CHECK(ji.at("results").at(0).at("value") == "+inf");
  CHECK(divlab::is_plus_inf(result(ji, "variational")));
}

TEST_CASE("compute errors") {
  const Workdir w;
  CHECK(run({"compute", "--f", "nope", "--rho", w["r.json"], "--sigma", w["s.json"]}).code == 2);
  CHECK(run({"compute", "--f", "power:3", "--rho", w["r.json"], "--sigma", w["s.json"]}).code == 2);
  CHECK(run({"compute", "--f", "t_log_t", "--rho", w["missing.json"], "--sigma", w["s.json"]}).code == 2);
  const Run bad = run({"compute", "--f", "t_log_t", "--rho", w["bad.json"], "--sigma", w["s.json"]});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"compute", "--rho", w["r.json"]}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep") {
  const Workdir w;
  const Run r = run({"sweep", "--rho", w["r.json"], "--sigma", w["s.json"], "--steps", "9"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,Q,D");
  std::vector<double> d;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto last = line.rfind(',');
    d.push_back(divlab::parse_extended(line.substr(last + 1)));
  }
  REQUIRE(d.size() == 9);
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] >= d[i - 1] - 1e-12);

  const Run same = run({"sweep", "--rho", w["s.json"], "--sigma", w["s.json"], "--sandwiched"});
  REQUIRE(same.code == 0);
  std::istringstream in2(same.out);
  std::getline(in2, line);
  CHECK(line == "alpha,Q,D,D_sandwiched");
  while (std::getline(in2, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string alpha, q, dv;
    std::getline(fields, alpha, ',');
    std::getline(fields, q, ',');
    std::getline(fields, dv, ',');
    CHECK(std::abs(divlab::parse_extended(dv)) < 1e-12);
  }

  const std::string csv = w["sweep.csv"];
  const Run to_file = run({"sweep", "--rho", w["r.json"], "--sigma", w["s.json"], "--out", csv});
  REQUIRE(to_file.code == 0);
  CHECK(nlohmann::json::parse(to_file.out).at("command") == "sweep");
  CHECK(fs::exists(csv));
}

TEST_CASE("verify and report") {
  const Workdir w;
  const std::string path = w["verify.json"];
  const Run a = run({"verify", "--suite", "dpi", "--seed", "7", "--trials", "10", "--out", path});
  const Run b = run({"verify", "--suite", "dpi", "--seed", "7", "--trials", "10"});
  REQUIRE(a.code == 0);
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(ja.at("seed") == 7);
  CHECK(ja.at("suite_outcomes") == jb.at("suite_outcomes"));

  const Run rep = run({"report", path});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("verify") != std::string::npos);
  CHECK(rep.out.find("all properties passed") != std::string::npos);
  const Run rep_json = run({"report", path, "--json"});
  CHECK(nlohmann::json::parse(rep_json.out).at("suite_outcomes") == ja.at("suite_outcomes"));

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"report", w["missing.json"]}).code == 2);
  CHECK(run({"report", w["bad.json"]}).code == 2);
}

TEST_CASE("binary honours DIVLAB_SEED") {
  const Workdir w;
  const std::string out = w["seeded.json"];
  const std::string cmd = std::string("DIVLAB_SEED=123 ") + DIVLAB_BINARY +
                          " verify --suite transpose --trials 5 --dim 2 > " + out;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("seed") == 123);

  const std::string bad = std::string(DIVLAB_BINARY) + " compute --f nope --rho x --sigma y 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
