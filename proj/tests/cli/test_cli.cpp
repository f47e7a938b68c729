#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarimeter/cli.hpp"
#include "polarimeter/io.hpp"

using namespace polarimeter;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "polarimeter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = fs::temp_directory_path() / ("polarimeter_cli_" + name);
  std::ofstream(path, std::ios::binary) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("index") {
  const auto a = temp_file("a.csv", "pi,y\n1,0\n1,1\n");
  const auto r = invoke({"index", "--dist", a, "--alpha", "1", "--alienation", "linear"});
  CHECK(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["P"] == 2.0);
  CHECK(j["seed"] == 0);
  CHECK(j["command"] == "index");

  const auto csv = invoke({"index", "--dist", a, "--spec", "alpha=1,linear", "--format", "csv"});
  CHECK(csv.out == "alpha,alienation,P\n1,linear,2\n");
}

TEST_CASE("index errors exit 2") {
  const auto bad = temp_file("bad.csv", "pi,y\n1.5,0\n1,1\n");
  const auto r = invoke({"index", "--dist", bad, "--alpha", "1"});
  CHECK(r.status == kExitError);
  CHECK(r.err.find("NonIntegralPopulation") != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(invoke({"index", "--dist", "/nonexistent.csv", "--alpha", "1"}).status == kExitError);
  CHECK(invoke({"index", "--alpha", "1"}).status == kExitError);
  CHECK(invoke({"index", "--dist", bad, "--alpha", "1", "--alienation", "cubic"}).status ==
        kExitError);
  CHECK(invoke({}).status == kExitError);
  CHECK(invoke({"frobnicate"}).status == kExitError);
  CHECK(invoke({"index", "--format", "xml"}).status == kExitError);
}

TEST_CASE("help exits 0") {
  CHECK(invoke({"--help"}).status == kExitOk);
  const auto r = invoke({"axioms", "--help"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("--strict") != std::string::npos);
}

TEST_CASE("compare and sweep") {
  const auto a = temp_file("c1.csv", "pi,y\n1,0\n1,2\n");
  const auto b = temp_file("c2.json", R"({"pi":[1,1],"y":[0,1]})");
  const auto r = invoke({"compare", "--dist", a, "--dist2", b, "--alpha", "1"});
  CHECK(r.status == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["result"]["ordering"] == "FirstHigher");

  const auto s = invoke({"sweep", "--dist", a, "--dist2", b, "--alpha-range", "0,1", "--grid",
                         "5", "--format", "csv"});
  CHECK(s.status == kExitOk);
  CHECK(s.out.rfind("alpha,p1,p2,ordering\n", 0) == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 6);
}

TEST_CASE("axioms strict") {
  const auto gini = invoke({"axioms", "--spec", "alpha=0,linear", "--strict", "--samples", "200"});
  CHECK(gini.status == kExitViolation);
  const auto j = nlohmann::json::parse(gini.out);
  bool axiom1_fail = false;
  for (const auto& r : j["reports"]) {
    if (r["axiom"] == "Axiom1" && r["mode"] == "Direct") axiom1_fail = r["verdict"] == "Fail";
  }
  CHECK(axiom1_fail);

  const auto lax = invoke({"axioms", "--spec", "alpha=0,linear", "--samples", "200"});
  CHECK(lax.status == kExitOk);
  const auto good = invoke({"axioms", "--alpha", "1", "--alienation", "linear", "--strict",
                            "--samples", "200", "--format", "csv"});
  CHECK(good.status == kExitOk);
  CHECK(good.out.find(",Fail,") == std::string::npos);
}

TEST_CASE("thresholds") {
  const auto r = invoke({"thresholds", "--bound", "2", "--tol", "0.01"});
  CHECK(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const double a = j["threshold"]["alpha_critical"];
  CHECK(a == doctest::Approx(1.6).epsilon(0.05 / 1.6));

  const auto csv = invoke({"thresholds", "--bound", "2", "--tol", "0.01", "--format", "csv"});
  CHECK(csv.out.rfind("alpha,m_alpha\n", 0) == 0);

  const auto sup = invoke({"thresholds", "--alpha", "1"});
  CHECK(nlohmann::json::parse(sup.out)["sup"]["m_alpha"] < 1.0);

  const auto feas = invoke({"thresholds", "--alienation", "power:2", "--tol", "0.01"});
  CHECK(nlohmann::json::parse(feas.out)["feasible_interval"][1] > 1.8);
  CHECK(invoke({"thresholds"}).status == kExitError);
}

TEST_CASE("experiments") {
  const auto r = invoke({"experiments", "--experiment", "middle"});
  CHECK(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["tables"].size() == 1);
  CHECK(j["tables"][0]["rows"][0]["crossovers"].size() == 1);
  CHECK(j["tables"][0]["rows"][1]["crossovers"].empty());

  const auto c = invoke({"experiments", "--experiment", "cluster", "--md", "0.2,0.01", "--format",
                         "csv"});
  CHECK(c.status == kExitOk);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 5);
  CHECK(invoke({"experiments", "--experiment", "other"}).status == kExitError);
}

TEST_CASE("output is byte-identical across runs and --out writes the same bytes") {
  const auto a = invoke({"axioms", "--spec", "alpha=1,power:0.5", "--seed", "5", "--samples", "300"});
  const auto b = invoke({"axioms", "--spec", "alpha=1,power:0.5", "--seed", "5", "--samples", "300"});
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 5);
  const auto path = (fs::temp_directory_path() / "polarimeter_cli_out.json").string();
  const auto c = invoke({"axioms", "--spec", "alpha=1,power:0.5", "--seed", "5", "--samples",
                         "300", "--out", path});
  CHECK(c.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
}

TEST_CASE("merge flag") {
  const auto dup = temp_file("dup.csv", "pi,y\n1,0\n1,1\n1,0\n");
  CHECK(invoke({"index", "--dist", dup, "--alpha", "1"}).status == kExitError);
  const auto r = invoke({"index", "--dist", dup, "--alpha", "1", "--merge-duplicates"});
  CHECK(r.status == kExitOk);
}

}  // TEST_SUITE
