#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polarimeter/error.hpp"
#include "polarimeter/io.hpp"
#include "polarimeter/report.hpp"

using namespace polarimeter;
namespace fs = std::filesystem;

namespace {

Distribution dist(std::vector<std::int64_t> pi, std::vector<double> y) {
  return Distribution::from_counts(pi, y);
}

const Error& caught(auto&& fn) {
  static thread_local std::optional<Error> last;
  try {
    fn();
  } catch (const Error& e) {
    last = e;
    return *last;
  }
  FAIL("expected an Error");
  last = Error(ErrorCode::InvalidArgument, "unreachable");
  return *last;
}

fs::path write_temp(const std::string& name, const std::string& body) {
  const auto path = fs::temp_directory_path() / ("polarimeter_io_" + name);
  std::ofstream(path, std::ios::binary) << body;
  return path;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("csv distribution") {
  CHECK(parse_distribution_text("pi,y\n2,0\n1,1\n1,1.2") == dist({2, 1, 1}, {0, 1, 1.2}));
  CHECK(parse_distribution_text("pi,y\r\n2,0\r\n1,1\r\n") == dist({2, 1}, {0, 1}));
  CHECK(parse_distribution_text(" pi , y \n 3 , -1.5 \n\n1,2\n") == dist({3, 1}, {-1.5, 2}));
}

TEST_CASE("csv errors carry line numbers") {
  const auto& a = caught([] { (void)parse_distribution_text("pi,y\n1.5,0\n1,1\n"); });
  CHECK(a.code() == ErrorCode::NonIntegralPopulation);
  CHECK(a.line() == 2u);
  const auto& b = caught([] { (void)parse_distribution_text("pi,y\n1,0\n1,abc\n"); });
  CHECK(b.code() == ErrorCode::ParseError);
  CHECK(b.line() == 3u);
  const auto& c = caught([] { (void)parse_distribution_text("pi,y\n1,0\n1,2,3\n"); });
  CHECK(c.code() == ErrorCode::ParseError);
  CHECK(c.line() == 3u);
  const auto& d = caught([] { (void)parse_distribution_text("a,b\n1,0\n"); });
  CHECK(d.code() == ErrorCode::ParseError);
  CHECK(d.line() == 1u);
  const auto& e = caught([] { (void)parse_distribution_text("pi,y\n1,0\n\n1,0\n"); });
  CHECK(e.code() == ErrorCode::DuplicateCharacteristic);
  CHECK(e.line() == 4u);
  CHECK(caught([] { (void)parse_distribution_text(""); }).code() == ErrorCode::ParseError);
}

TEST_CASE("merge flag combines equal positions") {
  ParseOptions merge{true};
  CHECK(parse_distribution_text("pi,y\n1,0\n2,1\n3,0\n", merge) == dist({4, 2}, {0, 1}));
}

TEST_CASE("json distribution") {
  CHECK(parse_distribution_text(R"({"pi":[1,1],"y":[0,1]})") == dist({1, 1}, {0, 1}));
  CHECK(caught([] { (void)parse_distribution_text(R"({"pi":[1,1]})"); }).code() ==
        ErrorCode::ParseError);
  CHECK(caught([] { (void)parse_distribution_text(R"({"pi":[1,"a"],"y":[0,1]})"); }).code() ==
        ErrorCode::ParseError);
  CHECK(caught([] { (void)parse_distribution_text(R"({"pi":[1,1],"y":[0,1])"); }).code() ==
        ErrorCode::ParseError);
  CHECK(caught([] { (void)parse_distribution_text(R"({"pi":[1,1],"y":[0,0]})"); }).code() ==
        ErrorCode::DuplicateCharacteristic);
}

TEST_CASE("files") {
  const auto path = write_temp("a.csv", "pi,y\n2,0\n1,1\n");
  CHECK(parse_distribution_file(path) == dist({2, 1}, {0, 1}));
  fs::remove(path);
  CHECK(caught([] { (void)parse_distribution_file("/nonexistent/polarimeter.csv"); }).code() ==
        ErrorCode::IoError);
}

TEST_CASE("csv round trip is exact") {
  const auto d = dist({3, 1, 7}, {0.1, -2.0 / 3.0, 1e-17});
  std::ostringstream os;
  write_distribution_csv(os, d);
  CHECK(parse_distribution_text(os.str()) == d);
}

TEST_CASE("alienation descriptors") {
  CHECK(parse_alienation_descriptor("linear") == Alienation::linear());
  CHECK(parse_alienation_descriptor("power:2") == Alienation::power(2));
  CHECK(parse_alienation_descriptor("exp:0.5") == Alienation::exponential(0.5));
  CHECK(parse_alienation_descriptor("poly:1,1") == Alienation::polynomial({1, 1}));
  for (const char* bad : {"", "cubic", "power:", "power:x", "power:2x", "poly:1,,2", "exp", "table:"}) {
    CHECK(caught([&] { (void)parse_alienation_descriptor(bad); }).code() == ErrorCode::GrammarError);
  }
  CHECK(caught([] { (void)parse_alienation_descriptor("power:-1"); }).code() ==
        ErrorCode::InvalidAlienation);
}

TEST_CASE("table descriptor") {
  const auto path = write_temp("table.csv", "d,f\n0,0\n1,2\n3,3\n");
  const auto f = parse_alienation_descriptor("table:" + path.string());
  CHECK(f == Alienation::tabulated({{0, 0}, {1, 2}, {3, 3}}));
  const auto rel = parse_alienation_descriptor("table:" + path.filename().string(),
                                               path.parent_path());
  CHECK(rel == f);
  fs::remove(path);
}

TEST_CASE("spec descriptor") {
  const auto s = parse_spec_descriptor("alpha=0,linear");
  CHECK(s.alpha() == 0.0);
  CHECK(s.alienation() == Alienation::linear());
  CHECK(parse_spec_descriptor("alpha=1.5,poly:1,2").alienation() == Alienation::polynomial({1, 2}));
  CHECK(caught([] { (void)parse_spec_descriptor("beta=1,linear"); }).code() ==
        ErrorCode::GrammarError);
  CHECK(caught([] { (void)parse_spec_descriptor("alpha=-1,linear"); }).code() ==
        ErrorCode::NegativeAlpha);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("number formatting keeps 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("json report shapes") {
  const auto j = to_json(dist({1, 2}, {0, 1}));
  CHECK(j.dump() == R"({"pi":[1,2],"y":[0.0,1.0]})");
  AxiomReport r;
  r.axiom = AxiomId::Axiom2;
  r.seed = 9;
  const auto rj = to_json(r);
  CHECK(rj["axiom"] == "Axiom2");
  CHECK(rj["seed"] == 9);
  CHECK(rj["min_margin"].is_null());
}

}  // TEST_SUITE
