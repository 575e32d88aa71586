#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "lcmres/errors.hpp"
#include "lcmres/io.hpp"

using namespace lcmres;
using namespace lcmres::test;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lcmres_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return path / name;
  }
};

}  // namespace

TEST_CASE("ideal documents") {
  const auto p = parse_ideal_document(R"({"n": 4, "gens": ["x1*x2", "x3*x4"]})");
  CHECK(p.ideal == ideal(4, {"x1*x2", "x3*x4"}));
  CHECK(p.input_minimal);
  CHECK(p.warnings.empty());
  const auto nm = parse_ideal_document(R"({"n": 2, "gens": ["x1", "x1*x2"]})");
  CHECK(nm.ideal == ideal(2, {"x1"}));
  CHECK_FALSE(nm.input_minimal);
  CHECK(nm.warnings.size() == 1);
  CHECK_THROWS_AS(parse_ideal_document(R"({"n": 4, "gens": ["x0"]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document(R"({"n": 4, "gens": ["x5"]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document(R"({"n": 4, "gens": ["x1^0"]})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document(R"({"n": 4, "gens": []})"), ParseError);
  CHECK_THROWS_AS(parse_ideal_document(R"({"gens": ["x1"]})"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_ideal_document("{\"n\": 3,\n \"gens\": [\"x1*x2\",\n   \"x1*x0\"]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 9);
  }
  try {
    parse_ideal_document("{\"n\": 3,\n \"gens\": [\"x1\" \"x2\"]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("clutter documents") {
  const auto c = parse_clutter_document(R"({"vertex_count": 5, "edges": [[1,2,3],[3,4,5]]})");
  CHECK(c == Clutter(5, {{0, 1, 2}, {2, 3, 4}}));
  CHECK_THROWS_AS(parse_clutter_document(R"({"vertex_count": 2, "edges": [[1,3]]})"), ParseError);
  CHECK_THROWS_AS(parse_clutter_document(R"({"vertex_count": 2, "edges": [[0,1]]})"), ParseError);
  CHECK(std::holds_alternative<Clutter>(parse_input_document(R"({"vertex_count": 2, "edges": [[1,2]]})")));
  CHECK(std::holds_alternative<ParsedIdeal>(parse_input_document(R"({"n": 2, "gens": ["x1"]})")));
}

TEST_CASE("cache round trip is atomic and keyed by content") {
  TempDir dir;
  ResultCache cache(dir.path / "cache");
  const auto k1 = ResultCache::key("(x1*x2)", "gf2", "betti");
  const auto k2 = ResultCache::key("(x1*x2)", "rational", "betti");
  CHECK(k1 != k2);
  CHECK(k1 == ResultCache::key("(x1*x2)", "gf2", "betti"));
  CHECK_FALSE(cache.get(k1));
  cache.put(k1, "{\"a\":1}");
  CHECK(cache.get(k1) == std::string("{\"a\":1}"));
  cache.put(k1, "{\"a\":2}");
  CHECK(cache.get(k1) == std::string("{\"a\":2}"));
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(cache.directory())) {
    ++files;
    CHECK(entry.path().extension() == ".json");
  }
  CHECK(files == 1);
}

TEST_CASE("cli: betti on the triangle") {
  TempDir dir;
  cli::JobSpec job;
  job.command = "betti";
  job.input = dir.write("tri.json", R"({"n": 3, "gens": ["x1*x2", "x1*x3", "x2*x3"]})");
  const auto r = cli::run(job);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.output.find("total: 3 2") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  cli::JobSpec job;
  job.input = dir.write("sturm.json", R"({"n": 6, "gens": ["x4*x5*x6", "x3*x5*x6", "x3*x4*x6", "x3*x4*x5",
                                                      "x2*x5*x6", "x2*x3*x4", "x1*x3*x6", "x1*x4*x5"]})");
  job.command = "check-linear";
  job.field = FieldSpec::rationals();
  auto r = cli::run(job);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.output == "true\n");

  job.command = "betti";
  job.cap_lattice = 4;
  CHECK(cli::run(job).exit_code == cli::kResource);
  job.cap_lattice = kDefaultLatticeCap;

  job.command = "frobnicate";
  CHECK(cli::run(job).exit_code == cli::kUsage);

  job.command = "power";  // needs --s
  CHECK(cli::run(job).exit_code == cli::kUsage);

  job.command = "betti";
  job.input = dir.write("bad.json", R"({"n": 2, "gens": ["x3"]})");
  r = cli::run(job);
  CHECK(r.exit_code == cli::kUsage);
  CHECK(r.diagnostics.find("1:") != std::string::npos);
}

TEST_CASE("cli: theorem checks") {
  TempDir dir;
  cli::JobSpec job;
  job.command = "verify-thm34";
  job.input = dir.write("two.json", R"({"vertex_count": 4, "edges": [[1,2],[3,4]]})");
  job.s = 2;
  const auto r = cli::run(job);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.output.find("bound 2 <= actual") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);

  job.command = "verify-cor35";
  CHECK(cli::run(job).exit_code == cli::kOk);
  job.command = "selftest";
  CHECK(cli::run(job).exit_code == cli::kOk);
}

TEST_CASE("cli: structured output is deterministic and cache transparent") {
  TempDir dir;
  cli::JobSpec job;
  job.command = "betti";
  job.format = cli::Format::structured;
  job.input = dir.write("ideal.json", R"({"n": 4, "gens": ["x1*x2", "x2*x3", "x3*x4"]})");
  job.s = 2;
  const auto plain = cli::run(job);
  CHECK(plain.exit_code == cli::kOk);
  CHECK(cli::run(job).output == plain.output);
  job.cache_dir = dir.path / "cache";
  const auto cold = cli::run(job);
  const auto warm = cli::run(job);
  CHECK(cold.output == plain.output);
  CHECK(warm.output == plain.output);
  const auto doc = nlohmann::json::parse(plain.output);
  for (const char* key : {"command", "input", "parameters", "result", "warnings", "exit_code"}) CHECK(doc.contains(key));

  for (const char* command : {"check-gcd", "check-strong-gcd", "check-linquot", "golod-cert", "check-cwl", "lattice"}) {
    job.command = command;
    job.s.reset();
    const auto a = cli::run(job);
    CAPTURE(command);
    CHECK(a.exit_code == cli::kOk);
    CHECK(cli::run(job).output == a.output);
  }
}

TEST_CASE("cli: non-minimal input warns") {
  TempDir dir;
  cli::JobSpec job;
  job.command = "power";
  job.s = 1;
  job.input = dir.write("nm.json", R"({"n": 2, "gens": ["x1", "x1*x2"]})");
  const auto r = cli::run(job);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.output == "(x1)\n");
  CHECK(r.diagnostics.find("warning") != std::string::npos);
}
