#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seriate/cli.hpp"
#include "seriate/model_file.hpp"

using namespace seriate;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run sh(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& body) : path(fs::temp_directory_path() / name) {
    std::ofstream(path) << body;
  }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

const char* kApb = R"({"points": ["A", "P", "B"], "lines": [{"id": "x", "seq": ["A", "P", "B"]}]})";

}  // namespace

TEST_CASE("check") {
  Run r = sh({"check", "--theorem", "Th1.6", "--max-points", "6"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.rfind("Th1.6 [interval] max_points=6\n  status: verified\n", 0) == 0);

  Run j = sh({"check", "--theorem", "Th1.6", "--max-points", "6", "--format", "json"});
  REQUIRE(j.code == cli::kTrue);
  auto v = nlohmann::ordered_json::parse(j.out);
  CHECK(v["theorem"] == "Th1.6");
  CHECK(v["status"] == "verified");
  CHECK(v["elapsed_ms"].is_null());
  CHECK(r.out.find("instances: " + std::to_string(v["instances"].get<std::uint64_t>())) != std::string::npos);

  Run refuted = sh({"check", "--theorem", "Th1.7", "--max-points", "5", "--semantics", "free", "--format", "json"});
  CHECK(refuted.code == cli::kFalse);
  CHECK(nlohmann::ordered_json::parse(refuted.out)["counterexample"].is_object());

  Run timed = sh({"check", "--theorem", "Th1.1", "--max-points", "4", "--format", "json", "--timing"});
  CHECK(nlohmann::ordered_json::parse(timed.out)["elapsed_ms"].is_number());
}

TEST_CASE("check usage errors") {
  CHECK(sh({"check"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th1.1", "--all"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th9.9"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th2.10", "--semantics", "free"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th1.1", "--format", "xml"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th1.1", "--jobs", "0"}).code == cli::kUsage);
  CHECK(sh({"check", "--theorem", "Th1.1", "--max-points", "2"}).code == cli::kUsage);
  CHECK(sh({}).code == cli::kUsage);
  CHECK(sh({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("check --all restricted by semantics") {
  Run r = sh({"check", "--all", "--semantics", "free", "--max-points", "5", "--rows", "3", "--cols", "3", "--format", "json"});
  CHECK(r.code == cli::kFalse);
  auto arr = nlohmann::ordered_json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() >= 10);
  for (const auto& v : arr) CHECK(v["semantics"] == "free");
}

TEST_CASE("parse") {
  Run r = sh({"parse", "--stmt", "A & B -> x", "--ast"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out == "[A & B] -> x\nMapsTo\n  And\n    Point A\n    Point B\n  Var x\n");

  Run bad = sh({"parse", "--stmt", "P -> ~a"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err == "NegatedMapTarget at 5: a mapping target may not be negated\n");
}

TEST_CASE("eval") {
  TempFile model("seriate_cli_apb.json", kApb);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "L(A,B;x)"}).out == "true\n");
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "L(A,P;x)"}).code == cli::kFalse);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "P/A/B(x)"}).code == cli::kFalse);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "P/A/B(x)", "--semantics", "free"}).code == cli::kTrue);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "A -> a", "--bind", "a=A,B"}).code == cli::kTrue);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "P -> a", "--bind", "a=A,B"}).code == cli::kFalse);

  TempFile stmt("seriate_cli_stmt.txt", "A/P/B(x)\n");
  CHECK(sh({"eval", "--model", model.str(), "--file", stmt.str()}).code == cli::kTrue);

  CHECK(sh({"eval", "--model", model.str()}).code == cli::kUsage);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "A -> q"}).code == cli::kUsage);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "A ->"}).code == cli::kUsage);
  CHECK(sh({"eval", "--model", model.str(), "--stmt", "A -> a", "--bind", "a=Z"}).code == cli::kModel);
}

TEST_CASE("bad models") {
  TempFile unknown("seriate_cli_unknown.json", R"({"points": ["A"], "colour": "red"})");
  Run r = sh({"eval", "--model", unknown.str(), "--stmt", "A = A"});
  CHECK(r.code == cli::kModel);
  CHECK(r.err.find("colour") != std::string::npos);

  TempFile nested("seriate_cli_nested.json", R"({"points": ["A", "B", "C"], "lines": [{"id": "x", "seq": ["A", "B", "C"], "w": 1}]})");
  CHECK(sh({"eval", "--model", nested.str(), "--stmt", "A = A"}).code == cli::kModel);

  TempFile repeat("seriate_cli_repeat.json", R"({"points": ["A", "B"], "lines": [{"id": "x", "seq": ["A", "B", "A"]}]})");
  CHECK(sh({"eval", "--model", repeat.str(), "--stmt", "A = A"}).code == cli::kModel);

  TempFile junk("seriate_cli_junk.json", "{not json");
  CHECK(sh({"render", "--model", junk.str()}).code == cli::kModel);
  CHECK(sh({"render", "--model", "/nonexistent/model.json"}).code == cli::kModel);

  CHECK_THROWS_AS(ModelFile::from_json(nlohmann::json::parse(R"({"rings": [{"id": "r", "seq": []}]})")), ModelLoadError);
}

TEST_CASE("render") {
  TempFile model("seriate_cli_render.json", kApb);
  Run r = sh({"render", "--model", model.str(), "--format", "dot"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.rfind("graph", 0) == 0);
  CHECK(r.out.find("\"A\"") != std::string::npos);
  CHECK(sh({"render", "--model", model.str(), "--format", "svg"}).code == cli::kUsage);
}

TEST_CASE("map") {
  Run five = sh({"map", "--rows", "3", "--cols", "3", "--countries", "5", "--exhaustive"});
  CHECK(five.code == cli::kTrue);
  CHECK(five.out == "partitions: 395\ncomplete5: none found\n");

  Run four = sh({"map", "--rows", "4", "--cols", "5", "--countries", "4"});
  CHECK(four.code == cli::kTrue);
  CHECK(four.out.find("(stopped at first)") != std::string::npos);
  CHECK(four.out.find("complete4: 1 found\n") != std::string::npos);

  CHECK(sh({"map", "--rows", "2", "--cols", "2", "--countries", "5"}).code == cli::kUsage);
}
