#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tfca/cli.hpp"
#include "tfca/cxt_io.hpp"
#include "tfca/dot_export.hpp"
#include "tfca/errors.hpp"
#include "tfca/next_closure.hpp"
#include "tfca/triadic_io.hpp"

#include "helpers.hpp"

using namespace tfca;

namespace {

std::string fixture_bytes(const std::string& name) {
  return test::read_file(test::fixture_path(name));
}

struct cli_result {
  int code;
  std::string out;
  std::string err;
};

cli_result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t thrown_line(const std::string& text) {
  try {
    parse_cxt(text);
  } catch (const parse_error& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("cxt serialization round-trips byte for byte") {
  for (const char* name : {"people_roles.cxt", "roles_rooms.cxt", "triangular.cxt", "banded_k1.cxt",
                           "six_by_six.cxt", "empty.cxt"}) {
    const std::string bytes = fixture_bytes(name);
    const cxt_document doc = parse_cxt(bytes);
    CHECK(serialize_cxt(doc) == bytes);
    const cxt_document again = parse_cxt(serialize_cxt(doc));
    CHECK(again.name == doc.name);
    CHECK(again.context.same_table_as(doc.context));
  }
}

TEST_CASE("cxt parser reports the offending line") {
  CHECK(thrown_line("Z\nname\n1\n1\ng\nm\nX\n") == 1);
  CHECK(thrown_line("B\nname\nfoo\n1\ng\nm\nX\n") == 3);
  CHECK(thrown_line("B\nname\n1\nbar\ng\nm\nX\n") == 4);
  CHECK(thrown_line("B\nname\n1\n1\ng\nm\nXX\n") == 7);   // row too wide
  CHECK(thrown_line("B\nname\n1\n1\ng\nm\n?\n") == 7);    // bad cell
  CHECK(thrown_line("B\nname\n2\n1\ng\ng\nm\nX\nX\n") == 6);  // duplicate object
  CHECK(thrown_line("B\nname\n1\n1\ng\nm\nX\njunk\n") == 8);
  CHECK(thrown_line("B\nname\n2\n1\ng\n") == 6);  // truncated
}

TEST_CASE("cxt parser refuses reserved padding names") {
  CHECK_THROWS_AS(parse_cxt("B\nname\n1\n1\n__g_univ__\nm\nX\n"), parse_error);
  CHECK_THROWS_AS(parse_cxt("B\nname\n1\n1\ng\n__E_m__\nX\n"), parse_error);
}

TEST_CASE("triadic documents round-trip and keep their triple order canonical") {
  for (const char* name :
       {"small_ternary.tri.json", "composed_case1.tri.json", "composed_case2.tri.json"}) {
    const tri_document doc = parse_triadic(fixture_bytes(name));
    const std::string text = serialize_triadic(doc);
    const tri_document again = parse_triadic(text);
    CHECK(again.name == doc.name);
    CHECK(again.context.same_table_as(doc.context));
    CHECK(serialize_triadic(again) == text);
  }
}

TEST_CASE("triadic parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_triadic("not json"), parse_error);
  CHECK_THROWS_AS(parse_triadic("[1,2]"), parse_error);
  CHECK_THROWS_AS(parse_triadic(R"({"schema":"triadic-context/9","objects":[],"attributes":[],"conditions":[],"triples":[]})"),
                  parse_error);
  const char* dup = R"({"schema":"triadic-context/1","objects":["a","a"],"attributes":["m"],"conditions":["b"],"triples":[]})";
  CHECK_THROWS_AS(parse_triadic(dup), parse_error);
  const char* unknown = R"({"schema":"triadic-context/1","objects":["a"],"attributes":["m"],"conditions":["b"],"triples":[["a","x","b"]]})";
  CHECK_THROWS_AS(parse_triadic(unknown), parse_error);
  const char* twice = R"({"schema":"triadic-context/1","objects":["a"],"attributes":["m"],"conditions":["b"],"triples":[["a","m","b"],["a","m","b"]]})";
  CHECK_THROWS_AS(parse_triadic(twice), parse_error);
  const char* reserved = R"({"schema":"triadic-context/1","objects":["__b_univ__"],"attributes":["m"],"conditions":["b"],"triples":[]})";
  CHECK_THROWS_AS(parse_triadic(reserved), parse_error);
}

TEST_CASE("line diagram export is deterministic and complete") {
  const cxt_document doc = parse_cxt(fixture_bytes("roles_rooms.cxt"));
  std::vector<formal_concept> cs;
  for (const bitset& intent : next_closure(doc.context).intents)
    cs.push_back({doc.context.common_objects(intent), intent});
  sort_concepts(cs);
  const auto covers = cover_relation(cs);
  const std::string dot = lattice_dot(doc.context, cs, covers);
  CHECK(dot == lattice_dot(doc.context, cs, covers));
  // one node line per concept, one edge line per cover
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find(" -> ") != std::string::npos) ++edges;
  }
  CHECK(nodes == cs.size());
  CHECK(edges == covers.size());
  // every roster name appears exactly once in the reduced labeling
  for (const auto& n : doc.context.object_names()) {
    const std::size_t first = dot.find(n);
    REQUIRE(first != std::string::npos);
    CHECK(dot.find(n, first + 1) == std::string::npos);
  }
}

TEST_CASE("cli: valid invocations exit 0 and write identical bytes on repeat runs") {
  const std::string f1 = test::fixture_path("people_roles.cxt");
  const std::string f2 = test::fixture_path("roles_rooms.cxt");
  const std::string f3 = test::fixture_path("small_ternary.tri.json");
  const std::vector<std::vector<std::string>> invocations = {
      {"concepts", "--ctx", f1, "--oracle"},
      {"stembase", "--ctx", test::fixture_path("six_by_six.cxt"), "--oracle"},
      {"compose", "--k1", f1, "--k2", f2, "--oracle"},
      {"tri-concepts", "--tri", f3, "--oracle"},
      {"conditional", "--tri", f3, "--conditions", "alpha,gamma"},
      {"triadic-base", "--k1", f1, "--k2", f2, "--oracle"},
      {"conditional-base", "--tri", f3, "--oracle"},
      {"check-iso", "--k1", f1, "--k2", f2},
      {"export-dot", "--ctx", f1, "--oracle"},
      {"export-dot", "--tri", f3, "--oracle"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[0]);
    const cli_result first = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.err.empty());
    CHECK(!first.out.empty());
    const cli_result second = run_cli(args);
    CHECK(second.out == first.out);
  }
}

TEST_CASE("cli: report envelopes carry the command, inputs and ordering note") {
  const cli_result r = run_cli({"concepts", "--ctx", test::fixture_path("people_roles.cxt")});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "concepts");
  REQUIRE(doc["inputs"].is_array());
  CHECK(doc["inputs"][0]["path"] == test::fixture_path("people_roles.cxt"));
  CHECK(doc["inputs"][0]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(doc["ordering"].is_string());
  CHECK(doc["payload"]["concept_count"] == 5);
}

TEST_CASE("cli: domain failures exit 1, usage failures exit 2") {
  const std::string f1 = test::fixture_path("people_roles.cxt");
  const std::string f3 = test::fixture_path("small_ternary.tri.json");

  CHECK(run_cli({"concepts", "--ctx", "/does/not/exist.cxt"}).code == 1);
  CHECK(run_cli({"compose", "--k1", f1, "--k2", f1}).code == 1);  // roster mismatch
  CHECK(run_cli({"conditional", "--tri", f3, "--conditions", "nope"}).code == 1);
  CHECK(run_cli({"tri-concepts", "--tri", f1}).code == 1);  // not a JSON document

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"concepts"}).code == 2);                   // --ctx missing
  CHECK(run_cli({"concepts", "--bogus"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"export-dot", "--ctx", f1, "--tri", f3}).code == 2);
  CHECK(run_cli({"export-dot"}).code == 2);
  CHECK(run_cli({"triadic-base", "--tri", f3, "--k1", f1}).code == 2);
  CHECK(run_cli({"conditional", "--tri", f3}).code == 2);   // --conditions missing

  const cli_result help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("cli: --out writes the same bytes to a file") {
  const auto target = std::filesystem::temp_directory_path() / "tfca_cli_out_test.json";
  std::filesystem::remove(target);
  const std::string f1 = test::fixture_path("people_roles.cxt");
  const cli_result direct = run_cli({"concepts", "--ctx", f1});
  const cli_result filed = run_cli({"concepts", "--ctx", f1, "--out", target.string()});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(test::read_file(target.string()) == direct.out);
  std::filesystem::remove(target);
}

TEST_CASE("cli: composed documents feed back into the triadic commands") {
  const auto tri_path = std::filesystem::temp_directory_path() / "tfca_cli_roundtrip.tri.json";
  const cli_result made =
      run_cli({"compose", "--k1", test::fixture_path("banded_k1.cxt"), "--k2",
               test::fixture_path("meta_case2.cxt"), "--out", tri_path.string()});
  REQUIRE(made.code == 0);
  const cli_result direct = run_cli({"tri-concepts", "--tri", tri_path.string(), "--oracle"});
  CHECK(direct.code == 0);
  const cli_result fixture =
      run_cli({"tri-concepts", "--tri", test::fixture_path("composed_case2.tri.json"), "--oracle"});
  // payloads agree apart from the input block; compare the concepts only
  const auto a = nlohmann::json::parse(direct.out)["payload"];
  const auto b = nlohmann::json::parse(fixture.out)["payload"];
  CHECK(a["concepts"] == b["concepts"]);
  CHECK(a["quotients"] == b["quotients"]);
  std::filesystem::remove(tri_path);
}
