#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "forcinglab/cli.hpp"
#include "forcinglab/corpus.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/fixtures.hpp"
#include "forcinglab/io.hpp"

using namespace forcinglab;
using io::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("poset documents round-trip") {
  Poset t7 = fixtures::tree7();
  CHECK(io::poset_from_json(io::poset_to_json(t7)) == t7);

  Json bad = Json::parse(R"js({"elements": ["a", "a"], "leq": []})js");
  CHECK_THROWS_WITH_AS(io::poset_from_json(bad), doctest::Contains("duplicate"),
                       InputError);
  Json cyc = Json::parse(R"js({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})js");
  CHECK_THROWS_WITH_AS(io::poset_from_json(cyc), doctest::Contains("cycle"),
                       InputError);
  Json unknown = Json::parse(R"js({"elements": ["a"], "leq": [["a", "zz"]]})js");
  CHECK_THROWS_WITH_AS(io::poset_from_json(unknown), doctest::Contains("zz"),
                       InputError);
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"js({"elements": ["a"]})js")),
                  InputError);
}

TEST_CASE("eps documents round-trip") {
  EpsStructure eb = fixtures::eb();
  CHECK(io::eps_from_json(io::eps_to_json(eb)) == eb);
}

TEST_CASE("name-system documents round-trip") {
  NameSystem ns2 = fixtures::ns2();
  NameSystem again = io::name_system_from_json(
      io::name_system_to_json(ns2), ns2.algebra(), false);
  REQUIRE(again.size() == ns2.size());
  for (int i = 0; i < ns2.size(); ++i) {
    CHECK(again.name(i).id == ns2.name(i).id);
    CHECK(again.name(i).stage == ns2.name(i).stage);
    CHECK(again.name(i).table == ns2.name(i).table);
  }
}

TEST_CASE("valuation documents") {
  auto algebra = RegularAlgebra::build(fixtures::tree3());
  Json doc = Json::parse(
      R"js({"signature": {"relations": {"R": 1}, "names": ["n0", "n1"]},
            "atoms": {"R(n0)": ["p0"], "R(n1)": ["p1"]}})js");
  auto v = io::valuation_from_json(doc, algebra, false);
  CHECK(v.atom_value(GroundAtom{0, {0}}) ==
        algebra.poset().mask_of(std::vector<std::string>{"p0"}));

  Json missing = doc;
  missing["atoms"].erase("R(n1)");
  CHECK_THROWS_WITH_AS(io::valuation_from_json(missing, algebra, false),
                       doctest::Contains("R(n1)"), InputError);

  Json bad_key = doc;
  bad_key["atoms"]["R"] = Json::array();
  CHECK_THROWS_AS(io::valuation_from_json(bad_key, algebra, false), InputError);
}

TEST_CASE("cli canonical invocations") {
  CHECK(cli({"check-byrne", "--poset", "tree3"}).code == 0);

  auto forces = cli({"forces", "--poset", "tree3", "--valuation", "vt", "--at",
                     "r", "--formula", "R(n0)"});
  CHECK(forces.code == 1);
  CHECK(forces.out == "false\n");

  auto collapse = cli({"collapse", "--input", "eq"});
  CHECK(collapse.code == 0);
  CHECK(collapse.out.find("limit: {x} {y}") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"separative", "--poset", "tree3"}).code == 0);
  CHECK(cli({"separative", "--poset", "chain2"}).code == 1);
  CHECK(cli({"algebra", "--poset", "no-such-file.json"}).code == 2);
  CHECK(cli({"algebra", "--poset", "tree7", "--cap", "3"}).code == 3);
  CHECK(cli({"power-check", "--poset", "tree3", "--name", "zz"}).code == 2);
  CHECK(cli({"corpus", "--kind", "nonsense", "--size", "2"}).code == 2);
  CHECK(cli({"corpus", "--kind", "posets", "--size", "40"}).code == 3);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({"eval", "--poset", "tree3", "--valuation", "vt", "--formula",
             "R(zz)"})
            .code == 2);
  CHECK(cli({"eval", "--poset", "chain2", "--valuation", "vt", "--formula",
             "R(n0)"})
            .code == 2);
}

TEST_CASE("cli reports are byte-identical across runs") {
  std::vector<std::vector<std::string>> invocations = {
      {"algebra", "--poset", "tree7"},
      {"algebra", "--poset", "tree3", "--format", "doc"},
      {"check-byrne", "--poset", "anti2"},
      {"separative", "--poset", "chain2"},
      {"generic", "--poset", "tree3", "--at", "r"},
      {"eval", "--poset", "tree3", "--valuation", "vt", "--formula",
       "exists t. R(t)"},
      {"forces", "--poset", "tree3", "--valuation", "vt", "--at", "p0",
       "--formula", "R(n0)"},
      {"collapse", "--input", "eb"},
      {"collapse", "--input", "eq", "--greatest", "--format", "doc"},
      {"hierarchy", "--poset", "tree3", "--stages", "2"},
      {"hierarchy", "--poset", "tree3", "--stages", "2", "--format", "doc"},
      {"power-check", "--poset", "tree3", "--name", "n2.1"},
      {"corpus", "--kind", "posets", "--size", "3"},
      {"corpus", "--kind", "eps", "--size", "2", "--format", "doc"},
      {"corpus", "--kind", "posets", "--size", "6", "--seed", "5", "--count", "7"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[0]);
    auto first = cli(args);
    auto second = cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("cli corpus counts") {
  auto two = cli({"corpus", "--kind", "posets", "--size", "2"});
  CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 3);
  auto eps2 = cli({"corpus", "--kind", "eps", "--size", "2"});
  CHECK(std::count(eps2.out.begin(), eps2.out.end(), '\n') == 16);
  CHECK(cli({"corpus", "--kind", "posets", "--size", "5"}).code == 2);
  auto sampled =
      cli({"corpus", "--kind", "eps", "--size", "8", "--seed", "1", "--count", "4"});
  CHECK(sampled.code == 0);
  CHECK(std::count(sampled.out.begin(), sampled.out.end(), '\n') == 4);
}

TEST_CASE("labeled poset counts match the known sequence") {
  CHECK(corpus::enumerate_posets(1).size() == 1);
  CHECK(corpus::enumerate_posets(2).size() == 3);
  CHECK(corpus::enumerate_posets(3).size() == 19);
  CHECK(corpus::enumerate_posets(4).size() == 219);
}

TEST_CASE("cli corpus output feeds back in as input") {
  auto run = cli({"corpus", "--kind", "posets", "--size", "2"});
  std::istringstream lines(run.out);
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line)) {
    Poset p = io::poset_from_json(Json::parse(line));
    CHECK(p.size() == 2);
    ++parsed;
  }
  CHECK(parsed == 3);
}

TEST_CASE("cli verify lemmas and file inputs") {
  auto formulas = write_temp("fl_formulas.json",
                             R"js({"formulas": ["R(n0)", "exists t. R(t)"]})js");
  auto verify = cli({"verify", "lemmas", "--poset", "tree3", "--valuation", "vt",
                     "--formulas", formulas.string()});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("forcing lemma: pass") != std::string::npos);
  CHECK(verify.out.find("dense family used:") != std::string::npos);

  auto poset_file = write_temp("fl_poset.json",
                               R"js({"elements": ["lo", "hi"], "leq": [["lo", "hi"]]})js");
  auto algebra = cli({"algebra", "--poset", poset_file.string()});
  CHECK(algebra.code == 0);
  CHECK(algebra.out == "{}\n{lo, hi}\n");

  auto dense = write_temp("fl_dense.json", R"js({"sets": [["p0", "p1"]]})js");
  auto generic = cli({"generic", "--poset", "tree3", "--at", "r", "--dense-file",
                      dense.string()});
  CHECK(generic.code == 0);
  CHECK(generic.out == "{r, p0}\n");

  auto thin = write_temp("fl_thin.json", R"js({"sets": [["r"]]})js");
  CHECK(cli({"generic", "--poset", "tree3", "--at", "r", "--dense-file",
             thin.string()})
            .code == 2);
}

TEST_CASE("collapse doc output round-trips its quotient") {
  auto doc = cli({"collapse", "--input", "ea", "--format", "doc"});
  REQUIRE(doc.code == 0);
  Json parsed = Json::parse(doc.out);
  EpsStructure q = io::eps_from_json(parsed["quotient"]);
  CHECK(q.nodes() == std::vector<std::string>{"a", "c"});
  auto again = write_temp("fl_quotient.json", parsed["quotient"].dump());
  CHECK(cli({"collapse", "--input", again.string()}).code == 0);
}

TEST_CASE("hierarchy doc output feeds power-check back in") {
  auto doc = cli({"hierarchy", "--poset", "tree3", "--stages", "2", "--format",
                  "doc"});
  REQUIRE(doc.code == 0);
  auto names = write_temp("fl_names.json", doc.out);
  auto check = cli({"power-check", "--poset", "tree3", "--names",
                    names.string(), "--name", "n2.0"});
  CHECK(check.code == 0);
  CHECK(check.out.find("pass") != std::string::npos);
}

TEST_CASE("valuation signature can live in a separate file") {
  auto sig = write_temp("fl_sig.json", R"js({"relations": {"R": 1}, "names": ["n0"]})js");
  auto val = write_temp("fl_val.json",
                        R"js({"signature": "fl_sig.json", "atoms": {"R(n0)": ["p0"]}})js");
  auto result = cli({"eval", "--poset", "tree3", "--valuation", val.string(),
                     "--formula", "R(n0)"});
  CHECK(result.code == 0);
  CHECK(result.out == "{p0}\n");
}
