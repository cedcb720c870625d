#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hfs/io.hpp"
#include "json.hpp"

using namespace hfs;
using namespace hfs::io;

namespace {

const std::string kSpaceJson = R"({
  "universe": ["x", "y"],
  "parameters": ["e1", "e2"],
  "soft_set": {
    "e1": {"x": ["0.7", "0.2"], "y": ["0.5"]},
    "e2": {"x": ["0.6"], "y": ["0.8", "0.4"]}
  },
  "beta": ["0.6", "0.3"],
  "kind": "p"
})";

const std::string kSpaceCsv =
    ",x,y\n"
    "e1,\"0.7,0.2\",0.5\n"
    "e2,0.6,\"0.8,0.4\"\n";

// Writes content under the system temp directory and returns the path.
std::string tmp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hfsio-" + name);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("JSON space documents parse and round-trip") {
  SpaceDocument doc = space_from_json(kSpaceJson);
  CHECK(doc.universe == std::vector<std::string>{"x", "y"});
  CHECK(doc.parameters == std::vector<std::string>{"e1", "e2"});
  CHECK(doc.cells[0][0] == std::vector<std::string>{"0.7", "0.2"});
  CHECK(doc.cells[1][1] == std::vector<std::string>{"0.8", "0.4"});
  CHECK(doc.beta == std::vector<std::string>{"0.6", "0.3"});
  CHECK(doc.kind == 'p');

  SpaceDocument again = space_from_json(space_to_json(doc));
  CHECK(again.universe == doc.universe);
  CHECK(again.parameters == doc.parameters);
  CHECK(again.cells == doc.cells);
  CHECK(again.beta == doc.beta);
  CHECK(again.kind == doc.kind);
  // Serialization is canonical: a second round trip is byte-identical.
  CHECK(space_to_json(again) == space_to_json(doc));
}

TEST_CASE("JSON space documents reject missing pieces") {
  CHECK_THROWS_AS(space_from_json("not json"), ParseError);
  CHECK_THROWS_AS(space_from_json("[]"), ParseError);
  CHECK_THROWS_AS(space_from_json(R"({"universe":["x"]})"), ParseError);
  CHECK_THROWS_AS(space_from_json(
                      R"({"universe":["x"],"parameters":["e1"],"soft_set":{}})"),
                  ParseError);
  CHECK_THROWS_AS(space_from_json(
                      R"({"universe":["x"],"parameters":["e1"],
                          "soft_set":{"e1":{}}})"),
                  ParseError);
}

TEST_CASE("CSV space documents mirror the table layout") {
  SpaceDocument doc = space_from_csv(kSpaceCsv);
  CHECK(doc.universe == std::vector<std::string>{"x", "y"});
  CHECK(doc.parameters == std::vector<std::string>{"e1", "e2"});
  CHECK(doc.cells[0][0] == std::vector<std::string>{"0.7", "0.2"});
  CHECK(doc.cells[0][1] == std::vector<std::string>{"0.5"});
  CHECK(doc.cells[1][0] == std::vector<std::string>{"0.6"});
  CHECK(doc.cells[1][1] == std::vector<std::string>{"0.8", "0.4"});
  CHECK(doc.beta.empty());
  CHECK_FALSE(doc.kind.has_value());

  CHECK_THROWS_AS(space_from_csv(",x,y\ne1,0.5\n"), ParseError);   // short row
  CHECK_THROWS_AS(space_from_csv(",x,y\ne1,\"0.5,0.3\n"), ParseError);  // open quote
  CHECK_THROWS_AS(space_from_csv(""), ParseError);
}

TEST_CASE("both formats build the same space") {
  SpaceDocument a = space_from_json(kSpaceJson);
  SpaceDocument b = space_from_csv(kSpaceCsv);
  CoveringSpace sa = build_space(a, 4, std::nullopt, std::nullopt);
  CoveringSpace sb = build_space(b, 4, InclusionKind::P,
                                 std::vector<std::string>{"0.6", "0.3"});
  CHECK(sa.soft() == sb.soft());
  CHECK(sa.beta() == sb.beta());
  CHECK(sa.kind() == sb.kind());
}

TEST_CASE("flags win over the document, and something must supply kind and beta") {
  SpaceDocument doc = space_from_json(kSpaceJson);
  CoveringSpace s = build_space(doc, 4, InclusionKind::A,
                                std::vector<std::string>{"0.5"});
  CHECK(s.kind() == InclusionKind::A);
  CHECK(s.beta() == HesitantElement({Degree::parse("0.5")}));

  SpaceDocument bare = space_from_csv(kSpaceCsv);
  CHECK_THROWS_AS(build_space(bare, 4, std::nullopt, std::nullopt), ParseError);
  CHECK_THROWS_AS(build_space(bare, 4, InclusionKind::P, std::nullopt), ParseError);
  CHECK_THROWS_AS(
      build_space(doc, 12, std::nullopt, std::nullopt), ParseError);  // precision
}

TEST_CASE("target documents") {
  TargetDocument h = target_from_json(R"({"values":{"x":["0.5"],"y":["0.9","0.7"]}})");
  REQUIRE(h.hesitant.has_value());
  CHECK((*h.hesitant)[0].first == "x");
  CHECK((*h.hesitant)[1].second == std::vector<std::string>{"0.9", "0.7"});
  CHECK_FALSE(h.subset.has_value());

  TargetDocument c = target_from_json(R"({"subset":["x"]})");
  REQUIRE(c.subset.has_value());
  CHECK(*c.subset == std::vector<std::string>{"x"});

  CHECK_THROWS_AS(target_from_json(R"({"nothing":1})"), ParseError);

  // Round trips.
  TargetDocument h2 = target_from_json(target_to_json(h));
  CHECK(h2.hesitant == h.hesitant);
  TargetDocument c2 = target_from_json(target_to_json(c));
  CHECK(c2.subset == c.subset);
}

TEST_CASE("validate renders the verdict and classifies exit codes") {
  std::string path = tmp_file("space.json", kSpaceJson);
  CmdResult ok = cmd_validate(path, std::nullopt, std::nullopt, CommonOpts{});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "objects: x y\n"
        "parameters: e1 e2\n"
        "kind: p\n"
        "beta: {0.6,0.3}\n"
        "verdict: valid beta-covering\n");

  // Same space under n fails at y (union there is {0.8,0.5}).
  CmdResult bad = cmd_validate(path, "n", std::nullopt, CommonOpts{});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verdict: not a beta-covering (fails at y)") != std::string::npos);

  CmdResult gone = cmd_validate("/no/such/file.json", std::nullopt, std::nullopt,
                                CommonOpts{});
  CHECK(gone.code == 2);

  CmdResult badfmt = cmd_validate(path, std::nullopt, std::nullopt,
                                  CommonOpts{"yaml", 4});
  CHECK(badfmt.code == 2);

  CmdResult json_out = cmd_validate(path, std::nullopt, std::nullopt,
                                    CommonOpts{"json", 4});
  CHECK(json_out.code == 0);
  auto j = nlohmann::json::parse(json_out.out);
  CHECK(j["valid"] == true);
  CHECK(j["kind"] == "p");
  CHECK(j["beta"][0] == "0.6");
}

TEST_CASE("neighborhood reports, including Null, render canonically") {
  std::string path = tmp_file("space2.json", kSpaceJson);
  CmdResult res = cmd_neighborhood(path, std::nullopt, false, std::nullopt,
                                   std::nullopt, CommonOpts{});
  CHECK(res.code == 0);
  CHECK(res.out ==
        "kind: p\n"
        "beta: {0.6,0.3}\n"
        "x | qualifying: e1 e2 | fuzzy: x={0.6,0.2} y={0.5,0.4} | crisp: {x}\n"
        "y | qualifying: e2 | fuzzy: x={0.6} y={0.8,0.4} | crisp: {x,y}\n");

  CmdResult one = cmd_neighborhood(path, "y", true, std::nullopt, std::nullopt,
                                   CommonOpts{});
  CHECK(one.code == 0);
  CHECK(one.out ==
        "kind: p\n"
        "beta: {0.6,0.3}\n"
        "y | qualifying: e2 | crisp: {x,y}\n");

  CmdResult miss = cmd_neighborhood(path, "zz", false, std::nullopt, std::nullopt,
                                    CommonOpts{});
  CHECK(miss.code == 2);

  // A kind-m space where x has no qualifying parameter at all.
  std::string nullspace = tmp_file("space3.json", R"({
    "universe": ["x", "y"],
    "parameters": ["e1", "e2"],
    "soft_set": {
      "e1": {"x": ["0.6", "0.1"], "y": ["0.8"]},
      "e2": {"x": ["0.5", "0.2"], "y": ["0.7", "0.3"]}
    },
    "beta": ["0.4"],
    "kind": "m"
  })");
  CmdResult withnull = cmd_neighborhood(nullspace, std::nullopt, false, std::nullopt,
                                        std::nullopt, CommonOpts{});
  CHECK(withnull.code == 0);
  CHECK(withnull.out.find("x | qualifying: (none) | fuzzy: Null | crisp: Null") !=
        std::string::npos);

  CmdResult jr = cmd_neighborhood(nullspace, std::nullopt, false, std::nullopt,
                                  std::nullopt, CommonOpts{"json", 4});
  auto j = nlohmann::json::parse(jr.out);
  CHECK(j["rows"][0]["fuzzy"] == "Null");
  CHECK(j["rows"][0]["crisp"] == "Null");
  CHECK(j["rows"][1]["crisp"][0] == "y");
}

TEST_CASE("approx command handles both modes and the bound filter") {
  std::string space = tmp_file("space4.json", kSpaceJson);
  std::string hes = tmp_file("target-h.json",
                             R"({"values":{"x":["0.5"],"y":["0.9","0.7"]}})");
  std::string cri = tmp_file("target-c.json", R"({"subset":["x"]})");

  CmdResult h = cmd_approx(space, hes, "hesitant", "both", std::nullopt,
                           std::nullopt, CommonOpts{});
  CHECK(h.code == 0);
  CHECK(h.out ==
        "kind: p\n"
        "beta: {0.6,0.3}\n"
        "target:\n"
        "  x = {0.5}\n"
        "  y = {0.9,0.7}\n"
        "lower:\n"
        "  x = {0.8,0.7,0.5}\n"
        "  y = {0.5}\n"
        "upper:\n"
        "  x = {0.5,0.5,0.4}\n"
        "  y = {0.8,0.7,0.5}\n");

  CmdResult c = cmd_approx(space, cri, "crisp", "both", std::nullopt, std::nullopt,
                           CommonOpts{});
  CHECK(c.code == 0);
  CHECK(c.out ==
        "kind: p\n"
        "beta: {0.6,0.3}\n"
        "target: {x}\n"
        "lower: {x}\n"
        "upper: {x,y}\n");

  CmdResult lower_only = cmd_approx(space, cri, "crisp", "lower", std::nullopt,
                                    std::nullopt, CommonOpts{});
  CHECK(lower_only.out.find("upper") == std::string::npos);

  // Mode/target mismatches and malformed targets are parse errors.
  CHECK(cmd_approx(space, cri, "hesitant", "both", std::nullopt, std::nullopt,
                   CommonOpts{})
            .code == 2);
  CHECK(cmd_approx(space, hes, "crisp", "both", std::nullopt, std::nullopt,
                   CommonOpts{})
            .code == 2);
  CHECK(cmd_approx(space, hes, "neither", "both", std::nullopt, std::nullopt,
                   CommonOpts{})
            .code == 2);
  std::string short_target = tmp_file("target-s.json", R"({"values":{"x":["0.5"]}})");
  CHECK(cmd_approx(space, short_target, "hesitant", "both", std::nullopt,
                   std::nullopt, CommonOpts{})
            .code == 2);
  std::string alien = tmp_file("target-a.json", R"({"subset":["zz"]})");
  CHECK(cmd_approx(space, alien, "crisp", "both", std::nullopt, std::nullopt,
                   CommonOpts{})
            .code == 2);

  CmdResult j = cmd_approx(space, hes, "hesitant", "both", std::nullopt,
                           std::nullopt, CommonOpts{"json", 4});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["lower"]["x"][0] == "0.8");
  CHECK(parsed["upper"]["y"].size() == 3);
}

TEST_CASE("laws command is deterministic byte for byte") {
  CmdResult a = cmd_laws(5, 5, CommonOpts{});
  CmdResult b = cmd_laws(5, 5, CommonOpts{});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed: 5") != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);

  CmdResult ja = cmd_laws(5, 5, CommonOpts{"json", 4});
  CmdResult jb = cmd_laws(5, 5, CommonOpts{"json", 4});
  CHECK(ja.out == jb.out);
  auto j = nlohmann::json::parse(ja.out);
  CHECK(j["failed"] == 0);
  CHECK(j["laws"].size() > 100);

  CHECK(cmd_laws(1, 0, CommonOpts{}).code == 2);
}

TEST_CASE("repro command replays every frozen example") {
  CmdResult a = cmd_repro(CommonOpts{});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CmdResult b = cmd_repro(CommonOpts{});
  CHECK(a.out == b.out);

  CmdResult j = cmd_repro(CommonOpts{"json", 4});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["failed"] == 0);
  for (const auto& f : parsed["fixtures"]) CHECK(f["passed"] == true);
}
