#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "scrolls/error.hpp"
#include "scrolls/graph.hpp"
#include "scrolls/io.hpp"
#include "scrolls/syzygy.hpp"

using namespace scrolls;
using nlohmann::json;

namespace {

const PrimeField F;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path;
}

const char* kSixForm =
    "# six-dimensional example\n"
    "a: 9,10,11,11,14,14\n"
    "f1: 0\n"
    "f2: x^10\n"
    "\n"
    "f3: x^8*y^3\n"
    "f4: x^6*y^5\n"
    "f5: x^6*y^8\n"
    "f6: y^14\n";

}  // namespace

TEST(Io, ParseSequences) {
  EXPECT_EQ(parse_scroll_type("4,5,6,9"), (ScrollType{4, 5, 6, 9}));
  for (const char* bad : {"", "4,,5", "a", "5,4", "-1,2", "4,5,"}) {
    try {
      parse_scroll_type(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Parse) << bad;
    }
  }
  EXPECT_EQ(parse_multiplicities("3,1"), (MultiplicityMultiset{1, 3}));
  EXPECT_THROW(parse_multiplicities("0"), Error);
}

TEST(Io, ValidityReportSchema) {
  json j = check_section_conditions({4, 5, 6, 9}, {7, 8, 10});
  EXPECT_EQ(j, json::parse(R"({"valid": false, "violated": "SUM", "v": 1})"));
  json ok = check_section_conditions({1, 1}, {2});
  EXPECT_EQ(ok, json::parse(R"({"valid": true, "violated": null, "v": 1})"));
  auto back = j.get<ValidityReport>();
  EXPECT_EQ(back.violated, Violation::Sum);
  EXPECT_EQ(back.pivot, 1);
}

TEST(Io, JsonRoundTrips) {
  ScrollType a{4, 5, 6, 9};
  EXPECT_EQ(json(a).dump(), "[4,5,6,9]");
  EXPECT_EQ(json(a).get<ScrollType>(), a);
  MultiplicityMultiset m{1, 3};
  EXPECT_EQ(json(m).get<MultiplicityMultiset>(), m);
  IntPolynomial p{1, 2, 3};
  EXPECT_EQ(json(p).get<IntPolynomial>(), p);
  auto g = specialization_graph(5);
  auto g2 = json(g).get<SpecializationGraph>();
  EXPECT_EQ(g2.nodes, g.nodes);
  EXPECT_EQ(g2.edges, g.edges);
  auto form = parse_section_form(kSixForm, F);
  EXPECT_EQ(section_form_from_json(json(form), F), form);
}

TEST(Io, SectionFormText) {
  auto form = parse_section_form(kSixForm, F);
  EXPECT_EQ(form.scroll(), (ScrollType{9, 10, 11, 11, 14, 14}));
  EXPECT_EQ(parse_section_form(format_section_form(form), F), form);
  EXPECT_THROW(parse_section_form("a: 1,1\nf1: x\n", F), Error);
  EXPECT_THROW(parse_section_form("a: 1,1\nf1: x\nf2: y\nf3: x\n", F), Error);
  EXPECT_THROW(parse_section_form("a: 1,1\nf1: x^2\nf2: y\n", F), Error);
  EXPECT_THROW(parse_section_form("f1: x\nf2: y\n", F), Error);
  try {
    read_section_form("/nonexistent/form.txt", F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Io);
  }
}

TEST(Cli, Generic) {
  auto r = run({"generic", "4,5,6,9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7,8,9\n");
}

TEST(Cli, CheckInvalidIsSuccess) {
  auto r = run({"check", "4,5,6,9", "--b", "7,8,10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid=false"), std::string::npos);
  EXPECT_NE(r.out.find("SUM"), std::string::npos);
  auto j = run({"check", "4,5,6,9", "--b", "7,8,10", "--format", "json"});
  EXPECT_EQ(json::parse(j.out), json::parse(R"({"valid": false, "violated": "SUM", "v": 1})"));
  auto red = run({"--format", "json", "check", "4,5,6,9", "--b", "4,5,6", "--m", "10"});
  EXPECT_EQ(json::parse(red.out)["violated"], "MULTIPLICITY_BOUND");
}

TEST(Cli, Sections) {
  auto r = run({"sections", "4,5,6,9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
  EXPECT_NE(r.out.find("7,8,9  [generic]"), std::string::npos);
  auto j = json::parse(run({"sections", "4,5,6,9", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 16);
  EXPECT_EQ(j["generic"], json::parse("[7,8,9]"));
}

TEST(Cli, GraphDot) {
  auto r = run({"graph", "--codim", "5", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = r.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 11u);
  EXPECT_EQ(run({"generic", "4,5,6,9", "--format", "dot"}).code, 2);
}

TEST(Cli, Reducible) {
  auto r = run({"reducible", "4,5,6,9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("23 | 13 | [4,5,14],[4,6,13]"), std::string::npos);
  EXPECT_NE(r.out.find("15 | 1 | [4,5,6]"), std::string::npos);
  EXPECT_NE(r.out.find("total: 38"), std::string::npos);
  auto e = run({"reducible", "2,5,7,10", "--expand-m"});
  EXPECT_NE(e.out.find("m: {1,1,1},{1,2},{3}"), std::string::npos);
}

TEST(Cli, ConstructSyzygyAnalyze) {
  auto c = run({"construct", "9,10,11,11,14,14", "--b", "9,13,13,14,20"});
  ASSERT_EQ(c.code, 0);
  auto path = write_temp("six.txt", c.out);
  auto s = run({"syzygy", "--input", path.string()});
  EXPECT_EQ(s.out, "9,13,13,14,20\n");

  auto red = run({"construct", "2,5,7,10", "--b", "2,7,11", "--m", "1,3"});
  ASSERT_EQ(red.code, 0);
  auto rpath = write_temp("red.txt", red.out);
  auto a = json::parse(run({"analyze", "--input", rpath.string(), "--format", "json"}).out);
  EXPECT_EQ(a["scroll_part"], json::parse("[2,7,11]"));
  EXPECT_EQ(a["multiplicities"], json::parse("[1,3]"));
  EXPECT_EQ(a["gcd_degree"], 4);
  EXPECT_EQ(a["prime"], false);

  auto lines = run({"construct", "2,5,7,10", "--b", "2,7,11", "--m", "1,3", "--lines", "5,0"});
  ASSERT_EQ(lines.code, 0);
  auto lpath = write_temp("lines.txt", lines.out);
  auto la = json::parse(run({"analyze", "--input", lpath.string(), "--format", "json"}).out);
  EXPECT_EQ(la["multiplicities"], json::parse("[1,3]"));

  auto mat = json::parse(run({"construct", "1,1", "--b", "2", "--format", "json"}).out);
  EXPECT_EQ(mat["matrix"]["entries"], json::parse(R"(["y", "x"])"));
}

TEST(Cli, Cone) {
  auto rest = write_temp("rest.txt", "a: 1,2\nf1: x + 3*y\nf2: x^2 + 5*x*y + 7*y^2\n");
  auto base = run({"cone", "0,1,2", "--vertex-coeffs", "1", "--input", rest.string()});
  EXPECT_EQ(base.code, 0);
  EXPECT_NE(base.out.find("case: BASE"), std::string::npos);
  auto over = json::parse(run({"cone", "0,1,2", "--vertex-coeffs", "0", "--input", rest.string(), "--format", "json"}).out);
  EXPECT_EQ(over["case"], "CONE_OVER_SECTION");
  EXPECT_EQ(over["base_section"]["scroll_part"], json::parse("[3]"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"generic", "4,x"}).code, 2);
  EXPECT_EQ(run({"generic", "4,5", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"--field-char", "1000001", "construct", "1,1", "--b", "2"}).code, 1);
  EXPECT_EQ(run({"construct", "4,5,6,9", "--b", "5,5,14"}).code, 1);
  EXPECT_EQ(run({"syzygy", "--input", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"generic", "0,1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FieldCharacteristicFromEnvironment) {
  ::setenv("SCROLL_FIELD_CHAR", "7", 1);
  auto small = run({"random-form", "1,2", "--seed", "3"});
  auto flag = run({"random-form", "1,2", "--seed", "3", "--field-char", "1000003"});
  ::setenv("SCROLL_FIELD_CHAR", "1000001", 1);
  auto bad = run({"random-form", "1,2"});
  ::unsetenv("SCROLL_FIELD_CHAR");
  auto dflt = run({"random-form", "1,2", "--seed", "3"});
  EXPECT_EQ(small.code, 0);
  EXPECT_NE(small.out, dflt.out);
  EXPECT_EQ(flag.out, dflt.out);
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, Deterministic) {
  auto a = run({"random-form", "4,5,6,9", "--seed", "12", "--format", "json"});
  auto b = run({"random-form", "4,5,6,9", "--seed", "12", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto path = write_temp("rand.json", a.out);
  EXPECT_EQ(run({"syzygy", "--input", path.string()}).out, "7,8,9\n");
}
