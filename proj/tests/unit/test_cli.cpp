#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "singclass/cli.hpp"
#include "singclass/errors.hpp"
#include "singclass/report.hpp"
#include "support.hpp"

using namespace singclass;
using testing::poly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json cli_json(const std::vector<std::string>& args) {
  const Result r = cli(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("report json round trip") {
  const std::vector<std::tuple<std::string, std::uint64_t, std::vector<std::string>>> cases{
      {"y^2+x^3*y", 2, {"x", "y"}},     {"x^2+y^3", 0, {"x", "y"}},   {"x^3+y^4+x^2*y^2", 3, {"x", "y"}},
      {"x^2*y^2", 0, {"x", "y"}},       {"x^3+x^5", 3, {"x"}},        {"x^3", 3, {"x"}},
      {"x^2+y^2+z^2", 5, {"x", "y", "z"}}, {"x*y+z^3", 2, {"x", "y", "z"}}, {"x+y^2", 7, {"x", "y"}},
      {"1/2*x^2+x*y^3", 0, {"x", "y"}}};
  for (const auto& [text, p, names] : cases) {
    CAPTURE(text);
    const SingularityReport r = build_report(poly(text, p, names), names, JetBound(64));
    const std::string json = report_to_json(r);
    const SingularityReport back = report_from_json(json);
    CHECK(back == r);
    CHECK(report_to_json(back) == json);
    CHECK(report_to_json(back, -1) == report_to_json(r, -1));
  }
}

TEST_CASE("report contents") {
  const SingularityReport r = build_report(poly("y^2+x^3*y", 2, 2), {"x", "y"}, JetBound(64));
  REQUIRE(r.tau);
  CHECK(r.tau->value.finite);
  CHECK(r.tau->value.value == 5);
  REQUIRE(r.mu);
  CHECK_FALSE(r.mu->value.finite);
  CHECK(r.right_determinacy_error.rfind("NotIsolated", 0) == 0);
  REQUIRE(r.contact_determinacy);
  CHECK(r.contact_label.display() == "A_5");
  CHECK(r.corank == 2u);

  const auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["schema"] == "singclass/1");
  CHECK(j["mu"]["finite"] == false);
  CHECK(j["mu"]["bound"] == 64);
  CHECK(j["tau"]["value"] == 5);
  CHECK(j["contact"]["label"] == "A_5");
  CHECK(j["contact"]["simple_contact"] == true);
  CHECK(j["contact"]["simple_right"] == false);
  CHECK(j["contact"]["reason"].is_null());
  CHECK(j["determinacy"]["right"].contains("error"));

  CHECK_THROWS_AS(build_report(poly("0", 0, 2), {"x", "y"}, JetBound(64)), Error);
  CHECK_THROWS_AS(build_report(poly("1+x", 0, 2), {"x", "y"}, JetBound(64)), Error);
  CHECK_THROWS_AS(report_from_json("{\"schema\": \"other/2\"}"), Error);
  CHECK_THROWS_AS(report_from_json("not json"), Error);
}

TEST_CASE("label names parse back") {
  for (const ClassLabel& l : {ClassLabel::simple(Family::A, 4), ClassLabel::simple(Family::E, 8, 2),
                              ClassLabel::simple(Family::D, 12, 0), ClassLabel::simple(Family::Smooth, 0),
                              ClassLabel{Family::AInf, 0, std::nullopt, "x"}, ClassLabel::not_simple("why")}) {
    CHECK(label_from_name(l.name(), l.variant, l.reason) == l);
  }
  CHECK_THROWS_AS(label_from_name("Q_3", std::nullopt, ""), Error);
}

TEST_CASE("cli examples") {
  const auto j = cli_json({"classify", "--char", "2", "--vars", "x,y", "--json", "y^2+x^3*y"});
  CHECK(j["tau"]["value"] == 5);
  CHECK(j["contact"]["label"] == "A_5");
  CHECK(j["contact"]["index"] == 5);

  const auto d = cli_json({"determinacy", "--char", "3", "--vars", "x,y", "--json", "y^8+x^8*y^4+x^23"});
  CHECK(d["determinacy"]["contact"]["highcorner"] == "x^22*y^2");
  CHECK(d["determinacy"]["contact"]["example_reading"] == 40);

  const Result zero = cli({"invariants", "--char", "0", "--vars", "x", "0"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("zero polynomial") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"classify", "--char", "4", "x^2"}).code == 1);
  CHECK(cli({"classify", "--vars", "x,y", "x^2+z"}).code == 1);
  CHECK(cli({"classify", "--vars", "x,y"}).code == 1);
  CHECK(cli({"invariants", "--vars", "x,y", "x^2"}).code == 0);
  CHECK(cli({"determinacy", "--vars", "x,y", "x^2"}).code == 2);
  CHECK(cli({"univariate", "--char", "3", "--vars", "x", "x^3"}).code == 2);
  CHECK(cli({"univariate", "--char", "0", "--vars", "x", "x^3"}).code == 1);
  CHECK(cli({"deform-scan", "--vars", "x,y", "x^2*y^2"}).code == 2);
  CHECK(cli({"oracle", "--char", "3", "--vars", "x,y", "--k", "5"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli subcommands produce consistent json") {
  const auto inv = cli_json({"invariants", "--char", "5", "--vars", "x,y", "--json", "x^5+y^4"});
  CHECK(inv["tau"]["value"] == 15);
  CHECK(inv["mu"]["finite"] == false);

  const auto sp = cli_json({"split", "--char", "0", "--vars", "x,y,z", "--json", "x^2+y^3+y*z^2"});
  CHECK(sp["split"]["rank"] == 1);
  CHECK(sp["split"]["corank"] == 2);

  const auto uni = cli_json({"univariate", "--char", "3", "--vars", "x", "--json", "x^3+x^5"});
  CHECK(uni["univariate"]["determinacy"] == 5);
  CHECK(uni["univariate"]["simple"] == false);

  const auto scan = cli_json({"deform-scan", "--vars", "x,y", "--samples", "30", "--seed", "4", "--json", "x^2+y^3"});
  CHECK(scan["tau_base"] == 2);
  CHECK(scan["violations"].empty());
  CHECK(scan["basis"] == nlohmann::json::array({"1", "y"}));

  const auto orb = cli_json({"oracle", "--char", "2", "--vars", "x,y", "--k", "3", "--action", "contact", "--json"});
  CHECK(orb["jets"] == 128);
  std::uint64_t total = 0;
  for (const auto& o : orb["orbits"]) total += o["size"].get<std::uint64_t>();
  CHECK(total == 128);

  const auto parsed = cli_json({"parse", "--vars", "x,y", "--json", "2xy + x^2 - 1/2*y"});
  CHECK(parsed["canonical"] == "-1/2*y+x^2+2*x*y");
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"deform-scan", "--char", "5", "--vars", "x,y", "--seed", "9",
                                      "--samples", "25", "--json", "x^2*y+y^4"};
  CHECK(cli(args).out == cli(args).out);
  const std::vector<std::string> cls{"classify", "--char", "3", "--vars", "x,y", "--json", "x^3+y^4+x^2*y^2"};
  CHECK(cli(cls).out == cli(cls).out);
}

TEST_CASE("cli batch mode emits json lines in input order") {
  const std::string path = "singclass_batch_test.txt";
  {
    std::ofstream f(path);
    f << "x^2+y^3\n\ny^2+x^3*y\nx^2+(\n";
  }
  const Result r = cli({"classify", "--char", "2", "--vars", "x,y", "--file", path});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["input"]["polynomial"] == "x^2+y^3");
  CHECK(rows[1]["tau"]["value"] == 5);
  CHECK(rows[2].contains("error"));
}
