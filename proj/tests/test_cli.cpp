#include <doctest.h>

#include <algorithm>
#include <set>

#include "pbench/cli/run.hpp"
#include "pbench/nc/cache.hpp"
#include "pbench/preproj/presentations.hpp"

using namespace pbench;
using namespace pbench::cli;

TEST_CASE("registry maps every check id once") {
  const std::set<std::string> want{"a-selfduality", "block",       "corner",     "fusion",           "flatness",
                                   "groups",        "heisenberg",  "hilbert-identity", "hstar",    "ideal-powers",
                                   "monodromy",     "pi-truncated", "pi0",       "pi0mu",            "spherical",
                                   "verlinde",      "weyl-denominator"};
  std::vector<std::string> ids;
  for (const auto& s : check_registry()) ids.push_back(s.id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == want);
  CHECK(ids.size() == want.size());
  CHECK_THROWS_AS(find_check("bogus"), ConfigError);
}

TEST_CASE("plans") {
  RunConfig c;
  c.checks = {"pi0mu", "pi0"};
  c.types = {"A2"};
  const auto p = plan(c);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::make_pair(std::string("pi0"), std::string("A2")));
  CHECK(p[1] == std::make_pair(std::string("pi0mu"), std::string("A2")));

  RunConfig h;
  h.checks = {"hilbert-identity"};
  h.types = {"all"};
  CHECK(plan(h).size() == 5);

  RunConfig g;
  g.checks = {"groups"};
  g.types = {"A2"};  // ignored for groups
  CHECK(plan(g).size() == 22);

  RunConfig s;
  s.checks = {"pi0"};
  const auto fast = plan(s).size();
  s.slow = true;
  CHECK(plan(s).size() == fast + 1);

  RunConfig bad;
  bad.checks = {"pi0"};
  bad.types = {"Q7"};
  CHECK_THROWS_AS(plan(bad), ConfigError);
  bad.types = {};
  bad.checks = {"bogus"};
  CHECK_THROWS_AS(plan(bad), ConfigError);
}

TEST_CASE("run and report formats") {
  RunConfig c;
  c.checks = {"pi0", "pi0mu"};
  c.types = {"A2"};
  c.timing = false;
  const auto rep = run(c);
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.all_pass());
  CHECK(rep.passed() == 2);

  const auto j = rep.to_json();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["summary"]["passed"] == 2);
  CHECK(run(c).to_json().dump() == j.dump());  // byte-identical without timing

  const auto back = Report::from_json(j);
  CHECK(back.to_json().dump() == j.dump());
  CHECK_THROWS_AS(Report::from_json(nlohmann::json{{"schema", "other/9"}}), ConfigError);

  const std::string csv = rep.render(Format::Csv);
  CHECK(csv.rfind("check_id,subject,item,computed,expected,pass,note\n", 0) == 0);
  CHECK(csv.find("pi0mu,A2,") != std::string::npos);
  const std::string md = rep.render(Format::Markdown);
  CHECK(md.find("| pi0 | A2 | PASS |") != std::string::npos);
  CHECK(md.find("2 passed, 0 failed") != std::string::npos);

  CHECK(parse_format("md") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("inapplicable type is a configuration error") {
  RunConfig c;
  c.checks = {"spherical"};
  c.types = {"A2"};
  CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("parallel and serial runs agree") {
  RunConfig c;
  c.checks = {"groups", "hilbert-identity", "verlinde"};
  c.timing = false;
  c.jobs = 1;
  const auto a = run(c).to_json().dump();
  c.jobs = 4;
  CHECK(run(c).to_json().dump() == a);
}

TEST_CASE("lambda text") {
  CHECK(parse_lambda_text("zero").empty());
  const auto l = parse_lambda_text("1/50, -1/40; 0,0");
  REQUIRE(l.size() == 2);
  CHECK(l[0] == std::vector<std::string>{"1/50", "-1/40"});
  CHECK_THROWS_AS(parse_lambda_text("1,,2"), ConfigError);
}

TEST_CASE("cache keys follow the presentation") {
  const auto rd = rootdata::build_root_data("D4");
  preproj::PreprojSpec s{rd, preproj::Mode::BsphericalDeformed};
  const auto p1 = preproj::presentation_of(s);
  CHECK(nc::cache_key(p1, {}, 1) == nc::cache_key(preproj::presentation_of(s), {}, 1));
  s.leg_params = {{Rational(0), make_rational(1, 3)}, {Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK(nc::cache_key(preproj::presentation_of(s), {}, 1) != nc::cache_key(p1, {}, 1));
  CHECK(nc::cache_key(p1, {}, 2) != nc::cache_key(p1, {}, 1));
}
