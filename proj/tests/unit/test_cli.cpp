#include <doctest.h>

#include "commands.hpp"
#include "flc/presets.hpp"
#include "serialize.hpp"

using namespace flc;
using namespace flc::cli;
using nlohmann::json;

TEST_CASE("config defaults and overrides") {
  const auto c = load_config(json{{"descriptor", "silver_mean"}}, {});
  CHECK(c.radius == QuadraticScalar(3));
  CHECK(c.u == Window::ball(1, QuadraticScalar::rational(1, 2), true));
  Overrides o;
  o.seed = 9;
  o.radius = "3/2";
  o.sample = "5";
  const auto d = load_config(json{{"descriptor", "z"}, {"seed", 4}}, o);
  CHECK(d.seed == 9);
  CHECK(d.radius == QuadraticScalar::rational(3, 2));
  CHECK(d.sample == Window::ball(1, 5));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(load_config(json{{"descriptor", "z"}, {"radius", 1.5}}, {}), ConfigError);
  CHECK_THROWS_AS(load_config(json{{"descriptor", "z"}, {"sample", {{"lo", {"2"}}, {"hi", {"1"}}}}}, {}), ConfigError);
  CHECK_THROWS_AS(load_config(json{{"descriptor", "nope"}}, {}), ConfigError);
  CHECK_THROWS_AS(load_config(json{{"descriptor", {{"type", "lattice"}, {"group", "abelian"}}}}, {}), ConfigError);
}

TEST_CASE("descriptors round-trip through JSON") {
  for (const auto& name : presets::names()) {
    const auto d = presets::by_name(name);
    const auto back = descriptor_from_json(to_json(d));
    const auto w = Window::ball(d.dim(), d.dim() == 3 ? 1 : 6);
    CHECK(enumerate_window(back, w).points == enumerate_window(d, w).points);
    CHECK(to_json(back) == to_json(d));
  }
}

TEST_CASE("generate") {
  const auto sm = cmd_generate(load_config(json{{"descriptor", "silver_mean"}, {"sample", {{"lo", {"0"}}, {"hi", {"4"}}}}}, {}));
  const auto& j = sm.artifacts.front();
  REQUIRE(j.ext == "json");
  CHECK(json::parse(j.content)["count"] == 4);
  const auto z2 = cmd_generate(load_config(json{{"descriptor", "z2"}, {"sample", "10"}}, {}));
  CHECK(json::parse(z2.artifacts.front().content)["count"] == 441);
  const auto csv = z2.artifacts[1].content;
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 442);
}

TEST_CASE("check verdicts") {
  CHECK(cmd_check(load_config(json{{"descriptor", "z"}}, {}), "all").pass);
  const auto ud = cmd_check(load_config(json{{"descriptor", "composite"}}, {}), "ud");
  CHECK_FALSE(ud.pass);
  const auto j = json::parse(ud.artifacts.front().content);
  CHECK(j["results"]["ud"]["counterexample"]["second"] == json::array({"1/4"}));
  const auto w = cmd_check(load_config(json{{"descriptor", "silver_mean"}}, {}), "witness");
  CHECK(w.pass);
  CHECK(json::parse(w.artifacts.front().content)["results"]["witness"]["sub_verdicts"]["positive_type"]["failures"] == 0);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto c = load_config(json{{"descriptor", "silver_mean"}, {"seed", 17}}, {});
  CHECK(cmd_report(c).artifacts.back().content == cmd_report(c).artifacts.back().content);
}
