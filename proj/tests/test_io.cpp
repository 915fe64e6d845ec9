#include "helpers.hpp"

#include "polychrome/io.hpp"
#include "polychrome/svg.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace polychrome;

TEST_CASE("rational parsing and printing round-trip") {
  for (const char* s : {"7", "-3", "5/8", "-5/8", "0", "1000000000000000000000"}) {
    Rat v = parse_rational(s);
    CHECK(to_string(v) == s);
    CHECK(parse_rational(to_string(v)) == v);
  }
  CHECK(parse_rational("4/8") == Rat(1, 2));  // canonical form on output
  CHECK(to_string(parse_rational("4/8")) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("instance serialization is an exact round-trip") {
  Instance inst;
  inst.kind = "points";
  inst.points = {{Rat(1, 3), Rat(-2)}, {Rat(0), Rat(7, 5)}};
  inst.metadata = Json{{"label", "demo"}};
  Json j = instance_json(inst);
  Instance back = instance_from_json(j);
  CHECK(back.kind == inst.kind);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[0] == inst.points[0]);
  CHECK(back.points[1] == inst.points[1]);
  CHECK(back.metadata == inst.metadata);
  CHECK(instance_json(back) == j);

  Instance hp;
  hp.kind = "halfplanes";
  hp.halfplanes = {{Rat(1), Rat(-2), Rat(1, 2)}, {Rat(0), Rat(1), Rat(3)}};
  Json j2 = instance_json(hp);
  Instance back2 = instance_from_json(j2);
  REQUIRE(back2.halfplanes.size() == 2);
  CHECK(back2.halfplanes[0] == hp.halfplanes[0]);
  CHECK(back2.halfplanes[1] == hp.halfplanes[1]);
  CHECK(instance_json(back2) == j2);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(instance_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(Json{{"kind", "bogus"}, {"elements", Json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(Json{{"kind", "points"},
                                          {"elements", Json::array({Json::array({"1"})})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("serialization is deterministic") {
  Instance inst;
  inst.kind = "points";
  inst.points = {{Rat(3), Rat(4)}, {Rat(-1, 7), Rat(0)}};
  CHECK(instance_json(inst).dump(2) == instance_json(inst).dump(2));
}

TEST_CASE("atomic writes land complete and leave no temporary") {
  auto dir = std::filesystem::temp_directory_path() / "polychrome_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "out.json").string();
  atomic_write_file(path, "{\"x\": 1}\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "{\"x\": 1}\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering produces grouped, well-formed output") {
  auto inst = gen_lower_bound(10, 3);
  SvgOptions opt;
  opt.curve_indices = inst.curve_indices;
  opt.coloring = color_points(inst.points, 3).coloring;
  opt.highlight = inst.separators[0];
  std::string svg = render_svg(inst.points, opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<g id=\"curve\">") != std::string::npos);
  CHECK(svg.find("<g id=\"bulk\">") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  // deterministic output
  CHECK(render_svg(inst.points, opt) == svg);

  std::mt19937_64 rng(701);
  auto P = testutil::random_gp_points(rng, 8);
  std::string plain = render_svg(P);
  CHECK(plain.find("<g id=\"points\">") != std::string::npos);
}
