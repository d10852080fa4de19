#include "doctest.h"
#include "terngrid/cli.hpp"
#include "terngrid/io.hpp"
#include "terngrid/layout_complete.hpp"
#include "terngrid/layout_general.hpp"
#include "terngrid/render.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <sstream>

using namespace terngrid;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "terngrid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "terngrid_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("tree and drawing JSON round trip") {
  const TernaryTree t = random_ternary_tree(50, 4);
  const Json j = tree_to_json(t);
  CHECK(j.begin().key() == "n");
  CHECK(tree_from_json(j) == t);
  const GridDrawing d = draw_general(t);
  const ParsedDrawing back = drawing_from_json(Json::parse(drawing_to_json(d).dump()));
  REQUIRE(back.drawing);
  CHECK(*back.drawing == d);

  const Json frac = Json::parse(R"({"tree":{"n":2,"root":0,"children":[[1],[]]},"pos":[[0,0],[0.5,0]]})");
  CHECK_FALSE(drawing_from_json(frac).drawing.has_value());
  const Json whole = Json::parse(R"({"tree":{"n":2,"root":0,"children":[[1],[]]},"pos":[[0,0],[1.0,0]]})");
  CHECK(drawing_from_json(whole).drawing.has_value());
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"n":2,"root":0,"children":[[1]]})")), ParseError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"n":2,"root":1,"children":[[1],[]]})")), ParseError);
  CHECK_THROWS_AS(drawing_from_json(Json::parse(R"({"tree":{"n":1,"root":0,"children":[[]]},"pos":[]})")),
                  ParseError);
}

TEST_CASE("report JSON key order") {
  const Json r = report_to_json(verify(draw_c1_only(3).drawing()));
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"planar", "orthogonal", "onGrid", "topVisible", "subtreeSeparated", "width",
                                         "height", "leftWidth", "rightWidth", "topHeight", "bottomHeight", "area",
                                         "legLength", "leftArmLength", "rightArmLength"});
  CHECK(report_to_json(verify(draw_general(path_tree(4))))["legLength"].is_null());
}

TEST_CASE("SVG rendering") {
  const std::string svg = render_svg(draw_c1_only(2).drawing());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("#c0392b") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) ++lines;
  CHECK(lines == 3);
  CHECK(svg == render_svg(draw_c1_only(2).drawing()));
  CHECK_THROWS_AS(render_svg(GridDrawing::point(), RenderSpec{8, 4, 8}), std::invalid_argument);
}

TEST_CASE("tree specs") {
  CHECK(parse_tree_spec("complete:3")->size() == 13);
  CHECK(parse_tree_spec("random:20:5")->size() == 20);
  CHECK_THROWS_AS(parse_tree_spec("complete:x"), UsageError);
  CHECK_THROWS_AS(parse_tree_spec("random:10"), UsageError);
  CHECK_THROWS_AS(parse_tree_spec("bogus:1"), UsageError);
}

TEST_CASE("draw command") {
  const Run r = cli({"draw", "complete:3", "--algo", "pareto-min", "--format", "json", "--cache-dir", ""});
  REQUIRE(r.code == 0);
  const ParsedDrawing d = drawing_from_json(Json::parse(r.out));
  REQUIRE(d.drawing);
  CHECK(extents(*d.drawing).width == 5);
  CHECK(extents(*d.drawing).height == 5);

  const Run one = cli({"draw", "complete:1", "--algo", "c1"});
  REQUIRE(one.code == 0);
  CHECK(drawing_from_json(Json::parse(one.out)).drawing->size() == 1);

  const Run rnd = cli({"draw", "random:1000:42", "--algo", "general"});
  REQUIRE(rnd.code == 0);
  const ParsedDrawing g = drawing_from_json(Json::parse(rnd.out));
  CHECK(extents(*g.drawing).width <= 1000);
  CHECK(verify(*g.drawing).valid());

  CHECK(cli({"draw", "random:30:1", "--algo", "c1"}).code == 2);
  CHECK(cli({"draw", "complete:3", "--algo", "nope"}).code == 2);
  const Run svg = cli({"draw", "complete:3", "--algo", "c2", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("draw output verifies in a round trip") {
  for (const std::string algo : {"general", "c1", "c2", "golden-narrow", "golden-wide", "upper1149", "pareto-min"}) {
    const auto path = scratch("rt_" + algo + ".json");
    REQUIRE(cli({"draw", "complete:4", "--algo", algo, "-o", path.string(), "--cache-dir", ""}).code == 0);
    CHECK(cli({"verify", path.string()}).code == 0);
  }
  const auto p6 = scratch("pareto6.json");
  REQUIRE(cli({"draw", "complete:6", "--algo", "pareto-min", "-o", p6.string(), "--cache-dir", ""}).code == 0);
  const Run v = cli({"verify", p6.string()});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["area"] == 1184);
}

TEST_CASE("verify command") {
  const auto cross = scratch("cross.json");
  write_file(cross, R"({"tree":{"n":5,"root":0,"children":[[1],[2],[3],[4],[]]},)"
                    R"("pos":[[0,0],[2,0],[2,-1],[1,-1],[1,1]]})");
  const Run r = cli({"verify", cross.string()});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["planar"] == false);
  const auto frac = scratch("frac.json");
  write_file(frac, R"({"tree":{"n":2,"root":0,"children":[[1],[]]},"pos":[[0,0],[0.5,0]]})");
  const Run f = cli({"verify", frac.string()});
  CHECK(f.code == 1);
  CHECK(Json::parse(f.out)["onGrid"] == false);
  const auto junk = scratch("junk.json");
  write_file(junk, "{not json");
  CHECK(cli({"verify", junk.string()}).code == 2);
  CHECK(cli({"verify", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("table command") {
  const Run four = cli({"table", "--hmax", "4", "--cache-dir", ""});
  REQUIRE(four.code == 0);
  CHECK(four.out == "h n area\n1 1 1\n2 4 6\n3 13 25\n4 40 99\n");
  CHECK(cli({"table", "--hmax", "1", "--cache-dir", ""}).out == "h n area\n1 1 1\n");
  CHECK(cli({"table", "--hmax", "21"}).code == 2);

  const auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  const Run a = cli({"table", "--hmax", "12", "--cache-dir", dir.string()});
  const Run b = cli({"table", "--hmax", "12", "--cache-dir", dir.string()});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(a.out.rfind("12 "), std::string::npos) == "12 265720 1520189\n");
}

TEST_CASE("fit command") {
  const Run b = cli({"fit", "--builtin"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("a=", 0) == 0);

  const auto lin = scratch("linear.txt");
  write_file(lin, "n area\n1 2\n4 8\n13 26\n40 80\n121 242\n");
  const Run l = cli({"fit", lin.string()});
  REQUIRE(l.code == 0);
  const auto bpos = l.out.find("b=");
  CHECK(std::abs(std::stod(l.out.substr(bpos + 2)) - 1.0) < 1e-4);

  const auto syn = scratch("synthetic.txt");
  std::ostringstream s;
  for (double n : {10.0, 100.0, 1000.0, 10000.0}) s << n << ' ' << std::setprecision(17) << 5 * std::pow(n, 0.7) + 3 << '\n';
  write_file(syn, s.str());
  const Run y = cli({"fit", syn.string()});
  REQUIRE(y.code == 0);
  CHECK(std::abs(std::stod(y.out.substr(y.out.find("b=") + 2)) - 0.7) < 1e-3);

  const auto bad = scratch("bad.txt");
  write_file(bad, "1 2\n2 x\n3 4\n");
  CHECK(cli({"fit", bad.string()}).code == 2);
  CHECK(cli({"fit"}).code == 2);
}

TEST_CASE("bench command") {
  const Run r = cli({"bench", "--n", "2000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("planar=1") != std::string::npos);
}
