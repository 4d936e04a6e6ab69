#include <doctest.h>

#include "reembed/cli.hpp"
#include "reembed/errors.hpp"
#include "reembed/parser.hpp"

#include <json.hpp>

#include <sstream>

using namespace reembed;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(REEMBED_DATA_DIR) + "/" + name + ".ideal"; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--json", "--no-timings"});
  auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("problem file parsing") {
  auto pf = parse_problem("# header\nring x, y, z\npoint 1, 2/3, -1\nideal\n  x - 1   # trailing\n\ny^2 - 4/9\nend\n");
  CHECK(pf.ring->names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(pf.point == Point(std::vector<Rational>{1, Rational(2, 3), -1}));
  REQUIRE(pf.generators.size() == 2);
  CHECK(pf.generators[1].to_string() == "y^2 - 4/9");

  auto plain = parse_problem("ring t\nideal\nt^2\nend");
  CHECK(plain.point == Point::origin(1));

  auto line_of = [](const char* text) {
    try {
      parse_problem(text);
    } catch (const Error& e) {
      CHECK(e.code() == "parse_error");
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(line_of("ideal\nx\nend") == "line 1: expected 'ring <variables>'");
  CHECK(line_of("ring x, x\nideal\nx\nend").rfind("line 1: variable 'x' repeated", 0) == 0);
  CHECK(line_of("ring x, 2y\nideal\nx\nend").rfind("line 1: bad variable name", 0) == 0);
  CHECK(line_of("ring x, y\npoint 1\nideal\nx\nend") == "line 2: point needs 2 coordinates");
  CHECK(line_of("ring x\npoint a\nideal\nx\nend") == "line 2: bad coordinate 'a'");
  CHECK(line_of("ring x\nx\nend") == "line 2: expected 'ideal'");
  CHECK(line_of("ring x\nideal\nx - x\nend") == "line 3: generator is zero");
  CHECK(line_of("ring x\nideal\nx\n") == "line 4: expected 'end'");
  CHECK(line_of("ring x\nideal\nend") == "line 3: the ideal has no generators");
  CHECK(line_of("ring x\nideal\nx\nend\nx") == "line 5: text after 'end'");
  CHECK(line_of("ring x\nideal\nx + y\nend").rfind("line 3: ", 0) == 0);
}

TEST_CASE("lin reports the linear part and tangent data") {
  auto r = run({"lin", data("tangent_line"), "--no-timings"});
  CHECK(r.code == 0);
  CHECK(r.out == "Lin basis: x, z; cotangent dim: 1; tangent basis: (0,1,0)\n");

  r = run({"lin", data("cusp_pair"), "--no-timings"});
  CHECK(r.out == "Lin basis: x; cotangent dim: 2; tangent basis: (0,1,0), (0,0,1)\n");

  r = run({"lin", data("shifted_circle"), "--no-timings"});
  CHECK(r.out == "Lin basis: x1 + 4*x2 - 9; cotangent dim: 1; tangent basis: (-4,1)\n");
}

TEST_CASE("reembed with a given Z") {
  auto r = run({"reembed", data("parabola_chain"), "--z", "y,z", "--no-timings"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "images: y -> x^2 - x, z -> x^4 - 2*x^3 + x^2"));
  CHECK(has_line(r.out, "image ideal: <0>"));
  CHECK(has_line(r.out, "edim: 1"));
  CHECK(has_line(r.out, "certified: yes"));

  auto partial = run({"reembed", data("parabola_chain"), "--z", "y", "--no-timings"});
  CHECK(has_line(partial.out, "certified: no"));
  CHECK(has_line(partial.out, "edim: [1, 2]"));

  auto none = run({"reembed", data("gap"), "--z", "x,y"});
  CHECK(none.code == kMath);
  CHECK(first_line(none.err).rfind("error: no_separating_tuple: ", 0) == 0);
}

TEST_CASE("reembed search reports") {
  auto r = run({"reembed", data("singular_curve"), "--no-timings"});
  CHECK(has_line(r.out, "best Z: {y, z}"));
  CHECK(has_line(r.out, "image ideal: <x^5 - x^4 + 2*x^2>"));
  CHECK(has_line(r.out, "certified: yes"));

  auto gap = run({"reembed", data("gap"), "--fan", "--no-timings"});
  CHECK(has_line(gap.out, "sepdim: 2"));
  CHECK(has_line(gap.out, "edim: [1, 2]"));
  CHECK(has_line(gap.out, "certified: no"));
  CHECK(has_line(gap.out, "fan: 26 cones"));

  auto rigid = run({"reembed", data("rigid_hypersurface"), "--no-timings"});
  CHECK(has_line(rigid.out, "best Z: none"));
  CHECK(has_line(rigid.out, "edim: [3, 4]"));
}

TEST_CASE("gfan summary line and classes") {
  auto r = run({"gfan", data("singular_curve"), "--no-timings"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "cones: 13, classes: 4");
  CHECK(has_line(r.out, "maximal classes: 1; sepdim: 1"));
  std::size_t cone_lines = 0, class_lines = 0;
  std::istringstream in(r.out);
  for (std::string l; std::getline(in, l);) {
    cone_lines += l.rfind("cone ", 0) == 0;
    class_lines += l.rfind("class ", 0) == 0;
  }
  CHECK(cone_lines == 13);
  CHECK(class_lines == 4);
}

TEST_CASE("gb tail and separate") {
  auto gb = run({"gb", data("elimination"), "--order", "elim:x", "--no-timings"});
  CHECK(gb.out == "ordering: elim(x)\nbasis size: 2\n[x] 1/2*y^3*z - 1/2*z^4 + x\n[y^4*z] y^4*z - y*z^4 + 2*z^2 - 2*y\n");

  auto t = run({"tail", data("parabola_chain"), "--poly", "1", "--var", "y", "--no-timings"});
  CHECK(t.out == "tail: x^2 - x; z-separating: yes\n");

  auto s = run({"separate", data("parabola_chain"), "--z", "y,z", "--no-timings"});
  CHECK(has_line(s.out, "f1: -x^2 + x + y"));
  CHECK(has_line(s.out, "image part: none"));
  CHECK(run({"separate", data("parabola_chain"), "--z", "x", "--no-timings"}).out == "none\n");
}

TEST_CASE("bbs subcommand") {
  auto r = run({"bbs", "--vars", "x,y,z", "--order-ideal", "1, z, y, x", "--no-timings"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "c-variables: 24");
  CHECK(has_line(r.out, "border: z^2, y*z, x*z, y^2, x*y, x^2"));
  CHECK(has_line(r.out, "generators: 36"));
}

TEST_CASE("exit codes and one-line reasons") {
  auto check = [](std::vector<std::string> args, int code, const std::string& tag) {
    auto r = run(std::move(args));
    CHECK(r.code == code);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: " + tag + ": ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  };
  check({}, kUsage, "usage");
  check({"frobnicate"}, kUsage, "usage");
  check({"gb", data("elimination")}, kUsage, "usage");
  check({"lin", "/nonexistent.ideal"}, kUsage, "io_error");
  check({"tail", data("parabola_chain"), "--poly", "7", "--var", "y"}, kUsage, "usage");
  check({"gb", data("elimination"), "--order", "nonsense"}, kParse, "bad_ordering");
  check({"separate", data("parabola_chain"), "--z", "q"}, kParse, "unknown_variable");
  check({"bbs", "--vars", "x,y", "--order-ideal", "1, x^2"}, kParse, "bad_order_ideal");
  check({"tail", data("parabola_chain"), "--poly", "2", "--var", "x"}, kMath, "z_not_in_linear_part");
  check({"gfan", data("gap"), "--cap", "5"}, kCap, "cap_exceeded");
  check({"reembed", data("gap"), "--fan", "--cap", "5", "--z", "z"}, kCap, "cap_exceeded");

  auto help = run({"--help"});
  CHECK(help.code == kOk);
  CHECK(help.out.find("reembed") != std::string::npos);
}

TEST_CASE("JSON schema and agreement with text") {
  auto doc = json_of({"reembed", data("gap"), "--fan"});
  CHECK(doc.size() == 4);
  CHECK(doc["command"] == "reembed");
  CHECK(doc["input"]["ring"] == Json({"x", "y", "z"}));
  CHECK(doc["timings_ms"] == Json::object());
  const auto& res = doc["result"];
  CHECK(res["cotangent_dim"] == 1);
  CHECK(res["sepdim"] == Json({{"lo", 2}, {"hi", 2}}));
  CHECK(res["edim"] == Json({{"lo", 1}, {"hi", 2}}));
  CHECK(res["certified"] == false);
  CHECK(res["best_z"] == Json({"z"}));
  CHECK(res["fan_size"] == 26);

  auto text = run({"reembed", data("gap"), "--fan", "--no-timings"}).out;
  CHECK(has_line(text, "probes: " + std::to_string(res["probes"].get<int>())));
  CHECK(has_line(text, "variables: 3; cotangent dim: 1; Lin dim: " + std::to_string(res["lin_dim"].get<int>())));

  auto fan = json_of({"gfan", data("singular_curve")});
  CHECK(fan["result"]["cones"] == 13);
  CHECK(fan["result"]["classes"] == 4);
  CHECK(fan["result"]["cone_list"].size() == 13);
  CHECK(fan["result"]["class_list"].size() == 4);
  auto fan_text = run({"gfan", data("singular_curve"), "--no-timings"}).out;
  for (std::size_t k = 0; k < 13; ++k) {
    const auto& c = fan["result"]["cone_list"][k];
    std::string w;
    for (const auto& x : c["witness"]) w += (w.empty() ? "" : ",") + std::to_string(x.get<long>());
    CHECK(fan_text.find("cone " + std::to_string(k + 1) + ": ") != std::string::npos);
    CHECK(fan_text.find("witness (" + w + ")") != std::string::npos);
  }

  auto timed = run({"--json", "lin", data("tangent_line")});
  auto t = Json::parse(timed.out);
  CHECK(t["timings_ms"]["total"].is_number());
}

TEST_CASE("JSON round-trips") {
  std::vector<std::vector<std::string>> commands = {
      {"lin", data("shifted_circle")},
      {"gb", data("elimination"), "--order", "elim:x"},
      {"separate", data("parabola_chain"), "--z", "y,z"},
      {"reembed", data("singular_curve")},
      {"reembed", data("parabola_chain"), "--z", "y,z", "--fan"},
      {"gfan", data("singular_curve")},
      {"bbs", "--vars", "x,y", "--order-ideal", "1, y, x"},
  };
  for (const auto& args : commands) {
    auto doc = json_of(args);
    CHECK(Json::parse(doc.dump()) == doc);
    CHECK(Json::parse(doc.dump(2)) == doc);
  }

  // Printed polynomials re-parse to themselves.
  auto doc = json_of({"reembed", data("singular_curve")});
  auto ring = make_ring(doc["result"]["reembedding"]["image_ring"].get<std::vector<std::string>>());
  for (const auto& g : doc["result"]["reembedding"]["image_ideal"]) {
    auto s = g.get<std::string>();
    CHECK(parse_polynomial(s, ring).to_string() == s);
  }
  auto full = make_ring(doc["input"]["ring"].get<std::vector<std::string>>());
  for (auto& [name, image] : doc["result"]["reembedding"]["images"].items()) {
    auto s = image.get<std::string>();
    CHECK(parse_polynomial(s, full).to_string() == s);
  }
}

TEST_CASE("output is deterministic across runs and thread counts") {
  std::vector<std::vector<std::string>> commands = {
      {"gfan", data("gap")},
      {"reembed", data("gap"), "--fan"},
      {"reembed", data("five_variable")},
  };
  for (auto args : commands) {
    for (bool json : {false, true}) {
      auto base = args;
      base.push_back("--no-timings");
      if (json) base.push_back("--json");
      auto a = run(base);
      auto b = run(base);
      auto threaded = base;
      threaded.insert(threaded.end(), {"--threads", "4"});
      auto c = run(threaded);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK(a.out == c.out);
    }
  }
}
