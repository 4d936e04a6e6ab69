#include "reembed/cli.hpp"

#include "reembed/bbs.hpp"
#include "reembed/cotangent.hpp"
#include "reembed/embed.hpp"
#include "reembed/errors.hpp"
#include "reembed/gfan.hpp"
#include "reembed/separating.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace reembed {
namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  bool no_timings = false;
  int threads = 1;
};

/// What a subcommand hands back: the JSON record and its text rendering.
struct Outcome {
  Json input;
  Json result;
  std::string text;
};

std::vector<std::string> names_of(const Ring& ring, const std::vector<std::size_t>& vars) {
  std::vector<std::string> out;
  for (auto v : vars) out.push_back(ring.name(v));
  return out;
}

std::vector<std::string> printed(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

std::string tuple(const std::vector<std::string>& items) { return "(" + join(items, ",") + ")"; }

std::vector<std::string> rationals(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json bounds_json(const Bounds& b) { return Json{{"lo", b.lo}, {"hi", b.hi}}; }

std::string bounds_text(const Bounds& b) {
  if (b.exact()) return std::to_string(b.lo);
  return "[" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]";
}

Json problem_json(const std::string& path, const ProblemFile& pf) {
  return Json{{"file", path},
              {"ring", pf.ring->names()},
              {"point", rationals(pf.point.coords())},
              {"ideal", printed(pf.generators)}};
}

Json reembedding_json(const Reembedding& map) {
  Json images = Json::object();
  for (std::size_t i = 0; i < map.split.z.size(); ++i) {
    images[map.ring->name(map.split.z[i])] = map.images[i].to_string();
  }
  return Json{{"z", names_of(*map.ring, map.split.z)},
              {"image_ring", map.image_ring->names()},
              {"images", images},
              {"image_ideal", printed(map.image_ideal.generators())}};
}

void reembedding_text(std::ostringstream& os, const Reembedding& map) {
  std::vector<std::string> images;
  for (std::size_t i = 0; i < map.split.z.size(); ++i) {
    images.push_back(map.ring->name(map.split.z[i]) + " -> " + map.images[i].to_string());
  }
  os << "images: " << join(images) << "\n";
  os << "image ring: " << join(map.image_ring->names()) << "\n";
  os << "image ideal: " << map.image_ideal.to_string() << "\n";
}

void point_text(std::ostringstream& os, const Point& p) {
  if (!p.is_origin()) os << "point: " << tuple(rationals(p.coords())) << " (coordinates centred there)\n";
}

// ---------------------------------------------------------------------------
// Subcommands

Outcome run_lin(const std::string& path) {
  auto pf = read_problem_file(path);
  auto lin = linear_part_ideal(pf.ideal(), pf.point);
  auto tangent = tangent_space(pf.ideal(), pf.point);
  Outcome o;
  o.input = problem_json(path, pf);
  Json tan = Json::array();
  std::vector<std::string> tan_text;
  for (const auto& v : tangent) {
    tan.push_back(rationals(v));
    tan_text.push_back(tuple(rationals(v)));
  }
  auto basis = printed(lin.basis());
  o.result = Json{{"lin_basis", basis},
                  {"lin_dim", lin.dim()},
                  {"cotangent_dim", pf.ring->size() - lin.dim()},
                  {"tangent_basis", tan}};
  std::ostringstream os;
  os << "Lin basis: " << (basis.empty() ? "none" : join(basis)) << "; cotangent dim: " << pf.ring->size() - lin.dim()
     << "; tangent basis: " << (tan_text.empty() ? "none" : join(tan_text)) << "\n";
  o.text = os.str();
  return o;
}

Outcome run_gb(const std::string& path, const std::string& order) {
  auto pf = read_problem_file(path);
  auto ord = parse_ordering(*pf.ring, order);
  auto gb = buchberger(pf.ideal(), ord);
  Outcome o;
  o.input = problem_json(path, pf);
  o.input["order"] = order;
  Json elems = Json::array();
  std::ostringstream os;
  os << "ordering: " << ord.describe(*pf.ring) << "\n";
  os << "basis size: " << gb.size() << "\n";
  for (const auto& e : gb.elements()) {
    auto lead = e.lead.to_string(*pf.ring);
    elems.push_back(Json{{"lead", lead}, {"poly", e.poly.to_string()}});
    os << "[" << lead << "] " << e.poly.to_string() << "\n";
  }
  o.result = Json{{"ordering", ord.describe(*pf.ring)}, {"basis", elems}};
  o.text = os.str();
  return o;
}

Outcome run_tail(const std::string& path, std::size_t index, const std::string& var) {
  auto pf = read_problem_file(path);
  if (index < 1 || index > pf.generators.size()) {
    throw std::invalid_argument("--poly must lie in 1.." + std::to_string(pf.generators.size()));
  }
  auto z = pf.ring->index(var);
  const auto& f = pf.generators[index - 1];
  auto t = tail(f, z);
  bool sep = is_z_separating(f, z);
  Outcome o;
  o.input = problem_json(path, pf);
  o.input["poly"] = index;
  o.input["var"] = var;
  o.result = Json{{"tail", t.to_string()}, {"z_separating", sep}};
  o.text = "tail: " + t.to_string() + "; z-separating: " + (sep ? "yes" : "no") + "\n";
  return o;
}

Outcome run_separate(const std::string& path, const std::string& zlist) {
  auto pf = read_problem_file(path);
  auto z = parse_variable_list(*pf.ring, zlist);
  auto sgb = find_z_separating_gb(centred_at(pf.ideal(), pf.point), z);
  Outcome o;
  o.input = problem_json(path, pf);
  o.input["z"] = names_of(*pf.ring, z);
  std::ostringstream os;
  point_text(os, pf.point);
  if (!sgb) {
    o.result = Json{{"found", false}};
    os << "none\n";
  } else {
    auto image = sgb->image_part.polynomials();
    o.result = Json{{"found", true},
                    {"ordering", sgb->ordering.describe(*pf.ring)},
                    {"sep_part", printed(sgb->sep_part)},
                    {"image_part", printed(image)}};
    os << "Z: " << tuple(names_of(*pf.ring, sgb->split.z)) << "\n";
    os << "ordering: " << sgb->ordering.describe(*pf.ring) << "\n";
    for (std::size_t i = 0; i < sgb->sep_part.size(); ++i) os << "f" << i + 1 << ": " << sgb->sep_part[i].to_string() << "\n";
    if (image.empty()) os << "image part: none\n";
    for (std::size_t j = 0; j < image.size(); ++j) os << "g" << j + 1 << ": " << image[j].to_string() << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome run_reembed_given(const ProblemFile& pf, const std::string& path, const std::string& zlist, bool fan,
                          std::size_t cap, const Globals& g) {
  auto z = parse_variable_list(*pf.ring, zlist);
  auto I = pf.ideal();
  auto centred = centred_at(I, pf.point);
  const std::size_t n = pf.ring->size();
  const std::size_t cot = cotangent_dim(I, pf.point);
  auto map = build_reembedding(centred, z);
  bool certified = certify_optimal(I, pf.point, z);
  Bounds edim = certified ? Bounds{n - z.size(), n - z.size()} : Bounds{cot, n - z.size()};

  Outcome o;
  o.input = problem_json(path, pf);
  o.input["z"] = names_of(*pf.ring, z);
  o.input["fan"] = fan;
  o.result = Json{{"num_vars", n},
                  {"cotangent_dim", cot},
                  {"lin_dim", n - cot},
                  {"edim", bounds_json(edim)},
                  {"certified", certified},
                  {"reembedding", reembedding_json(map)}};
  std::ostringstream os;
  point_text(os, pf.point);
  os << "Z: " << tuple(names_of(*pf.ring, z)) << "\n";
  reembedding_text(os, map);
  os << "variables: " << n << "; cotangent dim: " << cot << "; Lin dim: " << n - cot << "\n";
  os << "edim: " << bounds_text(edim) << "\n";
  os << "certified: " << (certified ? "yes" : "no") << "\n";
  if (fan) {
    FanOptions opts;
    opts.cap = cap;
    opts.threads = g.threads;
    auto gf = enumerate_gfan(centred, opts);
    auto sd = sepdim(gf).value;
    o.result["fan_size"] = gf.size();
    o.result["sepdim"] = sd;
    os << "fan: " << gf.size() << " cones; sepdim: " << sd << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome run_reembed(const std::string& path, const std::string& zlist, bool fan, std::size_t cap,
                    const Globals& g) {
  auto pf = read_problem_file(path);
  if (!zlist.empty()) return run_reembed_given(pf, path, zlist, fan, cap, g);
  SearchOptions opts;
  opts.use_fan = fan;
  opts.threads = g.threads;
  opts.fan.threads = g.threads;
  opts.fan.cap = cap;
  auto rep = search_optimal_reembedding(pf.ideal(), pf.point, opts);
  const auto& ring = *pf.ring;

  Outcome o;
  o.input = problem_json(path, pf);
  o.input["fan"] = fan;
  o.result = Json{{"num_vars", rep.num_vars},
                  {"cotangent_dim", rep.cot_dim},
                  {"lin_dim", rep.lin_dim},
                  {"candidates", names_of(ring, rep.candidates)},
                  {"best_z", rep.best_z ? Json(names_of(ring, *rep.best_z)) : Json(nullptr)},
                  {"sepdim", bounds_json(rep.sepdim)},
                  {"edim", bounds_json(rep.edim)},
                  {"certified", rep.certified},
                  {"probes", rep.probes},
                  {"fan_requested", rep.fan_requested},
                  {"fan_size", rep.fan_size ? Json(*rep.fan_size) : Json(nullptr)},
                  {"reembedding", rep.reembedding ? reembedding_json(*rep.reembedding) : Json(nullptr)}};
  std::ostringstream os;
  point_text(os, pf.point);
  os << "variables: " << rep.num_vars << "; cotangent dim: " << rep.cot_dim << "; Lin dim: " << rep.lin_dim << "\n";
  os << "candidates: " << (rep.candidates.empty() ? "none" : join(names_of(ring, rep.candidates))) << "\n";
  os << "probes: " << rep.probes << "\n";
  os << "best Z: " << (rep.best_z ? "{" + join(names_of(ring, *rep.best_z)) + "}" : std::string("none")) << "\n";
  os << "sepdim: " << bounds_text(rep.sepdim) << "\n";
  os << "edim: " << bounds_text(rep.edim) << "\n";
  os << "certified: " << (rep.certified ? "yes" : "no") << "\n";
  if (rep.reembedding) reembedding_text(os, *rep.reembedding);
  if (rep.fan_requested) {
    os << "fan: " << (rep.fan_size ? std::to_string(*rep.fan_size) + " cones" : std::string("not run or cap exceeded"))
       << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome run_gfan(const std::string& path, std::size_t cap, const Globals& g) {
  auto pf = read_problem_file(path);
  FanOptions opts;
  opts.cap = cap;
  opts.threads = g.threads;
  auto fan = enumerate_gfan(centred_at(pf.ideal(), pf.point), opts);
  const auto& ring = *pf.ring;
  auto sep = separating_classes(fan);
  auto maximal = maximal_classes(fan);
  auto sd = sepdim(fan).value;

  Outcome o;
  o.input = problem_json(path, pf);
  o.input["cap"] = cap;
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    std::vector<std::string> leads;
    for (const auto& e : c.gb.elements()) leads.push_back(e.lead.to_string(ring));
    cones.push_back(Json{{"li", names_of(ring, li_set(c.gb))},
                         {"leads", leads},
                         {"witness", c.witness},
                         {"basis", printed(c.gb.polynomials())}});
  }
  Json classes = Json::array();
  std::ostringstream cls;
  for (std::size_t k = 0; k < sep.size(); ++k) {
    const auto& c = fan.classes[sep[k]];
    bool is_max = std::find(maximal.begin(), maximal.end(), sep[k]) != maximal.end();
    std::vector<std::size_t> numbers;
    std::vector<std::string> number_text;
    for (auto i : c.cones) {
      numbers.push_back(i + 1);
      number_text.push_back(std::to_string(i + 1));
    }
    classes.push_back(Json{{"li", names_of(ring, c.li)}, {"cones", numbers}, {"maximal", is_max}});
    cls << "class " << k + 1 << ": li {" << join(names_of(ring, c.li)) << "}; cones " << join(number_text)
        << (is_max ? "; maximal" : "") << "\n";
  }
  std::size_t maximal_separating = sd < ring.size() ? maximal.size() : 0;
  o.result = Json{{"cones", fan.size()},
                  {"classes", sep.size()},
                  {"maximal_classes", maximal_separating},
                  {"sepdim", sd},
                  {"cone_list", cones},
                  {"class_list", classes}};
  std::ostringstream os;
  point_text(os, pf.point);
  os << "cones: " << fan.size() << ", classes: " << sep.size() << "\n";
  os << "maximal classes: " << maximal_separating << "; sepdim: " << sd << "\n";
  os << export_fan(fan) << cls.str();
  o.text = os.str();
  return o;
}

Outcome run_bbs(const std::string& vars, const std::string& order_ideal) {
  std::vector<std::string> names;
  {
    std::istringstream in(vars);
    std::string item;
    while (std::getline(in, item, ',')) {
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      if (!is_identifier(item)) throw Error("bad_variable", "bad variable name '" + item + "'");
      if (std::find(names.begin(), names.end(), item) != names.end()) {
        throw Error("bad_variable", "variable '" + item + "' repeated");
      }
      names.push_back(item);
    }
  }
  if (names.empty()) throw Error("bad_variable", "no variables given");
  auto ring = make_ring(names);
  auto o_ideal = parse_order_ideal(ring, order_ideal);
  auto b = bbs_ideal(o_ideal);

  std::vector<std::string> order_terms, border_terms;
  for (const auto& t : o_ideal.terms()) order_terms.push_back(t.to_string(*ring));
  for (const auto& t : b.border) border_terms.push_back(t.to_string(*ring));
  Outcome o;
  o.input = Json{{"vars", names}, {"order_ideal", order_terms}};
  o.result = Json{{"c_variables", b.c_ring->size()},
                  {"c_ring", b.c_ring->names()},
                  {"border", border_terms},
                  {"generators", printed(b.generators)}};
  std::ostringstream os;
  os << "c-variables: " << b.c_ring->size() << "\n";
  os << "border: " << join(border_terms) << "\n";
  os << "generators: " << b.generators.size() << "\n";
  for (const auto& f : b.generators) os << f.to_string() << "\n";
  o.text = os.str();
  return o;
}

int fail(std::ostream& err, int code, const std::string& tag, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << tag << ": " << line << "\n";
  return code;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating re-embeddings of affine schemes", "reembed"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print the JSON report");
  app.add_flag("--no-timings", g.no_timings, "Leave out wall-clock timings");
  app.add_option("--threads", g.threads, "OpenMP threads for fan traversal and probing")->check(CLI::PositiveNumber);

  std::string file, order, var, zlist, vars, order_ideal;
  std::size_t poly_index = 0, cap = 10000;
  bool fan = false;
  std::function<Outcome()> action;
  std::string command;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Ideal file")->required();
    return sub;
  };
  auto* lin = with_file(app.add_subcommand("lin", "Linear part basis and cotangent/tangent dimensions"));
  lin->callback([&] { action = [&] { return run_lin(file); }; });

  auto* gb = with_file(app.add_subcommand("gb", "Reduced marked Groebner basis"));
  gb->add_option("--order", order, "lex, degrevlex, elim:<vars> or weights:<rows>")->required();
  gb->callback([&] { action = [&] { return run_gb(file, order); }; });

  auto* tl = with_file(app.add_subcommand("tail", "Tail of a generator with respect to a variable"));
  tl->add_option("--poly", poly_index, "1-based generator index")->required();
  tl->add_option("--var", var, "Variable")->required();
  tl->callback([&] { action = [&] { return run_tail(file, poly_index, var); }; });

  auto* sep = with_file(app.add_subcommand("separate", "Z-separating Groebner basis, or none"));
  sep->add_option("--z", zlist, "Comma-separated variables")->required();
  sep->callback([&] { action = [&] { return run_separate(file, zlist); }; });

  auto* re = with_file(app.add_subcommand("reembed", "Optimal separating re-embedding report"));
  re->add_option("--z", zlist, "Use this Z instead of searching");
  re->add_flag("--fan", fan, "Cross-check with the Groebner fan");
  re->add_option("--cap", cap, "Cone cap for --fan");
  re->callback([&] { action = [&] { return run_reembed(file, zlist, fan, cap, g); }; });

  auto* gf = with_file(app.add_subcommand("gfan", "Restricted Groebner fan and LI classes"));
  gf->add_option("--cap", cap, "Maximum number of cones");
  gf->callback([&] { action = [&] { return run_gfan(file, cap, g); }; });

  auto* bb = app.add_subcommand("bbs", "Border basis scheme ideal of an order ideal");
  bb->add_option("--vars", vars, "Comma-separated variables")->required();
  bb->add_option("--order-ideal", order_ideal, "Comma-separated terms, starting with 1")->required();
  bb->callback([&] { action = [&] { return run_bbs(vars, order_ideal); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kUsage, "usage", e.what());
  }
  command = app.get_subcommands().front()->get_name();

  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    o = action();
  } catch (const CapExceededError& e) {
    return fail(err, kCap, e.code(), e.what());
  } catch (const MathError& e) {
    return fail(err, kMath, e.code(), e.what());
  } catch (const Error& e) {
    return fail(err, e.code() == "io_error" ? kUsage : kParse, e.code(), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, kUsage, "usage", e.what());
  } catch (const std::exception& e) {
    return fail(err, kMath, "internal_error", e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    Json timings = Json::object();
    if (!g.no_timings) timings["total"] = ms;
    Json doc{{"command", command}, {"input", o.input}, {"result", o.result}, {"timings_ms", timings}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
    if (!g.no_timings) out << "time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
  }
  return kOk;
}

}  // namespace reembed
