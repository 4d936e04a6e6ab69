#include <doctest.h>

#include "reembed/embed.hpp"
#include "reembed/errors.hpp"
#include "sample_ideals.hpp"

using namespace reembed;
using namespace reembed::testing;

namespace {

Point origin(const Ideal& I) { return Point::origin(I.ring().size()); }

void check_bound_chain(const Ideal& I, const EmbeddingReport& rep) {
  CHECK(rep.cot_dim + rep.lin_dim == rep.num_vars);
  CHECK(rep.cot_dim <= rep.edim.lo);
  CHECK(rep.edim.lo <= rep.edim.hi);
  CHECK(rep.edim.hi <= rep.sepdim.hi);
  CHECK(rep.sepdim.lo <= rep.sepdim.hi);
  CHECK(rep.num_vars - rep.lin_dim <= rep.sepdim.lo);
  CHECK(rep.certified == (rep.edim.exact() && rep.edim.lo == rep.cot_dim));
  if (rep.best_z) {
    CHECK(rep.sepdim.hi == rep.num_vars - rep.best_z->size());
    REQUIRE(rep.reembedding.has_value());
    CHECK(rep.reembedding->image_ring->size() == rep.sepdim.hi);
    for (const auto& g : I.generators()) {
      CHECK(ideal_membership(rep.reembedding->forward(g), rep.reembedding->image_ideal));
    }
  } else {
    CHECK(rep.sepdim.hi == rep.num_vars);
    CHECK_FALSE(rep.reembedding.has_value());
  }
}

}  // namespace

TEST_CASE("certify_optimal examples") {
  auto five = five_variable_ideal();
  const auto& r5 = five.ring_ptr();
  CHECK(certify_optimal(five, origin(five), {4, 1, 3}));
  CHECK_FALSE(certify_optimal(five, origin(five), {1, 3}));

  auto curve = singular_curve();
  CHECK(certify_optimal(curve, origin(curve), vars(curve.ring_ptr(), "y,z")));
  CHECK_FALSE(certify_optimal(curve, origin(curve), vars(curve.ring_ptr(), "x,y")));

  auto gap = gap_ideal();
  CHECK(linear_part_ideal(gap, origin(gap)).dim() == 2);
  CHECK_FALSE(certify_optimal(gap, origin(gap), vars(gap.ring_ptr(), "z")));

  auto r = xyz();
  CHECK_THROWS_AS(certify_optimal(ideal(r, {"x + 1"}), Point::origin(3), {0}), NotContainedInMaximalIdealError);
  (void)r5;
}

TEST_CASE("subsets_of_size enumerates lexicographically") {
  CHECK(subsets_of_size({0, 2, 5}, 2) == std::vector<VariableSet>{{0, 2}, {0, 5}, {2, 5}});
  CHECK(subsets_of_size({1, 2, 3}, 3) == std::vector<VariableSet>{{1, 2, 3}});
  CHECK(subsets_of_size({1, 2}, 3).empty());
  CHECK(subsets_of_size({1, 2}, 0).empty());
  CHECK(subsets_of_size({0, 1, 2, 3, 4}, 3).size() == 10);
}

TEST_CASE("search: certified curve in the plane of x") {
  auto I = singular_curve();
  auto rep = search_optimal_reembedding(I, origin(I));
  CHECK(rep.certified);
  CHECK(rep.edim == Bounds{1, 1});
  CHECK(rep.lin_dim == 2);
  REQUIRE(rep.best_z.has_value());
  CHECK(*rep.best_z == vars(I.ring_ptr(), "y,z"));
  REQUIRE(rep.reembedding.has_value());
  const auto& img = rep.reembedding->image_ideal;
  REQUIRE(img.generators().size() == 1);
  CHECK(img.generators()[0] == poly(img.ring_ptr(), "x^5 - x^4 + 2*x^2"));
  check_bound_chain(I, rep);
}

TEST_CASE("search: five variables into two") {
  auto I = five_variable_ideal();
  auto rep = search_optimal_reembedding(I, origin(I));
  CHECK(rep.certified);
  CHECK(rep.edim == Bounds{2, 2});
  CHECK(rep.candidates == VariableSet{0, 1, 2, 3, 4});
  // Lexicographic probing reaches {y, z, w} before {y, w, t}.
  REQUIRE(rep.best_z.has_value());
  CHECK(*rep.best_z == vars(I.ring_ptr(), "y,z,w"));
  check_bound_chain(I, rep);

  auto other = build_reembedding(I, vars(I.ring_ptr(), "t,y,w"));
  REQUIRE(other.image_ideal.generators().size() == 1);
  CHECK(other.image_ideal.generators()[0] == poly(other.image_ring, "x^4 + 2*x^2*z^2 + z^4 + 2*x^2 - 2*z^2"));
}

TEST_CASE("search: the sepdim gap stays an interval") {
  auto I = gap_ideal();
  for (bool fan : {false, true}) {
    SearchOptions opts;
    opts.use_fan = fan;
    auto rep = search_optimal_reembedding(I, origin(I), opts);
    CHECK_FALSE(rep.certified);
    CHECK(rep.cot_dim == 1);
    CHECK(rep.edim == Bounds{1, 2});
    CHECK(rep.sepdim == Bounds{2, 2});
    REQUIRE(rep.best_z.has_value());
    CHECK(*rep.best_z == vars(I.ring_ptr(), "z"));
    CHECK(rep.fan_requested == fan);
    if (fan) CHECK(rep.fan_size == std::optional<std::size_t>(26));
    check_bound_chain(I, rep);
  }
}

TEST_CASE("search: hypersurface without separating tuple") {
  auto I = rigid_hypersurface();
  SearchOptions opts;
  opts.use_fan = true;
  auto rep = search_optimal_reembedding(I, origin(I), opts);
  CHECK_FALSE(rep.certified);
  CHECK_FALSE(rep.best_z.has_value());
  CHECK(rep.edim == Bounds{3, 4});
  CHECK(rep.sepdim == Bounds{4, 4});
  CHECK(rep.fan_size == std::optional<std::size_t>(3));
  check_bound_chain(I, rep);
}

TEST_CASE("search: cap exceeded keeps the probing bounds") {
  auto I = gap_ideal();
  SearchOptions opts;
  opts.use_fan = true;
  opts.fan.cap = 4;
  auto rep = search_optimal_reembedding(I, origin(I), opts);
  CHECK(rep.fan_requested);
  CHECK_FALSE(rep.fan_size.has_value());
  CHECK(rep.edim == Bounds{1, 2});
}

TEST_CASE("search at a point other than the origin") {
  auto r = xyz();
  Point p(std::vector<Rational>{1, 2, 3});
  std::vector<Polynomial> gens;
  const auto curve = singular_curve();
  for (const auto& g : curve.generators()) gens.push_back(shift_from_origin(g, p));
  Ideal moved(r, gens);
  auto rep = search_optimal_reembedding(moved, p);
  CHECK(rep.certified);
  CHECK(rep.edim == Bounds{1, 1});
  REQUIRE(rep.best_z.has_value());
  CHECK(*rep.best_z == vars(r, "y,z"));
  check_bound_chain(centred_at(moved, p), rep);
  CHECK(rep.reembedding->image_ideal.generators()[0] == poly(rep.reembedding->image_ring, "x^5 - x^4 + 2*x^2"));
}

TEST_CASE("no linear part certifies the identity") {
  auto r = ring_of({"x", "y"});
  auto I = ideal(r, {"x^2 - y^3"});
  auto rep = search_optimal_reembedding(I, Point::origin(2));
  CHECK(rep.lin_dim == 0);
  CHECK(rep.certified);
  CHECK(rep.edim == Bounds{2, 2});
  CHECK_FALSE(rep.best_z.has_value());
  check_bound_chain(I, rep);
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: planted separating variables are candidates and are found") {
  RandomPolys gen(77);
  auto r = ring_of({"x", "y", "z", "w"});
  for (int trial = 0; trial < 30; ++trial) {
    VariableSet z;
    for (std::size_t i = 0; i < 4; ++i) {
      if (gen.uniform(0, 2) == 0) z.push_back(i);
    }
    VariableSet y;
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::find(z.begin(), z.end(), i) == z.end()) y.push_back(i);
    }
    if (y.empty()) continue;
    auto in_y = [&](Polynomial f) {
      std::vector<Term> keep;
      for (const auto& t : f.terms()) {
        bool ok = true;
        for (auto v : z) ok = ok && t.monomial[v] == 0;
        if (ok) keep.push_back(t);
      }
      return Polynomial::from_terms(r, std::move(keep));
    };
    std::vector<Polynomial> gens;
    for (auto v : z) gens.push_back(Polynomial::variable(r, v) - in_y(gen.polynomial_in_origin_ideal(r, 3, 2)));
    auto junk = in_y(gen.polynomial_in_origin_ideal(r, 2, 3));
    for (const auto& t : junk.terms()) {
      if (t.monomial.degree() < 2) junk -= Polynomial::from_terms(r, {t});
    }
    if (!junk.is_zero()) gens.push_back(junk);
    if (gens.empty()) continue;
    gens.push_back(gens.front() * gen.polynomial(r, 1, 1) + gens.back());
    Ideal I(r, gens);
    auto lin = linear_part_ideal(I, Point::origin(4));
    auto support = lin.support();
    for (auto v : z) CHECK(std::find(support.begin(), support.end(), v) != support.end());

    auto rep = search_optimal_reembedding(I, Point::origin(4));
    CHECK(rep.sepdim.hi <= 4 - z.size());
    check_bound_chain(I, rep);
  }
}

TEST_CASE("property: the fan never weakens the sepdim bound") {
  for (const auto& I : {singular_curve(), gap_ideal(), parabola_chain(), elimination_ideal(), rigid_hypersurface()}) {
    auto plain = search_optimal_reembedding(I, origin(I));
    SearchOptions opts;
    opts.use_fan = true;
    auto fan = search_optimal_reembedding(I, origin(I), opts);
    CHECK(fan.sepdim.hi <= plain.sepdim.hi);
    CHECK(fan.edim == plain.edim);
    check_bound_chain(I, plain);
    check_bound_chain(I, fan);
    auto exact = sepdim(enumerate_gfan(I)).value;
    CHECK(plain.sepdim == Bounds{exact, exact});
  }
}

TEST_CASE("property: serial and parallel probing agree") {
  for (const auto& I : {singular_curve(), gap_ideal(), five_variable_ideal(), parabola_chain()}) {
    auto cand = linear_part_ideal(I, origin(I)).support();
    for (std::size_t k = 1; k <= cand.size(); ++k) {
      auto subsets = subsets_of_size(cand, k);
      auto a = probe_serial(I, subsets);
      auto b = probe_parallel(I, subsets, 4);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->index == b->index);
        CHECK(a->sgb.image_part == b->sgb.image_part);
      }
    }
    SearchOptions par;
    par.threads = 4;
    auto s = search_optimal_reembedding(I, origin(I));
    auto p = search_optimal_reembedding(I, origin(I), par);
    CHECK(s.best_z == p.best_z);
    CHECK(s.edim == p.edim);
    CHECK(s.probes == p.probes);
  }
}
