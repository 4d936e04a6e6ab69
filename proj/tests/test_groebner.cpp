#include <doctest.h>

#include "reembed/errors.hpp"
#include "reembed/groebner.hpp"
#include "test_util.hpp"

using namespace reembed;
using namespace reembed::testing;

namespace {

MarkedGB gb_of(const RingPtr& r, const TermOrdering& ord, std::initializer_list<const char*> gens) {
  return buchberger(ideal(r, gens), ord);
}

std::vector<std::string> printed(const MarkedGB& gb) {
  std::vector<std::string> out;
  for (const auto& e : gb.elements()) out.push_back(e.poly.to_string());
  return out;
}

// Random ideal in up to 4 variables with generators of degree <= 3 that is
// proper (forced through the origin).
Ideal random_ideal(RandomPolys& gen, const RingPtr& r) {
  std::vector<Polynomial> gens;
  for (unsigned k = gen.uniform(1, 3); k-- > 0;) {
    auto f = gen.polynomial_in_origin_ideal(r, 3, 3);
    if (f.is_zero()) f = Polynomial::variable(r, gen.uniform(0, static_cast<unsigned>(r->size() - 1)));
    gens.push_back(f);
  }
  return Ideal(r, std::move(gens));
}

}  // namespace

TEST_CASE("buchberger: elimination example with leading term x") {
  auto r = ring_of({"x", "y", "z"});
  auto gb = gb_of(r, TermOrdering::elim(3, vars(r, "x")), {"y^3*z - z^4 + 2*x", "z^2 - x*y - y"});
  REQUIRE(gb.size() == 2);
  CHECK(gb.elements()[0].lead == Monomial{1, 0, 0});
  CHECK(gb.elements()[0].poly == poly(r, "x + 1/2*y^3*z - 1/2*z^4"));
  CHECK(gb.elements()[1].lead == Monomial{0, 4, 1});
  CHECK(gb.elements()[1].poly == poly(r, "y^4*z - y*z^4 + 2*z^2 - 2*y"));
  CHECK(is_reduced_marked(gb));
}

TEST_CASE("buchberger: two-variable elimination block") {
  auto r = ring_of({"x", "y", "z"});
  auto gb = gb_of(r, TermOrdering::elim(3, vars(r, "y,z")), {"x^2 - x - y", "y^2 - z"});
  REQUIRE(gb.size() == 2);
  // Canonical order is ascending DegRevLex on the leads, so z comes first.
  CHECK(gb.elements()[0].lead == Monomial{0, 0, 1});
  CHECK(gb.elements()[0].poly == poly(r, "z - x^4 + 2*x^3 - x^2"));
  CHECK(gb.elements()[1].lead == Monomial{0, 1, 0});
  CHECK(gb.elements()[1].poly == poly(r, "y - x^2 + x"));
  CHECK(gb.to_string() == "{(z, -x^4 + 2*x^3 - x^2 + z), (y, -x^2 + x + y)}");
}

TEST_CASE("buchberger: principal linear ideal under lex") {
  auto r = ring_of({"x", "y"});
  auto gb = gb_of(r, TermOrdering::lex(2), {"x + y"});
  CHECK(gb.to_string() == "{(x, x + y)}");
  auto other = gb_of(r, TermOrdering::weights(2, std::vector<std::vector<Rational>>{{1, 2}}), {"x + y"});
  CHECK(other.to_string() == "{(y, x + y)}");
  CHECK(gb != other);
}

TEST_CASE("buchberger: lex basis of a binomial chain") {
  auto r = ring_of({"x", "y", "z"});
  auto gb = gb_of(r, TermOrdering::lex(3), {"x - y^2", "y^2 - z^3"});
  CHECK(printed(gb) == std::vector<std::string>{"-z^3 + x", "-z^3 + y^2"});
}

TEST_CASE("buchberger: unit and zero ideals") {
  auto r = ring_of({"x", "y"});
  CHECK_THROWS_AS(gb_of(r, TermOrdering::degrevlex(2), {"x", "x + 1"}), UnitIdealError);
  CHECK_THROWS_AS(gb_of(r, TermOrdering::lex(2), {"3"}), UnitIdealError);
  CHECK(buchberger(Ideal::zero(r), TermOrdering::lex(2)).empty());
}

TEST_CASE("normal_form examples") {
  auto r = ring_of({"x", "y", "z"});
  auto gb = gb_of(r, TermOrdering::elim(3, vars(r, "y,z")), {"x^2 - x - y", "y^2 - z"});
  CHECK(normal_form(poly(r, "y^2 - z"), gb).is_zero());
  for (const auto& g : gb.polynomials()) CHECK(normal_form(g, gb).is_zero());

  // Hand oracle: x^5 = x*(x^2)^2 -> x*y^2 modulo x^2 - y.
  auto r2 = ring_of({"x", "y"});
  auto g2 = gb_of(r2, TermOrdering::lex(2), {"x^2 - y"});
  CHECK(normal_form(poly(r2, "x^5"), g2) == poly(r2, "x*y^2"));
  CHECK(normal_form(poly(r2, "x^3 + 2*x^2 + 7"), g2) == poly(r2, "x*y + 2*y + 7"));
}

TEST_CASE("intersect_with_subring") {
  auto r = ring_of({"x", "y", "z"});
  auto i24 = ideal(r, {"y^3*z - z^4 + 2*x", "z^2 - x*y - y"});
  auto e = intersect_with_subring(i24, vars(r, "y,z"));
  REQUIRE(e.generators().size() == 1);
  CHECK(e.ring().names() == std::vector<std::string>{"y", "z"});
  CHECK(e.generators()[0] == poly(e.ring_ptr(), "y^4*z - y*z^4 + 2*z^2 - 2*y"));

  auto i29 = ideal(r, {"x^2 - x - y", "y^2 - z"});
  CHECK(intersect_with_subring(i29, vars(r, "x")).is_zero());

  auto i314 = ideal(r, {"x^2 - y", "x*y - x - z", "y^2 + z^2 + 2*x + y + 2*z", "x*z + z^2 + 2*x + 2*y + 2*z",
                        "y*z + z^2 + 3*x + 3*y + 3*z", "z^3 + z^2 - 5*x - 5*y - 5*z"});
  auto e314 = intersect_with_subring(i314, vars(r, "x"));
  REQUIRE(e314.generators().size() == 1);
  CHECK(e314.generators()[0] == poly(e314.ring_ptr(), "x^5 - x^4 + 2*x^2"));
}

TEST_CASE("ideal_membership") {
  auto r = ring_of({"x", "y", "z"});
  auto i = ideal(r, {"x + 1", "y - z - z^2"});
  for (const auto& g : i.generators()) CHECK(ideal_membership(g, i));
  auto combo = poly(r, "y") * i.generators()[0] - poly(r, "x") * i.generators()[1];
  CHECK(ideal_membership(combo, i));
  CHECK_FALSE(ideal_membership(poly(r, "y"), i));
  auto r2 = ring_of({"x", "y"});
  CHECK_FALSE(ideal_membership(poly(r2, "1"), ideal(r2, {"x", "y"})));
}

TEST_CASE("marked GB keys and printing") {
  auto r = ring_of({"x", "y", "z"});
  auto a = gb_of(r, TermOrdering::lex(3), {"x - y^2", "y^2 - z^3"});
  auto b = gb_of(r, TermOrdering::lex(3), {"y^2 - z^3", "x - z^3"});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  auto c = gb_of(r, TermOrdering::degrevlex(3), {"x - y^2", "y^2 - z^3"});
  CHECK(a.key() != c.key());
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: buchberger is idempotent and presentation independent") {
  RandomPolys gen(101);
  std::vector<RingPtr> rings = {ring_of({"x", "y"}), ring_of({"x", "y", "z"}), ring_of({"x", "y", "z", "w"})};
  int checked = 0;
  for (int k = 0; k < 50; ++k) {
    const auto& r = rings[k % rings.size()];
    auto I = random_ideal(gen, r);
    std::vector<TermOrdering> ords = {TermOrdering::degrevlex(r->size()), TermOrdering::lex(r->size())};
    for (const auto& ord : ords) {
      MarkedGB gb = buchberger(I, ord);
      CHECK(is_reduced_marked(gb));
      CHECK(buchberger(r, gb.polynomials(), ord) == gb);

      auto gens = I.generators();
      for (int extra = 0; extra < 2; ++extra) {
        Polynomial combo(r);
        for (const auto& g : I.generators()) combo += gen.polynomial(r, 2, 1) * g;
        gens.push_back(combo);
      }
      std::reverse(gens.begin(), gens.end());
      CHECK(buchberger(r, gens, ord) == gb);

      for (const auto& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
      ++checked;
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("property: normal form is K-linear") {
  RandomPolys gen(202);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    auto I = random_ideal(gen, r);
    auto gb = buchberger(I, TermOrdering::degrevlex(3));
    auto f = gen.polynomial(r, 5, 4), g = gen.polynomial(r, 5, 4);
    auto c = gen.nonzero_rational();
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
    CHECK(normal_form(f.scaled(c), gb) == normal_form(f, gb).scaled(c));
    auto nf = normal_form(f, gb);
    for (const auto& t : nf.terms()) {
      for (const auto& e : gb.elements()) CHECK_FALSE(e.lead.divides(t.monomial));
    }
    CHECK(ideal_membership(f - nf, I));
  }
}

TEST_CASE("property: interreduction leaves no divisible tail term") {
  RandomPolys gen(303);
  auto r = ring_of({"x", "y", "z"});
  auto elim = TermOrdering::elim(3, VariableSet{1});
  for (int k = 0; k < 30; ++k) {
    auto gb = buchberger(random_ideal(gen, r), elim);
    for (const auto& e : gb.elements()) {
      for (const auto& t : e.poly.terms()) {
        if (t.monomial == e.lead) continue;
        for (const auto& o : gb.elements()) CHECK_FALSE(o.lead.divides(t.monomial));
      }
    }
  }
}
