#include "reembed/gfan.hpp"

#include "reembed/errors.hpp"
#include "reembed/lp.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

namespace reembed {

namespace {

__extension__ using Int128 = __int128;

void make_primitive(IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Scales a non-negative rational vector to a primitive integer vector.
IntVector to_primitive(const Vector& v) {
  Integer den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    Integer x = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(x);
  }
  IntVector out;
  const Integer limit("140737488355328");
  for (auto& x : ints) {
    if (g != 0) x /= g;
    if (abs(x) >= limit) throw std::overflow_error("weight vector entry too large");
    out.push_back(x.get_si());
  }
  return out;
}

std::vector<IntVector> candidate_inequalities(const MarkedGB& gb) {
  const auto n = gb.ring().size();
  std::vector<IntVector> raw;
  for (const auto& e : gb.elements()) {
    for (const auto& t : e.poly.terms()) {
      if (t.monomial == e.lead) continue;
      IntVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = std::int64_t{e.lead[i]} - std::int64_t{t.monomial[i]};
      // Implied by the orthant.
      if (std::all_of(d.begin(), d.end(), [](auto x) { return x >= 0; })) continue;
      make_primitive(d);
      raw.push_back(std::move(d));
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // d >= d' componentwise makes d redundant on the orthant.
  std::vector<IntVector> out;
  for (std::size_t a = 0; a < raw.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < raw.size() && !dominated; ++b) {
      if (a == b) continue;
      dominated = std::equal(raw[a].begin(), raw[a].end(), raw[b].begin(), [](auto x, auto y) { return x >= y; });
    }
    if (!dominated) out.push_back(raw[a]);
  }
  return out;
}

// max t subject to d.w >= t (d in ineqs, except `equal`, where d.w = 0),
// w_i >= t (except w_zero = 0), sum w <= 1. Returns (t, w).
std::pair<Rational, Vector> interior_lp(const std::vector<IntVector>& ineqs, std::size_t n,
                                        std::size_t equal = SIZE_MAX, std::size_t w_zero = SIZE_MAX) {
  Matrix a;
  Vector b;
  auto row = [&](const IntVector& d, int sign, bool with_t) {
    Vector r(n + 1);
    for (std::size_t i = 0; i < n; ++i) r[i] = sign * d[i];
    if (with_t) r[n] = 1;
    a.push_back(std::move(r));
    b.push_back(0);
  };
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    if (k == equal) {
      row(ineqs[k], 1, false);
      row(ineqs[k], -1, false);
    } else {
      row(ineqs[k], -1, true);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    row(e, i == w_zero ? 1 : -1, i != w_zero);
  }
  Vector sum(n + 1, 1);
  sum[n] = 0;
  a.push_back(std::move(sum));
  b.push_back(1);
  Vector c(n + 1);
  c[n] = 1;
  auto res = maximize(a, b, c);
  if (!res.bounded) throw std::logic_error("interior LP is unbounded");
  Vector w(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
  return {res.value, std::move(w)};
}

Int128 dot(const IntVector& w, const Monomial& m) {
  Int128 s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<Int128>(w[i]) * m[i];
  return s;
}

Polynomial initial_form(const Polynomial& f, const IntVector& w) {
  Int128 best = 0;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto v = dot(w, t.monomial);
    if (first || v > best) best = v;
    first = false;
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (dot(w, t.monomial) == best) terms.push_back(t);
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(terms));
}

struct Expansion {
  GroebnerCone cone;
  std::vector<std::pair<IntVector, MarkedGB>> neighbours;
};

Expansion expand(const MarkedGB& gb, const std::vector<IntVector>& skip) {
  Expansion out{groebner_cone(gb), {}};
  for (const auto& f : facets(out.cone)) {
    if (f.on_orthant_boundary) continue;
    if (std::find(skip.begin(), skip.end(), f.normal) != skip.end()) continue;
    out.neighbours.emplace_back(f.normal, flip(out.cone.gb, f));
  }
  return out;
}

// Bookkeeping shared by both traversals: discovered bases in discovery order,
// and for each, the facet normals whose neighbour is already known.
class Discovery {
 public:
  explicit Discovery(std::size_t cap) : cap_(cap) {}

  bool add(MarkedGB gb) {
    index_.emplace(gb.key(), found_.size());
    found_.push_back(std::move(gb));
    skip_.emplace_back();
    return found_.size() <= cap_;
  }

  // Records the neighbour reached across `normal`; returns false once the cap is exceeded.
  bool record(const IntVector& normal, MarkedGB nb) {
    auto key = nb.key();
    auto it = index_.find(key);
    if (it != index_.end()) {
      skip_[it->second].push_back(negated(normal));
      return true;
    }
    std::size_t idx = found_.size();
    if (!add(std::move(nb))) return false;
    skip_[idx].push_back(negated(normal));
    return true;
  }

  std::size_t size() const noexcept { return found_.size(); }
  const MarkedGB& gb(std::size_t i) const { return found_[i]; }
  const std::vector<IntVector>& skip(std::size_t i) const { return skip_[i]; }

 private:
  std::size_t cap_;
  std::vector<MarkedGB> found_;
  std::vector<std::vector<IntVector>> skip_;
  std::unordered_map<std::string, std::size_t> index_;
};

MarkedGB start_basis(const Ideal& ideal, const FanOptions& options) {
  auto ord = options.start ? *options.start : TermOrdering::degrevlex(ideal.ring().size());
  return buchberger(ideal, ord);
}

}  // namespace

bool GroebnerCone::contains(std::span<const std::int64_t> w) const {
  if (w.size() != gb.ring().size()) throw std::invalid_argument("weight length mismatch");
  if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 0; })) return false;
  for (const auto& d : inequalities) {
    Int128 s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<Int128>(d[i]) * w[i];
    if (s < 0) return false;
  }
  return true;
}

GroebnerCone groebner_cone(const MarkedGB& gb) {
  const auto n = gb.ring().size();
  auto cands = candidate_inequalities(gb);
  auto [t, w] = interior_lp(cands, n);
  if (t <= 0) throw MarkingInconsistentError();
  std::vector<IntVector> ineqs;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (interior_lp(cands, n, k).first > 0) ineqs.push_back(cands[k]);
  }
  auto witness = to_primitive(w);
  auto ord = TermOrdering::weights(n, std::vector<IntVector>{witness});
  return GroebnerCone{gb.with_ordering(std::move(ord)), std::move(ineqs), std::move(witness)};
}

std::vector<Facet> facets(const GroebnerCone& cone) {
  const auto n = cone.gb.ring().size();
  const auto& ineqs = cone.inequalities;
  std::vector<Facet> out;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    auto [t, w] = interior_lp(ineqs, n, k);
    if (t <= 0) throw std::logic_error("stored inequality does not define a facet");
    out.push_back({ineqs[k], to_primitive(w), false});
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [t, w] = interior_lp(ineqs, n, SIZE_MAX, i);
    if (t <= 0) continue;
    IntVector e(n);
    e[i] = 1;
    out.push_back({std::move(e), to_primitive(w), true});
  }
  return out;
}

MarkedGB flip(const MarkedGB& gb, const Facet& facet) {
  if (facet.on_orthant_boundary) throw FlipOnBoundaryError();
  const auto& ring = gb.ring_ptr();
  const auto n = ring->size();
  const auto& w = facet.interior_point;
  std::vector<Polynomial> initial;
  for (const auto& e : gb.elements()) initial.push_back(initial_form(e.poly, w));
  auto target = TermOrdering::weights(n, std::vector<IntVector>{w, negated(facet.normal)});
  auto h = buchberger(ring, initial, target);
  std::vector<Polynomial> lifted;
  for (const auto& e : h.elements()) lifted.push_back(e.poly - normal_form(e.poly, gb));
  return interreduce(ring, lifted, target);
}

VariableSet li_set(const MarkedGB& gb) {
  VariableSet out;
  for (const auto& e : gb.elements()) {
    auto v = e.lead.as_variable();
    if (v < gb.ring().size()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LIClass> li_classes(const std::vector<GroebnerCone>& cones) {
  std::vector<LIClass> out;
  std::map<VariableSet, std::size_t> index;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    auto li = li_set(cones[k].gb);
    auto [it, inserted] = index.emplace(li, out.size());
    if (inserted) out.push_back({std::move(li), {}});
    out[it->second].cones.push_back(k);
  }
  return out;
}

FanTraversal traverse_gfan_serial(const Ideal& ideal, const FanOptions& options) {
  FanTraversal out;
  Discovery seen(options.cap);
  if (!seen.add(start_basis(ideal, options))) {
    out.complete = false;
    return out;
  }
  for (std::size_t idx = 0; idx < seen.size(); ++idx) {
    auto ex = expand(seen.gb(idx), seen.skip(idx));
    out.cones.push_back(std::move(ex.cone));
    for (auto& [normal, nb] : ex.neighbours) {
      if (!seen.record(normal, std::move(nb))) {
        out.complete = false;
        return out;
      }
    }
  }
  return out;
}

FanTraversal traverse_gfan_parallel(const Ideal& ideal, const FanOptions& options) {
  FanTraversal out;
  Discovery seen(options.cap);
  if (!seen.add(start_basis(ideal, options))) {
    out.complete = false;
    return out;
  }
  std::size_t level_begin = 0;
  while (level_begin < seen.size()) {
    const std::size_t level_end = seen.size();
    const auto count = static_cast<std::ptrdiff_t>(level_end - level_begin);
    std::vector<std::optional<Expansion>> results(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, options.threads))
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      auto idx = level_begin + static_cast<std::size_t>(k);
      try {
        results[static_cast<std::size_t>(k)] = expand(seen.gb(idx), seen.skip(idx));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (errors[k]) std::rethrow_exception(errors[k]);
      out.cones.push_back(std::move(results[k]->cone));
      for (auto& [normal, nb] : results[k]->neighbours) {
        if (!seen.record(normal, std::move(nb))) {
          out.complete = false;
          return out;
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

FanTraversal traverse_gfan(const Ideal& ideal, const FanOptions& options) {
  return options.threads > 1 ? traverse_gfan_parallel(ideal, options) : traverse_gfan_serial(ideal, options);
}

GroebnerFan enumerate_gfan(const Ideal& ideal, const FanOptions& options) {
  auto tr = traverse_gfan(ideal, options);
  if (!tr.complete) throw CapExceededError(options.cap);
  GroebnerFan fan{std::move(tr.cones), {}};
  fan.classes = li_classes(fan.cones);
  return fan;
}

SepDim sepdim(const GroebnerFan& fan) {
  if (fan.cones.empty()) throw std::invalid_argument("empty fan");
  std::size_t best = 0;
  for (std::size_t k = 1; k < fan.cones.size(); ++k) {
    if (li_set(fan.cones[k].gb).size() > li_set(fan.cones[best].gb).size()) best = k;
  }
  const auto& gb = fan.cones[best].gb;
  return SepDim{gb.ring().size() - li_set(gb).size(), gb};
}

SepDim sepdim(const Ideal& ideal, const FanOptions& options) { return sepdim(enumerate_gfan(ideal, options)); }

std::vector<std::size_t> maximal_classes(const GroebnerFan& fan) {
  std::size_t most = 0;
  for (const auto& c : fan.classes) most = std::max(most, c.li.size());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < fan.classes.size(); ++k) {
    if (fan.classes[k].li.size() == most) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> separating_classes(const GroebnerFan& fan) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < fan.classes.size(); ++k) {
    if (!fan.classes[k].li.empty()) out.push_back(k);
  }
  return out;
}

std::string export_fan(const GroebnerFan& fan) {
  std::string out;
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    const auto& cone = fan.cones[k];
    const auto& ring = cone.gb.ring();
    out += "cone " + std::to_string(k + 1) + ": li {" + format_variables(ring, li_set(cone.gb)) + "}; leads ";
    for (std::size_t j = 0; j < cone.gb.size(); ++j) {
      if (j) out += ", ";
      out += cone.gb.elements()[j].lead.to_string(ring);
    }
    out += "; witness (";
    for (std::size_t i = 0; i < cone.witness.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cone.witness[i]);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace reembed
