#include "reembed/groebner.hpp"

#include "reembed/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reembed {

// ---------------------------------------------------------------------------
// MarkedGB / Ideal

MarkedGB::MarkedGB(RingPtr ring, TermOrdering ordering, std::vector<MarkedPolynomial> elements)
    : ring_(std::move(ring)), ordering_(std::move(ordering)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
    return degrevlex_compare(a.lead, b.lead) < 0;
  });
}

std::vector<Polynomial> MarkedGB::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.poly);
  return out;
}

MarkedGB MarkedGB::with_ordering(TermOrdering ordering) const {
  MarkedGB copy = *this;
  copy.ordering_ = std::move(ordering);
  return copy;
}

std::string MarkedGB::key() const {
  std::string out;
  for (const auto& e : elements_) {
    for (std::size_t i = 0; i < e.lead.size(); ++i) {
      out += std::to_string(e.lead[i]);
      out += ',';
    }
    out += '|';
    out += e.poly.to_string();
    out += ';';
  }
  return out;
}

std::string MarkedGB::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) out += ", ";
    out += "(" + elements_[k].lead.to_string(*ring_) + ", " + elements_[k].poly.to_string() + ")";
  }
  return out + "}";
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (!same_ring(g.ring_ptr(), ring_)) throw std::invalid_argument("generator in a different ring");
  }
}

Ideal Ideal::zero(RingPtr ring) {
  auto r = ring;
  return Ideal(std::move(ring), {Polynomial(r)});
}

bool Ideal::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

std::string Ideal::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += generators_[k].to_string();
  }
  return out + ">";
}

// ---------------------------------------------------------------------------
// Reduction engine

namespace {

struct Reducer {
  const Monomial* lead;
  Rational lead_coeff;
  std::span<const Term> terms;
};

using WorkMap = std::map<Monomial, Rational, OrderGreater>;

void add_multiple(WorkMap& work, const Reducer& r, const Monomial& q, const Rational& c) {
  for (const auto& t : r.terms) {
    if (t.monomial == *r.lead) continue;
    auto [it, inserted] = work.try_emplace(t.monomial * q, 0);
    it->second -= c * t.coeff;
    if (it->second == 0) work.erase(it);
  }
}

// Returns the remainder, descending under the map's ordering.
std::vector<Term> reduce(WorkMap& work, std::span<const Reducer> reducers) {
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if (r.lead->divides(it->first)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      remainder.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    Monomial q = it->first / *hit->lead;
    Rational c = it->second / hit->lead_coeff;
    work.erase(it);
    add_multiple(work, *hit, q, c);
  }
  return remainder;
}

WorkMap to_work(const Polynomial& f, const TermOrdering& ord) {
  WorkMap work(OrderGreater{&ord});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  return work;
}

// Buchberger state: basis elements with their leading terms under `ord`.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, const TermOrdering& ord) : ring_(std::move(ring)), ord_(ord) {}

  void add_generator(const Polynomial& f) {
    if (f.is_zero()) return;
    auto work = to_work(f, ord_);
    auto reducers = active_reducers();
    auto rem = reduce(work, reducers);
    if (!rem.empty()) insert(std::move(rem));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = select_pair();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      auto work = spoly(p.i, p.j);
      auto reducers = active_reducers();
      auto rem = reduce(work, reducers);
      if (!rem.empty()) insert(std::move(rem));
    }
  }

  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(polys_[k]);
    }
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back({&leads_[k], Rational(1), polys_[k].terms()});
    }
    return out;
  }

  WorkMap spoly(std::size_t i, std::size_t j) const {
    WorkMap work(OrderGreater{&ord_});
    Monomial l = lcm(leads_[i], leads_[j]);
    Reducer ri{&leads_[i], 1, polys_[i].terms()};
    Reducer rj{&leads_[j], 1, polys_[j].terms()};
    add_multiple(work, ri, l / leads_[i], -1);
    add_multiple(work, rj, l / leads_[j], 1);
    return work;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() != b.degree()) {
        if (a.degree() < b.degree()) best = k;
        continue;
      }
      if (ord_.compare(a, b) < 0) best = k;
    }
    return best;
  }

  void insert(std::vector<Term> rem) {
    // rem is sorted descending under ord_; its head is the leading term.
    Rational lc = rem.front().coeff;
    Monomial lead = rem.front().monomial;
    if (lead.is_one()) throw UnitIdealError();
    for (auto& t : rem) t.coeff /= lc;
    polys_.push_back(Polynomial::from_terms(ring_, std::move(rem)));
    leads_.push_back(std::move(lead));
    active_.push_back(false);
    update(polys_.size() - 1);
  }

  // Gebauer-Moeller installation of new element h.
  void update(std::size_t h) {
    const Monomial& lh = leads_[h];
    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) cand.push_back(g);
    }
    std::vector<Monomial> cand_lcm;
    for (auto g : cand) cand_lcm.push_back(lcm(lh, leads_[g]));

    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = lh.coprime(leads_[cand[a]]);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b) {
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
        for (auto b : kept) {
          if (!keep) break;
          if (cand_lcm[b].divides(cand_lcm[a])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && lcm(leads_[p.i], lh) != p.lcm && lcm(leads_[p.j], lh) != p.lcm) continue;
      next.push_back(std::move(p));
    }
    for (auto a : kept) {
      if (lh.coprime(leads_[cand[a]])) continue;
      next.push_back({cand[a], h, cand_lcm[a]});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(leads_[g])) active_[g] = false;
    }
    active_[h] = true;
  }

  RingPtr ring_;
  const TermOrdering& ord_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leads_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const MarkedGB& gb) {
  if (!same_ring(f.ring_ptr(), gb.ring_ptr())) throw std::invalid_argument("normal_form: ring mismatch");
  std::vector<Reducer> reducers;
  reducers.reserve(gb.size());
  for (const auto& e : gb.elements()) reducers.push_back({&e.lead, e.poly.coefficient(e.lead), e.poly.terms()});
  auto work = to_work(f, gb.ordering());
  return Polynomial::from_terms(f.ring_ptr(), reduce(work, reducers));
}

MarkedGB interreduce(const RingPtr& ring, std::span<const Polynomial> basis, const TermOrdering& ord) {
  struct Item {
    Monomial lead;
    Polynomial poly;
  };
  std::vector<Item> items;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto monic = make_monic(g, ord);
    auto lead = leading_term(monic, ord);
    if (lead.is_one()) throw UnitIdealError();
    items.push_back({std::move(lead), std::move(monic)});
  }
  // Minimalize: drop elements whose leading term is divisible by another's
  // (keeping the first of equal leading terms).
  std::vector<Item> minimal;
  for (std::size_t a = 0; a < items.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < items.size() && !redundant; ++b) {
      if (a == b) continue;
      if (items[b].lead.divides(items[a].lead)) {
        redundant = items[b].lead != items[a].lead || b < a;
      }
    }
    if (!redundant) minimal.push_back(items[a]);
  }
  std::vector<Reducer> reducers;
  for (const auto& it : minimal) reducers.push_back({&it.lead, Rational(1), it.poly.terms()});

  std::vector<MarkedPolynomial> out;
  out.reserve(minimal.size());
  for (const auto& it : minimal) {
    WorkMap work(OrderGreater{&ord});
    for (const auto& t : it.poly.terms()) {
      if (t.monomial != it.lead) work.emplace(t.monomial, t.coeff);
    }
    auto tail = reduce(work, reducers);
    tail.push_back({it.lead, Rational(1)});
    out.push_back({it.lead, Polynomial::from_terms(ring, std::move(tail))});
  }
  return MarkedGB(ring, ord, std::move(out));
}

MarkedGB buchberger(const RingPtr& ring, std::span<const Polynomial> generators, const TermOrdering& ord) {
  if (ord.num_vars() != ring->size()) throw std::invalid_argument("ordering does not match the ring");
  GroebnerEngine engine(ring, ord);
  for (const auto& g : generators) {
    if (!same_ring(g.ring_ptr(), ring)) throw std::invalid_argument("generator in a different ring");
    engine.add_generator(g);
  }
  engine.run();
  auto basis = engine.basis();
  return interreduce(ring, basis, ord);
}

MarkedGB buchberger(const Ideal& ideal, const TermOrdering& ord) {
  return buchberger(ideal.ring_ptr(), ideal.generators(), ord);
}

Ideal intersect_with_subring(const Ideal& ideal, const VariableSet& keep) {
  const auto& ring = ideal.ring();
  for (auto i : keep) {
    if (i >= ring.size()) throw std::invalid_argument("subring variable out of range");
  }
  VariableSet sorted_keep = keep;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  auto eliminated = complement(ring, sorted_keep);
  auto gb = buchberger(ideal, TermOrdering::elim(ring.size(), eliminated));
  auto sub = make_subring(ring, sorted_keep);
  std::vector<Polynomial> gens;
  for (const auto& e : gb.elements()) {
    bool lead_free = std::none_of(eliminated.begin(), eliminated.end(), [&](auto z) { return e.lead[z] > 0; });
    if (!lead_free) continue;
    auto vars = indets(e.poly);
    for (auto v : vars) {
      if (!std::binary_search(sorted_keep.begin(), sorted_keep.end(), v)) {
        throw std::logic_error("elimination ordering produced a mixed element");
      }
    }
    gens.push_back(restrict_to_subring(e.poly, sub, sorted_keep));
  }
  if (gens.empty()) return Ideal::zero(sub);
  return Ideal(sub, std::move(gens));
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring_ptr(), ideal.ring_ptr())) throw std::invalid_argument("membership: ring mismatch");
  auto gb = buchberger(ideal, TermOrdering::degrevlex(ideal.ring().size()));
  return normal_form(f, gb).is_zero();
}

bool is_reduced_marked(const MarkedGB& gb) {
  const auto& ord = gb.ordering();
  const auto& els = gb.elements();
  for (std::size_t k = 0; k < els.size(); ++k) {
    const auto& e = els[k];
    if (e.poly.coefficient(e.lead) != 1) return false;
    for (const auto& t : e.poly.terms()) {
      if (t.monomial == e.lead) continue;
      if (!ord.greater(e.lead, t.monomial)) return false;
      for (const auto& other : els) {
        if (other.lead.divides(t.monomial)) return false;
      }
    }
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (j != k && els[j].lead.divides(e.lead)) return false;
    }
    if (k && degrevlex_compare(els[k - 1].lead, e.lead) >= 0) return false;
  }
  return true;
}

}  // namespace reembed
