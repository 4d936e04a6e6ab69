#include "reembed/separating.hpp"

#include "reembed/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace reembed {

namespace {

bool involves(const Polynomial& f, std::size_t v) {
  return std::any_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return t.monomial[v] > 0; });
}

bool involves_any(const Polynomial& f, std::span<const std::size_t> vars) {
  return std::any_of(vars.begin(), vars.end(), [&](auto v) { return involves(f, v); });
}

Ideal ideal_of(const MarkedGB& gb) {
  if (gb.empty()) return Ideal::zero(gb.ring_ptr());
  return Ideal(gb.ring_ptr(), gb.polynomials());
}

}  // namespace

ZSplit make_split(const Ring& ring, std::vector<std::size_t> z) {
  if (z.empty()) throw std::invalid_argument("Z must not be empty");
  VariableSet sorted = z;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Z has a repeated variable");
  }
  if (sorted.back() >= ring.size()) throw std::invalid_argument("Z variable out of range");
  return ZSplit{std::move(z), complement(ring, sorted)};
}

Polynomial tail(const Polynomial& f, std::size_t z) {
  const auto n = f.ring().size();
  if (z >= n) throw std::invalid_argument("tail: variable out of range");
  Rational c = f.coefficient(Monomial::variable(n, z));
  if (c == 0) throw ZNotInLinearPartError(f.ring().name(z));
  return Polynomial::variable(f.ring_ptr(), z) - f.scaled(1 / c);
}

bool is_z_separating(const Polynomial& f, std::size_t z) {
  const auto n = f.ring().size();
  if (z >= n || f.coefficient(Monomial::variable(n, z)) == 0) return false;
  return !involves(tail(f, z), z);
}

bool is_coherently_separating(std::span<const Polynomial> fs, std::span<const std::size_t> z) {
  if (fs.size() != z.size()) throw std::invalid_argument("tuple and Z differ in length");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!is_z_separating(fs[i], z[i])) return false;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (j != i && involves(fs[j], z[i])) return false;
    }
  }
  return true;
}

SeparatingGB make_separating_gb(const RingPtr& ring, std::vector<std::size_t> z, const TermOrdering& ord,
                                std::vector<Polynomial> sep_part, std::span<const Polynomial> image_part) {
  auto split = make_split(*ring, std::move(z));
  if (!is_coherently_separating(sep_part, split.z)) {
    throw std::invalid_argument("separating part is not coherently Z-separating");
  }
  const auto n = ring->size();
  for (std::size_t i = 0; i < sep_part.size(); ++i) {
    if (leading_term(sep_part[i], ord) != Monomial::variable(n, split.z[i])) {
      throw std::invalid_argument("leading term of a separating element is not its z");
    }
    sep_part[i] = make_monic(sep_part[i], ord);
  }
  auto sub = make_subring(*ring, split.y);
  auto sub_ord = ord.restrict_to(split.y);
  std::vector<MarkedPolynomial> image;
  for (const auto& g : image_part) {
    if (involves_any(g, split.z)) throw std::invalid_argument("image part involves Z");
    auto h = make_monic(restrict_to_subring(g, sub, split.y), sub_ord);
    image.push_back({leading_term(h, sub_ord), std::move(h)});
  }
  return SeparatingGB{ring, std::move(split), ord, std::move(sep_part), MarkedGB(sub, sub_ord, std::move(image))};
}

std::optional<SeparatingGB> separating_from_gb(const MarkedGB& gb, std::vector<std::size_t> z) {
  const auto& ring = gb.ring_ptr();
  auto split = make_split(*ring, std::move(z));
  std::vector<Polynomial> sep(split.z.size(), Polynomial(ring));
  std::vector<bool> found(split.z.size(), false);
  std::vector<Polynomial> rest;
  for (const auto& e : gb.elements()) {
    auto v = e.lead.as_variable();
    auto it = std::find(split.z.begin(), split.z.end(), v);
    if (v < ring->size() && it != split.z.end()) {
      auto k = static_cast<std::size_t>(it - split.z.begin());
      sep[k] = e.poly;
      found[k] = true;
    } else {
      rest.push_back(e.poly);
    }
  }
  if (std::find(found.begin(), found.end(), false) != found.end()) return std::nullopt;
  return make_separating_gb(ring, split.z, gb.ordering(), std::move(sep), rest);
}

std::optional<SeparatingGB> find_z_separating_gb(const Ideal& ideal, std::vector<std::size_t> z,
                                                 const TermOrdering& ord) {
  auto split = make_split(ideal.ring(), std::move(z));
  return separating_from_gb(buchberger(ideal, ord), split.z);
}

std::optional<SeparatingGB> find_z_separating_gb(const Ideal& ideal, std::vector<std::size_t> z) {
  auto split = make_split(ideal.ring(), std::move(z));
  VariableSet block = split.z;
  std::sort(block.begin(), block.end());
  return find_z_separating_gb(ideal, split.z, TermOrdering::elim(ideal.ring().size(), block));
}

MarkedGB reduced_from_separating(const SeparatingGB& sgb) {
  const auto& ring = sgb.ring;
  const auto& y = sgb.split.y;
  std::vector<MarkedPolynomial> out;
  for (std::size_t i = 0; i < sgb.sep_part.size(); ++i) {
    auto z = sgb.split.z[i];
    auto t = restrict_to_subring(tail(sgb.sep_part[i], z), sgb.image_part.ring_ptr(), y);
    auto h = embed_from_subring(normal_form(t, sgb.image_part), ring, y);
    out.push_back({Monomial::variable(ring->size(), z), Polynomial::variable(ring, z) - h});
  }
  for (const auto& e : sgb.image_part.elements()) {
    auto g = embed_from_subring(e.poly, ring, y);
    auto lead = leading_term(g, sgb.ordering);
    out.push_back({std::move(lead), std::move(g)});
  }
  return MarkedGB(ring, sgb.ordering, std::move(out));
}

Polynomial Reembedding::forward(const Polynomial& f) const {
  std::vector<Polynomial> imgs;
  imgs.reserve(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) imgs.push_back(Polynomial(image_ring));
  for (std::size_t j = 0; j < split.y.size(); ++j) imgs[split.y[j]] = Polynomial::variable(image_ring, j);
  for (std::size_t k = 0; k < split.z.size(); ++k) imgs[split.z[k]] = images[k];
  return substitute(f, image_ring, imgs);
}

Polynomial Reembedding::inverse(const Polynomial& h) const { return embed_from_subring(h, ring, split.y); }

Reembedding build_reembedding(const Ideal& ideal, const SeparatingGB& sgb) {
  const auto& sub = sgb.image_part.ring_ptr();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < sgb.sep_part.size(); ++i) {
    images.push_back(restrict_to_subring(tail(sgb.sep_part[i], sgb.split.z[i]), sub, sgb.split.y));
  }
  Reembedding r{sgb.ring, sgb.split, sub, std::move(images), ideal_of(sgb.image_part)};
  for (const auto& g : ideal.generators()) {
    if (!normal_form(r.forward(g), sgb.image_part).is_zero()) {
      throw std::logic_error("re-embedding does not kill a generator of the ideal");
    }
  }
  return r;
}

Reembedding build_reembedding(const Ideal& ideal, std::vector<std::size_t> z) {
  auto sgb = find_z_separating_gb(ideal, z);
  if (!sgb) throw NoSeparatingTupleError(format_variables(ideal.ring(), z));
  return build_reembedding(ideal, *sgb);
}

bool same_map(const Reembedding& a, const Reembedding& b) {
  if (!same_ring(a.ring, b.ring) || a.split != b.split) return false;
  const auto& sub = a.image_ring;
  const auto n = sub->size();
  auto ga = buchberger(a.image_ideal, TermOrdering::degrevlex(n));
  if (!(ga == buchberger(b.image_ideal, TermOrdering::degrevlex(n)))) return false;
  for (std::size_t k = 0; k < a.images.size(); ++k) {
    if (!normal_form(a.images[k] - b.images[k], ga).is_zero()) return false;
  }
  return true;
}

}  // namespace reembed
