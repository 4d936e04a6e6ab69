#include "reembed/embed.hpp"

#include "reembed/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>

namespace reembed {

Ideal centred_at(const Ideal& ideal, const Point& p) {
  if (p.is_origin()) return ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(shift_to_origin(g, p));
  return Ideal(ideal.ring_ptr(), std::move(gens));
}

bool certify_optimal(const Ideal& ideal, const Point& p, std::vector<std::size_t> z) {
  auto lin = linear_part_ideal(ideal, p);
  if (z.size() != lin.dim()) return false;
  return find_z_separating_gb(centred_at(ideal, p), std::move(z)).has_value();
}

std::vector<VariableSet> subsets_of_size(const VariableSet& candidates, std::size_t k) {
  std::vector<VariableSet> out;
  const std::size_t m = candidates.size();
  if (k == 0 || k > m) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VariableSet s;
    for (auto i : pick) s.push_back(candidates[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::optional<ProbeHit> probe_serial(const Ideal& ideal, const std::vector<VariableSet>& subsets) {
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (auto sgb = find_z_separating_gb(ideal, subsets[k])) return ProbeHit{k, std::move(*sgb)};
  }
  return std::nullopt;
}

std::optional<ProbeHit> probe_parallel(const Ideal& ideal, const std::vector<VariableSet>& subsets, int threads) {
  const auto count = static_cast<std::ptrdiff_t>(subsets.size());
  std::vector<std::optional<SeparatingGB>> found(subsets.size());
  std::vector<std::exception_ptr> errors(subsets.size());
  std::atomic<std::size_t> best = subsets.size();
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (idx > best.load()) continue;
    try {
      found[idx] = find_z_separating_gb(ideal, subsets[idx]);
      if (found[idx]) {
        auto cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      }
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (found[k]) return ProbeHit{k, std::move(*found[k])};
  }
  return std::nullopt;
}

EmbeddingReport search_optimal_reembedding(const Ideal& original, const Point& p, const SearchOptions& options) {
  EmbeddingReport report;
  const std::size_t n = original.ring().size();
  auto lin = linear_part_ideal(original, p);
  const Ideal ideal = centred_at(original, p);
  report.num_vars = n;
  report.lin_dim = lin.dim();
  report.cot_dim = n - lin.dim();
  report.candidates = lin.support();

  // Every LI set lies inside the candidates and has at most dim Lin elements,
  // so probing all sizes from dim Lin downwards determines sepdim exactly.
  std::size_t best = 0;
  for (std::size_t k = report.lin_dim; k > 0 && !report.best_z; --k) {
    auto subsets = subsets_of_size(report.candidates, k);
    auto hit = options.threads > 1 ? probe_parallel(ideal, subsets, options.threads) : probe_serial(ideal, subsets);
    report.probes += hit ? hit->index + 1 : subsets.size();
    if (hit) {
      best = k;
      report.best_z = subsets[hit->index];
      report.reembedding = build_reembedding(ideal, hit->sgb);
    }
  }
  report.sepdim = {n - best, n - best};
  report.certified = best == report.lin_dim;
  report.edim = report.certified ? Bounds{n - best, n - best} : Bounds{report.cot_dim, n - best};

  if (options.use_fan && !report.certified) {
    report.fan_requested = true;
    try {
      auto fan = enumerate_gfan(ideal, options.fan);
      report.fan_size = fan.size();
      if (sepdim(fan).value != n - best) throw std::logic_error("fan and probing disagree on sepdim");
    } catch (const CapExceededError&) {
      report.fan_size.reset();
    }
  }
  return report;
}

}  // namespace reembed
