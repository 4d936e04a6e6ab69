#include "reembed/cli.hpp"
#include "reembed/cotangent.hpp"
#include "reembed/embed.hpp"
#include "reembed/gfan.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace reembed;

namespace {

double best_ms(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& label, double serial, double parallel, bool agree) {
  std::printf("%-34s serial %10.2f ms  parallel %10.2f ms  speedup %5.2fx  %s\n", label.c_str(), serial, parallel,
              serial / parallel, agree ? "same result" : "RESULT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial against OpenMP fan traversal and Z-subset probing"};
  int threads = omp_get_max_threads();
  int repeats = 3;
  std::vector<std::string> files;
  app.add_option("--threads", threads, "Threads for the parallel kernels")->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats, "Timed repetitions; the best is reported")->check(CLI::PositiveNumber);
  app.add_option("files", files, "Ideal files")->required();
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d (hardware: %d)\n", threads, omp_get_num_procs());
  bool all_agree = true;
  for (const auto& path : files) {
    auto pf = read_problem_file(path);
    auto I = centred_at(pf.ideal(), pf.point);
    auto name = path.substr(path.find_last_of('/') + 1);

    FanOptions serial_opts, parallel_opts;
    parallel_opts.threads = threads;
    FanTraversal a, b;
    double ts = best_ms(repeats, [&] { a = traverse_gfan_serial(I, serial_opts); });
    double tp = best_ms(repeats, [&] { b = traverse_gfan_parallel(I, parallel_opts); });
    bool same = a.cones.size() == b.cones.size();
    for (std::size_t k = 0; same && k < a.cones.size(); ++k) same = a.cones[k].gb == b.cones[k].gb;
    report(name + " fan (" + std::to_string(a.cones.size()) + " cones)", ts, tp, same);
    all_agree = all_agree && same;

    auto cand = linear_part_ideal(I, Point::origin(I.ring().size())).support();
    std::vector<VariableSet> subsets;
    for (std::size_t k = cand.size(); k >= 1; --k) {
      for (auto& s : subsets_of_size(cand, k)) subsets.push_back(std::move(s));
    }
    std::optional<ProbeHit> ha, hb;
    ts = best_ms(repeats, [&] { ha = probe_serial(I, subsets); });
    tp = best_ms(repeats, [&] { hb = probe_parallel(I, subsets, threads); });
    same = ha.has_value() == hb.has_value() && (!ha || ha->index == hb->index);
    report(name + " probing (" + std::to_string(subsets.size()) + " subsets)", ts, tp, same);
    all_agree = all_agree && same;
  }
  return all_agree ? 0 : 1;
}
