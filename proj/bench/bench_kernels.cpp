// Serial reference kernels against their OpenMP counterparts.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include <CLI11.hpp>

#ifdef TOROMAPS_HAVE_OPENMP
#include <omp.h>
#endif

#include "toromaps/toroidal_analysis.hpp"

namespace {

using namespace toromaps;

double median_seconds(int repeats, const std::function<void()>& body) {
  std::vector<double> times;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    times.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel timings"};
  int repeats = 3;
  int max_sum = 8;
  app.add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  app.add_option("--max-sum", max_sum, "range bound for the scan kernel")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

#ifdef TOROMAPS_HAVE_OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  for (const ToroidalSpec& spec : {ToroidalSpec{Family::Map36, 8, 0},
                                   ToroidalSpec{Family::Map44, 6, 6},
                                   ToroidalSpec{Family::Hyper333, 9, 0}}) {
    const FiniteGroup g = ToroidalGroup::build(spec).group;
    EnumerationOptions serial;
    serial.execution = Execution::Serial;
    EnumerationOptions parallel;
    parallel.execution = Execution::Parallel;
    std::vector<SubgroupClass> a;
    std::vector<SubgroupClass> b;
    const double ts = median_seconds(repeats, [&] { a = all_subgroup_classes(g, serial); });
    const double tp = median_seconds(repeats, [&] { b = all_subgroup_classes(g, parallel); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].representative == b[i].representative;
    }
    char name[64];
    std::snprintf(name, sizeof name, "classes %s |G|=%zu", spec.to_string().c_str(), g.order());
    row(name, ts, tp, same);
  }

  ScanRange range;
  range.max_sum = max_sum;
  std::vector<ScanEntry> a;
  std::vector<ScanEntry> b;
  const double ts = median_seconds(repeats, [&] { a = scan(range, {kDefaultMaxCosets, Execution::Serial}); });
  const double tp = median_seconds(repeats, [&] { b = scan(range, {kDefaultMaxCosets, Execution::Parallel}); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].report.computed_degrees == b[i].report.computed_degrees;
  }
  char name[64];
  std::snprintf(name, sizeof name, "scan s1+s2<=%d (%zu specs)", max_sum, a.size());
  row(name, ts, tp, same);
  return same ? 0 : 1;
}
