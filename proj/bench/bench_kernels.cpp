// Serial reference vs OpenMP kernels. Prints one CSV row per kernel.

#include <bincover/generators.hpp>
#include <bincover/kernels.hpp>
#include <bincover/rng.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

using namespace bincover;

namespace {

// Best of `reps` wall-clock runs, in seconds.
double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

template <class R>
void compare(const char* kernel, int jobs, int reps, const std::function<R()>& serial,
             const std::function<R()>& parallel) {
  R a, b;
  const double ts = best_of(reps, [&] { a = serial(); });
  const double tp = best_of(reps, [&] { b = parallel(); });
  std::printf("%s,%d,%.6f,%.6f,%.3f,%s\n", kernel, jobs, ts, tp, ts / tp, a == b ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bench_kernels: serial vs parallel kernel timings"};
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::size_t n = 100000;
  std::size_t trials = 64;
  std::size_t samples = 20000;
  int reps = 3;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--n", n, "items per uniform trial")->capture_default_str();
  app.add_option("--trials", trials)->capture_default_str();
  app.add_option("--samples", samples, "shuffles of the two-size multiset")->capture_default_str();
  app.add_option("--reps", reps)->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("kernel,jobs,serial_s,parallel_s,speedup,identical\n");

  for (const auto& alg : {AlgorithmId::dnf(), AlgorithmId::dhk(10)}) {
    const std::string name = "uniform_trials_" + alg.name();
    compare<std::vector<std::uint64_t>>(
        name.c_str(), jobs, reps, [&] { return uniform_trials_serial(alg, n, trials, seed); },
        [&] { return uniform_trials(alg, n, trials, seed, jobs); });
  }

  const Sequence two = gen_two_size_counts(500, 500, Rational(1, 2001), seed);
  const CountingInstance inst = make_counting_instance(AlgorithmId::dnf(), two.items);
  compare<std::vector<std::uint64_t>>(
      "shuffled_counts_DNF", jobs, reps, [&] { return shuffled_counts_serial(inst, samples, seed); },
      [&] { return shuffled_counts(inst, samples, seed, jobs); });

  // 11 distinct sizes over a denominator of 1000: 11! orderings.
  Sequence small;
  Rng rng(seed);
  while (small.items.size() < 11) {
    const ItemSize x(static_cast<long>(1 + rng.below(999)), 1000);
    if (std::find(small.items.begin(), small.items.end(), x) == small.items.end()) small.items.push_back(x);
  }
  for (const auto& alg : {AlgorithmId::dnf(), AlgorithmId::dhk(3)}) {
    const CountingInstance wi = make_counting_instance(alg, small.items);
    const std::string name = "worst_order_" + alg.name();
    compare<std::size_t>(
        name.c_str(), jobs, reps, [&] { return worst_order_serial(wi).value; },
        [&] { return worst_order(wi, jobs).value; });
  }
  return 0;
}
