#include <chrono>
#include <cstdio>
#include <string>

#include "unineq/harness.hpp"
#include "unineq/integrals.hpp"

using namespace unineq;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::stoul(argv[1]) : 2000;

  double sink = 0.0;
  const double su = seconds([&] {
    for (int i = 0; i < 200; ++i) sink += sugeno(DistortedLebesgue{}, ContinuousFunction::power(0.5)).value;
  });
  std::printf("sugeno sqrt(x) x200     %8.3f s\n", su);

  Rng rng(7);
  const auto m = random_measure(rng, 12, true);
  const auto fs = make_comonotone_system(11, 12, 1, Scale::Unit);
  const double fin = seconds([&] {
    for (int i = 0; i < 200; ++i) sink += universal_integral(BinaryOp::prod(), m, fs[0]).value;
  });
  std::printf("shilkret n=12 x200      %8.3f s\n", fin);

  for (auto exec : {Exec::Serial, Exec::Parallel}) {
    CampaignConfig c;
    c.theorem = TheoremId::Chebyshev;
    c.trials = trials;
    c.star_pool = {BinaryOp::min(Cap::Unit), BinaryOp::prod(Cap::Unit)};
    c.exec = exec;
    std::size_t violations = 0;
    const double t = seconds([&] { violations = run_campaign(c).index.size(); });
    std::printf("chebyshev %zu trials %s %8.3f s  violations %zu\n", trials,
                exec == Exec::Serial ? "serial  " : "parallel", t, violations);
  }
  return sink > 0.0 ? 0 : 1;
}
