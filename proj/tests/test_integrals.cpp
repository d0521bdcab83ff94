#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "unineq/binary_op.hpp"
#include "unineq/extval.hpp"
#include "unineq/integrals.hpp"
#include "unineq/measure.hpp"

using namespace unineq;

namespace {

const Measure kLeb = DistortedLebesgue{};

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double top) {
  std::vector<double> f(n);
  std::uniform_real_distribution<double> u(0.0, top);
  for (auto& v : f) v = rng() % 3 == 0 ? std::round(u(rng) * 4.0) / 4.0 : u(rng);
  return f;
}

}  // namespace

TEST_CASE("Sugeno integrals on the unit interval") {
  const auto ix = universal_integral(BinaryOp::min(), kLeb, ContinuousFunction::power(1.0));
  CHECK(std::abs(ix.value - 0.5) <= 1e-12);
  CHECK(ix.tol > 0.0);
  CHECK(ix.candidates > 0);
  const auto isq = universal_integral(BinaryOp::min(), kLeb, ContinuousFunction::power(0.5));
  CHECK(std::abs(isq.value - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-9);
  CHECK(universal_integral(BinaryOp::min(), kLeb, ContinuousFunction::constant(1.0)).value == 1.0);
  CHECK(sugeno(kLeb, ContinuousFunction::power(1.0)).value == ix.value);
  // oracle: dense grid over min(t, 1 - t^2)
  const double dense = oracle::dense_sup([](double t) { return std::min(t, 1.0 - t * t); }, 0.0, 1.0, 200001);
  CHECK(isq.value >= dense - 1e-12);
  CHECK(isq.value <= dense + 1e-5);
}

TEST_CASE("Shilkret and product integrals") {
  const auto p = universal_integral(BinaryOp::prod(), kLeb, ContinuousFunction::power(1.0));
  const double dense = oracle::dense_sup([](double t) { return t * (1.0 - t); }, 0.0, 1.0, 100001);
  CHECK(std::abs(p.value - 0.25) <= 1e-12);
  CHECK(std::abs(p.value - dense) <= 1e-9);
  CHECK(shilkret(FiniteMonotoneMeasure::counting(2), FiniteFunction({1.0, 1.0})).value == 2.0);
  CHECK(shilkret(kLeb, ContinuousFunction::power(1.0)).value == p.value);
  const auto sq = shilkret(kLeb, ContinuousFunction::power(2.0));
  // sup t (1 - sqrt t) at t = 4/9
  CHECK(std::abs(sq.value - 4.0 / 27.0) <= 1e-12);
}

TEST_CASE("universal integral edge cases") {
  const auto c = FiniteMonotoneMeasure::counting(3);
  CHECK(universal_integral(BinaryOp::prod(), c, FiniteFunction::constant(3, 0.0)).value == 0.0);
  CHECK(universal_integral(BinaryOp::min(), c, FiniteFunction::constant(3, 0.0)).value == 0.0);
  CHECK(universal_integral(BinaryOp::prod(), kLeb, ContinuousFunction::constant(0.0)).value == 0.0);
  CHECK(sugeno(FiniteMonotoneMeasure(2, {0.0, 0.5, 0.5, 1.0}), FiniteFunction::constant(2, 0.6)).value == 0.6);
  CHECK_THROWS_AS(universal_integral(BinaryOp::max(), c, FiniteFunction({1, 2, 3})), InputError);
  CHECK_THROWS_AS(universal_integral(BinaryOp::min(Cap::Unit), c, FiniteFunction({1, 2, 3})), InputError);
  // infinite values with a positive top level
  CHECK(shilkret(c, FiniteFunction({kInf, 1.0, 1.0})).value == kInf);
  CHECK(sugeno(c, FiniteFunction({kInf, 1.0, 1.0})).value == 1.0);
  CHECK(shilkret(FiniteMonotoneMeasure(2, {0.0, 0.0, 1.0, 1.0}), FiniteFunction({kInf, 1.0})).value == 1.0);
}

TEST_CASE("finite integrals agree with the dense grid oracle") {
  std::mt19937_64 rng(41);
  const std::vector<std::pair<BinaryOp, std::function<double(double, double)>>> ops{
      {BinaryOp::min(), [](double a, double b) { return std::min(a, b); }},
      {BinaryOp::prod(), [](double a, double b) { return a * b; }},
  };
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto table = oracle::random_monotone_table(rng, n);
    const auto f = random_values(rng, n, 1.0 + static_cast<double>(rng() % 3));
    const FiniteMonotoneMeasure m(n, table);
    for (const auto& [op, fn] : ops) {
      const double exact = universal_integral(op, m, FiniteFunction(f)).value;
      const double grid = oracle::grid_sup(table, f, fn, 10000);
      const double top = *std::max_element(f.begin(), f.end());
      // grid values are lower bounds; exact exceeds by at most one cell width
      CHECK(grid <= exact + 1e-15);
      CHECK(exact - grid <= top / 9999.0 * std::max(1.0, m.total()) + 1e-12);
      // candidate formula
      double cand = 0.0;
      for (double v : f) cand = std::max(cand, fn(v, oracle::weak_level(table, f, v)));
      CHECK(exact == cand);
    }
  }
}

TEST_CASE("smallest e-integral") {
  CHECK(smallest_e_integral(kLeb, ContinuousFunction::power(1.0), 1.0).value == 0.0);
  CHECK(smallest_e_integral(kLeb, ContinuousFunction::constant(0.3), 1.0).value == 0.3);
  const auto c = FiniteMonotoneMeasure::counting(2);
  CHECK(smallest_e_integral(c, FiniteFunction::constant(2, 1.5), 1.5).value == 2.0);
  CHECK(smallest_e_integral(c, FiniteFunction::constant(2, 0.4), 1.0).value == 0.4);
  CHECK_THROWS_AS(smallest_e_integral(c, FiniteFunction::constant(2, 0.4), 0.0), InputError);

  // on measures with m(X) = e it agrees with the universal integral of the smallest e-operation
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const double e = 0.25 * static_cast<double>(1 + rng() % 6);
    auto table = oracle::random_monotone_table(rng, n);
    for (auto& v : table) v *= e;
    table.back() = e;
    const FiniteMonotoneMeasure m(n, table);
    const FiniteFunction f(random_values(rng, n, 2.0));
    CHECK(smallest_e_integral(m, f, e).value == universal_integral(BinaryOp::smallest_with_neutral(e), m, f).value);
  }
}

TEST_CASE("smallest e-integral reproduces the measure on e times an indicator") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const FiniteMonotoneMeasure m(n, oracle::random_monotone_table(rng, n));
    const double e = 0.5 * static_cast<double>(1 + rng() % 4);
    const std::uint32_t a = static_cast<std::uint32_t>(1 + rng() % m.full_mask());
    std::vector<double> f(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1u) f[i] = e;
    CHECK(universal_integral(BinaryOp::smallest_with_neutral(e), m, FiniteFunction(f)).value == m(a));
  }
}

TEST_CASE("seminormed integral") {
  const auto c = FiniteMonotoneMeasure(2, {0.0, 0.3, 0.6, 1.0});
  const FiniteFunction f({0.4, 0.8});
  CHECK(seminormed_integral(BinaryOp::min(Cap::Unit), c, f).value == sugeno(c, f).value);
  CHECK(std::abs(seminormed_integral(BinaryOp::prod(Cap::Unit), kLeb, ContinuousFunction::power(1.0)).value - 0.25) <=
        1e-12);
  CHECK(seminormed_integral(BinaryOp::lukasiewicz(), c, FiniteFunction::constant(2, 1.0)).value == 1.0);
  CHECK(seminormed_integral(BinaryOp::drastic(), kLeb, ContinuousFunction::constant(1.0)).value == 1.0);
  CHECK_THROWS_AS(seminormed_integral(BinaryOp::min(Cap::Unit), c, FiniteFunction({0.4, 1.5})), InputError);
}

TEST_CASE("semiconormed integral") {
  const auto mx = semiconormed_integral(BinaryOp::max(), kLeb, ContinuousFunction::power(1.0));
  const double dense = oracle::dense_inf([](double t) { return std::max(t, 1.0 - t); }, 0.0, 1.0, 100001);
  CHECK(std::abs(mx.value - 0.5) <= 1e-12);
  CHECK(std::abs(mx.value - dense) <= 1e-9);
  const auto c2 = FiniteMonotoneMeasure::counting(2);
  CHECK(semiconormed_integral(BinaryOp::sum(), c2, FiniteFunction({1.0, 2.0})).value == 2.0);
  CHECK(semiconormed_integral(BinaryOp::max(), c2, FiniteFunction::constant(2, 0.0)).value == 0.0);
  CHECK(semiconormed_integral(BinaryOp::max(), kLeb, ContinuousFunction::constant(0.0)).value == 0.0);
  CHECK_THROWS_AS(semiconormed_integral(BinaryOp::min(), c2, FiniteFunction({1.0, 2.0})), InputError);

  // closed candidate min agrees with brute force over the strict profile
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto table = oracle::random_monotone_table(rng, n);
    const auto f = random_values(rng, n, 1.0);
    double expect = oracle::strict_level(table, f, 0.0);
    for (double v : f) expect = std::min(expect, std::max(v, oracle::strict_level(table, f, v)));
    CHECK(semiconormed_integral(BinaryOp::max(), FiniteMonotoneMeasure(n, table), FiniteFunction(f)).value == expect);
    double grid = kInf;
    for (int k = 1; k <= 4000; ++k) {
      const double t = k / 4000.0;
      grid = std::min(grid, std::max(t, oracle::strict_level(table, f, t)));
    }
    CHECK(expect <= grid);
  }
}

TEST_CASE("axioms of the universal integral") {
  std::mt19937_64 rng(59);
  const BinaryOp ops[] = {BinaryOp::min(), BinaryOp::prod(), BinaryOp::smallest_with_neutral(1.0),
                          BinaryOp::greatest_with_neutral(1.0)};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto t1 = oracle::random_monotone_table(rng, n);
    auto t2 = t1;
    for (std::size_t a = 1; a < t2.size(); ++a) t2[a] = std::max(t2[a], t2[a - 1 & a]) + 0.1;
    for (std::uint32_t a = 1; a < t2.size(); ++a)
      for (std::size_t i = 0; i < n; ++i)
        if (a >> i & 1u) t2[a] = std::max(t2[a], t2[a & ~(1u << i)]);
    const FiniteMonotoneMeasure m1(n, t1), m2(n, t2);
    const auto f = random_values(rng, n, 2.0);
    auto g = f;
    for (auto& v : g) v += 0.25 * static_cast<double>(rng() % 3);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double c = 0.25 * static_cast<double>(rng() % 8);
    const std::uint32_t a = static_cast<std::uint32_t>(rng() % (m1.full_mask() + 1));
    std::vector<double> ind(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1u) ind[i] = c;
    for (const auto& op : ops) {
      const FiniteFunction ff(f), gg(g);
      const double base = universal_integral(op, m1, ff).value;
      CHECK(base <= universal_integral(op, m1, gg).value);
      CHECK(base <= universal_integral(op, m2, ff).value);
      CHECK(base == universal_integral(op, m1.relabeled(perm), ff.relabeled(perm)).value);
      CHECK(universal_integral(op, m1, FiniteFunction(ind)).value == op(c, m1(a)));
    }
  }
}

TEST_CASE("Sugeno is bounded by max f and m(X)") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto table = oracle::random_monotone_table(rng, n);
    const double scale = 0.5 + static_cast<double>(rng() % 4);
    for (auto& v : table) v *= scale;
    const FiniteMonotoneMeasure m(n, table);
    const FiniteFunction f(random_values(rng, n, 3.0));
    CHECK(sugeno(m, f).value <= std::min(f.max_value(), m.total()));
  }
}

TEST_CASE("Lyapunov chain for Sugeno on unit scale") {
  std::mt19937_64 rng(67);
  const double exps[] = {0.25, 0.5, 1.0, 2.0, 3.0};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const FiniteMonotoneMeasure m(n, oracle::random_monotone_table(rng, n));
    const FiniteFunction f(random_values(rng, n, 1.0));
    for (double r : exps)
      for (double s : exps) {
        if (r > s) continue;
        const double ls = std::pow(sugeno(m, f.transformed(MonotoneTransform::power(s))).value, 1.0 / s);
        const double lr = std::pow(sugeno(m, f.transformed(MonotoneTransform::power(r))).value, 1.0 / r);
        CHECK(ls >= lr * (1.0 - 1e-12));
      }
  }
  const Function fx = ContinuousFunction::power(1.0);
  const double s2 = std::sqrt(sugeno(kLeb, ContinuousFunction::power(2.0)).value);
  const double s1 = sugeno(kLeb, fx).value;
  CHECK(s2 >= s1 - 1e-9);
}
