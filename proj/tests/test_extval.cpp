#include <doctest.h>

#include <cmath>
#include <random>

#include "unineq/binary_op.hpp"
#include "unineq/extval.hpp"
#include "unineq/grid.hpp"
#include "unineq/op_properties.hpp"

using namespace unineq;

TEST_CASE("extended values keep the zero-times-infinity convention") {
  CHECK((ExtValue(0.0) * ExtValue::infinity()).value() == 0.0);
  CHECK((ExtValue::infinity() * ExtValue(0.0)).value() == 0.0);
  CHECK((ExtValue(2.0) * ExtValue::infinity()).is_inf());
  CHECK(ExtValue(1.0) < ExtValue::infinity());
  CHECK_THROWS_AS(ExtValue(-1.0), InputError);
  CHECK_THROWS_AS(ExtValue(std::nan("")), InputError);
  CHECK(ext_pow(kInf, 0.5) == kInf);
  CHECK(ext_pow(0.0, 3.0) == 0.0);
  CHECK(format_value(kInf) == "inf");
  CHECK(format_value(0.1) == "0.1");
}

TEST_CASE("eval_op on the displayed smallest and greatest operations") {
  const auto s1 = BinaryOp::smallest_with_neutral(1.0);
  const auto g1 = BinaryOp::greatest_with_neutral(1.0);
  CHECK(eval_op(s1, ExtValue(0.5), ExtValue(0.7)).value() == 0.0);
  CHECK(eval_op(s1, ExtValue(1.5), ExtValue(2.0)).value() == 2.0);
  CHECK(eval_op(s1, ExtValue(0.5), ExtValue(2.0)).value() == 0.5);
  CHECK(eval_op(g1, ExtValue(0.0), ExtValue(3.0)).value() == 0.0);
  CHECK(eval_op(g1, ExtValue(0.5), ExtValue(0.7)).value() == 0.5);
  CHECK(eval_op(g1, ExtValue(1.5), ExtValue(2.0)).is_inf());
  CHECK(eval_op(g1, ExtValue(0.5), ExtValue(2.0)).value() == 2.0);
  CHECK(eval_op(BinaryOp::prod(), ExtValue(0.0), ExtValue::infinity()).value() == 0.0);
  for (double x : {0.0, 0.3, 0.5, 2.0}) {
    CHECK(eval_op(BinaryOp::min(), ExtValue(0.5), ExtValue(x)).value() == std::min(0.5, x));
  }
}

TEST_CASE("eval_op rejects arguments beyond the domain cap") {
  CHECK_THROWS_AS(eval_op(BinaryOp::lukasiewicz(), ExtValue(1.5), ExtValue(0.2)), InputError);
  CHECK_THROWS_AS(eval_op(BinaryOp::prod(Cap::Unit), ExtValue(0.5), ExtValue::infinity()), InputError);
  CHECK_NOTHROW(eval_op(BinaryOp::prod(), ExtValue(0.5), ExtValue::infinity()));
  CHECK_THROWS_AS(BinaryOp::smallest_with_neutral(2.0, Cap::Unit), InputError);
  CHECK_THROWS_AS(BinaryOp::smallest_with_neutral(0.0), InputError);
}

TEST_CASE("table ops snap to the nearest node without interpolation") {
  const auto op = BinaryOp::table({0.0, 1.0}, {0.0, 0.0, 0.0, 1.0}, 1.0, OpFlag::Nondecreasing | OpFlag::Commutative,
                                  Cap::Unit);
  CHECK(op(0.4, 1.0) == 0.0);
  CHECK(op(0.5, 1.0) == 0.0);
  CHECK(op(0.6, 1.0) == 1.0);
  CHECK_THROWS_AS(BinaryOp::table({0.0, 1.0}, {0.0, 1.0}, std::nullopt, 0, Cap::Unit), InputError);
}

TEST_CASE("grids") {
  const auto g = GridSpec::uniform(0.0, 1.0, 11);
  CHECK(g.size() == 11);
  CHECK(g[10] == 1.0);
  const auto ext = GridSpec::for_cap(kInf, 1.0);
  CHECK(ext.points().back() == kInf);
  CHECK(ext.size() == 102);
  CHECK(GridSpec::uniform(0.0, 1.0, 21).refines(GridSpec::uniform(0.0, 1.0, 11)));
  CHECK_FALSE(GridSpec::uniform(0.0, 1.0, 11).refines(GridSpec::uniform(0.0, 1.0, 21)));
  CHECK_THROWS_AS(GridSpec({-0.5}), InputError);
}

TEST_CASE("first_violation agrees between serial and parallel paths") {
  std::vector<std::size_t> extents{7, 5, 6};
  auto pred = [](std::span<const std::size_t> i) { return !(i[0] >= 3 && i[1] == 2 && i[2] >= 4); };
  const auto s = first_violation(extents, pred, Exec::Serial);
  const auto p = first_violation(extents, pred, Exec::Parallel);
  REQUIRE(s);
  REQUIRE(p);
  CHECK(*s == std::vector<std::size_t>{3, 2, 4});
  CHECK(*s == *p);
  std::vector<std::size_t> one{9};
  CHECK(*first_violation(one, [](auto i) { return i[0] != 4; }, Exec::Serial) == std::vector<std::size_t>{4});
  CHECK_FALSE(first_violation(one, [](auto) { return true; }, Exec::Parallel));
  CHECK_THROWS_AS(first_violation(one, [](auto) -> bool { throw InputError("x"); }, Exec::Parallel), InputError);
}

TEST_CASE("property parsing") {
  const auto props = parse_properties("nondecreasing, neutral(0.5),associative");
  REQUIRE(props.size() == 3);
  CHECK(props[1].name == "neutral");
  CHECK(*props[1].neutral == 0.5);
  CHECK(parse_properties("neutral(inf)")[0].neutral == kInf);
  CHECK_THROWS_AS(parse_properties("monotone"), InputError);
  CHECK_THROWS_AS(parse_properties("commutative(2)"), InputError);
}

TEST_CASE("verify_op_properties on the standard operations") {
  const auto grid01 = GridSpec::uniform(0.0, 1.0, 11);
  auto r = verify_op_properties(BinaryOp::min(), parse_properties("neutral(inf),bounded_above_by_min"),
                                grid01.with(std::vector<double>{kInf}));
  CHECK(r.passed());
  CHECK(r.certificate == "grid-verified");

  r = verify_op_properties(BinaryOp::prod(Cap::Unit), parse_properties("neutral(1),annihilator_zero"),
                           GridSpec::uniform(0.0, 1.0, 37));
  CHECK(r.passed());

  r = verify_op_properties(BinaryOp::drastic(), parse_properties("bounded_above_by_min"), grid01);
  CHECK(r.passed());

  r = verify_op_properties(BinaryOp::drastic(), parse_properties("neutral(0.5)"), grid01);
  CHECK_FALSE(r.passed());
  REQUIRE(r.checks[0].witness.size() == 1);
  const double a = r.checks[0].witness[0];
  CHECK(BinaryOp::drastic()(a, 0.5) != a);
  // 0.3 is one of the failing points as well
  CHECK(BinaryOp::drastic()(0.3, 0.5) != 0.3);

  for (const auto& op : {BinaryOp::min(), BinaryOp::prod(), BinaryOp::smallest_with_neutral(1.0),
                         BinaryOp::greatest_with_neutral(1.0), BinaryOp::lukasiewicz(), BinaryOp::drastic(),
                         BinaryOp::max(), BinaryOp::sum(), BinaryOp::probabilistic_sum(),
                         BinaryOp::lukasiewicz_conorm()}) {
    CAPTURE(op.name());
    const auto grid = GridSpec::for_cap(op.cap_value(), op.neutral(), 21);
    const auto declared = declared_properties(op);
    CHECK(verify_op_properties(op, declared, grid).passed());
    CHECK(verify_op_properties(op, declared, grid, Exec::Parallel).passed());
  }
}

TEST_CASE("associativity verdict for the greatest operation matches brute force") {
  const auto g = BinaryOp::greatest_with_neutral(1.0);
  const auto r = verify_op_properties(g, parse_properties("associative"), GridSpec::for_cap(kInf, 1.0, 21));
  bool brute = true;
  const auto pts = GridSpec::for_cap(kInf, 1.0, 21);
  for (double x : pts.points())
    for (double y : pts.points())
      for (double z : pts.points()) brute = brute && g(g(x, y), z) == g(x, g(y, z));
  CHECK(r.passed() == brute);
}

TEST_CASE("failure witnesses persist under grid refinement") {
  const auto coarse = GridSpec::uniform(0.0, 1.0, 6);
  const auto fine = GridSpec::uniform(0.0, 1.0, 11);
  REQUIRE(fine.refines(coarse));
  for (const auto& op : {BinaryOp::drastic(), BinaryOp::lukasiewicz(), BinaryOp::max(Cap::Unit)}) {
    for (const auto& props : {"neutral(0.5)", "bounded_above_by_min", "bounded_below_by_max"}) {
      const auto pl = parse_properties(props);
      const bool coarse_ok = verify_op_properties(op, pl, coarse).passed();
      const bool fine_ok = verify_op_properties(op, pl, fine).passed();
      if (!coarse_ok) CHECK_FALSE(fine_ok);
    }
  }
}

TEST_CASE("pseudo-multiplication sandwich between smallest and greatest") {
  const std::pair<BinaryOp, double> cases[] = {
      {BinaryOp::prod(), 1.0},
      {BinaryOp::min(), kInf},
      {BinaryOp::smallest_with_neutral(1.0), 1.0},
      {BinaryOp::greatest_with_neutral(2.0), 2.0},
      {BinaryOp::min(Cap::Unit), 1.0},
      {BinaryOp::lukasiewicz(), 1.0},
  };
  for (const auto& [op, e] : cases) {
    CAPTURE(op.name());
    const auto lo = BinaryOp::smallest_with_neutral(e, op.cap());
    const auto hi = BinaryOp::greatest_with_neutral(e, op.cap());
    const auto grid = GridSpec::for_cap(op.cap_value(), e, 41);
    std::vector<OpProperty> pm = parse_properties("nondecreasing,annihilator_zero");
    pm.push_back({"neutral", e});
    REQUIRE(verify_op_properties(op, pm, grid).passed());
    for (double a : grid.points()) {
      for (double b : grid.points()) {
        CHECK(approx_le(lo(a, b), op(a, b), kPropertyTol));
        CHECK(approx_le(op(a, b), hi(a, b), kPropertyTol));
      }
      CHECK(op(a, 0.0) == 0.0);
      CHECK(op(0.0, a) == 0.0);
      CHECK(approx_eq(op(a, e), a, kPropertyTol));
      CHECK(approx_eq(op(e, a), a, kPropertyTol));
    }
  }
}

TEST_CASE("domination") {
  const auto grid = GridSpec::uniform(0.0, 1.0, 21);
  CHECK(check_domination(BinaryOp::min(Cap::Unit), BinaryOp::min(Cap::Unit), grid).passed());
  CHECK(check_domination(BinaryOp::min(Cap::Unit), BinaryOp::min(Cap::Unit), GridSpec::uniform(0.0, 1.0, 7)).passed());
  CHECK(check_domination(BinaryOp::min(Cap::Unit), BinaryOp::prod(Cap::Unit), grid).passed());

  // brute-force oracle for Prod over Lukasiewicz
  const auto P = BinaryOp::prod(Cap::Unit);
  const auto L = BinaryOp::lukasiewicz();
  const auto pts = grid.points();
  bool oracle_pass = true;
  for (double a : pts)
    for (double b : pts)
      for (double c : pts)
        for (double d : pts) {
          if (P(L(a, b), L(c, d)) < L(P(a, c), P(b, d)) - 1e-12) oracle_pass = false;
        }
  const auto r = check_domination(P, L, grid);
  CHECK(r.passed() == oracle_pass);
  if (!r.passed()) {
    const auto& w = r.checks[0].witness;
    REQUIRE(w.size() == 4);
    CHECK(P(L(w[0], w[1]), L(w[2], w[3])) < L(P(w[0], w[2]), P(w[1], w[3])));
  }
  CHECK(r.passed() == check_domination(P, L, grid, Exec::Parallel).passed());
  CHECK_THROWS_AS(check_domination(BinaryOp::min(), BinaryOp::prod(Cap::Unit), grid), InputError);
}

TEST_CASE("distributivity") {
  const auto grid = GridSpec::uniform(0.0, 1.0, 51);
  const auto sq = MonotoneTransform::power(2.0);
  CHECK(check_distributivity(sq, BinaryOp::min(Cap::Unit), Distributivity::Sub, grid).passed());
  CHECK(check_distributivity(sq, BinaryOp::min(Cap::Unit), Distributivity::Super, grid).passed());
  CHECK(check_distributivity(MonotoneTransform::power(0.5), BinaryOp::prod(Cap::Unit), Distributivity::Sub, grid)
            .passed());
  // x^2 over probabilistic sum: (a+b-ab)^2 vs a^2+b^2-a^2b^2
  bool sub = true;
  for (double a : grid.points())
    for (double b : grid.points()) {
      const double s = a + b - a * b;
      if (s * s > a * a + b * b - a * a * b * b + 1e-12) sub = false;
    }
  CHECK(check_distributivity(sq, BinaryOp::probabilistic_sum(), Distributivity::Sub, grid).passed() == sub);
  // affine map leaves [0,1]: domain failures are reported, not thrown
  CHECK_FALSE(check_distributivity(MonotoneTransform::affine(2.0, 0.0), BinaryOp::min(Cap::Unit),
                                   Distributivity::Sub, grid)
                  .passed());
}
