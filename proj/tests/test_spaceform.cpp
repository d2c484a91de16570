#include "loopspace/cohomology.hpp"
#include "loopspace/spaceform.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace loopspace;

namespace {

std::vector<SpaceFormSpec> valid_specs(int max_n) {
  std::vector<SpaceFormSpec> out;
  for (int n = 2; n <= max_n; ++n) {
    if (n % 2 == 0) {
      out.emplace_back(n, 2, 2);
      continue;
    }
    for (int r : {2, 4, 8, 12})
      for (int ord = 2; ord <= r; ++ord)
        if (r % ord == 0) out.emplace_back(n, r, ord);
  }
  return out;
}

// Hand tables: even n = 2k gives Q in 4k-2 and 4k-1, odd n = 2k+1 in 2k and 2k+1.
std::map<int, int> hand_table(int n, int max_degree) {
  const int k = n / 2;
  const int a = n % 2 == 0 ? 4 * k - 2 : 2 * k;
  std::map<int, int> dims;
  for (int i = 2; i <= max_degree; ++i) dims[i] = (i == a || i == a + 1) ? 1 : 0;
  return dims;
}

/// Betti table of the model {x2, y; dy = x^(k+1)}, i.e. CP^k.
DgaModel projective_space(int k) {
  return DgaModel("CP" + std::to_string(k), {{"x", 2}, {"y", 2 * k + 1}}, {{"y", {{1, {{"x", static_cast<unsigned>(k + 1)}}}}}});
}

GysinInput gysin_input(const DgaModel& base, const std::string& euler, const BettiTable& total) {
  const CohomologyComputation comp(base, total.max_degree + 1);
  return {comp.table(false), euler_multiplication(comp, comp.model().algebra().gen(euler)), total};
}

}  // namespace

TEST_SUITE("spaceform") {
  TEST_CASE("spec validation") {
    CHECK_NOTHROW(SpaceFormSpec(3, 8, 2));
    CHECK_THROWS_AS(SpaceFormSpec(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(SpaceFormSpec(3, 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(SpaceFormSpec(3, 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(SpaceFormSpec(4, 4, 2), std::invalid_argument);
    CHECK(SpaceFormSpec(6, 2, 2).k() == 3);
  }

  TEST_CASE("rational homotopy of spheres") {
    CHECK(sphere_rational_homotopy(4, 7) == 1);
    CHECK(sphere_rational_homotopy(4, 4) == 1);
    CHECK(sphere_rational_homotopy(5, 5) == 1);
    CHECK(sphere_rational_homotopy(5, 6) == 0);
    CHECK(sphere_rational_homotopy(5, 9) == 0);
  }

  TEST_CASE("exact sequence rank bookkeeping") {
    const auto odd = loop_space_dims(ActionData({{5, 1, Matrix(1, 1)}}), 10);
    for (int i = 2; i <= 10; ++i) CHECK(odd.dim(i) == (i == 4 || i == 5 ? 1 : 0));
    CHECK_FALSE(odd.pi1.computed());

    const auto even = loop_space_dims(ActionData({{4, 1, Matrix::from_rows({{-2}}, 1)}, {7, 1, Matrix(1, 1)}}), 10);
    for (int i = 2; i <= 10; ++i) CHECK(even.dim(i) == (i == 6 || i == 7 ? 1 : 0));
  }

  TEST_CASE("zero actions give the closed form") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(0, 3), coin(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<ActionEntry> entries;
      std::map<int, int> pi;
      for (int i = 2; i <= 12; ++i)
        if (coin(rng) == 0) {
          const int d = dim(rng);
          entries.push_back({i, d, Matrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d))});
          pi[i] = d;
        }
      const auto t = loop_space_dims(ActionData(entries), 11);
      for (int i = 2; i <= 11; ++i) CHECK(t.dim(i) == pi[i] + pi[i + 1]);
    }
  }

  TEST_CASE("invertible actions contribute nothing") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 3), degree(3, 10);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = size(rng), i = degree(rng);
      Matrix f(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      do {
        for (std::size_t r = 0; r < f.rows(); ++r)
          for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = entry(rng);
      } while (rank(f) != f.rows());
      const auto t = loop_space_dims(ActionData({{i, d, f}}), 12);
      for (int j = 2; j <= 12; ++j) CHECK(t.dim(j) == 0);
    }
  }

  TEST_CASE("malformed action data") {
    CHECK_THROWS_AS(ActionData({{3, 2, Matrix(1, 1)}}), std::invalid_argument);
    CHECK_THROWS_AS(ActionData({{5, 1, Matrix(1, 1)}, {3, 1, Matrix(1, 1)}}), std::invalid_argument);
  }

  TEST_CASE("loop component homotopy") {
    const auto a = loop_component_homotopy(SpaceFormSpec(3, 8, 2), 8);
    CHECK(a.dim(2) == 1);
    CHECK(a.dim(3) == 1);
    CHECK(a.pi1.order == 8);

    const auto b = loop_component_homotopy(SpaceFormSpec(2, 2, 2), 8);
    CHECK(b.dim(2) == 1);
    CHECK(b.dim(3) == 1);
    CHECK(b.pi1.order == 4);

    const auto c = loop_component_homotopy(SpaceFormSpec(4, 2, 2), 10);
    CHECK(c.dim(6) == 1);
    CHECK(c.dim(7) == 1);
    CHECK(c.dim(4) == 0);
    CHECK(c.dim(3) == 0);
    CHECK(c.pi1.order == 2);

    for (const auto& s : valid_specs(12)) CHECK(loop_component_homotopy(s, 30).dims == hand_table(s.n(), 30));
  }

  TEST_CASE("quotient homotopy") {
    const auto a = so2_quotient_homotopy(SpaceFormSpec(3, 8, 2), 8);
    CHECK(a.dim(2) == 2);
    CHECK(a.dim(3) == 1);
    CHECK(a.pi1.order == 4);

    const auto b = so2_quotient_homotopy(SpaceFormSpec(2, 2, 2), 8);
    CHECK(b.dim(2) == 2);
    CHECK(b.dim(3) == 1);
    CHECK(b.pi1.trivial());

    CHECK(so2_quotient_homotopy(SpaceFormSpec(3, 2, 2), 8).pi1.trivial());

    for (const auto& s : valid_specs(9))
      CHECK(so2_quotient_homotopy(s, 20).dim(2) == loop_component_homotopy(s, 20).dim(2) + 1);
  }

  TEST_CASE("order four extensions") {
    const auto z4 = classify_order4_extension(true);
    CHECK(z4.name() == "Z4");
    CHECK(z4.has_element_of_order(4));
    CHECK(z4.op(1, 1) == 2);
    CHECK(z4.element_order(z4.op(1, 1)) == 2);

    const auto v4 = classify_order4_extension(false);
    CHECK(v4.name() == "Z2xZ2");
    CHECK_FALSE(v4.has_element_of_order(4));
    for (int a = 0; a < 4; ++a) CHECK(v4.op(a, a) == 0);
  }

  TEST_CASE("quotient minimal models") {
    auto degrees = [](const DgaModel& m) {
      std::vector<int> out;
      for (const auto& g : m.algebra().generators()) out.push_back(g.degree);
      return out;
    };
    const auto m5 = so2_quotient_model(SpaceFormSpec(5, 2, 2));
    CHECK(degrees(m5) == std::vector<int>{2, 4, 5});
    CHECK(m5.differential(2) == power(m5.algebra().gen("u2"), 3));

    const auto m4 = so2_quotient_model(SpaceFormSpec(4, 2, 2));
    CHECK(degrees(m4) == std::vector<int>{2, 6, 7});
    CHECK(m4.differential(2) == power(m4.algebra().gen("u2"), 4));

    const auto m2 = so2_quotient_model(SpaceFormSpec(2, 2, 2));
    CHECK(degrees(m2) == std::vector<int>{2, 2, 3});
    CHECK(m2.differential(2) == power(m2.algebra().gen("u2"), 2));

    const auto m3 = so2_quotient_model(SpaceFormSpec(3, 4, 2));
    CHECK(degrees(m3) == std::vector<int>{2, 2, 3});
    CHECK(m3.algebra().generator(0).name != m3.algebra().generator(1).name);
  }

  TEST_CASE("quotient rings match monomial counts") {
    for (int n = 2; n <= 7; ++n) {
      const SpaceFormSpec s(n, 2, 2);
      const auto model = so2_quotient_model(s);
      CHECK(check_model(model).passed());
      const auto ring = so2_quotient_ring(s);
      const int k = n / 2;
      CHECK(ring.deg_w == 2);
      CHECK(ring.deg_z == (n % 2 == 0 ? 4 * k - 2 : 2 * k));
      CHECK(ring.nilpotency == (n % 2 == 0 ? 2 * k : k + 1));
      CHECK(cohomology(model, 24).dims == oracle::quotient_ring_dims(ring.deg_w, ring.deg_z, ring.nilpotency, 24));
      CHECK(verify_ring_presentation(model, ring, 24).passed);
    }
  }

  TEST_CASE("Gysin examples") {
    GysinInput cp1{BettiTable::from_dims({1, 0, 1, 0, 0}),
                   {Matrix::from_rows({{1}}, 1), Matrix(0, 0), Matrix(0, 1), Matrix(0, 0), Matrix(0, 0)},
                   BettiTable::from_dims({1, 0, 0, 1})};
    CHECK(gysin_check(cp1).passed);

    GysinInput point{BettiTable::from_dims({1}), {Matrix(0, 1)}, BettiTable::from_dims({1, 1})};
    CHECK(gysin_check(point).passed);

    const auto base = so2_quotient_model(SpaceFormSpec(2, 2, 2));
    const auto bad = gysin_input(base, "u2", BettiTable::from_dims({1, 1, 0, 0, 0, 0}));
    const auto report = gysin_check(bad);
    CHECK_FALSE(report.passed);
    CHECK(report.failing_degree == 1);

    GysinInput misshapen{BettiTable::from_dims({1, 0, 1}), {Matrix(2, 2), Matrix(0, 0), Matrix(0, 1)},
                         BettiTable::from_dims({1})};
    CHECK_THROWS_AS(gysin_check(misshapen), std::invalid_argument);
  }

  TEST_CASE("Gysin for projective spaces and odd spheres") {
    for (int k = 1; k <= 5; ++k) {
      const int top = 2 * k + 3;
      std::vector<int> sphere(static_cast<std::size_t>(top) + 1, 0);
      sphere[0] = sphere[static_cast<std::size_t>(2 * k + 1)] = 1;
      const auto base = projective_space(k);
      CHECK(gysin_check(gysin_input(base, "x", BettiTable::from_dims(sphere))).passed);
      const auto bundle = circle_bundle_model(base, {{1, {{"x", 1}}}});
      CHECK(cohomology(bundle, top).dims == sphere);
      // A wrong total must be caught.
      sphere[2] = 1;
      CHECK_FALSE(gysin_check(gysin_input(base, "x", BettiTable::from_dims(sphere))).passed);
    }
  }

  TEST_CASE("Gysin for the quotient rings") {
    for (int n = 2; n <= 7; ++n) {
      const auto base = so2_quotient_model(SpaceFormSpec(n, 2, 2));
      const auto total = cohomology(circle_bundle_model(base, {{1, {{"u2", 1}}}}), 20);
      const auto report = gysin_check(gysin_input(base, "u2", total));
      CHECK(report.passed);
      CHECK(report.predicted == total.dims);
    }
  }
}
