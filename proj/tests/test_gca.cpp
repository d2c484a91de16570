#include "loopspace/cohomology.hpp"
#include "loopspace/gca.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace loopspace;

namespace {

DgaModel even_k1() {
  return DgaModel("even_k1", {{"u2", 2}, {"v2", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 2}}}}}});
}

}  // namespace

TEST_SUITE("gca") {
  TEST_CASE("generators are ordered by degree then declaration") {
    const GradedAlgebra alg({{"b", 3}, {"a", 2}, {"c", 2}});
    REQUIRE(alg.size() == 3);
    CHECK(alg.generator(0).name == "a");
    CHECK(alg.generator(1).name == "c");
    CHECK(alg.generator(2).name == "b");
    CHECK(alg.declared()[0].name == "b");
    CHECK_THROWS_AS(alg.gen("zz"), UnknownGenerator);
  }

  TEST_CASE("products of generators") {
    const GradedAlgebra alg({{"u2", 2}, {"u3", 3}, {"v5", 5}});
    const auto u2 = alg.gen("u2"), u3 = alg.gen("u3"), v5 = alg.gen("v5");
    CHECK((u3 * u3).is_zero());
    CHECK(u3 * v5 == -(v5 * u3));
    CHECK(u2 * power(u2, 4) == power(u2, 5));
    CHECK((u2 * u3).homogeneous_degree() == 5);
    CHECK_THROWS_AS((u2 + u3).homogeneous_degree(), std::domain_error);
    CHECK(alg.zero().homogeneous_degree() == std::nullopt);
  }

  TEST_CASE("elements from different algebras do not mix") {
    const GradedAlgebra a({{"x", 2}}), b({{"y", 2}});
    CHECK_THROWS(a.gen("x") * b.gen("y"));
  }

  TEST_CASE("basis enumeration") {
    const GradedAlgebra alg({{"u2", 2}, {"v2", 2}, {"u3", 3}});
    const auto b4 = alg.basis(4);
    CHECK(b4.size() == 3);
    CHECK(alg.format(b4[0]) == "u2^2");
    CHECK(alg.basis(0).size() == 1);
    CHECK(alg.basis(-1).empty());
    CHECK(alg.basis(1).empty());
    CHECK(alg.basis(5).size() == 2);
    CHECK_THROWS_AS(alg.basis(200, 50), ResourceLimit);
    try {
      (void)alg.basis(200, 50);
    } catch (const ResourceLimit& e) {
      CHECK(e.degree() == 200);
    }
  }

  TEST_CASE("differentials") {
    const auto model = even_k1();
    const auto& alg = model.algebra();
    const auto u2 = alg.gen("u2"), u3 = alg.gen("u3");
    CHECK(apply_differential(power(u2, 2), model).is_zero());
    CHECK(apply_differential(u2 * u3, model) == power(u2, 3));
    CHECK(apply_differential(apply_differential(u3, model), model).is_zero());

    const DgaModel k2("even_k2", {{"u2", 2}, {"u6", 6}, {"u7", 7}}, {{"u7", {{1, {{"u2", 4}}}}}});
    CHECK(apply_differential(apply_differential(k2.algebra().gen("u7"), k2), k2).is_zero());
  }

  TEST_CASE("model checks") {
    const DgaModel odd("odd_k1", {{"u2", 2}, {"u2b", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 2}}}}}});
    CHECK(check_model(odd).passed());

    // du2 = u3 has the right degree but a linear part.
    const DgaModel linear("lin", {{"u2", 2}, {"u3", 3}}, {{"u2", {{1, {{"u3", 1}}}}}});
    const auto r1 = check_model(linear);
    CHECK_FALSE(r1.passed());
    CHECK_FALSE(r1.minimal);
    CHECK(r1.degree_raising);

    const DgaModel lowering("low", {{"u2", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 1}}}}}});
    CHECK_FALSE(check_model(lowering).degree_raising);

    const DgaModel degenerate("deg", {{"u2", 2}, {"u3", 3}, {"u5", 5}},
                              {{"u3", {{1, {{"u2", 2}}}}}, {"u5", {{1, {{"u3", 2}}}}}});
    const auto r2 = check_model(degenerate);
    CHECK_FALSE(r2.passed());
    CHECK(r2.degenerate);
  }

  TEST_CASE("model construction errors") {
    CHECK_THROWS_AS(DgaModel("m", {{"a", 2}}, {{"b", {}}}), UnknownGenerator);
    CHECK_THROWS_AS(DgaModel("m", {{"a", 2}, {"a", 3}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DgaModel("m", {{"a", 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(DgaModel("m", {{"a", 3}}, {{"a", {}}, {"a", {}}}), std::invalid_argument);
  }

  TEST_CASE("cohomology examples") {
    const DgaModel m("m", {{"u2", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 2}}}}}});
    CHECK(cohomology(m, 8).dims == std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 0});
    CHECK(cohomology(even_k1(), 8).dims == std::vector<int>{1, 0, 2, 0, 2, 0, 2, 0, 2});
    CHECK(cohomology(DgaModel(), 3).dims == std::vector<int>{1, 0, 0, 0});
    CHECK_THROWS_AS(cohomology(m, -1), std::invalid_argument);
  }

  TEST_CASE("cohomology refuses a non-complex") {
    const DgaModel bad("bad", {{"u2", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 1}}}}}});
    CHECK_THROWS_AS(CohomologyComputation(bad, 6), std::invalid_argument);
  }

  TEST_CASE("cohomology reports the basis limit with its degree") {
    const DgaModel many("many", {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}, {"f", 2}}, {});
    CHECK_THROWS_AS(CohomologyComputation(many, 40, 1000), ResourceLimit);
  }

  TEST_CASE("ring presentation checks") {
    const DgaModel odd("odd_k1", {{"u2", 2}, {"u2b", 2}, {"u3", 3}}, {{"u3", {{1, {{"u2", 2}}}}}});
    CHECK(verify_ring_presentation(odd, {2, 2, 2}, 12).passed);

    const DgaModel k2("even_k2", {{"u2", 2}, {"u6", 6}, {"u7", 7}}, {{"u7", {{1, {{"u2", 4}}}}}});
    const auto rep = verify_ring_presentation(k2, {2, 6, 4}, 16);
    CHECK(rep.passed);
    CHECK(rep.actual_dims == oracle::quotient_ring_dims(2, 6, 4, 16));

    const auto wrong = verify_ring_presentation(even_k1(), {2, 2, 3}, 8);
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.failing_degree == 4);
  }

  TEST_CASE("presented ring dims agree with monomial enumeration") {
    for (int dw : {1, 2, 4})
      for (int dz : {2, 3, 6})
        for (int a = 1; a <= 5; ++a)
          CHECK(presented_ring_dims({dw, dz, a}, 30) == oracle::quotient_ring_dims(dw, dz, a, 30));
  }

  TEST_CASE("monomial product signs match the bubble-sort oracle") {
    std::mt19937_64 rng(3);
    const GradedAlgebra alg({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 3}, {"e", 5}});
    std::vector<int> degrees;
    for (const auto& g : alg.generators()) degrees.push_back(g.degree);
    std::uniform_int_distribution<unsigned> bit(0, 1), ev(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<unsigned> a(alg.size()), b(alg.size());
      for (std::size_t i = 0; i < alg.size(); ++i) {
        a[i] = degrees[i] % 2 ? bit(rng) : ev(rng);
        b[i] = degrees[i] % 2 ? bit(rng) : ev(rng);
      }
      Monomial out;
      CHECK(alg.multiply(Monomial(a), Monomial(b), out) == oracle::koszul_sign(degrees, a, b));
    }
  }

  TEST_CASE("randomized algebra laws") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> deg(0, 9);
    for (int model_no = 0; model_no < 40; ++model_no) {
      const auto model = gen::random_model(rng, 4, 5);
      const auto& alg = model.algebra();
      REQUIRE(check_model(model).is_complex());
      for (int trial = 0; trial < 10; ++trial) {
        const int p = deg(rng), q = deg(rng);
        const auto a = gen::random_element(rng, alg, p), b = gen::random_element(rng, alg, q);
        const Rational sign = (p * q) % 2 ? -1 : 1;
        CHECK(a * b == sign * (b * a));
        const Rational leibniz_sign = p % 2 ? -1 : 1;
        CHECK(apply_differential(a * b, model) ==
              apply_differential(a, model) * b + leibniz_sign * (a * apply_differential(b, model)));
        CHECK(apply_differential(apply_differential(a, model), model).is_zero());
      }
    }
  }

  TEST_CASE("rank-nullity in every degree") {
    std::mt19937_64 rng(23);
    for (int model_no = 0; model_no < 25; ++model_no) {
      const auto model = gen::random_model(rng, 4, 4);
      const CohomologyComputation comp(model, 10);
      for (int d = 0; d <= 10; ++d) {
        const auto incoming = d == 0 ? 0 : comp.differential_rank(d - 1);
        CHECK(comp.betti(d) == static_cast<int>(comp.kernel_dim(d) - incoming));
        CHECK(comp.representatives(d).size() == static_cast<std::size_t>(comp.betti(d)));
        for (const auto& r : comp.representatives(d)) {
          CHECK(comp.is_cocycle(r));
          CHECK_FALSE(comp.is_coboundary(r, d));
        }
        CHECK(comp.classes_independent(comp.representatives(d), d));
      }
    }
  }

  TEST_CASE("cohomology is deterministic") {
    std::mt19937_64 rng(29);
    const auto model = gen::random_model(rng, 4, 4);
    CHECK(CohomologyComputation(model, 12).table() == CohomologyComputation(model, 12).table());
  }
}
