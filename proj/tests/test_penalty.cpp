#include "cardqubo/penalty.hpp"

#include <random>

#include "cardqubo/instances.hpp"
#include "cardqubo/solvers.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cardqubo;
using testing::close;

TEST_CASE("PenaltySpec invariants") {
  CHECK_THROWS_AS(PenaltySpec(4, 8, 1.0), ValidationError);
  CHECK_THROWS_AS(PenaltySpec(4, 0, 1.0), ValidationError);
  CHECK_THROWS_AS(PenaltySpec(4, 2, 0.0), ValidationError);
  CHECK_THROWS_AS(PenaltySpec(4, 2, -1.0), ValidationError);
  CHECK_NOTHROW(PenaltySpec(4, 4, 1.0));
  CHECK_NOTHROW(PenaltySpec(4, 1, 1.0));
  const PenaltySpec spec(30, 8, 0.5);
  CHECK(spec.beta() == -8.0);
  CHECK(-spec.beta() / (2.0 * spec.alpha()) == 8.0);
  for (std::size_t m = 1; m <= 30; ++m)
    for (double alpha : {0.1, 0.3, 0.7, 2.0, 10.0}) {
      const PenaltySpec s(30, m, alpha);
      CHECK(close(-s.beta() / (2.0 * s.alpha()), static_cast<double>(m)));
    }
}

TEST_CASE("penalty_matrix") {
  CHECK(penalty_matrix(PenaltySpec(2, 1, 1.0)) == SymmetricMatrix::from_rows({{-1, 1}, {1, -1}}));

  const auto c = penalty_matrix(PenaltySpec(30, 8, 0.5));
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j) CHECK(c(i, j) == (i == j ? -7.5 : 0.5));

  // alpha J + beta I and alpha (J - 2 M I) agree entrywise (up to the
  // rounding of beta = -2 alpha M).
  for (std::size_t n : {1, 5, 30})
    for (std::size_t m = 1; m <= n; ++m)
      for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const auto via_target = penalty_matrix(PenaltySpec(n, m, alpha));
        const auto via_params = penalty_matrix(n, params_from_target(m, alpha));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) REQUIRE(close(via_target(i, j), via_params(i, j)));
      }
}

TEST_CASE("penalty_value") {
  const PenaltySpec spec(30, 8, 0.5);
  CHECK(penalty_value(spec, 0) == 0.0);
  CHECK(penalty_value(spec, 8) == -32.0);
  CHECK(penalty_value(spec, 7) == -31.5);
  CHECK(penalty_value(spec, 9) == -31.5);
  CHECK_THROWS_AS(penalty_value(spec, 31), ValidationError);

  BinaryVector x(30);
  for (std::size_t i = 0; i < 30; i += 3) x.set(i, true);
  REQUIRE(x.cardinality() == 10);
  CHECK(evaluate(penalty_matrix(spec), x) == penalty_value(spec, 10));
}

TEST_CASE("penalty closed form matches the matrix") {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<std::size_t> dim(1, 30);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = dim(gen);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n)(gen);
    for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      const PenaltySpec spec(n, m, alpha);
      const auto x = testing::random_binary(n, gen);
      REQUIRE(close(evaluate(penalty_matrix(spec), x), penalty_value(spec, x.cardinality())));
    }
  }
}

TEST_CASE("penalty has a unique integer minimum at M, symmetric about it") {
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const PenaltySpec spec(n, m, alpha);
        const double at_m = penalty_value(spec, m);
        for (std::size_t k = 0; k <= n; ++k)
          if (k != m) REQUIRE(penalty_value(spec, k) > at_m);
        for (std::size_t d = 1; d <= m && m + d <= n; ++d)
          REQUIRE(penalty_value(spec, m + d) == penalty_value(spec, m - d));
      }
    }
  }
}

TEST_CASE("apply_constraint") {
  const PenaltySpec spec(6, 2, 1.5);
  CHECK(apply_constraint(SymmetricMatrix(6), spec) == penalty_matrix(spec));
  CHECK_THROWS_AS(apply_constraint(SymmetricMatrix(5), spec), DimensionError);

  std::mt19937_64 gen(4);
  const auto a = testing::random_symmetric(6, gen);
  const auto constrained = apply_constraint(a, spec);
  for (int rep = 0; rep < 100; ++rep) {
    const auto x = testing::random_binary(6, gen);
    CHECK(close(evaluate(constrained, x), evaluate(a, x) + penalty_value(spec, x.cardinality())));
  }

  const auto paper = apply_constraint(gaussian_symmetric(30, 1), PenaltySpec(30, 8, 0.5));
  CHECK(paper.size() == 30);
  CHECK(close(paper(0, 1) - gaussian_symmetric(30, 1)(0, 1), 0.5));
  CHECK(close(paper(3, 3) - gaussian_symmetric(30, 1)(3, 3), -7.5));
}

TEST_CASE("parameter conversions") {
  CHECK(params_from_target(8, 0.5).beta == -8.0);
  CHECK(params_from_target(1, 1.0).beta == -2.0);
  CHECK_THROWS_AS(params_from_target(3, 0.0), ValidationError);
  CHECK_THROWS_AS(params_from_target(3, -2.0), ValidationError);
  CHECK_THROWS_AS(params_from_target(0, 1.0), ValidationError);

  CHECK(target_from_params(0.5, -8.0).value == 8.0);
  CHECK(target_from_params(0.5, -8.0).integral);
  CHECK(target_from_params(1.0, 0.0).value == 0.0);
  const auto frac = target_from_params(2.0, -5.0);
  CHECK(frac.value == 1.25);
  CHECK_FALSE(frac.integral);
  CHECK_THROWS_AS(target_from_params(0.0, -1.0), ValidationError);

  for (std::size_t m = 1; m <= 30; ++m)
    for (double alpha : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      const auto p = params_from_target(m, alpha);
      const auto back = target_from_params(p.alpha, p.beta);
      REQUIRE(close(back.value, static_cast<double>(m)));
      REQUIRE(back.integral);
    }
}

TEST_CASE("safe_alpha forces the target cardinality") {
  CHECK(safe_alpha(SymmetricMatrix(4)) == 1.0);
  CHECK(safe_alpha(SymmetricMatrix::from_rows({{1, -2}, {-2, 0.5}})) == 12.0);

  SUBCASE("zero matrix: every M-subset is optimal") {
    const auto c = apply_constraint(SymmetricMatrix(6), PenaltySpec(6, 3, 1.0));
    const auto best = brute_force(c);
    CHECK(best.solution.cardinality() == 3);
    CHECK(best.cost == -9.0);
  }

  auto check_instance = [](const SymmetricMatrix& a) {
    const double alpha = safe_alpha(a);
    for (std::size_t m = 1; m < a.size(); ++m) {
      const PenaltySpec spec(a.size(), m, alpha);
      const auto opt = testing::naive_minimum(apply_constraint(a, spec));
      REQUIRE(std::popcount(opt.mask) == static_cast<int>(m));
      const auto restricted = testing::naive_minimum(a, static_cast<int>(m));
      REQUIRE(close(opt.cost - penalty_value(spec, m), restricted.cost));
    }
  };
  SUBCASE("Gaussian n = 12") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) check_instance(gaussian_symmetric(12, seed));
  }
  SUBCASE("PSD n = 12") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) check_instance(psd(12, seed));
  }
}
