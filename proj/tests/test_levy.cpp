#include "doctest.h"

#include <random>

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/levy.hpp"
#include "oracles.hpp"

using namespace ncprob;

namespace {

AtomicMeasure random_measure(std::mt19937_64& rng, int max_atoms) {
  auto data = oracles::random_measure(rng, max_atoms);
  return AtomicMeasure(data.atoms, data.weights);
}

}  // namespace

TEST_SUITE("levy") {

TEST_CASE("generating pair of the standard gaussian") {
  LevyPair pair{Rat(0), FiniteKernelMeasure::from_points({Rat(0)}, {Rat(1)})};
  for (Flavor f : {Flavor::Classical, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
    auto c = levy_pair_to_cumulants(pair, f, 8);
    CHECK_EQ(c.flavor, f);
    CHECK_EQ(c.values[0], Rat(0));
    CHECK_EQ(c.values[1], Rat(1));
    for (int n = 3; n <= 8; ++n) CHECK_EQ(c.values[n - 1], Rat(0));
  }
}

TEST_CASE("generating pair of the unit-rate poisson") {
  LevyPair pair{Rat(1, 2), FiniteKernelMeasure::from_points({Rat(1)}, {Rat(1, 2)})};
  auto c = levy_pair_to_cumulants(pair, Flavor::Free, 8);
  for (const auto& v : c.values) CHECK_EQ(v, Rat(1));
}

TEST_CASE("zero pair is the point mass at zero") {
  LevyPair pair{Rat(0), FiniteKernelMeasure()};
  auto c = levy_pair_to_cumulants(pair, Flavor::Boolean, 6);
  for (const auto& v : c.values) CHECK_EQ(v, Rat(0));
}

TEST_CASE("the pair-to-cumulant map ignores the flavor tag") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    auto data = oracles::random_measure(rng, 3);
    std::vector<Rat> masses = data.weights;  // positive, need not sum to 1 after scaling
    for (auto& m : masses) m *= Rat(3, 2);
    LevyPair pair{oracles::random_rational(rng), FiniteKernelMeasure::from_points(data.atoms, masses)};
    auto as_free = levy_pair_to_cumulants(pair, Flavor::Free, 8);
    for (Flavor f : {Flavor::Classical, Flavor::Boolean, Flavor::Monotone}) {
      CHECK_EQ(levy_pair_to_cumulants(pair, f, 8).values, as_free.values);
      CHECK_EQ(bp_map(as_free, f).values, as_free.values);
    }
  }
}

TEST_CASE("compound poisson cumulants") {
  auto all_ones =
      compound_poisson_cumulants(Rat(1), AtomicMeasure::point_mass(Rat(1)), Flavor::Free, 8);
  for (const auto& v : all_ones.values) CHECK_EQ(v, Rat(1));

  auto tetilla =
      compound_poisson_cumulants(Rat(2), AtomicMeasure::symmetric_bernoulli(), Flavor::Free, 6);
  CHECK_EQ(tetilla.values,
           std::vector<Rat>{Rat(0), Rat(2), Rat(0), Rat(2), Rat(0), Rat(2)});

  auto zero = compound_poisson_cumulants(Rat(3), AtomicMeasure::point_mass(Rat(0)),
                                         Flavor::Classical, 6);
  for (const auto& v : zero.values) CHECK_EQ(v, Rat(0));

  CHECK_THROWS_AS((void)compound_poisson_cumulants(Rat(0), AtomicMeasure::point_mass(Rat(1)),
                                                   Flavor::Free, 4),
                  InvalidInputError);
}

TEST_CASE("compound poisson reparametrization") {
  auto pair1 = levy_pair_from_compound_poisson(Rat(1), AtomicMeasure::point_mass(Rat(1)));
  CHECK_EQ(pair1.gamma, Rat(1, 2));
  REQUIRE_EQ(pair1.sigma.atom_count(), 1);
  CHECK_EQ(pair1.sigma.atoms()[0].lo, Rat(1));
  CHECK_EQ(pair1.sigma.masses()[0].lo, Rat(1, 2));

  auto pair2 = levy_pair_from_compound_poisson(Rat(2), AtomicMeasure::symmetric_bernoulli());
  CHECK_EQ(pair2.gamma, Rat(0));
  REQUIRE_EQ(pair2.sigma.atom_count(), 2);
  CHECK_EQ(pair2.sigma.atoms()[0].lo, Rat(-1));
  CHECK_EQ(pair2.sigma.masses()[0].lo, Rat(1, 2));
  CHECK_EQ(pair2.sigma.masses()[1].lo, Rat(1, 2));

  auto pair3 = levy_pair_from_compound_poisson(Rat(5), AtomicMeasure::point_mass(Rat(0)));
  CHECK_EQ(pair3.gamma, Rat(0));
  CHECK(pair3.sigma.is_zero());
}

TEST_CASE("reparametrization contract on random data") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    AtomicMeasure nu = random_measure(rng, 4);
    Rat lambda = Rat(1) + oracles::random_rational(rng) * oracles::random_rational(rng);
    if (lambda <= 0) lambda = Rat(1, 3);
    LevyPair pair = levy_pair_from_compound_poisson(lambda, nu);
    for (Flavor f : {Flavor::Classical, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
      CHECK_EQ(levy_pair_to_cumulants(pair, f, 8).values,
               compound_poisson_cumulants(lambda, nu, f, 8).values);
    }
  }
}

TEST_CASE("boolean generating pair of pinned measures") {
  auto pair_b = boolean_levy_pair(AtomicMeasure::symmetric_bernoulli());
  CHECK_EQ(pair_b.gamma, Rat(0));
  REQUIRE_EQ(pair_b.sigma.atom_count(), 1);
  CHECK_EQ(pair_b.sigma.atoms()[0].lo, Rat(0));
  CHECK_EQ(pair_b.sigma.masses()[0].lo, Rat(1));
  CHECK_EQ(pair_b.sigma.total_mass(), Rat(1));

  auto pair_c = boolean_levy_pair(AtomicMeasure::point_mass(Rat(5, 3)));
  CHECK_EQ(pair_c.gamma, Rat(5, 3));
  CHECK(pair_c.sigma.is_zero());
}

TEST_CASE("boolean pair of a k-atomic measure has k-1 sigma atoms") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    AtomicMeasure mu = random_measure(rng, 4);
    LevyPair pair = boolean_levy_pair(mu);
    CHECK_EQ(pair.sigma.atom_count(), mu.atom_count() - 1);
    for (const auto& m : pair.sigma.masses()) CHECK_GT(m.lo, Rat(0));
  }
}

TEST_CASE("boolean pair reproduces the boolean cumulants exactly") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    AtomicMeasure mu = random_measure(rng, 4);
    LevyPair pair = boolean_levy_pair(mu);
    auto direct = cumulants_from_moments(mu.moments(8), Flavor::Boolean);
    auto via_pair = levy_pair_to_cumulants(pair, Flavor::Boolean, 8);
    CHECK_EQ(via_pair.values, direct.values);
  }
}

TEST_CASE("kernel measure validation") {
  CHECK_THROWS_AS((void)FiniteKernelMeasure::from_points({Rat(0)}, {Rat(-1)}), InvalidInputError);
  CHECK_THROWS_AS((void)FiniteKernelMeasure::from_points({Rat(0), Rat(0)}, {Rat(1), Rat(1)}),
                  InvalidInputError);
  auto dropped = FiniteKernelMeasure::from_points({Rat(1), Rat(2)}, {Rat(1), Rat(0)});
  CHECK_EQ(dropped.atom_count(), 1);
}

}  // TEST_SUITE
