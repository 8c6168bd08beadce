#include "doctest.h"

#include <random>

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/measures.hpp"
#include "oracles.hpp"

using namespace ncprob;

namespace {

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_SUITE("cumulants") {

TEST_CASE("gaussian fourth moments per flavor") {
  auto gauss = [](Flavor f) {
    return moments_from_cumulants(CumulantSeq(f, rats({0, 1, 0, 0})), 4);
  };
  CHECK_EQ(gauss(Flavor::Classical).values, rats({0, 1, 0, 3}));
  CHECK_EQ(gauss(Flavor::Free).values, rats({0, 1, 0, 2}));
  CHECK_EQ(gauss(Flavor::Boolean).values, rats({0, 1, 0, 1}));
  auto monotone = gauss(Flavor::Monotone);
  CHECK_EQ(monotone.values[3], Rat(3, 2));
}

TEST_CASE("free Poisson moments are the Catalan numbers") {
  auto m = moments_from_cumulants(CumulantSeq(Flavor::Free, rats({1, 1, 1, 1})), 4);
  CHECK_EQ(m.values, rats({1, 2, 5, 14}));
  auto catalan = oracles::catalan_numbers(8);
  auto m8 = moments_from_cumulants(
      CumulantSeq(Flavor::Free, std::vector<Rat>(8, Rat(1))), 8);
  for (int n = 1; n <= 8; ++n) CHECK_EQ(m8.values[n - 1], Rat(catalan[n]));
}

TEST_CASE("inverse transform on pinned examples") {
  auto free_inv = cumulants_from_moments(MomentSeq(rats({0, 1, 0, 2})), Flavor::Free);
  CHECK_EQ(free_inv.values, rats({0, 1, 0, 0}));
  auto boolean_inv =
      cumulants_from_moments(MomentSeq(rats({0, 1, 0, 1, 0, 1})), Flavor::Boolean);
  CHECK_EQ(boolean_inv.values, rats({0, 1, 0, 0, 0, 0}));
  auto classical_inv = cumulants_from_moments(MomentSeq(rats({0, 1, 0, 3})), Flavor::Classical);
  CHECK_EQ(classical_inv.values, rats({0, 1, 0, 0}));
}

TEST_CASE("moment-cumulant roundtrip on random rational sequences") {
  std::mt19937_64 rng(2024);
  for (Flavor f : {Flavor::Classical, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
    for (int trial = 0; trial < 10; ++trial) {
      CumulantSeq c(f, oracles::random_rational_vector(rng, 10));
      MomentSeq m = moments_from_cumulants(c, 10);
      CHECK_EQ(cumulants_from_moments(m, f).values, c.values);
    }
  }
}

TEST_CASE("arcsine even moments from unit monotone cumulants") {
  std::vector<Rat> h(8, Rat(0));
  h[1] = Rat(1);
  auto m = moments_from_cumulants(CumulantSeq(Flavor::Monotone, h), 8);
  CHECK_EQ(m.values[1], Rat(1));
  CHECK_EQ(m.values[3], Rat(3, 2));
  CHECK_EQ(m.values[5], Rat(5, 2));
  CHECK_EQ(m.values[7], Rat(35, 8));
}

TEST_CASE("convolution is componentwise addition away from monotone") {
  auto free_sum = convolve_cumulants(CumulantSeq(Flavor::Free, rats({0, 1, 0, 0})),
                                     CumulantSeq(Flavor::Free, rats({0, 1, 0, 0})));
  CHECK_EQ(free_sum.values, rats({0, 2, 0, 0}));
  auto classical_sum = convolve_cumulants(CumulantSeq(Flavor::Classical, rats({1, 1, 1, 1})),
                                          CumulantSeq(Flavor::Classical, rats({0, 1, 0, 0})));
  CHECK_EQ(classical_sum.values, rats({1, 2, 1, 1}));
  CHECK_THROWS_AS((void)convolve_cumulants(CumulantSeq(Flavor::Monotone, rats({0, 1})),
                                           CumulantSeq(Flavor::Monotone, rats({0, 1}))),
                  UnsupportedOperationError);
  CHECK_THROWS_AS((void)convolve_cumulants(CumulantSeq(Flavor::Free, rats({0, 1})),
                                           CumulantSeq(Flavor::Boolean, rats({0, 1}))),
                  InvalidInputError);
}

TEST_CASE("convolution powers scale cumulants") {
  CumulantSeq r(Flavor::Boolean, rats({0, 2, 0, 0}));
  CHECK_EQ(power_cumulants(r, Rat(1)).values, r.values);
  CHECK_EQ(power_cumulants(r, Rat(1, 2)).values, rats({0, 1, 0, 0}));
  CumulantSeq h(Flavor::Monotone, rats({0, 1, 1, 0}));
  CHECK_EQ(power_cumulants(h, Rat(2)).values, rats({0, 2, 2, 0}));
  CHECK_THROWS_AS((void)power_cumulants(r, Rat(-1)), InvalidInputError);
}

TEST_CASE("dilation scales the n-th cumulant by s^n") {
  CumulantSeq c(Flavor::Free, rats({0, 1, 0, 1}));
  CHECK_EQ(dilate_cumulants(c, Rat(1)).values, c.values);
  CHECK_EQ(dilate_cumulants(c, Rat(-1)).values, c.values);  // even entries only
  CumulantSeq big(Flavor::Free, rats({0, 4, 0, 4}));
  std::vector<Rat> expected{Rat(0), Rat(1), Rat(0), Rat(1, 4)};
  CHECK_EQ(dilate_cumulants(big, Rat(1, 2)).values, expected);
}

TEST_CASE("dilation homogeneity of moments") {
  std::mt19937_64 rng(7);
  for (Flavor f : {Flavor::Classical, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
    CumulantSeq c(f, oracles::random_rational_vector(rng, 8));
    Rat s = oracles::random_rational(rng);
    MomentSeq base = moments_from_cumulants(c, 8);
    MomentSeq scaled = moments_from_cumulants(dilate_cumulants(c, s), 8);
    Rat p(1);
    for (int n = 1; n <= 8; ++n) {
      p *= s;
      CHECK_EQ(scaled.values[n - 1], p * base.values[n - 1]);
    }
  }
}

TEST_CASE("classical cumulant additivity matches support convolution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    auto d1 = oracles::random_measure(rng, 3);
    auto d2 = oracles::random_measure(rng, 3);
    AtomicMeasure mu1(d1.atoms, d1.weights), mu2(d2.atoms, d2.weights);
    auto c1 = cumulants_from_moments(mu1.moments(8), Flavor::Classical);
    auto c2 = cumulants_from_moments(mu2.moments(8), Flavor::Classical);
    MomentSeq via_cumulants = moments_from_cumulants(convolve_cumulants(c1, c2), 8);
    MomentSeq via_support = classical_convolve(mu1, mu2).moments(8);
    CHECK_EQ(via_cumulants.values, via_support.values);
  }
}

TEST_CASE("bercovici-pata retags") {
  CumulantSeq r(Flavor::Boolean, rats({0, 1, 0, 0}));
  CumulantSeq as_free = bp_map(r, Flavor::Free);
  CHECK_EQ(as_free.flavor, Flavor::Free);
  CHECK_EQ(as_free.values, r.values);
  CHECK_EQ(moments_from_cumulants(as_free, 4).values, rats({0, 1, 0, 2}));

  CumulantSeq c(Flavor::Classical, rats({0, 1, 0, 0}));
  CHECK_EQ(bp_map(c, Flavor::Free).values, c.values);
  auto as_monotone = moments_from_cumulants(bp_map(c, Flavor::Monotone), 4);
  CHECK_EQ(as_monotone.values[3], Rat(3, 2));
  // composition of retags is a retag
  CHECK_EQ(bp_map(bp_map(r, Flavor::Classical), Flavor::Monotone).values, r.values);
}

TEST_CASE("order limits and argument validation") {
  CumulantSeq c(Flavor::Free, std::vector<Rat>(15, Rat(1)));
  CHECK_THROWS_AS((void)moments_from_cumulants(c, 15), SizeLimitError);
  CHECK_NOTHROW((void)moments_from_cumulants(c, 15, 15));
  CumulantSeq shorter(Flavor::Free, rats({0, 1}));
  CHECK_THROWS_AS((void)moments_from_cumulants(shorter, 4), InvalidInputError);
}

}  // TEST_SUITE
