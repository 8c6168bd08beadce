#include "doctest.h"

#include <complex>
#include <random>

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/jacobi.hpp"
#include "oracles.hpp"

using namespace ncprob;
using cplx = std::complex<double>;

namespace {

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

AtomicMeasure random_measure(std::mt19937_64& rng, int max_atoms) {
  auto data = oracles::random_measure(rng, max_atoms);
  return AtomicMeasure(data.atoms, data.weights);
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("pinned orthogonalizations") {
  auto bernoulli = jacobi_from_moments(MomentSeq(rats({0, 1, 0, 1, 0, 1})));
  CHECK_EQ(bernoulli.beta, rats({0, 0}));
  CHECK_EQ(bernoulli.gamma, rats({1, 0}));
  CHECK(bernoulli.terminated());
  CHECK_EQ(bernoulli.rank(), 2);

  auto semicircle = jacobi_from_moments(MomentSeq(rats({0, 1, 0, 2, 0, 5})));
  CHECK_EQ(semicircle.beta, rats({0, 0, 0}));
  CHECK_EQ(semicircle.gamma, rats({1, 1}));
  CHECK_FALSE(semicircle.terminated());

  std::vector<Rat> arcsine_m{Rat(0), Rat(1), Rat(0), Rat(3, 2), Rat(0), Rat(5, 2)};
  auto arcsine = jacobi_from_moments(MomentSeq(arcsine_m));
  CHECK_EQ(arcsine.beta, rats({0, 0, 0}));
  CHECK_EQ(arcsine.gamma, (std::vector<Rat>{Rat(1), Rat(1, 2)}));

  // asymmetric two-atom case: compound Poisson with rate 2 and jumps at 1
  auto two_atom = jacobi_from_moments(MomentSeq(rats({2, 6, 18, 54})));
  CHECK_EQ(two_atom.beta, rats({2, 1}));
  CHECK_EQ(two_atom.gamma, rats({2, 0}));

  auto point = jacobi_from_moments(MomentSeq(rats({3, 9, 27, 81})));
  CHECK_EQ(point.beta, rats({3}));
  CHECK_EQ(point.gamma, rats({0}));
  CHECK_EQ(finite_support_rank(point).value(), 1);
}

TEST_CASE("moments from jacobi data") {
  JacobiParams single{rats({0}), {}};
  CHECK_EQ(moments_from_jacobi(single, 2).values, rats({0, 0}));
  CHECK(single.terminated());

  JacobiParams point{rats({7}), rats({0})};
  auto m = moments_from_jacobi(point, 5);
  for (int n = 1; n <= 5; ++n) CHECK_EQ(m.values[n - 1], rat_pow(Rat(7), n));

  JacobiParams bernoulli{rats({0, 0}), rats({1, 0})};
  auto mb = moments_from_jacobi(bernoulli, 8);
  for (int n = 1; n <= 8; ++n) CHECK_EQ(mb.values[n - 1], Rat((n % 2 == 0) ? 1 : 0));
}

TEST_CASE("truncated jacobi data has an honest order cap") {
  JacobiParams semicircle_trunc{rats({0, 0, 0}), rats({1, 1})};
  auto m5 = moments_from_jacobi(semicircle_trunc, 5);
  CHECK_EQ(m5.values, rats({0, 1, 0, 2, 0}));
  CHECK_THROWS_AS((void)moments_from_jacobi(semicircle_trunc, 6), OrderLimitError);

  // equal-length shape reaches one more even order
  JacobiParams greedy{rats({0, 0, 0}), rats({1, 1, 1})};
  CHECK_EQ(moments_from_jacobi(greedy, 6).values, rats({0, 1, 0, 2, 0, 5}));
  CHECK_THROWS_AS((void)moments_from_jacobi(greedy, 7), OrderLimitError);
}

TEST_CASE("roundtrip through terminating data for atomic measures") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    AtomicMeasure mu = random_measure(rng, 5);
    MomentSeq m = mu.moments(10);
    JacobiParams J = jacobi_from_moments(m);
    CHECK(J.terminated());
    CHECK_EQ(finite_support_rank(J).value(), mu.atom_count());
    CHECK_EQ(moments_from_jacobi(J, 10).values, m.values);
    AtomicMeasure back = atomic_from_terminating_jacobi(J);
    CHECK_EQ(back, mu);
  }
}

TEST_CASE("finite support rank") {
  auto bernoulli = jacobi_from_moments(MomentSeq(rats({0, 1, 0, 1, 0, 1})));
  CHECK_EQ(finite_support_rank(bernoulli).value(), 2);
  JacobiParams semicircle_trunc{rats({0, 0, 0}), rats({1, 1})};
  CHECK_FALSE(finite_support_rank(semicircle_trunc).has_value());
  JacobiParams single{rats({4}), {}};
  CHECK_EQ(finite_support_rank(single).value(), 1);
}

TEST_CASE("invalid moment sequences are rejected") {
  // m4 < m2^2 violates Cauchy-Schwarz
  CHECK_THROWS_AS((void)jacobi_from_moments(MomentSeq(rats({0, 1, 0, 0}))),
                  InvalidMomentSequenceError);
  // degenerate at rank 2 but the tail disagrees with the two-point measure
  CHECK_THROWS_AS((void)jacobi_from_moments(MomentSeq(rats({0, 1, 0, 1, 0, 99}))),
                  InvalidMomentSequenceError);
}

TEST_CASE("explicit level requests") {
  MomentSeq m(rats({0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  auto J = jacobi_from_moments(m, 2, 2);
  CHECK_EQ(J.gamma, rats({1, 0}));
  CHECK_THROWS_AS((void)jacobi_from_moments(m, 7, 7), OrderLimitError);
  CHECK_THROWS_AS((void)jacobi_from_moments(m, 3, 1), InvalidInputError);

  // a 3-atom measure: explicit greedy request sees the terminating zero
  AtomicMeasure three({Rat(-1), Rat(0), Rat(2)}, {Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  auto J3 = jacobi_from_moments(three.moments(8), 4, 4);
  CHECK(J3.terminated());
  CHECK_EQ(J3.rank(), 3);
}

TEST_CASE("parameter validation") {
  JacobiParams interior_zero{rats({0, 0, 0}), rats({1, 0, 1})};
  CHECK_THROWS_AS(interior_zero.validate(), InvalidInputError);
  JacobiParams negative{rats({0, 0}), (std::vector<Rat>{Rat(-1)})};
  CHECK_THROWS_AS(negative.validate(), InvalidInputError);
  JacobiParams short_gamma{rats({0, 0, 0}), rats({1})};
  CHECK_THROWS_AS(short_gamma.validate(), InvalidInputError);
  JacobiParams terminating_wrong_shape{rats({0, 0, 0}), rats({1, 0})};
  CHECK_THROWS_AS(terminating_wrong_shape.validate(), InvalidInputError);
}

TEST_CASE("continued fraction evaluation at pinned points") {
  JacobiParams delta0{rats({0}), {}};
  cplx v = cauchy_cf_eval(delta0, cplx(0.0, 1.0));
  CHECK_LT(std::abs(v - cplx(0.0, -1.0)), 1e-14);

  JacobiParams bernoulli{rats({0, 0}), rats({1, 0})};
  cplx vb = cauchy_cf_eval(bernoulli, cplx(0.0, 2.0));
  CHECK_LT(std::abs(vb - cplx(0.0, 2.0) / cplx(-5.0, 0.0)), 1e-14);

  CHECK_THROWS_AS((void)cauchy_cf_eval(delta0, cplx(0.0, 0.5)), DomainError);
  CHECK_THROWS_AS((void)cauchy_cf_eval(bernoulli, cplx(0.0, 2.0), cplx(0.0, 0.5)), DomainError);
  CHECK_THROWS_AS((void)cauchy_cf_eval(delta0, cplx(0.0, 2.0), cplx(0.0, -0.5)),
                  InvalidInputError);  // no gamma slot for a tail
}

TEST_CASE("evaluations stay inside the Nevanlinna bound") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> tail_re(-0.5, 0.5);
  std::uniform_real_distribution<double> tail_im(-0.8, 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    int levels = 1 + static_cast<int>(rng() % 5);
    JacobiParams J;
    for (int i = 0; i < levels; ++i) {
      J.beta.push_back(oracles::random_rational(rng));
      J.gamma.push_back(Rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3)));
    }
    cplx tail(tail_re(rng), tail_im(rng));
    for (double x : {-3.0, -1.0, 0.0, 2.0}) {
      for (double y : {1.0, 2.0}) {
        cplx v = cauchy_cf_eval(J, cplx(x, y), tail);
        CHECK_LE(std::abs(v), 1.0 / y + 1e-12);
        CHECK_LT(v.imag(), 0.0);
      }
    }
  }
}

TEST_CASE("truncations converge to the closed semicircle transform") {
  // gamma_k = 1 for the standard semicircle; truncation error at z = 2i decays
  cplx z(0.0, 2.0);
  cplx exact(0.0, 1.0 - std::sqrt(2.0));  // (z - sqrt(z^2-4))/2 at 2i
  double prev = 1.0;
  for (int depth = 2; depth <= 12; depth += 2) {
    JacobiParams J;
    J.beta.assign(depth, Rat(0));
    J.gamma.assign(depth - 1, Rat(1));
    double err = std::abs(cauchy_cf_eval(J, z) - exact);
    CHECK_LT(err, prev);
    prev = err;
  }
  CHECK_LT(prev, 1e-6);
}

TEST_CASE("vanishing tail coefficient forces the finite fraction value") {
  // gamma_2(n) = 1/n with terminating limit (two levels + vanishing third)
  JacobiParams limit{rats({0, 0}), rats({1, 0})};
  for (double x : {-2.0, 0.0, 1.0}) {
    cplx z(x, 1.0);
    cplx target = cauchy_cf_eval(limit, z);
    double prev = 1.0;
    for (long n : {2L, 8L, 32L, 128L}) {
      JacobiParams Jn{rats({0, 0}), {Rat(1), Rat(1, n)}};
      // any bounded tail: try the worst admissible ones
      double worst = 0.0;
      for (cplx tail : {cplx(0.0, 0.0), cplx(0.0, -1.0), cplx(0.9, -0.3)}) {
        worst = std::max(worst, std::abs(cauchy_cf_eval(Jn, z, tail) - target));
      }
      CHECK_LT(worst, 2.0 / static_cast<double>(n));
      CHECK_LT(worst, prev);
      prev = worst;
    }
  }
}

TEST_CASE("json serialization") {
  JacobiParams J{rats({0, 0}), rats({1, 0})};
  auto j = J.to_json();
  CHECK_EQ(JacobiParams::from_json(j), J);
  nlohmann::json bad;
  bad["beta"] = {"0"};
  CHECK_THROWS_AS((void)JacobiParams::from_json(bad), InvalidInputError);
}

}  // TEST_SUITE
