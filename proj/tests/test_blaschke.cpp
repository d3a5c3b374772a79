#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "hardy/blaschke.hpp"
#include "oracles.hpp"

using hardy::cplx;
using hardy::FiniteBlaschkeProduct;

TEST_SUITE("blaschke") {

TEST_CASE("evaluation matches the closed form") {
  CHECK(std::abs(hardy::eval(FiniteBlaschkeProduct::factor(0.0), 0.5) -
                 cplx(0.5)) < 1e-15);

  const cplx alpha(0.3, 0.2);
  CHECK(std::abs(hardy::eval(FiniteBlaschkeProduct::factor(alpha), alpha)) <
        1e-15);

  // (0.25 - 0.5) / (1 - 0.5 * 0.25) = -2/7
  const cplx v = hardy::eval(FiniteBlaschkeProduct::factor(0.5), 0.25);
  CHECK(v.real() == doctest::Approx(-2.0 / 7.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.0));

  // 2.0 = 1/conj(0.5) is the pole of b_{0.5}.
  CHECK_THROWS_AS(hardy::eval(FiniteBlaschkeProduct::factor(0.5), 2.0),
                  hardy::PoleEvaluation);
}

TEST_CASE("construction and bookkeeping") {
  const FiniteBlaschkeProduct id = FiniteBlaschkeProduct::one();
  CHECK(id.degree() == 0);
  CHECK(id.constant() == cplx(1.0));
  CHECK(id.max_zero_modulus() == 0.0);

  const FiniteBlaschkeProduct cube = FiniteBlaschkeProduct::power(0.3, 3);
  CHECK(cube.degree() == 3);
  CHECK(cube.multiplicity(0.3) == 3);
  CHECK(cube.multiplicity(0.5) == 0);
  CHECK(cube.max_zero_modulus() == doctest::Approx(0.3));

  const FiniteBlaschkeProduct rot = cube.with_constant(cplx(0.0, 1.0));
  CHECK(rot.constant() == cplx(0.0, 1.0));
  CHECK(rot.zeros() == cube.zeros());

  CHECK_THROWS_AS(FiniteBlaschkeProduct(1.0, {cplx(1.0, 0.0)}),
                  hardy::InvalidZero);
  CHECK_THROWS_AS(FiniteBlaschkeProduct(2.0, {}), hardy::Error);
}

TEST_CASE("multiset product and quotient") {
  const FiniteBlaschkeProduct b5 = FiniteBlaschkeProduct::factor(0.5);
  const FiniteBlaschkeProduct b2 = FiniteBlaschkeProduct::factor(0.2);
  const FiniteBlaschkeProduct prod = hardy::mul(b5, b2);
  CHECK(prod.degree() == 2);
  CHECK(prod.multiplicity(0.5) == 1);
  CHECK(prod.multiplicity(0.2) == 1);

  const FiniteBlaschkeProduct back = hardy::div(prod, b2);
  CHECK(back.degree() == 1);
  CHECK(back.multiplicity(0.5) == 1);

  CHECK_THROWS_AS(hardy::div(b5, FiniteBlaschkeProduct::factor(0.3)),
                  hardy::NotDivisible);

  // div(mul(B1, B2), B2) == B1 exactly, constants included.
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    FiniteBlaschkeProduct B1 = oracles::random_blaschke(rng, 3, 0.8)
                                   .with_constant(oracles::random_disk(
                                       rng, 1.0, 1.0));
    FiniteBlaschkeProduct B2 = oracles::random_blaschke(rng, 2, 0.8)
                                   .with_constant(oracles::random_disk(
                                       rng, 1.0, 1.0));
    const FiniteBlaschkeProduct q = hardy::div(hardy::mul(B1, B2), B2);
    CHECK(std::abs(q.constant() - B1.constant()) < 1e-12);
    CHECK(oracles::zeros_match(q.zeros(), B1.zeros(), 1e-12));
  }
}

TEST_CASE("gcd, lcm and coprimality") {
  const FiniteBlaschkeProduct b5 = FiniteBlaschkeProduct::factor(0.5);
  const FiniteBlaschkeProduct b2 = FiniteBlaschkeProduct::factor(0.2);
  const FiniteBlaschkeProduct b7 = FiniteBlaschkeProduct::factor(0.7);

  const FiniteBlaschkeProduct g = hardy::gcd(hardy::mul(b5, b2),
                                             hardy::mul(b5, b7));
  CHECK(g.degree() == 1);
  CHECK(g.multiplicity(0.5) == 1);
  CHECK(g.constant() == cplx(1.0));

  const FiniteBlaschkeProduct l = hardy::lcm(hardy::mul(b5, b2),
                                             hardy::mul(b5, b7));
  CHECK(l.degree() == 3);
  CHECK(l.multiplicity(0.2) == 1);
  CHECK(l.multiplicity(0.5) == 1);
  CHECK(l.multiplicity(0.7) == 1);

  CHECK(hardy::is_coprime(b5, b2));
  CHECK_FALSE(hardy::is_coprime(b5, hardy::mul(b5, b2)));

  // deg gcd + deg lcm == deg B1 + deg B2 on pairs with a forced common zero.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const cplx shared = oracles::random_disk(rng, 0.7);
    const FiniteBlaschkeProduct B1 =
        hardy::mul(FiniteBlaschkeProduct::factor(shared),
                   oracles::random_blaschke(rng, 2, 0.7));
    const FiniteBlaschkeProduct B2 =
        hardy::mul(FiniteBlaschkeProduct::factor(shared),
                   oracles::random_blaschke(rng, 1, 0.7));
    const FiniteBlaschkeProduct gg = hardy::gcd(B1, B2);
    const FiniteBlaschkeProduct ll = hardy::lcm(B1, B2);
    CHECK(gg.degree() + ll.degree() == B1.degree() + B2.degree());
    CHECK(gg.multiplicity(shared) >= 1);
    std::vector<cplx> unionZeros = gg.zeros();
    unionZeros.insert(unionZeros.end(), ll.zeros().begin(), ll.zeros().end());
    std::vector<cplx> both = B1.zeros();
    both.insert(both.end(), B2.zeros().begin(), B2.zeros().end());
    CHECK(oracles::zeros_match(unionZeros, both, 1e-9));
  }
}

TEST_CASE("Taylor coefficients: closed forms") {
  const auto cz = hardy::fourier_analytic(FiniteBlaschkeProduct::factor(0.0), 3);
  CHECK(std::abs(cz[0]) < 1e-15);
  CHECK(std::abs(cz[1] - 1.0) < 1e-15);
  CHECK(std::abs(cz[2]) < 1e-15);

  // b_{0.5}: c_0 = -0.5, c_n = 0.75 * 0.5^{n-1}.
  const auto c5 = hardy::fourier_analytic(FiniteBlaschkeProduct::factor(0.5), 3);
  CHECK(c5[0].real() == doctest::Approx(-0.5));
  CHECK(c5[1].real() == doctest::Approx(0.75));
  CHECK(c5[2].real() == doctest::Approx(0.375));
  CHECK(c5[3].real() == doctest::Approx(0.1875));

  // Product series starts at the product of the factor constants.
  const auto cp = hardy::fourier_analytic(
      hardy::mul(FiniteBlaschkeProduct::factor(0.5),
                 FiniteBlaschkeProduct::factor(0.2)),
      2);
  CHECK(cp[0].real() == doctest::Approx(0.1));
}

TEST_CASE("Taylor coefficients agree with circle quadrature") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const FiniteBlaschkeProduct B =
        oracles::random_blaschke(rng, deg(rng), 0.8)
            .with_constant(oracles::random_disk(rng, 1.0, 1.0));
    const auto c = hardy::fourier_analytic(B, 12);
    for (int k = 0; k <= 12; ++k) {
      cplx acc = 0.0;
      const int S = 1024;
      for (int s = 0; s < S; ++s) {
        const double t = oracles::angle_at(s, S);
        acc += hardy::eval(B, std::polar(1.0, t)) * std::polar(1.0, -k * t);
      }
      acc /= static_cast<double>(S);
      CHECK(std::abs(c[static_cast<std::size_t>(k)] - acc) < 1e-9);
    }
  }
}

TEST_CASE("unimodular on the circle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const FiniteBlaschkeProduct B =
        oracles::random_blaschke(rng, 6, 0.8)
            .with_constant(oracles::random_disk(rng, 1.0, 1.0));
    for (int s = 0; s < 64; ++s) {
      const cplx z = std::polar(1.0, oracles::angle_at(s, 64));
      CHECK(std::abs(std::abs(hardy::eval(B, z)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("coefficients decay at the max zero modulus rate") {
  const auto c1 = hardy::fourier_analytic(
      hardy::mul(FiniteBlaschkeProduct::factor(0.6),
                 FiniteBlaschkeProduct::factor(0.3)),
      50);
  for (int n = 0; n <= 50; ++n) {
    CHECK(std::abs(c1[static_cast<std::size_t>(n)]) <=
          3.5 * std::pow(0.6, n));
  }

  // A double zero contributes a linear factor n; 0.6 > 0.5 absorbs it into
  // the constant (the ratio |c_n| / 0.6^n peaks near 3.35 around n = 8).
  const auto c2 = hardy::fourier_analytic(FiniteBlaschkeProduct::power(0.5, 2),
                                          50);
  for (int n = 0; n <= 50; ++n) {
    CHECK(std::abs(c2[static_cast<std::size_t>(n)]) <=
          4.0 * std::pow(0.6, n));
  }
}

TEST_CASE("zero matching tolerance") {
  const FiniteBlaschkeProduct prod =
      hardy::mul(FiniteBlaschkeProduct::factor(0.5),
                 FiniteBlaschkeProduct::factor(0.2));

  // A divisor displaced by less than the matching tolerance still divides.
  const FiniteBlaschkeProduct nearBy =
      FiniteBlaschkeProduct::factor(cplx(0.5 + 1e-10, 0.0));
  CHECK(hardy::div(prod, nearBy).degree() == 1);

  const FiniteBlaschkeProduct farOff =
      FiniteBlaschkeProduct::factor(cplx(0.5 + 1e-6, 0.0));
  CHECK_THROWS_AS(hardy::div(prod, farOff), hardy::NotDivisible);

  // Just outside the tolerance is treated as a distinct zero.
  CHECK(hardy::is_coprime(FiniteBlaschkeProduct::factor(0.5),
                          FiniteBlaschkeProduct::factor(cplx(0.5 + 2e-9, 0.0))));
}

}  // TEST_SUITE("blaschke")
