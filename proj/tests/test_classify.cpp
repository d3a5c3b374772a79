#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "hardy/classify.hpp"
#include "oracles.hpp"

using hardy::cplx;
using hardy::FiniteBlaschkeProduct;
using hardy::MatrixSymbol;
using hardy::ScalarSymbol;
using hardy::Status;
using hardy::TruncatedOperator;
using hardy::Verdict;
using FBP = FiniteBlaschkeProduct;

namespace {

MatrixSymbol scalarSym(const ScalarSymbol& s) { return MatrixSymbol::scalar(s); }

const MatrixSymbol kShiftSym =
    scalarSym(ScalarSymbol::analytic(1.0, FBP::factor(0.0)));

MatrixSymbol weightedShift(double lo, double hi) {
  return scalarSym(ScalarSymbol::coanalytic(lo, FBP::factor(0.0)) +
                   ScalarSymbol::analytic(hi, FBP::factor(0.0)));
}

// Unimodular-multiple family member with a nontrivial diagonal zero.
MatrixSymbol normalPair() {
  const FBP ba = FBP::factor(0.3);
  const ScalarSymbol phi =
      ScalarSymbol::analytic(std::polar(1.0, 0.7), ba) + ScalarSymbol(cplx(2.0, 1.0));
  MatrixSymbol Phi(2);
  Phi.at(0, 0) = ScalarSymbol::coanalytic(1.0, ba);
  Phi.at(1, 1) = Phi.at(0, 0);
  Phi.at(0, 1) = phi;
  Phi.at(1, 0) = phi * std::polar(1.0, 1.1);
  return Phi;
}

MatrixSymbol negativeControl() {
  MatrixSymbol Phi(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      Phi.at(i, j) = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
  return Phi;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("positive semidefiniteness with eigenpair witnesses") {
  TruncatedOperator ok;
  ok.n = 1;
  ok.N = 3;
  ok.entries = Eigen::MatrixXcd::Zero(3, 3);
  ok.entries(0, 0) = 3.0;
  const Verdict vok = hardy::psd_check(ok, 1e-8);
  CHECK(vok.status == Status::Holds);
  CHECK(vok.defect == 0.0);
  CHECK(vok.atN == 3);

  TruncatedOperator bad;
  bad.n = 1;
  bad.N = 2;
  bad.entries = Eigen::MatrixXcd::Zero(2, 2);
  bad.entries(0, 0) = 1.0;
  bad.entries(1, 1) = -1.0;
  const Verdict vbad = hardy::psd_check(bad, 1e-8);
  CHECK(vbad.status == Status::Fails);
  CHECK(vbad.defect == doctest::Approx(1.0));
  REQUIRE(vbad.witness.has_value());
  CHECK(vbad.witness->value == doctest::Approx(-1.0));
  CHECK(vbad.witness->description.find("most negative eigenvalue") !=
        std::string::npos);
  // The witness vector reproduces the claimed quadratic-form value.
  const cplx q = (vbad.witness->vector.adjoint() * bad.entries *
                  vbad.witness->vector)(0, 0);
  CHECK(std::abs(q - vbad.witness->value) < 1e-12);
}

TEST_CASE("the unilateral shift is hyponormal but not normal") {
  const Verdict h = hardy::hyponormal(kShiftSym, {8, 16});
  CHECK(h.status == Status::Holds);

  const Verdict n = hardy::normal_operator(kShiftSym, {8, 16});
  CHECK(n.status == Status::Fails);
  CHECK(n.defect == doctest::Approx(1.0));
  REQUIRE(n.witness.has_value());
  CHECK(n.witness->value == doctest::Approx(1.0));
  CHECK(n.witness->description.find("largest self-commutator eigenvalue") !=
        std::string::npos);
}

TEST_CASE("normal and quasinormal completions as operators") {
  const MatrixSymbol Nrm = normalPair();
  const Verdict vn = hardy::normal_operator(Nrm, {16, 32});
  CHECK(vn.status == Status::Holds);

  const MatrixSymbol Q = fixtures::quasinormal_at_origin();
  CHECK(hardy::hyponormal(Q).status == Status::Holds);

  const Verdict qn = hardy::normal_operator(Q, {16, 32});
  CHECK(qn.status == Status::Fails);
  CHECK(std::abs(qn.defect - 4.0) < 1e-10);
}

TEST_CASE("quasinormality defect") {
  const Verdict vs = hardy::quasinormal_defect(kShiftSym, 16, 8);
  CHECK(vs.status == Status::Holds);
  CHECK(vs.defect < 1e-12);

  const Verdict vq =
      hardy::quasinormal_defect(fixtures::quasinormal_at_origin(), 24, 8);
  CHECK(vq.status == Status::Holds);
  CHECK(vq.defect < 1e-12);

  // conj(z) + 2z: the commutator times the operator has norm 3.
  const MatrixSymbol w = weightedShift(1.0, 2.0);
  const Verdict vw = hardy::quasinormal_defect(w, 24, 8);
  CHECK(vw.status == Status::Fails);
  CHECK(vw.defect == doctest::Approx(3.0).epsilon(1e-9));
  REQUIRE(vw.witness.has_value());
  CHECK(vw.witness->vector.size() == 0);
  CHECK(vw.witness->description.find("T*T") != std::string::npos);

  // Shifting by beta rescales the defect to 3 sqrt(1 + |beta|^2).
  const Verdict v0 = hardy::quasinormal_after_shift(w, 0.0, 24, 8);
  CHECK(v0.status == Status::Fails);
  CHECK(v0.defect == doctest::Approx(3.0).epsilon(1e-9));
  const Verdict v1 = hardy::quasinormal_after_shift(w, 1.0, 24, 8);
  CHECK(v1.status == Status::Fails);
  CHECK(v1.defect == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("k-hyponormality") {
  CHECK_THROWS_AS(hardy::k_hyponormal(kShiftSym, 0, 8, 4), hardy::Error);

  CHECK(hardy::k_hyponormal(kShiftSym, 2, 12, 8).status == Status::Holds);
  CHECK(hardy::k_hyponormal(fixtures::quasinormal_at_origin(), 2, 12, 8)
            .status == Status::Holds);

  // Hyponormal via a certificate yet not 2-hyponormal: the block form picks
  // up a definite negative eigenvalue once the buffer certifies it.
  const auto pair = fixtures::scaled_conjugate_pair();
  const Verdict v2 = hardy::k_hyponormal(pair.Phi, 2, 16, 16);
  CHECK(v2.status == Status::Fails);
  CHECK(v2.atN == 16);
  CHECK(std::abs(v2.defect - 3.9459) < 2e-2);
  REQUIRE(v2.witness.has_value());
  CHECK(v2.witness->value < 0.0);
}

TEST_CASE("self-commutator rank") {
  CHECK(hardy::commutator_rank(kShiftSym, 32) == 1);
  CHECK(hardy::commutator_rank(fixtures::quasinormal_at_origin(), 32) == 1);

  MatrixSymbol Nrm(2);
  Nrm.at(0, 0) = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
  Nrm.at(1, 1) = Nrm.at(0, 0);
  Nrm.at(0, 1) = ScalarSymbol::analytic(1.0, FBP::factor(0.0));
  Nrm.at(1, 0) = Nrm.at(0, 1);
  CHECK(hardy::commutator_rank(Nrm, 32) == 0);
}

TEST_CASE("scaled-conjugate certificates") {
  // conj(z) + 2z with K = 1/2: Phi - K Phi^* = 1.5 z is analytic.
  const Verdict good = hardy::hyponormality_certificate(
      weightedShift(1.0, 2.0), scalarSym(ScalarSymbol(cplx(0.5))), 512);
  CHECK(good.status == Status::Holds);

  // K = 0 leaves the conjugate part in place.
  const Verdict bare = hardy::hyponormality_certificate(
      scalarSym(ScalarSymbol::coanalytic(1.0, FBP::factor(0.0))),
      scalarSym(ScalarSymbol()), 512);
  CHECK(bare.status == Status::Fails);
  CHECK(bare.defect == doctest::Approx(1.0));
  REQUIRE(bare.witness.has_value());
  CHECK(bare.witness->description.find("negative Fourier coefficient") !=
        std::string::npos);
  CHECK(bare.witness->description.find("-1") != std::string::npos);

  // A factor of sup norm 2 fails even when the coefficients cancel.
  const Verdict big = hardy::hyponormality_certificate(
      kShiftSym, scalarSym(ScalarSymbol::analytic(2.0, FBP::power(0.0, 2))),
      512);
  CHECK(big.status == Status::Fails);
  CHECK(big.defect == doctest::Approx(1.0));
  REQUIRE(big.witness.has_value());
  CHECK(big.witness->description.find("sup norm") != std::string::npos);

  // The flagship pair: Phi = K Phi^* + analytic with ||K|| = 2/2.1 < 1.
  const auto pair = fixtures::scaled_conjugate_pair();
  const MatrixSymbol K = pair.Pm * cplx(1.0 / pair.c);
  const Verdict flagship = hardy::hyponormality_certificate(pair.Phi, K);
  CHECK(flagship.status == Status::Holds);
  CHECK(flagship.defect < 1e-10);

  MatrixSymbol one(1);
  one.at(0, 0) = ScalarSymbol(cplx(1.0));
  CHECK_THROWS_AS(
      hardy::hyponormality_certificate(pair.Phi, one, 512), hardy::Error);
}

TEST_CASE("coefficient-level unitary relation") {
  // [[conj z, z],[z, conj z]]: U is the flip.
  MatrixSymbol Nrm(2);
  Nrm.at(0, 0) = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
  Nrm.at(1, 1) = Nrm.at(0, 0);
  Nrm.at(0, 1) = ScalarSymbol::analytic(1.0, FBP::factor(0.0));
  Nrm.at(1, 0) = Nrm.at(0, 1);
  const auto flip = hardy::normality_unitary_test(Nrm);
  CHECK(flip.verdict.status == Status::Holds);
  Eigen::MatrixXcd want(2, 2);
  want << 0, 1, 1, 0;
  CHECK((flip.U - want).norm() < 1e-10);

  // mu = 2 member of the conjugate-pair family at the origin:
  // phi = 2 conj(z) + sqrt5 z, psi = -phi.
  MatrixSymbol F2(2);
  F2.at(0, 0) = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
  F2.at(1, 1) = F2.at(0, 0);
  F2.at(0, 1) = ScalarSymbol::coanalytic(2.0, FBP::factor(0.0)) +
                ScalarSymbol::analytic(std::sqrt(5.0), FBP::factor(0.0));
  F2.at(1, 0) = -F2.at(0, 1);
  const auto u2 = hardy::normality_unitary_test(F2);
  CHECK(u2.verdict.status == Status::Holds);
  CHECK((u2.U.adjoint() * u2.U - Eigen::MatrixXcd::Identity(2, 2)).norm() <
        1e-8);
  Eigen::MatrixXcd want2(2, 2);
  want2 << -2, 1, -1, -2;
  want2 /= std::sqrt(5.0);
  CHECK((u2.U - want2).norm() < 1e-8);

  // Pointwise-normal but with no constant coefficient relation.
  const auto bad = hardy::normality_unitary_test(
      fixtures::scaled_conjugate_pair().Phi);
  CHECK(bad.verdict.status == Status::Fails);
  CHECK(bad.verdict.witness.has_value());

  // A vanishing analytic part cannot be probed.
  CHECK_THROWS_AS(hardy::normality_unitary_test(negativeControl()),
                  hardy::DegenerateDeterminant);
}

TEST_CASE("route agreement across the classifier family") {
  // Normal member: every test on the normal side agrees.
  const MatrixSymbol Nrm = normalPair();
  CHECK(hardy::normal_operator(Nrm, {16}).status == Status::Holds);
  CHECK(hardy::hyponormal(Nrm, {16}).status == Status::Holds);
  CHECK(hardy::quasinormal_defect(Nrm, 16, 16).status == Status::Holds);
  CHECK(hardy::k_hyponormal(Nrm, 1, 12, 12).status == Status::Holds);
  CHECK(hardy::normality_unitary_test(Nrm).verdict.status == Status::Holds);
  CHECK(hardy::commutator_rank(Nrm, 24) == 0);

  // Quasinormal member: quasinormal yes, normal no, rank one.
  const MatrixSymbol Q = fixtures::quasinormal_at_origin();
  CHECK(hardy::quasinormal_defect(Q, 16, 8).status == Status::Holds);
  CHECK(hardy::normal_operator(Q, {16}).status == Status::Fails);
  CHECK(hardy::normality_unitary_test(Q).verdict.status == Status::Fails);
  CHECK(hardy::commutator_rank(Q, 24) == 1);

  // Negative control: not even hyponormal.
  CHECK(hardy::hyponormal(negativeControl(), {16}).status == Status::Fails);
}

TEST_CASE("finite sections are stable across sizes and phases") {
  // 2 conj(z) + z is co-hyponormal: constant defect 3 at every size.
  const MatrixSymbol w = weightedShift(2.0, 1.0);
  double prev = 0.0;
  for (int N : {8, 16, 32}) {
    const Verdict v = hardy::hyponormal(w, {N});
    CHECK(v.status == Status::Fails);
    CHECK(v.defect == doctest::Approx(3.0));
    CHECK(v.defect >= prev - 1e-10);
    prev = v.defect;
    REQUIRE(v.witness.has_value());
    // Witness vectors certify the claimed eigenvalue on a fresh truncation.
    const TruncatedOperator C = hardy::self_commutator(w, v.atN, 1e-9, 512);
    const cplx q = (v.witness->vector.adjoint() * C.entries *
                    v.witness->vector)(0, 0);
    CHECK(std::abs(q - v.witness->value) < 2e-8);
  }

  // Multiplying the symbol by a unimodular constant changes nothing.
  const MatrixSymbol Q = fixtures::quasinormal_at_origin();
  for (int k = 0; k < 8; ++k) {
    const MatrixSymbol scaled = Q * std::polar(1.0, 0.7 * k);
    CHECK(hardy::hyponormal(scaled, {12}).status == Status::Holds);
    const Verdict n = hardy::normal_operator(scaled, {12});
    CHECK(n.status == Status::Fails);
    CHECK(std::abs(n.defect - 4.0) < 1e-9);
  }
}

}  // TEST_SUITE("classify")
