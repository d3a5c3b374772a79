#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <string>

#include "hardy/completion.hpp"
#include "hardy/inner_matrix.hpp"
#include "hardy/symbol.hpp"

// Recurring concrete symbols shared by several suites, built in-place so the
// library tests do not depend on the committed JSON files.
namespace fixtures {

using hardy::cplx;
using hardy::FiniteBlaschkeProduct;
using hardy::MatrixSymbol;
using hardy::ScalarSymbol;

// 2x2 symbol with inner-coanalytic diagonal and scaled analytic corners:
// diagonal conj(theta), corners conj(theta b_a) + c theta b_b and
// conj(b_b) + c theta^2 b_a, with theta = b_{0.7}, a = 0.3, b = -0.4 and
// c = sup norm of the conjugate-part matrix + 0.1. Pointwise normal,
// hyponormal with certificate K = Pm / c, but not 2-hyponormal.
struct ScaledConjugatePair {
  MatrixSymbol Phi;
  MatrixSymbol Pm;  // conjugate-part matrix (certificate numerator)
  double c;
};

inline ScaledConjugatePair scaled_conjugate_pair() {
  using FBP = FiniteBlaschkeProduct;
  const cplx a = 0.3;
  const cplx b = -0.4;
  const FBP th = FBP::factor(0.7);

  MatrixSymbol Pm(2);
  Pm.at(0, 0) = ScalarSymbol::analytic(1.0, th);
  Pm.at(1, 1) = ScalarSymbol::analytic(1.0, th);
  Pm.at(0, 1) = ScalarSymbol::analytic(1.0, FBP::factor(b));
  Pm.at(1, 0) = ScalarSymbol::analytic(1.0, hardy::mul(th, FBP::factor(a)));
  const double c = hardy::sup_norm(Pm) + 0.1;

  MatrixSymbol Phi(2);
  Phi.at(0, 0) = ScalarSymbol::coanalytic(1.0, th);
  Phi.at(1, 1) = ScalarSymbol::coanalytic(1.0, th);
  Phi.at(0, 1) =
      ScalarSymbol::coanalytic(1.0, hardy::mul(th, FBP::factor(a))) +
      ScalarSymbol::analytic(c, hardy::mul(th, FBP::factor(b)));
  Phi.at(1, 0) =
      ScalarSymbol::coanalytic(1.0, FBP::factor(b)) +
      ScalarSymbol::analytic(
          c, hardy::mul(hardy::mul(th, th), FBP::factor(a)));
  return {std::move(Phi), std::move(Pm), c};
}

// [[conj(z), conj(z)+2z],[conj(z)+2z, conj(z)]]: quasinormal, rank-one
// self-commutator, not normal.
inline MatrixSymbol quasinormal_at_origin() {
  using FBP = FiniteBlaschkeProduct;
  const ScalarSymbol diag = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
  const ScalarSymbol corner = diag + ScalarSymbol::analytic(2.0, FBP::factor(0.0));
  MatrixSymbol Phi(2);
  Phi.at(0, 0) = diag;
  Phi.at(1, 1) = diag;
  Phi.at(0, 1) = corner;
  Phi.at(1, 0) = corner;
  return Phi;
}

// [[b_alpha, theta1],[theta0, b_alpha]]: the analytic matrix whose conjugate
// is the strictly coanalytic part of the kernel-case completion symbols.
inline MatrixSymbol minus_matrix(const FiniteBlaschkeProduct& theta0,
                                 const FiniteBlaschkeProduct& theta1,
                                 cplx alpha) {
  MatrixSymbol Pm(2);
  Pm.at(0, 0) =
      ScalarSymbol::analytic(1.0, FiniteBlaschkeProduct::factor(alpha));
  Pm.at(1, 1) = Pm.at(0, 0);
  Pm.at(0, 1) = ScalarSymbol::analytic(1.0, theta1);
  Pm.at(1, 0) = ScalarSymbol::analytic(1.0, theta0);
  return Pm;
}

struct KernelFixture {
  FiniteBlaschkeProduct theta0;
  FiniteBlaschkeProduct theta1;
  cplx alpha;
  hardy::KernelCase kase;
};

// One parameter set per hypothesis case (matching the committed fixtures).
inline std::vector<KernelFixture> kernel_fixtures() {
  using FBP = FiniteBlaschkeProduct;
  const FBP b05 = FBP::factor(0.5);
  return {
      {hardy::mul(FBP::power(0.3, 2), b05), FBP::factor(0.6), 0.3,
       hardy::KernelCase::A},
      {FBP::factor(0.6), hardy::mul(FBP::power(0.3, 2), b05), 0.3,
       hardy::KernelCase::B},
      {b05, FBP::factor(0.3), 0.0, hardy::KernelCase::C},
      {FBP::factor(0.3), hardy::mul(FBP::factor(0.3), FBP::factor(0.4)), 0.3,
       hardy::KernelCase::D},
  };
}

#ifdef FIXTURES_DIR
inline std::string fx(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}
#endif

}  // namespace fixtures

#endif  // TESTS_FIXTURES_HPP
