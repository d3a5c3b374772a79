#ifndef HARDY_BLASCHKE_HPP
#define HARDY_BLASCHKE_HPP

#include <complex>
#include <vector>

#include "hardy/defaults.hpp"
#include "hardy/errors.hpp"

namespace hardy {

using cplx = std::complex<double>;

// Finite Blaschke product: a unimodular constant times the product of
// (z - a)/(1 - conj(a)z) over a multiset of zeros in the open disk.
// Degree 0 is a unimodular constant; the default value is 1.
// Immutable after construction; zeros are kept sorted for determinism.
class FiniteBlaschkeProduct {
 public:
  FiniteBlaschkeProduct() : constant_(1.0) {}
  FiniteBlaschkeProduct(cplx constant, std::vector<cplx> zeros);

  static FiniteBlaschkeProduct one() { return FiniteBlaschkeProduct(); }
  static FiniteBlaschkeProduct factor(cplx alpha);        // b_alpha
  static FiniteBlaschkeProduct power(cplx alpha, int k);  // b_alpha^k

  cplx constant() const { return constant_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }
  double max_zero_modulus() const;  // 0 for degree 0

  // Number of zeros within tol of w.
  int multiplicity(cplx w, double tol = defaults::kZeroMatchTol) const;

  // Same product with the constant replaced.
  FiniteBlaschkeProduct with_constant(cplx c) const;

 private:
  cplx constant_;
  std::vector<cplx> zeros_;
};

// Evaluate B at z. Throws PoleEvaluation if z is within 1e-12 of a pole
// 1/conj(zero).
cplx eval(const FiniteBlaschkeProduct& B, cplx z);

// Taylor coefficients c_0..c_maxIndex of B at 0, by convolving the per-factor
// closed-form series b_a(z) = -a + (1-|a|^2) sum_{n>=1} conj(a)^{n-1} z^n.
std::vector<cplx> fourier_analytic(const FiniteBlaschkeProduct& B, int maxIndex);

// Multiset arithmetic on the zero data. gcd/lcm return constant 1 (inner
// divisors are defined up to a unimodular constant); mul/div carry constants
// exactly. div throws NotDivisible when containment fails.
FiniteBlaschkeProduct mul(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2);
FiniteBlaschkeProduct div(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2,
                          double tol = defaults::kZeroMatchTol);
FiniteBlaschkeProduct gcd(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2,
                          double tol = defaults::kZeroMatchTol);
FiniteBlaschkeProduct lcm(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2,
                          double tol = defaults::kZeroMatchTol);
bool is_coprime(const FiniteBlaschkeProduct& B1, const FiniteBlaschkeProduct& B2,
                double tol = defaults::kZeroMatchTol);

}  // namespace hardy

#endif  // HARDY_BLASCHKE_HPP
