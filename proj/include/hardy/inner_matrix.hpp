#ifndef HARDY_INNER_MATRIX_HPP
#define HARDY_INNER_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hardy/classify.hpp"

namespace hardy {

// Sampled innerness test: entries analytic and Theta(t)* Theta(t) = I on the
// circle. defect is the largest sampled deviation (plus the largest stray
// coanalytic coefficient, if any).
struct InnerCheck {
  bool inner;
  double defect;
};
InnerCheck is_inner(const MatrixSymbol& Theta, int samples = 256,
                    double tol = 1e-9);

// A matrix symbol validated to be inner at construction.
class InnerMatrixFunction {
 public:
  explicit InnerMatrixFunction(MatrixSymbol sym, int samples = 256,
                               double tol = 1e-9);
  const MatrixSymbol& symbol() const { return sym_; }
  int n() const { return sym_.n(); }

 private:
  MatrixSymbol sym_;
};

// Zeros of det(M) in the open disk with multiplicities, located by
// common-denominator polynomial rootfinding and then certified/polished by
// winding numbers and first-moment contour integrals of det itself. Entries
// must be analytic. Throws DegenerateDeterminant when det vanishes
// identically (sampled).
struct DiskZeros {
  std::vector<std::pair<cplx, int>> zeros;
  int degree = 0;  // total multiplicity
};
DiskZeros det_disk_zeros(const MatrixSymbol& M);

// Smallest scalar inner delta (a finite Blaschke product) with
// delta * Delta^{-1} still analytic: at each det zero w the multiplicity is
// max over entries of (ord_w det - ord_w adjugate entry), clamped at 0.
FiniteBlaschkeProduct diagonal_hull(const InnerMatrixFunction& Delta);

// theta coprime to the diagonal hull of Delta. Hull zeros are numerical, so
// the default matching tolerance is looser than the exact-arithmetic one.
bool coprime_diag(const FiniteBlaschkeProduct& theta,
                  const InnerMatrixFunction& Delta, double tol = 1e-6);

// Pointwise coprimeness probe: A(w) must stay invertible at every distinct
// zero w of theta.
struct PointTest {
  bool pass;
  std::optional<cplx> failingZero;
  double minSingular;  // smallest singular value seen at the probed zeros
};
PointTest coprime_point_test(const FiniteBlaschkeProduct& theta,
                             const MatrixSymbol& A, double tol = 1e-9);

// The 2x2 inner function Delta spanning the Hankel-pair kernel for minus
// parts phi_minus = theta0 conj(a), psi_minus = theta1 conj(b), split into
// the four hypothesis cases on the multiplicity of alpha in theta0/theta1:
//   A: theta0 = b_alpha^n theta0', theta1(alpha) != 0
//   B: theta1 = b_alpha^n theta1', theta0(alpha) != 0
//   C: theta0(alpha) != 0 and theta1(alpha) != 0
//   D: both exactly simple at alpha
// Throws CaseHypothesisViolated naming the failed hypothesis.
enum class KernelCase { A, B, C, D };
InnerMatrixFunction hankel_kernel_delta(const FiniteBlaschkeProduct& theta0,
                                        const FiniteBlaschkeProduct& theta1,
                                        const ScalarSymbol& a,
                                        const ScalarSymbol& b, cplx alpha,
                                        KernelCase kase);

// Checks that the columns of Delta (times z^k, k = 0..3) are annihilated by
// the Hankel operator with symbol Phiminus^*, and that the numerical rank of
// that Hankel truncation equals deg det Delta.
Verdict kernel_check(const MatrixSymbol& Phiminus,
                     const InnerMatrixFunction& Delta, int N = defaults::kN,
                     double tol = defaults::kTol);

}  // namespace hardy

#endif  // HARDY_INNER_MATRIX_HPP
