#ifndef HARDY_CLASSIFY_HPP
#define HARDY_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hardy/hardy_ops.hpp"

namespace hardy {

// Verdict semantics: Holds means no counterexample was found at the tested
// truncation sizes and tolerance — it is evidence, not proof. Fails carries
// a concrete finite-dimensional witness. Inconclusive means the measured
// defect falls inside the certified truncation allowance, so neither side
// can be asserted.
enum class Status { Holds, Fails, Inconclusive };

struct Witness {
  double value = 0.0;
  Eigen::VectorXcd vector;  // may be empty when the witness is scalar
  std::string description;
};

struct Verdict {
  Status status = Status::Inconclusive;
  double defect = 0.0;
  int atN = 0;
  std::optional<Witness> witness;
};

// Positive-semidefiniteness of a Hermitian truncation: Holds when the most
// negative eigenvalue is >= -tol, otherwise Fails with the eigenpair.
Verdict psd_check(const TruncatedOperator& H, double tol = defaults::kTol);

// Hyponormality evidence: self-commutator PSD at every size in Ns.
Verdict hyponormal(const MatrixSymbol& Phi,
                   const std::vector<int>& Ns = defaults::ladder(),
                   double tol = defaults::kTol);

// Normality evidence: ||[T*, T]_N|| <= tol at every size in Ns.
Verdict normal_operator(const MatrixSymbol& Phi,
                        const std::vector<int>& Ns = defaults::ladder(),
                        double tol = defaults::kTol);

// || [T*T, T] || on the N-truncation (products carry a buffer). Holds when
// the defect is <= tol; Fails when it exceeds tol plus the certified
// truncation allowance; Inconclusive in between.
Verdict quasinormal_defect(const MatrixSymbol& Phi, int N = defaults::kN,
                           int buffer = defaults::kBuffer,
                           double tol = defaults::kTol);

// Quasinormality of T - beta I, i.e. of the symbol with beta subtracted
// from the diagonal.
Verdict quasinormal_after_shift(const MatrixSymbol& Phi, cplx beta,
                                int N = defaults::kN,
                                int buffer = defaults::kBuffer,
                                double tol = defaults::kTol);

// k-hyponormality evidence: PSD of the k x k block matrix of commutators
// ( [T*^j, T^i] )_{i,j=1..k} on the N-truncation.
Verdict k_hyponormal(const MatrixSymbol& Phi, int k, int N = defaults::kN,
                     int buffer = defaults::kBuffer,
                     double tol = defaults::kTol);

// Numerical rank of the self-commutator truncation, stabilized across sizes
// N and N+8 (and N+16 when those disagree).
int commutator_rank(const MatrixSymbol& Phi, int N = defaults::kN,
                    double tol = defaults::kTol);

// Certificate-style hyponormality test: sup ||K|| <= 1 + tol on the circle
// and the negative-index Fourier coefficients of Phi - K Phi* vanish up to
// tol (depth chosen from the decay profiles). Holds establishes the
// certificate for this K only.
Verdict hyponormality_certificate(const MatrixSymbol& Phi,
                                  const MatrixSymbol& K,
                                  int samples = defaults::kSamples,
                                  double tol = defaults::kTol);

// Searches for a constant unitary U with (Phi_plus)_hat(m) =
// (Phi_minus)_hat(m) U for all m = 1..maxIndex (least squares), the
// coefficient-level shape of normality for symbols with det Phi_plus not
// identically zero. maxIndex <= 0 selects 2 * max_degree + 4. Throws
// DegenerateDeterminant when det Phi_plus vanishes at all probe points.
struct UnitaryTest {
  Verdict verdict;
  Eigen::MatrixXcd U;
};
UnitaryTest normality_unitary_test(const MatrixSymbol& Phi, int maxIndex = 0,
                                   double tol = defaults::kTol);

}  // namespace hardy

#endif  // HARDY_CLASSIFY_HPP
