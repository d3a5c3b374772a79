#ifndef HARDY_HARDY_OPS_HPP
#define HARDY_HARDY_OPS_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hardy/symbol.hpp"

namespace hardy {

// An N-block truncation of an operator with n x n blocks. Block (i,j) of a
// Toeplitz truncation holds the (i-j)-th Fourier coefficient of the symbol;
// block (i,j) of a Hankel truncation holds the -(i+j+1)-th. decayRate is the
// largest zero modulus of the generating symbol (block norms decay like
// decayRate^k); boundRate > decayRate is the safe rate at which tailConstant
// * boundRate^k provably dominates the block norms, used by every truncation
// bound downstream. truncationError is a certified entrywise bound on the
// difference from the same truncation computed without any intermediate
// truncation (0 for direct builds).
struct TruncatedOperator {
  int n = 1;
  int N = 0;
  Eigen::MatrixXcd entries;
  double decayRate = 0.0;
  double boundRate = 0.0;
  double tailConstant = 0.0;
  double truncationError = 0.0;

  Eigen::MatrixXcd block(int i, int j) const {
    return entries.block(static_cast<Eigen::Index>(i) * n,
                         static_cast<Eigen::Index>(j) * n, n, n);
  }
};

// Decay profile of a symbol's Fourier coefficients: ||Phi_hat(+-k)|| <=
// constant * rate^k (rate = 0 means the coefficients vanish beyond
// `bandwidth`).
struct DecayProfile {
  double decayRate = 0.0;  // max zero modulus
  double boundRate = 0.0;  // inflated rate the constant is probed against
  double constant = 0.0;
  bool banded = false;
  int bandwidth = 0;
};
DecayProfile probe_decay(const MatrixSymbol& Phi);

TruncatedOperator toeplitz(const MatrixSymbol& Phi, int N);
TruncatedOperator hankel(const MatrixSymbol& Phi, int N);
// Rectangular Hankel truncation (rows x cols blocks), used when a gram
// product H^* H needs more rows than columns to push the neglected tail
// below a tolerance.
TruncatedOperator hankel_rect(const MatrixSymbol& Phi, int rows, int cols);

// Smallest row count K >= N such that the neglected tail of a Hankel gram
// H_A^* H_B (rows beyond K) is below tol in norm, given the two symbols'
// decay profiles.
int hankel_gram_rows(const DecayProfile& a, const DecayProfile& b, int N,
                     double tol);

// Fourier coefficients (index lo..hi) of the pointwise product A(z)B(z) by
// circle quadrature. Throws GrammarOverflow when the aliasing bound implied
// by the decay profiles exceeds tol.
std::vector<Eigen::MatrixXcd> product_fourier(const MatrixSymbol& A,
                                              const MatrixSymbol& B, int lo,
                                              int hi,
                                              int samples = defaults::kSamples,
                                              double tol = defaults::kTol);

// N-block truncation of the self-commutator [T^*, T] of the block Toeplitz
// operator with symbol Phi: the Toeplitz part T(Phi*Phi - Phi Phi*)
// plus the Hankel grams H_{Phi*}^* H_{Phi*} - H_Phi^* H_Phi, with the gram
// inner dimension enlarged until the neglected tail is below tol. The result
// is exactly Hermitian.
TruncatedOperator self_commutator(const MatrixSymbol& Phi, int N,
                                  double tol = defaults::kTol,
                                  int samples = defaults::kSamples);

enum class OpKind { Toeplitz, Hankel };

struct OpRequest {
  MatrixSymbol symbol;
  OpKind kind = OpKind::Toeplitz;
  bool adjoint = false;  // use the conjugate transpose of the truncation
};

// Product of truncated operators, computed at size N + buffer and compressed
// to N blocks. truncationError of the result certifies the entrywise
// difference from compressing the untruncated product; it is 0 when every
// factor is banded and the buffer absorbs the total bandwidth. If tol is
// given and the certified bound exceeds it, throws BufferTooSmall.
TruncatedOperator op_product(const std::vector<OpRequest>& ops, int N,
                             int buffer,
                             std::optional<double> tol = std::nullopt);

// Truncation of the normalized reproducing-kernel coefficient sequence
// sqrt(1-|alpha|^2) * (1, alpha, alpha^2, ...); the truncated Toeplitz
// operator with coanalytic symbol conj(B) maps it to conj(B(conj(alpha)))
// times itself, up to truncation decay.
struct CauchyKernelVector {
  cplx alpha;
  int N = 0;
  Eigen::VectorXcd vec;
};
CauchyKernelVector kernel_vector(cplx alpha, int N);

}  // namespace hardy

#endif  // HARDY_HARDY_OPS_HPP
