#ifndef HARDY_COMPLETION_HPP
#define HARDY_COMPLETION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hardy/classify.hpp"

namespace hardy {

// Parameter families of off-diagonal pairs (phi, psi) completing
// [[T_{conj b_alpha}, ?],[?, T_{conj b_alpha}]] to a subnormal operator:
//   Family1:           phi = e^{i theta} b_alpha + zeta,    psi = e^{i omega} phi
//   Family2:           phi = mu conj(b_alpha)
//                            + e^{i theta} sqrt(1+|mu|^2) b_alpha + zeta,
//                                                           psi = e^{i(pi - 2 arg mu)} phi
//   QuasinormalFamily: phi = e^{i theta} conj(b_alpha)
//                            + 2 e^{i omega} b_alpha + zeta, psi = e^{-2i theta} phi
enum class FamilyTag { Family1, Family2, QuasinormalFamily };

struct CompletionFamily {
  FamilyTag tag = FamilyTag::Family1;
  cplx alpha{0.0};
  cplx mu{0.0};  // Family2 only; must be nonzero there
  double thetaAngle = 0.0;
  double omegaAngle = 0.0;  // unused by Family2
  cplx zeta{0.0};
};

enum class CompletionStatus {
  Normal,
  QuasinormalAfterShift,
  ExceptionalCaseUnresolved,
  NotSubnormal
};

struct CompletionVerdict {
  CompletionStatus status = CompletionStatus::NotSubnormal;
  std::optional<cplx> beta;  // QuasinormalAfterShift: T - beta is quasinormal
  std::optional<CompletionFamily> matchedFamily;
  // True when the verdict came from the rational-refinement branch
  // (|mu| = 1 Family2 or the quasinormal family).
  bool rationalRefinement = false;
  std::vector<std::string> diagnostics;
};

// The full 2x2 completion symbol for a family member: diagonal entries
// conj(b_alpha), off-diagonal (phi, psi) as above. Throws
// InvalidFamilyParameters outside the family domain.
MatrixSymbol build_completion(const CompletionFamily& fam);

// Decision procedure for a candidate completion pair. alpha != beta (within
// 1e-10) is never subnormal. Otherwise pattern-matches Family1, then Family2
// (any nonzero mu; |mu| = 1 flagged as rational refinement); failing those,
// runs the exceptional-case detector on the coprime factorizations
// phi_- = theta0 conj(a), psi_- = theta1 conj(b): when
// (ab)(alpha) = (theta0' theta1')(alpha) != 0, equal theta degrees select the
// rational refinement (|mu| = 1 Family2 or QuasinormalFamily, the latter
// returning beta = -e^{-i theta} zeta), unequal degrees are reported as
// ExceptionalCaseUnresolved. Everything else is NotSubnormal.
CompletionVerdict classify_candidate(cplx alpha, cplx beta,
                                     const ScalarSymbol& phi,
                                     const ScalarSymbol& psi,
                                     double tol = 1e-9);

struct CompletionCheck {
  std::string name;
  Verdict verdict;
  bool required = false;  // participates in the consistency gate
  bool expectedFails = false;  // expectation is Fails rather than Holds
};

struct CompletionReport {
  std::vector<CompletionCheck> checks;
  bool consistent = false;
  std::vector<std::string> notes;
};

// Cross-validates a classification against the operator tests:
// Normal => normal_operator Holds; QuasinormalAfterShift(beta) =>
// quasinormal_after_shift Holds, commutator_rank = 1, normal_operator Fails;
// NotSubnormal with both off-diagonal entries carrying coanalytic parts =>
// k_hyponormal(2) Fails or hyponormal Fails. Other verdicts get
// informational checks only.
CompletionReport verify_completion(const MatrixSymbol& Phi,
                                   const CompletionVerdict& verdict,
                                   int N = defaults::kN,
                                   int buffer = defaults::kBuffer,
                                   double tol = defaults::kTol);

}  // namespace hardy

#endif  // HARDY_COMPLETION_HPP
