#include "hardy/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace hardy {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAlphaBetaTol = 1e-10;

double norm2pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;  // guard against fmod rounding at the seam
  return y;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string fmt(cplx z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// Nonconstant terms of a canonical symbol, split by kind; coefficients are
// already folded (inner constant 1).
struct Pattern {
  cplx constant{0.0};
  struct Term {
    cplx coeff;
    std::vector<cplx> zeros;
  };
  std::vector<Term> an, co;
};

Pattern extract(const ScalarSymbol& s, double tol) {
  Pattern p;
  p.constant = s.constant_term();
  for (const SymbolTerm& t : s.terms()) {
    if (t.inner.degree() == 0 || std::abs(t.coeff) <= tol) continue;
    (t.kind == TermKind::Analytic ? p.an : p.co)
        .push_back({t.coeff, t.inner.zeros()});
  }
  return p;
}

// The single degree-1 term with zero at alpha, if the list is exactly that.
std::optional<cplx> soloCoeffAt(const std::vector<Pattern::Term>& v, cplx alpha,
                                double tol) {
  if (v.size() != 1 || v[0].zeros.size() != 1) return std::nullopt;
  if (std::abs(v[0].zeros[0] - alpha) > tol) return std::nullopt;
  return v[0].coeff;
}

std::optional<CompletionVerdict> matchFamily1(const Pattern& phi,
                                              const Pattern& psi, cplx alpha,
                                              double tol) {
  if (!phi.co.empty() || !psi.co.empty()) return std::nullopt;
  auto cphi = soloCoeffAt(phi.an, alpha, tol);
  auto cpsi = soloCoeffAt(psi.an, alpha, tol);
  if (!cphi || !cpsi) return std::nullopt;
  if (std::abs(std::abs(*cphi) - 1.0) > tol) return std::nullopt;
  if (std::abs(std::abs(*cpsi) - 1.0) > tol) return std::nullopt;
  const double theta = norm2pi(std::arg(*cphi));
  const double omega = norm2pi(std::arg(*cpsi) - std::arg(*cphi));
  const cplx phase = std::polar(1.0, omega);
  if (std::abs(psi.constant - phase * phi.constant) >
      tol * (1.0 + std::abs(phi.constant)))
    return std::nullopt;
  CompletionVerdict v;
  v.status = CompletionStatus::Normal;
  v.matchedFamily = CompletionFamily{FamilyTag::Family1, alpha, 0.0,
                                     theta,  omega, phi.constant};
  v.diagnostics.push_back("matched: psi is a unimodular multiple of the "
                          "analytic family member");
  return v;
}

std::optional<CompletionVerdict> matchFamily2(const Pattern& phi,
                                              const Pattern& psi, cplx alpha,
                                              double tol, bool requireUnimodular) {
  auto mu = soloCoeffAt(phi.co, alpha, tol);
  auto c = soloCoeffAt(phi.an, alpha, tol);
  if (!mu || !c || std::abs(*mu) <= tol) return std::nullopt;
  if (requireUnimodular && std::abs(std::abs(*mu) - 1.0) > tol)
    return std::nullopt;
  const double want = std::sqrt(1.0 + std::norm(*mu));
  if (std::abs(std::abs(*c) - want) > tol * (1.0 + want)) return std::nullopt;
  const double theta = norm2pi(std::arg(*c));
  const cplx phase = std::polar(1.0, std::numbers::pi - 2.0 * std::arg(*mu));
  auto muP = soloCoeffAt(psi.co, alpha, tol);
  auto cP = soloCoeffAt(psi.an, alpha, tol);
  if (!muP || !cP) return std::nullopt;
  if (std::abs(*muP - phase * *mu) > tol * (1.0 + std::abs(*mu)))
    return std::nullopt;
  if (std::abs(*cP - phase * *c) > tol * (1.0 + std::abs(*c)))
    return std::nullopt;
  if (std::abs(psi.constant - phase * phi.constant) >
      tol * (1.0 + std::abs(phi.constant)))
    return std::nullopt;
  CompletionVerdict v;
  v.status = CompletionStatus::Normal;
  v.matchedFamily = CompletionFamily{FamilyTag::Family2, alpha, *mu,
                                     theta,  0.0,   phi.constant};
  v.rationalRefinement = std::abs(std::abs(*mu) - 1.0) <= tol;
  v.diagnostics.push_back(
      v.rationalRefinement
          ? "matched: coanalytic family member with |mu| = 1 "
            "(rational-refinement branch)"
          : "matched: coanalytic family member");
  return v;
}

std::optional<CompletionVerdict> matchQuasinormal(const Pattern& phi,
                                                  const Pattern& psi,
                                                  cplx alpha, double tol) {
  auto q = soloCoeffAt(phi.co, alpha, tol);
  auto r = soloCoeffAt(phi.an, alpha, tol);
  if (!q || !r) return std::nullopt;
  if (std::abs(std::abs(*q) - 1.0) > tol) return std::nullopt;
  if (std::abs(std::abs(*r) - 2.0) > tol) return std::nullopt;
  const double theta = norm2pi(std::arg(*q));
  const double omega = norm2pi(std::arg(*r));
  const cplx phase = std::polar(1.0, -2.0 * theta);
  auto qP = soloCoeffAt(psi.co, alpha, tol);
  auto rP = soloCoeffAt(psi.an, alpha, tol);
  if (!qP || !rP) return std::nullopt;
  if (std::abs(*qP - phase * *q) > tol * 2.0) return std::nullopt;
  if (std::abs(*rP - phase * *r) > tol * 4.0) return std::nullopt;
  if (std::abs(psi.constant - phase * phi.constant) >
      tol * (1.0 + std::abs(phi.constant)))
    return std::nullopt;
  CompletionVerdict v;
  v.status = CompletionStatus::QuasinormalAfterShift;
  v.beta = -std::polar(1.0, -theta) * phi.constant;
  v.matchedFamily = CompletionFamily{FamilyTag::QuasinormalFamily, alpha, 0.0,
                                     theta, omega, phi.constant};
  v.rationalRefinement = true;
  v.diagnostics.push_back(
      "matched: quasinormal family (rational-refinement branch); the "
      "operator minus beta is quasinormal");
  return v;
}

CompletionVerdict notSubnormal(std::vector<std::string> diags) {
  CompletionVerdict v;
  v.status = CompletionStatus::NotSubnormal;
  v.diagnostics = std::move(diags);
  return v;
}

}  // namespace

MatrixSymbol build_completion(const CompletionFamily& fam) {
  if (!finite(fam.alpha) || !finite(fam.mu) || !finite(fam.zeta) ||
      !std::isfinite(fam.thetaAngle) || !std::isfinite(fam.omegaAngle))
    throw InvalidFamilyParameters("family parameters must be finite");
  if (std::abs(fam.alpha) >= 1.0 - defaults::kZeroMargin)
    throw InvalidFamilyParameters("alpha must lie in the open unit disk");
  if (fam.tag == FamilyTag::Family2 && std::abs(fam.mu) == 0.0)
    throw InvalidFamilyParameters("Family2 requires mu != 0");

  const auto bal = FiniteBlaschkeProduct::factor(fam.alpha);
  ScalarSymbol phi, psi;
  switch (fam.tag) {
    case FamilyTag::Family1: {
      phi = ScalarSymbol::analytic(std::polar(1.0, fam.thetaAngle), bal) +
            ScalarSymbol(fam.zeta);
      psi = phi * std::polar(1.0, fam.omegaAngle);
      break;
    }
    case FamilyTag::Family2: {
      const double amp = std::sqrt(1.0 + std::norm(fam.mu));
      phi = ScalarSymbol::coanalytic(fam.mu, bal) +
            ScalarSymbol::analytic(std::polar(amp, fam.thetaAngle), bal) +
            ScalarSymbol(fam.zeta);
      psi = phi * std::polar(1.0, std::numbers::pi - 2.0 * std::arg(fam.mu));
      break;
    }
    case FamilyTag::QuasinormalFamily: {
      phi = ScalarSymbol::coanalytic(std::polar(1.0, fam.thetaAngle), bal) +
            ScalarSymbol::analytic(std::polar(2.0, fam.omegaAngle), bal) +
            ScalarSymbol(fam.zeta);
      psi = phi * std::polar(1.0, -2.0 * fam.thetaAngle);
      break;
    }
  }
  MatrixSymbol Phi(2);
  Phi.at(0, 0) = ScalarSymbol::coanalytic(1.0, bal);
  Phi.at(1, 1) = Phi.at(0, 0);
  Phi.at(0, 1) = phi;
  Phi.at(1, 0) = psi;
  return Phi;
}

CompletionVerdict classify_candidate(cplx alpha, cplx beta,
                                     const ScalarSymbol& phi,
                                     const ScalarSymbol& psi, double tol) {
  if (std::abs(alpha) >= 1.0 - defaults::kZeroMargin ||
      std::abs(beta) >= 1.0 - defaults::kZeroMargin)
    throw InvalidZero("diagonal parameters must lie in the open unit disk");
  if (std::abs(alpha - beta) > kAlphaBetaTol)
    return notSubnormal({"alpha != beta: no subnormal completion exists"});

  const Pattern pPhi = extract(phi, tol);
  const Pattern pPsi = extract(psi, tol);

  if (auto v = matchFamily1(pPhi, pPsi, alpha, tol)) return *v;
  if (auto v = matchFamily2(pPhi, pPsi, alpha, tol, false)) return *v;

  // Exceptional-case detector on the coprime factorizations of the minus
  // parts: phi_- = theta0 conj(a), psi_- = theta1 conj(b).
  const ScalarSymbol phiM = phi.minus_part();
  const ScalarSymbol psiM = psi.minus_part();
  if (phiM.is_zero(1e-12) || psiM.is_zero(1e-12))
    return notSubnormal(
        {"no family pattern matched and at least one entry is analytic"});

  const CoprimeFactorization f0 = coprime_factorization(phiM);
  const CoprimeFactorization f1 = coprime_factorization(psiM);
  const int n0 = f0.theta.multiplicity(alpha);
  const int n1 = f1.theta.multiplicity(alpha);
  if (n0 < 1 || n1 < 1)
    return notSubnormal(
        {"no family pattern matched; an inner factor has no zero at alpha"});

  const auto bal = FiniteBlaschkeProduct::factor(alpha);
  const cplx lhs =
      f0.cofactor.eval_analytic(alpha) * f1.cofactor.eval_analytic(alpha);
  const cplx rhs =
      eval(div(f0.theta, bal), alpha) * eval(div(f1.theta, bal), alpha);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (std::abs(lhs - rhs) > 1e-9 * scale || std::abs(lhs) <= 1e-9)
    return notSubnormal(
        {"no family pattern matched and the exceptional-case identity fails: "
         "(ab)(alpha) = " + fmt(lhs) + " vs (theta0' theta1')(alpha) = " +
         fmt(rhs)});

  if (f0.theta.degree() != f1.theta.degree()) {
    CompletionVerdict v;
    v.status = CompletionStatus::ExceptionalCaseUnresolved;
    v.diagnostics.push_back(
        "exceptional case: (ab)(alpha) = (theta0' theta1')(alpha) != 0 with "
        "unequal pole counts (" + std::to_string(f0.theta.degree()) + " vs " +
        std::to_string(f1.theta.degree()) +
        "); the classification is left open here");
    return v;
  }
  if (auto v = matchFamily2(pPhi, pPsi, alpha, tol, true)) return *v;
  if (auto v = matchQuasinormal(pPhi, pPsi, alpha, tol)) return *v;
  return notSubnormal(
      {"exceptional-case identity holds with equal pole counts, but the "
       "entries match neither the |mu| = 1 family nor the quasinormal "
       "family"});
}

CompletionReport verify_completion(const MatrixSymbol& Phi,
                                   const CompletionVerdict& verdict, int N,
                                   int buffer, double tol) {
  CompletionReport rep;
  std::vector<int> Ns;
  for (int s : {16, 32, N})
    if (Ns.empty() || s > Ns.back()) Ns.push_back(s);

  auto add = [&rep](std::string name, Verdict v, bool required,
                    bool expectedFails) {
    rep.checks.push_back(
        {std::move(name), std::move(v), required, expectedFails});
  };

  switch (verdict.status) {
    case CompletionStatus::Normal: {
      add("normal_operator", normal_operator(Phi, Ns, tol), true, false);
      try {
        add("normality_unitary_test", normality_unitary_test(Phi).verdict,
            true, false);
      } catch (const DegenerateDeterminant&) {
        rep.notes.push_back(
            "normality_unitary_test skipped: det of the analytic part "
            "vanishes identically");
      }
      break;
    }
    case CompletionStatus::QuasinormalAfterShift: {
      const cplx beta = verdict.beta.value_or(0.0);
      add("quasinormal_after_shift",
          quasinormal_after_shift(Phi, beta, N, buffer, tol), true, false);
      const int rank = commutator_rank(Phi, N, tol);
      Verdict rv;
      rv.status = rank == 1 ? Status::Holds : Status::Fails;
      rv.defect = static_cast<double>(rank);
      rv.atN = N;
      Witness w;
      w.value = static_cast<double>(rank);
      w.description = "self-commutator rank (expected 1)";
      rv.witness = std::move(w);
      add("commutator_rank", std::move(rv), true, false);
      add("normal_operator", normal_operator(Phi, Ns, tol), true, true);
      break;
    }
    case CompletionStatus::NotSubnormal: {
      const bool bothCoanalytic = Phi.at(0, 1).has_coanalytic_part(tol) &&
                                  Phi.at(1, 0).has_coanalytic_part(tol);
      Verdict k2 = k_hyponormal(Phi, 2, N, buffer, tol);
      Verdict hypo = hyponormal(Phi, Ns, tol);
      if (bothCoanalytic) {
        // At least one of the two must produce a finite-section witness.
        const bool witnessed =
            k2.status == Status::Fails || hypo.status == Status::Fails;
        add("k_hyponormal_2", std::move(k2), true, true);
        add("hyponormal", std::move(hypo), true, true);
        if (!witnessed)
          rep.notes.push_back(
              "no finite-section witness at this N; raise N or buffer");
        rep.consistent = witnessed;
        rep.notes.push_back(
            "consistency requires a Fails from k_hyponormal_2 or hyponormal");
        return rep;
      }
      add("k_hyponormal_2", std::move(k2), false, false);
      add("hyponormal", std::move(hypo), false, false);
      rep.notes.push_back(
          "entries lack coanalytic parts on both off-diagonals; operator "
          "checks are informational only");
      break;
    }
    case CompletionStatus::ExceptionalCaseUnresolved: {
      add("hyponormal", hyponormal(Phi, Ns, tol), false, false);
      add("k_hyponormal_2", k_hyponormal(Phi, 2, N, buffer, tol), false,
          false);
      rep.notes.push_back(
          "classification left open for this input; checks are diagnostics "
          "only");
      break;
    }
  }

  rep.consistent = true;
  for (const CompletionCheck& c : rep.checks) {
    if (!c.required) continue;
    const Status want = c.expectedFails ? Status::Fails : Status::Holds;
    if (c.verdict.status != want) rep.consistent = false;
  }
  return rep;
}

}  // namespace hardy
