#include "hardy/inner_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace hardy {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd evalAnalyticMatrix(const MatrixSymbol& M, cplx z) {
  const int n = M.n();
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = M.at(i, j).eval_analytic(z);
  return out;
}

Eigen::MatrixXcd adjugate(const Eigen::MatrixXcd& A) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXcd adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index i = 0; i < n - 1; ++i)
        for (Eigen::Index j = 0; j < n - 1; ++j)
          minor(i, j) = A(i < r ? i : i + 1, j < c ? j : j + 1);
      const double sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
      adj(c, r) = sign * minor.determinant();
    }
  }
  return adj;
}

// Winding number and zero first moment of f over the circle |z - c| = r.
// moment = sum of (zeros inside, with multiplicity); derived from
// (1/2pi i) contour-int z f'/f dz by parts, so only values of f are needed:
//   moment = m c - (r/P) sum_s e^{i t_s} q_s,  q_s = log f branch-tracked
//                                                   minus phi_0 minus i m t_s.
struct ContourData {
  bool ok = false;  // contour stayed clear of zeros of f
  int winding = 0;
  cplx moment{0.0};
  double maxAbs = 0.0;
};

template <typename F>
ContourData contourWinding(const F& f, cplx c, double r, int P) {
  std::vector<cplx> vals(P);
  double minAbs = std::numeric_limits<double>::infinity();
  double maxAbs = 0.0;
  for (int s = 0; s < P; ++s) {
    const double t = kTwoPi * s / P;
    vals[s] = f(c + r * std::polar(1.0, t));
    minAbs = std::min(minAbs, std::abs(vals[s]));
    maxAbs = std::max(maxAbs, std::abs(vals[s]));
  }
  ContourData out;
  out.maxAbs = maxAbs;
  if (!(minAbs > 1e-13 * std::max(1.0, maxAbs))) return out;
  std::vector<cplx> phi(P);
  phi[0] = std::log(vals[0]);
  for (int s = 1; s < P; ++s) phi[s] = phi[s - 1] + std::log(vals[s] / vals[s - 1]);
  const double total = (phi[P - 1] + std::log(vals[0] / vals[P - 1]) - phi[0]).imag();
  const int m = static_cast<int>(std::lround(total / kTwoPi));
  cplx acc = 0.0;
  for (int s = 0; s < P; ++s) {
    const double t = kTwoPi * s / P;
    const cplx q = phi[s] - phi[0] - cplx(0.0, m * t);
    acc += std::polar(1.0, t) * q;
  }
  out.ok = true;
  out.winding = m;
  out.moment = static_cast<double>(m) * c - (r / P) * acc;
  return out;
}

// Zero order of f at w, capped at `cap`, by winding on small circles. Two
// radii must agree (a third breaks ties) so a nearby-but-distinct zero of f
// is not silently absorbed. `scale` calibrates the f-is-identically-zero
// test; that case returns cap (no constraint survives division).
template <typename F>
int orderAt(const F& f, cplx w, int cap, double r0, double scale) {
  auto windingAt = [&](double r) -> std::optional<int> {
    double r1 = r;
    for (int attempt = 0; attempt < 4; ++attempt) {
      ContourData cd = contourWinding(f, w, r1, 512);
      if (cd.maxAbs < 1e-13 * std::max(1.0, scale)) return std::nullopt;
      if (cd.ok) return cd.winding;
      r1 *= 1.17;
    }
    throw Error("orderAt: could not find a zero-free contour radius");
  };
  std::optional<int> v1 = windingAt(r0);
  if (!v1) return cap;
  std::optional<int> v2 = windingAt(r0 / 2.0);
  if (!v2) return cap;
  int ord = *v2;
  if (*v1 != *v2) {
    std::optional<int> v3 = windingAt(r0 / 4.0);
    ord = v3 ? *v3 : cap;
  }
  return std::min(ord, cap);
}

void requireAnalyticEntries(const MatrixSymbol& M, const char* who) {
  for (int i = 0; i < M.n(); ++i)
    for (int j = 0; j < M.n(); ++j)
      for (const SymbolTerm& t : M.at(i, j).terms())
        if (t.kind == TermKind::Coanalytic && t.inner.degree() > 0)
          throw GrammarParse(std::string(who) + ": entries must be analytic");
}

double hermNorm(const Eigen::MatrixXcd& H) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Scalar from an analytic ScalarSymbol at a disk point.
cplx at(const ScalarSymbol& s, cplx z) { return s.eval_analytic(z); }

void requireCofactorCoprime(const ScalarSymbol& cof,
                            const FiniteBlaschkeProduct& theta,
                            const char* label) {
  PointTest pt = coprime_point_test(theta, MatrixSymbol::scalar(cof));
  if (!pt.pass)
    throw CaseHypothesisViolated(std::string("cofactor ") + label +
                                 " vanishes at a zero of its inner factor");
}

}  // namespace

InnerCheck is_inner(const MatrixSymbol& Theta, int samples, double tol) {
  const int n = Theta.n();
  double stray = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const SymbolTerm& t : Theta.at(i, j).terms())
        if (t.kind == TermKind::Coanalytic && t.inner.degree() > 0)
          stray = std::max(stray, std::abs(t.coeff));
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  double unitary = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = kTwoPi * s / samples;
    const Eigen::MatrixXcd V = Theta.eval_boundary(t);
    unitary = std::max(unitary, hermNorm(V.adjoint() * V - I));
  }
  return InnerCheck{stray <= tol && unitary <= tol, std::max(unitary, stray)};
}

InnerMatrixFunction::InnerMatrixFunction(MatrixSymbol sym, int samples,
                                         double tol)
    : sym_(std::move(sym)) {
  InnerCheck c = is_inner(sym_, samples, tol);
  if (!c.inner)
    throw NotInnerFunction("matrix symbol is not inner (sampled defect " +
                           std::to_string(c.defect) + ")");
}

DiskZeros det_disk_zeros(const MatrixSymbol& M) {
  requireAnalyticEntries(M, "det_disk_zeros");
  const int n = M.n();

  // det(M) * prod (1 - conj(w) z) over every entry zero w is a polynomial of
  // degree at most the total zero count.
  std::vector<cplx> denomZeros;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const SymbolTerm& t : M.at(i, j).terms())
        for (cplx w : t.inner.zeros()) denomZeros.push_back(w);
  const int D = static_cast<int>(denomZeros.size());

  int S = 64;
  while (S < 2 * D + 8) S *= 2;
  std::vector<cplx> numer(S);
  double maxDet = 0.0;
  double entryScale = 0.0;
  for (int s = 0; s < S; ++s) {
    const cplx z = std::polar(1.0, kTwoPi * s / S);
    const Eigen::MatrixXcd V = evalAnalyticMatrix(M, z);
    entryScale = std::max(entryScale, V.cwiseAbs().maxCoeff());
    const cplx det = V.determinant();
    maxDet = std::max(maxDet, std::abs(det));
    cplx den = 1.0;
    for (cplx w : denomZeros) den *= (1.0 - std::conj(w) * z);
    numer[s] = det * den;
  }
  if (maxDet < 1e-12 * std::max(1.0, std::pow(std::max(entryScale, 1.0),
                                              static_cast<double>(n))))
    throw DegenerateDeterminant("determinant vanishes identically (sampled)");

  std::vector<cplx> coeff(D + 1, 0.0);
  for (int k = 0; k <= D; ++k) {
    cplx acc = 0.0;
    for (int s = 0; s < S; ++s)
      acc += numer[s] * std::polar(1.0, -kTwoPi * k * s / S);
    coeff[k] = acc / static_cast<double>(S);
  }
  double maxc = 0.0;
  for (const cplx& c : coeff) maxc = std::max(maxc, std::abs(c));
  int deg = D;
  while (deg > 0 && std::abs(coeff[deg]) <= 1e-11 * maxc) --deg;

  DiskZeros out;
  if (deg == 0) return out;

  // Companion-matrix roots of the trimmed polynomial.
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 0; i + 1 < deg; ++i) C(i + 1, i) = 1.0;
  for (int i = 0; i < deg; ++i) C(i, deg - 1) = -coeff[i] / coeff[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx z = es.eigenvalues()(i);
    if (std::abs(z) < 1.0 - 1e-6) roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // Coarse clusters: companion roots of a multiple zero scatter like
  // noise^(1/m), so cluster wide and let the contour integrals certify.
  std::vector<std::vector<cplx>> clusters;
  for (cplx z : roots) {
    bool placed = false;
    for (auto& cl : clusters) {
      cplx centroid = 0.0;
      for (cplx p : cl) centroid += p;
      centroid /= static_cast<double>(cl.size());
      if (std::abs(z - centroid) < 0.02) {
        cl.push_back(z);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({z});
  }
  std::vector<cplx> centroids;
  std::vector<double> spreads;
  for (const auto& cl : clusters) {
    cplx centroid = 0.0;
    for (cplx p : cl) centroid += p;
    centroid /= static_cast<double>(cl.size());
    double spread = 0.0;
    for (cplx p : cl) spread = std::max(spread, std::abs(p - centroid));
    centroids.push_back(centroid);
    spreads.push_back(spread);
  }

  auto detAt = [&](cplx z) { return evalAnalyticMatrix(M, z).determinant(); };
  for (size_t k = 0; k < clusters.size(); ++k) {
    const cplx c0 = centroids[k];
    double sep = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < clusters.size(); ++j)
      if (j != k) sep = std::min(sep, std::abs(centroids[j] - c0));
    double r = std::min({(1.0 - std::abs(c0)) / 2.0, sep / 3.0, 0.05});
    if (r < 2.0 * spreads[k])
      r = std::min(2.0 * spreads[k] + 1e-3, (1.0 - std::abs(c0)) / 2.0);

    ContourData cd;
    for (int attempt = 0; attempt < 5; ++attempt) {
      cd = contourWinding(detAt, c0, r, 1024);
      if (cd.ok) break;
      r = std::min(r * 1.31, (1.0 - std::abs(c0)) / 2.0);
    }
    if (!cd.ok)
      throw Error("det_disk_zeros: could not isolate a cluster contour");
    const int m = cd.winding;
    if (m <= 0) continue;  // spurious companion roots
    cplx w = cd.moment / static_cast<double>(m);
    // One recentred pass tightens the location.
    ContourData cd2 = contourWinding(detAt, w, r / 3.0, 1024);
    if (cd2.ok && cd2.winding == m) w = cd2.moment / static_cast<double>(m);
    out.zeros.emplace_back(w, m);
    out.degree += m;
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const auto& a, const auto& b) {
              return a.first.real() != b.first.real()
                         ? a.first.real() < b.first.real()
                         : a.first.imag() < b.first.imag();
            });
  return out;
}

FiniteBlaschkeProduct diagonal_hull(const InnerMatrixFunction& Delta) {
  const MatrixSymbol& M = Delta.symbol();
  const int n = M.n();
  DiskZeros dz = det_disk_zeros(M);
  std::vector<cplx> hullZeros;
  if (n == 1) {
    // The adjugate is identically 1: every det zero keeps its multiplicity.
    for (const auto& [w, q] : dz.zeros)
      hullZeros.insert(hullZeros.end(), q, w);
    return FiniteBlaschkeProduct(1.0, std::move(hullZeros));
  }

  double scale = 0.0;  // adjugate magnitude on the circle, for zero-entry tests
  for (int s = 0; s < 32; ++s) {
    const Eigen::MatrixXcd A =
        adjugate(evalAnalyticMatrix(M, std::polar(1.0, kTwoPi * s / 32)));
    scale = std::max(scale, A.cwiseAbs().maxCoeff());
  }

  for (const auto& [w, q] : dz.zeros) {
    double sep = std::numeric_limits<double>::infinity();
    for (const auto& [w2, q2] : dz.zeros)
      if (std::abs(w2 - w) > 1e-12) sep = std::min(sep, std::abs(w2 - w));
    const double r0 =
        std::min({sep / 3.0, (1.0 - std::abs(w)) / 3.0, 0.02});
    int need = 0;
    for (int i = 0; i < n && need < q; ++i) {
      for (int j = 0; j < n && need < q; ++j) {
        auto entry = [&](cplx z) {
          return adjugate(evalAnalyticMatrix(M, z))(i, j);
        };
        const int ord = orderAt(entry, w, q, r0, scale);
        need = std::max(need, q - ord);
      }
    }
    hullZeros.insert(hullZeros.end(), need, w);
  }
  return FiniteBlaschkeProduct(1.0, std::move(hullZeros));
}

bool coprime_diag(const FiniteBlaschkeProduct& theta,
                  const InnerMatrixFunction& Delta, double tol) {
  return is_coprime(theta, diagonal_hull(Delta), tol);
}

PointTest coprime_point_test(const FiniteBlaschkeProduct& theta,
                             const MatrixSymbol& A, double tol) {
  requireAnalyticEntries(A, "coprime_point_test");
  std::vector<cplx> distinct;
  for (cplx z : theta.zeros()) {
    bool seen = false;
    for (cplx d : distinct)
      if (std::abs(z - d) <= defaults::kZeroMatchTol) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(z);
  }
  PointTest out{true, std::nullopt, 0.0};
  bool first = true;
  for (cplx w : distinct) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(evalAnalyticMatrix(A, w));
    const double smin = svd.singularValues().minCoeff();
    if (first || smin < out.minSingular) out.minSingular = smin;
    first = false;
    if (smin <= tol) {
      out.pass = false;
      out.failingZero = w;
      return out;
    }
  }
  return out;
}

InnerMatrixFunction hankel_kernel_delta(const FiniteBlaschkeProduct& theta0,
                                        const FiniteBlaschkeProduct& theta1,
                                        const ScalarSymbol& a,
                                        const ScalarSymbol& b, cplx alpha,
                                        KernelCase kase) {
  if (std::abs(alpha) >= 1.0 - defaults::kZeroMargin)
    throw InvalidZero("alpha must lie in the open unit disk");
  requireCofactorCoprime(a, theta0, "a");
  requireCofactorCoprime(b, theta1, "b");

  const int n0 = theta0.multiplicity(alpha);
  const int n1 = theta1.multiplicity(alpha);
  const auto bal = FiniteBlaschkeProduct::factor(alpha);
  MatrixSymbol D(2);

  switch (kase) {
    case KernelCase::A: {
      if (n0 < 1)
        throw CaseHypothesisViolated("case A requires theta0(alpha) = 0");
      if (n1 != 0)
        throw CaseHypothesisViolated("case A requires theta1(alpha) != 0");
      if (n0 == 1) {
        D.at(0, 0) = ScalarSymbol::analytic(1.0, mul(bal, theta1));
        D.at(1, 1) = ScalarSymbol::analytic(1.0, theta0);
      } else {
        const auto theta0p =
            div(theta0, FiniteBlaschkeProduct::power(alpha, n0));
        const cplx gamma = -at(a, alpha) / eval(theta1, alpha);
        const double nu = 1.0 / std::sqrt(1.0 + std::norm(gamma));
        D.at(0, 0) = ScalarSymbol::analytic(nu, mul(bal, theta1));
        D.at(0, 1) = ScalarSymbol::analytic(nu * gamma, theta1);
        D.at(1, 0) = ScalarSymbol::analytic(-nu * std::conj(gamma), theta0);
        D.at(1, 1) = ScalarSymbol::analytic(
            nu, mul(FiniteBlaschkeProduct::power(alpha, n0 - 1), theta0p));
      }
      break;
    }
    case KernelCase::B: {
      if (n1 < 1)
        throw CaseHypothesisViolated("case B requires theta1(alpha) = 0");
      if (n0 != 0)
        throw CaseHypothesisViolated("case B requires theta0(alpha) != 0");
      if (n1 == 1) {
        D.at(0, 0) = ScalarSymbol::analytic(1.0, theta1);
        D.at(1, 1) = ScalarSymbol::analytic(1.0, mul(bal, theta0));
      } else {
        const auto theta1p =
            div(theta1, FiniteBlaschkeProduct::power(alpha, n1));
        const cplx gamma = -at(b, alpha) / eval(theta0, alpha);
        const double nu = 1.0 / std::sqrt(1.0 + std::norm(gamma));
        D.at(0, 0) = ScalarSymbol::analytic(
            nu, mul(FiniteBlaschkeProduct::power(alpha, n1 - 1), theta1p));
        D.at(0, 1) = ScalarSymbol::analytic(-nu * std::conj(gamma), theta1);
        D.at(1, 0) = ScalarSymbol::analytic(nu * gamma, theta0);
        D.at(1, 1) = ScalarSymbol::analytic(nu, mul(bal, theta0));
      }
      break;
    }
    case KernelCase::C: {
      if (n0 != 0 || n1 != 0)
        throw CaseHypothesisViolated(
            "case C requires theta0(alpha) != 0 and theta1(alpha) != 0");
      D.at(0, 0) = ScalarSymbol::analytic(1.0, mul(bal, theta1));
      D.at(1, 1) = ScalarSymbol::analytic(1.0, mul(bal, theta0));
      break;
    }
    case KernelCase::D: {
      if (n0 != 1 || n1 != 1)
        throw CaseHypothesisViolated(
            "case D requires a simple zero of both theta0 and theta1 at alpha");
      const auto theta0p = div(theta0, bal);
      const auto theta1p = div(theta1, bal);
      const cplx lhs = at(a, alpha) * at(b, alpha);
      const cplx rhs = eval(theta0p, alpha) * eval(theta1p, alpha);
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      if (std::abs(lhs - rhs) > 1e-9 * scale) {
        D.at(0, 0) = ScalarSymbol::analytic(1.0, theta1);
        D.at(1, 1) = ScalarSymbol::analytic(1.0, theta0);
      } else {
        const cplx gamma = -at(a, alpha) / eval(theta1p, alpha);
        const double nu = 1.0 / std::sqrt(1.0 + std::norm(gamma));
        D.at(0, 0) = ScalarSymbol::analytic(nu, theta1);
        D.at(0, 1) = ScalarSymbol::analytic(nu * gamma, theta1p);
        D.at(1, 0) = ScalarSymbol::analytic(-nu * std::conj(gamma), theta0);
        D.at(1, 1) = ScalarSymbol::analytic(nu, theta0p);
      }
      break;
    }
  }
  return InnerMatrixFunction(std::move(D));
}

Verdict kernel_check(const MatrixSymbol& Phiminus,
                     const InnerMatrixFunction& Delta, int N, double tol) {
  const int n = Phiminus.n();
  if (Delta.n() != n)
    throw Error("kernel_check: dimension mismatch between symbol and Delta");
  requireAnalyticEntries(Phiminus, "kernel_check");

  const MatrixSymbol star = Phiminus.adjoint();
  const DecayProfile ph = probe_decay(star);
  const DecayProfile pd = probe_decay(Delta.symbol());
  const int K = hankel_gram_rows(ph, ph, N, tol);
  const TruncatedOperator H = hankel_rect(star, K, N);

  // Tail allowance: || H restricted to the neglected columns || times the
  // l2 norm of the neglected part of the Delta z^k e_j coefficient sequence.
  const double hNorm = sup_norm(Phiminus, 1024);
  auto tailBound = [&](int k) {
    if (pd.banded) return (N - k > pd.bandwidth) ? 0.0 : hNorm * pd.constant;
    const double rho = pd.boundRate;
    return hNorm * pd.constant * std::pow(rho, N - k) /
           std::sqrt(1.0 - rho * rho);
  };

  Verdict v;
  v.atN = N;
  double worst = 0.0;
  bool annihilated = true;
  int badJ = -1, badK = -1;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= 3; ++k) {
      Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(
          static_cast<Eigen::Index>(n) * N);
      for (int m = k; m < N; ++m)
        for (int i = 0; i < n; ++i)
          coeffs(static_cast<Eigen::Index>(m) * n + i) =
              fourier(Delta.symbol().at(i, j), m - k);
      const double vnorm = std::max(coeffs.norm(), 1e-12);
      const double resid = (H.entries * coeffs).norm() / vnorm;
      worst = std::max(worst, resid);
      if (resid > tol + tailBound(k)) {
        annihilated = false;
        if (badJ < 0) {
          badJ = j;
          badK = k;
        }
      }
    }
  }

  const int expected = det_disk_zeros(Delta.symbol()).degree;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(H.entries);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;

  v.defect = worst;
  if (annihilated && rank == expected) {
    v.status = Status::Holds;
  } else {
    v.status = Status::Fails;
    Witness w;
    w.value = annihilated ? static_cast<double>(rank) : worst;
    w.description =
        annihilated
            ? "numerical Hankel rank " + std::to_string(rank) +
                  " differs from deg det Delta = " + std::to_string(expected)
            : "column " + std::to_string(badJ) + " shifted by z^" +
                  std::to_string(badK) + " is not annihilated";
    v.witness = std::move(w);
  }
  return v;
}

}  // namespace hardy
