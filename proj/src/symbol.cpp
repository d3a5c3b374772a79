#include "hardy/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool lexLess(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool termLess(const SymbolTerm& a, const SymbolTerm& b) {
  if (a.kind != b.kind) return a.kind == TermKind::Analytic;
  if (a.inner.degree() != b.inner.degree())
    return a.inner.degree() < b.inner.degree();
  const auto& za = a.inner.zeros();
  const auto& zb = b.inner.zeros();
  for (size_t i = 0; i < za.size(); ++i)
    if (za[i] != zb[i]) return lexLess(za[i], zb[i]);
  return false;
}

bool sameZeroMultiset(const std::vector<cplx>& z1, const std::vector<cplx>& z2,
                      double tol) {
  if (z1.size() != z2.size()) return false;
  for (size_t i = 0; i < z1.size(); ++i)  // both sorted on construction
    if (std::abs(z1[i] - z2[i]) > tol) return false;
  return true;
}

cplx ipow(cplx base, int k) {
  cplx v = 1.0;
  for (int i = 0; i < k; ++i) v *= base;
  return v;
}

}  // namespace

ScalarSymbol::ScalarSymbol(cplx constant) {
  if (constant != 0.0)
    terms_.push_back(
        SymbolTerm{constant, TermKind::Analytic, FiniteBlaschkeProduct::one()});
  canonicalize();
}

ScalarSymbol::ScalarSymbol(std::vector<SymbolTerm> terms)
    : terms_(std::move(terms)) {
  canonicalize();
}

ScalarSymbol ScalarSymbol::analytic(cplx coeff, FiniteBlaschkeProduct inner) {
  return ScalarSymbol(
      {SymbolTerm{coeff, TermKind::Analytic, std::move(inner)}});
}

ScalarSymbol ScalarSymbol::coanalytic(cplx coeff, FiniteBlaschkeProduct inner) {
  return ScalarSymbol(
      {SymbolTerm{coeff, TermKind::Coanalytic, std::move(inner)}});
}

void ScalarSymbol::canonicalize() {
  cplx constant = 0.0;
  std::vector<SymbolTerm> folded;
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw GrammarParse("non-finite coefficient in symbol term");
    const cplx k = t.inner.constant();
    const cplx c = t.coeff * (t.kind == TermKind::Analytic ? k : std::conj(k));
    if (t.inner.degree() == 0) {
      constant += c;  // for both kinds, c is already the term's value
      continue;
    }
    folded.push_back(
        SymbolTerm{c, t.kind, FiniteBlaschkeProduct(1.0, t.inner.zeros())});
  }

  std::vector<SymbolTerm> merged;
  for (auto& t : folded) {
    bool hit = false;
    for (auto& m : merged) {
      if (m.kind == t.kind && sameZeroMultiset(m.inner.zeros(), t.inner.zeros(),
                                               defaults::kZeroMatchTol)) {
        m.coeff += t.coeff;
        hit = true;
        break;
      }
    }
    if (!hit) merged.push_back(std::move(t));
  }

  terms_.clear();
  if (constant != 0.0)
    terms_.push_back(
        SymbolTerm{constant, TermKind::Analytic, FiniteBlaschkeProduct::one()});
  for (auto& t : merged)
    if (t.coeff != 0.0) terms_.push_back(std::move(t));
  std::sort(terms_.begin(), terms_.end(), termLess);
}

bool ScalarSymbol::is_zero(double tol) const {
  for (const auto& t : terms_)
    if (std::abs(t.coeff) > tol) return false;
  return true;
}

cplx ScalarSymbol::constant_term() const {
  for (const auto& t : terms_)
    if (t.kind == TermKind::Analytic && t.inner.degree() == 0) return t.coeff;
  return 0.0;
}

bool ScalarSymbol::has_coanalytic_part(double tol) const {
  for (const auto& t : terms_)
    if (t.kind == TermKind::Coanalytic && t.inner.degree() > 0 &&
        std::abs(t.coeff) > tol)
      return true;
  return false;
}

bool ScalarSymbol::has_analytic_part(double tol) const {
  for (const auto& t : terms_)
    if (t.kind == TermKind::Analytic && t.inner.degree() > 0 &&
        std::abs(t.coeff) > tol)
      return true;
  return false;
}

ScalarSymbol ScalarSymbol::analytic_part() const {
  std::vector<SymbolTerm> out;
  for (const auto& t : terms_) {
    if (t.kind == TermKind::Analytic) {
      out.push_back(t);
    } else {
      // coanalytic term contributes only its mean to the analytic part
      const cplx b0 = fourier_analytic(t.inner, 0)[0];
      out.push_back(SymbolTerm{t.coeff * std::conj(b0), TermKind::Analytic,
                               FiniteBlaschkeProduct::one()});
    }
  }
  return ScalarSymbol(std::move(out));
}

ScalarSymbol ScalarSymbol::minus_part() const {
  std::vector<SymbolTerm> out;
  for (const auto& t : terms_) {
    if (t.kind != TermKind::Coanalytic || t.inner.degree() == 0) continue;
    const cplx b0 = fourier_analytic(t.inner, 0)[0];
    out.push_back(SymbolTerm{std::conj(t.coeff), TermKind::Analytic, t.inner});
    out.push_back(SymbolTerm{-std::conj(t.coeff) * b0, TermKind::Analytic,
                             FiniteBlaschkeProduct::one()});
  }
  return ScalarSymbol(std::move(out));
}

int ScalarSymbol::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.inner.degree());
  return d;
}

double ScalarSymbol::max_zero_modulus() const {
  double r = 0.0;
  for (const auto& t : terms_) r = std::max(r, t.inner.max_zero_modulus());
  return r;
}

cplx ScalarSymbol::eval_boundary(double t) const {
  const cplx z = std::polar(1.0, t);
  cplx v = 0.0;
  for (const auto& term : terms_) {
    const cplx b = eval(term.inner, z);
    v += term.coeff * (term.kind == TermKind::Analytic ? b : std::conj(b));
  }
  return v;
}

cplx ScalarSymbol::eval_analytic(cplx z) const {
  cplx v = 0.0;
  for (const auto& term : terms_) {
    if (term.kind == TermKind::Coanalytic)
      throw GrammarParse(
          "eval_analytic requires a purely analytic symbol");
    v += term.coeff * eval(term.inner, z);
  }
  return v;
}

ScalarSymbol ScalarSymbol::operator+(const ScalarSymbol& other) const {
  std::vector<SymbolTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return ScalarSymbol(std::move(all));
}

ScalarSymbol ScalarSymbol::operator-(const ScalarSymbol& other) const {
  return *this + (other * cplx(-1.0));
}

ScalarSymbol ScalarSymbol::operator-() const { return *this * cplx(-1.0); }

ScalarSymbol ScalarSymbol::operator*(cplx scale) const {
  std::vector<SymbolTerm> out = terms_;
  for (auto& t : out) t.coeff *= scale;
  return ScalarSymbol(std::move(out));
}

ScalarSymbol ScalarSymbol::conj() const {
  std::vector<SymbolTerm> out = terms_;
  for (auto& t : out) {
    t.coeff = std::conj(t.coeff);
    t.kind =
        t.kind == TermKind::Analytic ? TermKind::Coanalytic : TermKind::Analytic;
  }
  return ScalarSymbol(std::move(out));
}

ScalarSymbol ScalarSymbol::mul_inner(const FiniteBlaschkeProduct& B) const {
  std::vector<SymbolTerm> out;
  for (const auto& t : terms_) {
    if (t.kind == TermKind::Coanalytic)
      throw GrammarParse("mul_inner requires a purely analytic symbol");
    out.push_back(SymbolTerm{t.coeff, TermKind::Analytic, mul(t.inner, B)});
  }
  return ScalarSymbol(std::move(out));
}

cplx fourier(const ScalarSymbol& s, int index) {
  cplx v = 0.0;
  for (const auto& t : s.terms()) {
    if (t.kind == TermKind::Analytic) {
      if (index >= 0) v += t.coeff * fourier_analytic(t.inner, index)[index];
    } else {
      if (index <= 0)
        v += t.coeff * std::conj(fourier_analytic(t.inner, -index)[-index]);
    }
  }
  return v;
}

MatrixSymbol::MatrixSymbol(int n) : n_(n) {
  if (n <= 0) throw Error("matrix symbol dimension must be positive");
  entries_.resize(static_cast<size_t>(n) * n);
}

MatrixSymbol MatrixSymbol::scalar(ScalarSymbol s) {
  MatrixSymbol m(1);
  m.at(0, 0) = std::move(s);
  return m;
}

ScalarSymbol& MatrixSymbol::at(int i, int j) {
  return entries_[static_cast<size_t>(i) * n_ + j];
}

const ScalarSymbol& MatrixSymbol::at(int i, int j) const {
  return entries_[static_cast<size_t>(i) * n_ + j];
}

MatrixSymbol MatrixSymbol::adjoint() const {
  MatrixSymbol out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(j, i).conj();
  return out;
}

MatrixSymbol MatrixSymbol::operator+(const MatrixSymbol& other) const {
  if (other.n_ != n_) throw Error("matrix symbol dimension mismatch");
  MatrixSymbol out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j) + other.at(i, j);
  return out;
}

MatrixSymbol MatrixSymbol::operator-(const MatrixSymbol& other) const {
  return *this + (other * cplx(-1.0));
}

MatrixSymbol MatrixSymbol::operator*(cplx scale) const {
  MatrixSymbol out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j) * scale;
  return out;
}

MatrixSymbol MatrixSymbol::add_constant_diag(cplx c) const {
  MatrixSymbol out = *this;
  for (int i = 0; i < n_; ++i) out.at(i, i) = out.at(i, i) + ScalarSymbol(c);
  return out;
}

Eigen::MatrixXcd MatrixSymbol::eval_boundary(double t) const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).eval_boundary(t);
  return m;
}

Eigen::MatrixXcd MatrixSymbol::fourier(int index) const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = hardy::fourier(at(i, j), index);
  return m;
}

int MatrixSymbol::max_degree() const {
  int d = 0;
  for (const auto& e : entries_) d = std::max(d, e.max_degree());
  return d;
}

double MatrixSymbol::max_zero_modulus() const {
  double r = 0.0;
  for (const auto& e : entries_) r = std::max(r, e.max_zero_modulus());
  return r;
}

bool MatrixSymbol::banded() const { return max_zero_modulus() == 0.0; }

int MatrixSymbol::bandwidth() const { return max_degree(); }

std::pair<MatrixSymbol, MatrixSymbol> split(const MatrixSymbol& Phi) {
  const int n = Phi.n();
  MatrixSymbol plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      plus.at(i, j) = Phi.at(i, j).analytic_part();
      minus.at(j, i) = Phi.at(i, j).minus_part();  // note the transpose
    }
  }
  return {std::move(plus), std::move(minus)};
}

Eigen::MatrixXcd eval_boundary(const MatrixSymbol& Phi, double t) {
  return Phi.eval_boundary(t);
}

SymbolNormality is_normal_symbol(const MatrixSymbol& Phi, int samples,
                                 double tol) {
  if (samples < 1) throw Error("is_normal_symbol needs at least one sample");
  double defect = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = kTwoPi * s / samples;
    const Eigen::MatrixXcd m = Phi.eval_boundary(t);
    const Eigen::MatrixXcd d = m.adjoint() * m - m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d,
                                                       Eigen::EigenvaluesOnly);
    defect = std::max(defect, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return {defect <= tol, defect};
}

double sup_norm(const MatrixSymbol& Phi, int samples) {
  if (samples < 1) throw Error("sup_norm needs at least one sample");
  double norm = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = kTwoPi * s / samples;
    norm = std::max(norm, Phi.eval_boundary(t).operatorNorm());
  }
  return norm;
}

namespace {

// A pole candidate of the conjugate extension, with the largest order any
// single term could contribute.
struct PoleCluster {
  cplx w;
  int maxOrder;
};

double binom(int k, int j) {
  double v = 1.0;
  for (int i = 0; i < j; ++i) v = v * (k - i) / (i + 1);
  return v;
}

}  // namespace

CoprimeFactorization coprime_factorization(const ScalarSymbol& fminus) {
  for (const auto& t : fminus.terms())
    if (t.kind == TermKind::Coanalytic && t.inner.degree() > 0)
      throw GrammarParse("coprime_factorization expects an analytic symbol");
  if (fminus.is_zero(0.0))
    throw ZeroSymbol("coprime_factorization of the zero symbol");

  const auto& terms = fminus.terms();
  double maxf = 0.0;
  for (int s = 0; s < 64; ++s)
    maxf = std::max(maxf, std::abs(fminus.eval_boundary(kTwoPi * s / 64)));
  // |cofactor| = |fminus| on the circle, so this is the natural scale for
  // dropping numerically-zero coefficients.
  const double dropTol = 1e-13 * (1.0 + maxf);

  // Rational extension of conj(fminus) off the circle: conj coefficients,
  // reciprocal inner factors.
  auto g = [&terms](cplx z) {
    cplx v = 0.0;
    for (const auto& t : terms) {
      if (t.inner.degree() == 0)
        v += std::conj(t.coeff);
      else
        v += std::conj(t.coeff) / eval(t.inner, z);
    }
    return v;
  };

  // Candidate poles: the term zeros, clustered.
  std::vector<PoleCluster> clusters;
  for (const auto& t : terms) {
    if (t.inner.degree() == 0) continue;
    const auto& zs = t.inner.zeros();
    size_t i = 0;
    while (i < zs.size()) {
      size_t j = i + 1;
      while (j < zs.size() &&
             std::abs(zs[j] - zs[i]) <= defaults::kZeroMatchTol)
        ++j;
      const int m = static_cast<int>(j - i);
      bool hit = false;
      for (auto& cl : clusters) {
        if (std::abs(cl.w - zs[i]) <= defaults::kZeroMatchTol) {
          cl.maxOrder = std::max(cl.maxOrder, m);
          hit = true;
          break;
        }
      }
      if (!hit) clusters.push_back({zs[i], m});
      i = j;
    }
  }

  // True pole orders from principal-part coefficients on small contours.
  const int P = 512;
  std::vector<std::pair<cplx, int>> thetaZeros;
  for (size_t ci = 0; ci < clusters.size(); ++ci) {
    const auto& cl = clusters[ci];
    double sep = 1.0;
    for (size_t cj = 0; cj < clusters.size(); ++cj)
      if (cj != ci) sep = std::min(sep, std::abs(cl.w - clusters[cj].w));
    const double r =
        std::min({sep / 3.0, (1.0 - std::abs(cl.w)) / 2.0, 0.1});
    std::vector<cplx> vals(P);
    double mg = 0.0;
    for (int s = 0; s < P; ++s) {
      const cplx z = cl.w + std::polar(r, kTwoPi * s / P);
      vals[s] = g(z);
      mg = std::max(mg, std::abs(vals[s]));
    }
    int order = 0;
    double rk = 1.0;
    for (int k = 1; k <= cl.maxOrder; ++k) {
      rk *= r;
      cplx a = 0.0;
      for (int s = 0; s < P; ++s)
        a += vals[s] * std::polar(1.0, kTwoPi * s * k / P);
      a *= rk / static_cast<double>(P);
      if (std::abs(a) > 1e-9 * std::max(1.0, mg) * rk) order = k;
    }
    if (order > 0) thetaZeros.emplace_back(cl.w, order);
  }

  std::vector<cplx> tz;
  for (const auto& [w, m] : thetaZeros)
    for (int i = 0; i < m; ++i) tz.push_back(w);
  const FiniteBlaschkeProduct theta(1.0, tz);

  auto bval = [&theta, &g](cplx z) { return eval(theta, z) * g(z); };

  // Principal parts of the cofactor at its poles 1/conj(w) outside the disk,
  // one per nonzero theta zero.
  struct OutsidePole {
    cplx w;  // the disk zero; the pole sits at 1/conj(w)
    int m;
    std::vector<cplx> laurent;  // laurent[k-1] multiplies (z - p)^{-k}
  };
  std::vector<OutsidePole> poles;
  int originMult = 0;
  for (const auto& [w, m] : thetaZeros) {
    if (std::abs(w) < 1e-12)
      originMult = m;
    else
      poles.push_back({w, m, {}});
  }
  for (size_t pi = 0; pi < poles.size(); ++pi) {
    auto& op = poles[pi];
    const cplx p = 1.0 / std::conj(op.w);
    double sep = 1.0;
    for (size_t pj = 0; pj < poles.size(); ++pj)
      if (pj != pi)
        sep = std::min(sep,
                       std::abs(p - 1.0 / std::conj(poles[pj].w)));
    const double rho =
        std::min({sep / 3.0, (std::abs(p) - 1.0) / 2.0, 0.1});
    std::vector<cplx> vals(P);
    for (int s = 0; s < P; ++s)
      vals[s] = bval(p + std::polar(rho, kTwoPi * s / P));
    op.laurent.resize(op.m);
    double rk = 1.0;
    for (int k = 1; k <= op.m; ++k) {
      rk *= rho;
      cplx a = 0.0;
      for (int s = 0; s < P; ++s)
        a += vals[s] * std::polar(1.0, kTwoPi * s * k / P);
      op.laurent[k - 1] = a * rk / static_cast<double>(P);
    }
  }

  // Grammar terms for the principal parts: 1/(z - p)^k = (-conj(w))^k /
  // (1 - conj(w) z)^k and 1/(1 - conj(w) z) = (1 + conj(w) b_w)/(1 - |w|^2).
  std::vector<SymbolTerm> cterms;
  for (const auto& op : poles) {
    const cplx wb = std::conj(op.w);
    const double onem = 1.0 - std::norm(op.w);
    for (int k = 1; k <= op.m; ++k) {
      const cplx base = op.laurent[k - 1] * ipow(-wb, k) / std::pow(onem, k);
      for (int j = 0; j <= k; ++j) {
        const cplx coeff = base * binom(k, j) * ipow(wb, j);
        if (std::abs(coeff) > dropTol)
          cterms.push_back(SymbolTerm{coeff, TermKind::Analytic,
                                      FiniteBlaschkeProduct::power(op.w, j)});
      }
    }
  }

  // What remains after removing the principal parts is a polynomial whose
  // degree is the multiplicity of 0 in theta.
  auto principal = [&poles](cplx z) {
    cplx v = 0.0;
    for (const auto& op : poles) {
      const cplx p = 1.0 / std::conj(op.w);
      cplx q = 1.0;
      for (int k = 1; k <= op.m; ++k) {
        q /= (z - p);
        v += op.laurent[k - 1] * q;
      }
    }
    return v;
  };
  const int S0 = 512;
  std::vector<cplx> rvals(S0);
  for (int s = 0; s < S0; ++s) {
    const cplx z = std::polar(1.0, kTwoPi * s / S0);
    rvals[s] = bval(z) - principal(z);
  }
  double scale = 0.0;
  for (int s = 0; s < S0; ++s) scale = std::max(scale, std::abs(rvals[s]));
  for (int d = 0; d <= originMult + 3; ++d) {
    cplx c = 0.0;
    for (int s = 0; s < S0; ++s)
      c += rvals[s] * std::polar(1.0, -kTwoPi * s * d / S0);
    c /= static_cast<double>(S0);
    if (d <= originMult) {
      if (std::abs(c) > dropTol)
        cterms.push_back(SymbolTerm{c, TermKind::Analytic,
                                    FiniteBlaschkeProduct::power(0.0, d)});
    } else if (std::abs(c) > 1e-7 * (1.0 + scale)) {
      throw Error(
          "coprime_factorization: residue removal left a non-polynomial "
          "remainder");
    }
  }

  CoprimeFactorization out{theta, ScalarSymbol(std::move(cterms))};

  // Validate the factorization on the circle and the zero-sharing guard at
  // the zeros of theta.
  double maxres = 0.0;
  for (int s = 0; s < 64; ++s) {
    const double t = kTwoPi * s / 64;
    const cplx f = fminus.eval_boundary(t);
    const cplx rec =
        eval(theta, std::polar(1.0, t)) * std::conj(out.cofactor.eval_boundary(t));
    maxres = std::max(maxres, std::abs(f - rec));
  }
  if (maxres > 1e-7 * (1.0 + maxf))
    throw Error("coprime_factorization failed validation on the circle");
  for (const auto& [w, m] : thetaZeros) {
    if (std::abs(out.cofactor.eval_analytic(w)) <= 1e-12 * (1.0 + scale))
      throw Error("coprime_factorization: cofactor vanishes at a theta zero");
  }
  return out;
}

}  // namespace hardy
