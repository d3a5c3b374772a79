#ifndef HARDY_SYMBOL_HPP
#define HARDY_SYMBOL_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/defaults.hpp"
#include "hardy/errors.hpp"

namespace hardy {

enum class TermKind { Analytic, Coanalytic };

// One term of the symbol grammar: coeff * inner(z) (Analytic) or
// coeff * conj(inner(z)) (Coanalytic).
struct SymbolTerm {
  cplx coeff{0.0};
  TermKind kind{TermKind::Analytic};
  FiniteBlaschkeProduct inner;
};

// Finite sum of grammar terms. Canonical form (enforced on construction):
// inner constants are folded into coeff, degree-0 coanalytic terms are
// conjugated into analytic constants, terms with identical (kind, zeros) are
// merged, zero-coefficient terms are dropped, terms are sorted
// deterministically.
class ScalarSymbol {
 public:
  ScalarSymbol() = default;            // the zero symbol
  ScalarSymbol(cplx constant);         // constant symbol (implicit on purpose)
  ScalarSymbol(double constant) : ScalarSymbol(cplx(constant)) {}
  explicit ScalarSymbol(std::vector<SymbolTerm> terms);

  static ScalarSymbol analytic(cplx coeff, FiniteBlaschkeProduct inner);
  static ScalarSymbol coanalytic(cplx coeff, FiniteBlaschkeProduct inner);

  const std::vector<SymbolTerm>& terms() const { return terms_; }
  bool is_zero(double tol = 0.0) const;

  // Constant (degree-0 analytic) coefficient.
  cplx constant_term() const;
  // True if some nonconstant coanalytic term has |coeff| > tol.
  bool has_coanalytic_part(double tol = 0.0) const;
  // True if some nonconstant analytic term has |coeff| > tol.
  bool has_analytic_part(double tol = 0.0) const;

  // phi_+ : analytic terms plus the constants contributed by coanalytic terms.
  ScalarSymbol analytic_part() const;
  // phi_- : the analytic symbol with conj(phi_-) = strictly coanalytic part
  // of this symbol; phi_-(0) = 0.
  ScalarSymbol minus_part() const;

  int max_degree() const;
  double max_zero_modulus() const;

  cplx eval_boundary(double t) const;  // at z = e^{it}
  // Evaluation off the circle; requires a purely analytic symbol.
  cplx eval_analytic(cplx z) const;

  ScalarSymbol operator+(const ScalarSymbol& other) const;
  ScalarSymbol operator-(const ScalarSymbol& other) const;
  ScalarSymbol operator-() const;
  ScalarSymbol operator*(cplx scale) const;
  ScalarSymbol conj() const;  // swaps Analytic <-> Coanalytic
  // Multiply a purely analytic symbol by an inner function (term-wise).
  ScalarSymbol mul_inner(const FiniteBlaschkeProduct& B) const;

 private:
  void canonicalize();
  std::vector<SymbolTerm> terms_;
};

// n-th Fourier coefficient of s: Analytic terms contribute Taylor
// coefficients at index >= 0, Coanalytic terms contribute conjugated Taylor
// coefficients at index <= 0.
cplx fourier(const ScalarSymbol& s, int index);

// n x n grid of ScalarSymbols.
class MatrixSymbol {
 public:
  explicit MatrixSymbol(int n);
  static MatrixSymbol scalar(ScalarSymbol s);  // 1 x 1

  int n() const { return n_; }
  ScalarSymbol& at(int i, int j);
  const ScalarSymbol& at(int i, int j) const;

  MatrixSymbol adjoint() const;  // (i,j) -> conj of entry (j,i)
  MatrixSymbol operator+(const MatrixSymbol& other) const;
  MatrixSymbol operator-(const MatrixSymbol& other) const;
  MatrixSymbol operator*(cplx scale) const;
  // Adds c to every diagonal entry (symbol of T - (-c) shifts).
  MatrixSymbol add_constant_diag(cplx c) const;

  Eigen::MatrixXcd eval_boundary(double t) const;
  Eigen::MatrixXcd fourier(int index) const;

  int max_degree() const;
  double max_zero_modulus() const;
  bool banded() const;  // every inner zero at the origin
  int bandwidth() const;

 private:
  int n_;
  std::vector<ScalarSymbol> entries_;  // row-major
};

// (Phi_plus, Phi_minus) with Phi = Phi_minus^* + Phi_plus and
// Phi_minus(0) = 0 (constants assigned to Phi_plus). Note the transpose:
// entry (j,i) of Phi_minus is the minus part of entry (i,j) of Phi.
std::pair<MatrixSymbol, MatrixSymbol> split(const MatrixSymbol& Phi);

Eigen::MatrixXcd eval_boundary(const MatrixSymbol& Phi, double t);

struct SymbolNormality {
  bool normal;
  double defect;  // max sampled ||Phi*Phi - Phi Phi*||_2
};
SymbolNormality is_normal_symbol(const MatrixSymbol& Phi,
                                 int samples = defaults::kSamples,
                                 double tol = defaults::kTol);

// Max sampled boundary operator 2-norm (a lower estimate of the essential
// sup norm; the symbols are smooth rational functions).
double sup_norm(const MatrixSymbol& Phi, int samples = defaults::kSamples);

// fminus = theta * conj(cofactor) on the circle, with theta a finite
// Blaschke product of minimal degree and cofactor analytic, zero-free at the
// zeros of theta.
struct CoprimeFactorization {
  FiniteBlaschkeProduct theta;
  ScalarSymbol cofactor;
};
CoprimeFactorization coprime_factorization(const ScalarSymbol& fminus);

}  // namespace hardy

#endif  // HARDY_SYMBOL_HPP
