#include "hardy/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardy {

namespace {

bool lexLess(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Greedy nearest-neighbour pairing of zs2 against zs1 within tol.
// Returns for each element of zs2 the index it matched in zs1, or -1.
std::vector<int> matchZeros(const std::vector<cplx>& zs1,
                            const std::vector<cplx>& zs2, double tol) {
  std::vector<bool> used(zs1.size(), false);
  std::vector<int> match(zs2.size(), -1);
  for (std::size_t j = 0; j < zs2.size(); ++j) {
    double best = std::numeric_limits<double>::max();
    int bestIdx = -1;
    for (std::size_t i = 0; i < zs1.size(); ++i) {
      if (used[i]) continue;
      double d = std::abs(zs1[i] - zs2[j]);
      if (d < best) {
        best = d;
        bestIdx = static_cast<int>(i);
      }
    }
    if (bestIdx >= 0 && best <= tol) {
      used[bestIdx] = true;
      match[j] = bestIdx;
    }
  }
  return match;
}

}  // namespace

FiniteBlaschkeProduct::FiniteBlaschkeProduct(cplx constant,
                                             std::vector<cplx> zeros)
    : constant_(constant), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(constant_) - 1.0) > 1e-12) {
    throw Error("Blaschke constant must be unimodular");
  }
  for (const cplx& z : zeros_) {
    if (std::abs(z) >= 1.0) {
      throw InvalidZero("Blaschke zero lies outside the open unit disk");
    }
  }
  std::sort(zeros_.begin(), zeros_.end(), lexLess);
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::factor(cplx alpha) {
  return FiniteBlaschkeProduct(1.0, {alpha});
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::power(cplx alpha, int k) {
  return FiniteBlaschkeProduct(1.0, std::vector<cplx>(k, alpha));
}

double FiniteBlaschkeProduct::max_zero_modulus() const {
  double m = 0.0;
  for (const cplx& z : zeros_) m = std::max(m, std::abs(z));
  return m;
}

int FiniteBlaschkeProduct::multiplicity(cplx w, double tol) const {
  int count = 0;
  for (const cplx& z : zeros_) {
    if (std::abs(z - w) <= tol) ++count;
  }
  return count;
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::with_constant(cplx c) const {
  return FiniteBlaschkeProduct(c, zeros_);
}

cplx eval(const FiniteBlaschkeProduct& B, cplx z) {
  cplx value = B.constant();
  for (const cplx& a : B.zeros()) {
    if (std::abs(a) > 0.0 && std::abs(z - 1.0 / std::conj(a)) < 1e-12) {
      throw PoleEvaluation("evaluation at a pole of the Blaschke product");
    }
    value *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return value;
}

std::vector<cplx> fourier_analytic(const FiniteBlaschkeProduct& B,
                                   int maxIndex) {
  std::vector<cplx> c(static_cast<std::size_t>(maxIndex) + 1, 0.0);
  c[0] = 1.0;
  // Convolve with each factor series f_0 = -a, f_n = (1-|a|^2) conj(a)^{n-1}
  // using the geometric recurrence s_n = conj(a) s_{n-1} + c_{n-1}.
  for (const cplx& a : B.zeros()) {
    const double w = 1.0 - std::norm(a);
    std::vector<cplx> next(c.size());
    cplx s = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (n > 0) s = std::conj(a) * s + c[n - 1];
      next[n] = -a * c[n] + w * s;
    }
    c.swap(next);
  }
  for (cplx& v : c) v *= B.constant();
  return c;
}

FiniteBlaschkeProduct mul(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2) {
  std::vector<cplx> zs = B1.zeros();
  zs.insert(zs.end(), B2.zeros().begin(), B2.zeros().end());
  return FiniteBlaschkeProduct(B1.constant() * B2.constant(), std::move(zs));
}

FiniteBlaschkeProduct div(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2, double tol) {
  const std::vector<int> match = matchZeros(B1.zeros(), B2.zeros(), tol);
  std::vector<bool> remove(B1.zeros().size(), false);
  for (std::size_t j = 0; j < match.size(); ++j) {
    if (match[j] < 0) {
      throw NotDivisible("divisor zero not contained in the dividend");
    }
    remove[static_cast<std::size_t>(match[j])] = true;
  }
  std::vector<cplx> zs;
  for (std::size_t i = 0; i < B1.zeros().size(); ++i) {
    if (!remove[i]) zs.push_back(B1.zeros()[i]);
  }
  return FiniteBlaschkeProduct(B1.constant() / B2.constant(), std::move(zs));
}

FiniteBlaschkeProduct gcd(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2, double tol) {
  const std::vector<int> match = matchZeros(B1.zeros(), B2.zeros(), tol);
  std::vector<cplx> zs;
  for (std::size_t j = 0; j < match.size(); ++j) {
    if (match[j] >= 0) zs.push_back(B1.zeros()[static_cast<std::size_t>(match[j])]);
  }
  return FiniteBlaschkeProduct(1.0, std::move(zs));
}

FiniteBlaschkeProduct lcm(const FiniteBlaschkeProduct& B1,
                          const FiniteBlaschkeProduct& B2, double tol) {
  const std::vector<int> match = matchZeros(B1.zeros(), B2.zeros(), tol);
  std::vector<cplx> zs = B1.zeros();
  for (std::size_t j = 0; j < match.size(); ++j) {
    if (match[j] < 0) zs.push_back(B2.zeros()[j]);
  }
  return FiniteBlaschkeProduct(1.0, std::move(zs));
}

bool is_coprime(const FiniteBlaschkeProduct& B1,
                const FiniteBlaschkeProduct& B2, double tol) {
  return gcd(B1, B2, tol).degree() == 0;
}

}  // namespace hardy
