#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/inner_matrix.hpp"
#include "hardy/symbol.hpp"

// Independent cross-checks for the library. Everything here goes through
// plain boundary sampling, circle quadrature, or brute-force enumeration, so
// a test always compares two genuinely different computation routes.
namespace oracles {

using hardy::cplx;
using hardy::FiniteBlaschkeProduct;
using hardy::MatrixSymbol;
using hardy::ScalarSymbol;

inline double angle_at(int s, int samples) {
  return 2.0 * std::numbers::pi * s / samples;
}

// Fourier coefficient by the trapezoid rule (spectrally accurate on the
// circle; only aliasing at order `samples` survives).
inline cplx fourier_quad(const ScalarSymbol& s, int index, int samples = 4096) {
  cplx acc = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = angle_at(k, samples);
    acc += s.eval_boundary(t) * std::polar(1.0, -index * t);
  }
  return acc / static_cast<double>(samples);
}

inline Eigen::MatrixXcd fourier_quad(const MatrixSymbol& Phi, int index,
                                     int samples = 4096) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(Phi.n(), Phi.n());
  for (int k = 0; k < samples; ++k) {
    const double t = angle_at(k, samples);
    acc += Phi.eval_boundary(t) * std::polar(1.0, -index * t);
  }
  return acc / static_cast<double>(samples);
}

// Boundary samples of the pointwise product A(e^{it}) B(e^{it}).
inline std::vector<Eigen::MatrixXcd> product_samples(const MatrixSymbol& A,
                                                     const MatrixSymbol& B,
                                                     int samples) {
  std::vector<Eigen::MatrixXcd> vals(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = angle_at(k, samples);
    vals[k] = A.eval_boundary(t) * B.eval_boundary(t);
  }
  return vals;
}

inline Eigen::MatrixXcd coeff_of(const std::vector<Eigen::MatrixXcd>& vals,
                                 int index) {
  const int samples = static_cast<int>(vals.size());
  Eigen::MatrixXcd acc =
      Eigen::MatrixXcd::Zero(vals[0].rows(), vals[0].cols());
  for (int k = 0; k < samples; ++k) {
    acc += vals[k] * std::polar(1.0, -index * angle_at(k, samples));
  }
  return acc / static_cast<double>(samples);
}

// Block Toeplitz / Hankel truncations of the product symbol AB built directly
// from quadrature coefficients: block (i,j) holds (AB)^(i-j), respectively
// (AB)^(-(i+j+1)).
inline Eigen::MatrixXcd product_toeplitz(const MatrixSymbol& A,
                                         const MatrixSymbol& B, int N,
                                         int samples = 4096) {
  const int n = A.n();
  const auto vals = product_samples(A, B, samples);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N * n, N * n);
  for (int d = -(N - 1); d <= N - 1; ++d) {
    const Eigen::MatrixXcd c = coeff_of(vals, d);
    for (int i = 0; i < N; ++i) {
      const int j = i - d;
      if (j < 0 || j >= N) continue;
      out.block(static_cast<Eigen::Index>(i) * n,
                static_cast<Eigen::Index>(j) * n, n, n) = c;
    }
  }
  return out;
}

inline Eigen::MatrixXcd product_hankel(const MatrixSymbol& A,
                                       const MatrixSymbol& B, int N,
                                       int samples = 4096) {
  const int n = A.n();
  const auto vals = product_samples(A, B, samples);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N * n, N * n);
  for (int s = 1; s <= 2 * N - 1; ++s) {
    const Eigen::MatrixXcd c = coeff_of(vals, -s);
    for (int i = 0; i < N; ++i) {
      const int j = s - 1 - i;
      if (j < 0 || j >= N) continue;
      out.block(static_cast<Eigen::Index>(i) * n,
                static_cast<Eigen::Index>(j) * n, n, n) = c;
    }
  }
  return out;
}

// ---- seeded random inputs ---------------------------------------------------

inline cplx random_disk(std::mt19937& rng, double maxMod, double minMod = 0.0) {
  std::uniform_real_distribution<double> mod(minMod, maxMod);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(mod(rng), arg(rng));
}

inline cplx random_coeff(std::mt19937& rng) {
  std::uniform_real_distribution<double> mag(0.2, 1.5);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag(rng), arg(rng));
}

inline FiniteBlaschkeProduct random_blaschke(std::mt19937& rng, int degree,
                                             double maxMod) {
  std::vector<cplx> zeros;
  zeros.reserve(degree);
  for (int k = 0; k < degree; ++k) zeros.push_back(random_disk(rng, maxMod));
  return FiniteBlaschkeProduct(1.0, std::move(zeros));
}

// One or two grammar terms with random kind, degree <= maxDeg, zeros of
// modulus <= maxMod, coefficient modulus in [0.2, 1.5].
inline ScalarSymbol random_scalar(std::mt19937& rng, int maxDeg,
                                  double maxMod) {
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<int> deg(0, maxDeg);
  std::uniform_int_distribution<int> kindPick(0, 1);
  ScalarSymbol s;
  const int m = nterms(rng);
  for (int k = 0; k < m; ++k) {
    const FiniteBlaschkeProduct B = random_blaschke(rng, deg(rng), maxMod);
    const cplx c = random_coeff(rng);
    s = s + (kindPick(rng) == 0 ? ScalarSymbol::analytic(c, B)
                                : ScalarSymbol::coanalytic(c, B));
  }
  return s;
}

inline MatrixSymbol random_matrix(std::mt19937& rng, int n, int maxDeg,
                                  double maxMod) {
  MatrixSymbol Phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Phi.at(i, j) = random_scalar(rng, maxDeg, maxMod);
  return Phi;
}

inline Eigen::MatrixXcd random_unitary(std::mt19937& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = cplx(g(rng), g(rng));
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(A).householderQ();
}

// U Phi U^* assembled term-by-term in the grammar.
inline MatrixSymbol conjugate_by_unitary(const MatrixSymbol& Phi,
                                         const Eigen::MatrixXcd& U) {
  const int n = Phi.n();
  MatrixSymbol out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ScalarSymbol acc;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc = acc + Phi.at(k, l) * (U(i, k) * std::conj(U(j, l)));
      out.at(i, j) = acc;
    }
  return out;
}

// ---- brute-force scalar-hull oracle -----------------------------------------

inline std::vector<std::pair<cplx, int>> group_zeros(
    const std::vector<cplx>& zs, double tol) {
  std::vector<std::pair<cplx, int>> groups;
  for (const cplx& z : zs) {
    bool placed = false;
    for (auto& [w, m] : groups) {
      if (std::abs(w - z) <= tol) {
        ++m;
        placed = true;
        break;
      }
    }
    if (!placed) groups.emplace_back(z, 1);
  }
  return groups;
}

// Every sub-multiset of the grouped zeros as a flat zero list, ordered by
// ascending cardinality (odometer over per-group counts).
inline std::vector<std::vector<cplx>> sub_multisets(
    const std::vector<std::pair<cplx, int>>& groups) {
  std::vector<int> counts(groups.size(), 0);
  std::vector<std::vector<cplx>> out;
  while (true) {
    std::vector<cplx> zs;
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (int k = 0; k < counts[g]; ++k) zs.push_back(groups[g].first);
    out.push_back(std::move(zs));
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (counts[g] < groups[g].second) {
        ++counts[g];
        break;
      }
      counts[g] = 0;
    }
    if (g == groups.size()) break;
  }
  std::stable_sort(
      out.begin(), out.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// Is delta * Delta^{-1} analytic across w? The contour moments
// (1/P) sum_s g(z_s) (z_s - w)^{k+1} approximate the Laurent coefficients
// c_{-k-1} of g at w; any pole of order <= maxOrder pushes one of them
// orders of magnitude above the quadrature noise floor.
inline bool analytic_across(const MatrixSymbol& Delta,
                            const FiniteBlaschkeProduct& delta, cplx w,
                            int maxOrder, double radius) {
  const int P = 128;
  const int n = Delta.n();
  std::vector<Eigen::MatrixXcd> g(P);
  double gmax = 0.0;
  for (int s = 0; s < P; ++s) {
    const cplx z = w + radius * std::polar(1.0, angle_at(s, P));
    Eigen::MatrixXcd D(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D(i, j) = Delta.at(i, j).eval_analytic(z);
    g[s] = hardy::eval(delta, z) * D.inverse();
    gmax = std::max(gmax, g[s].norm());
  }
  for (int k = 0; k < maxOrder; ++k) {
    Eigen::MatrixXcd mom = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < P; ++s) {
      const cplx zeta = radius * std::polar(1.0, angle_at(s, P));
      mom += g[s] * std::pow(zeta, k + 1);
    }
    mom /= static_cast<double>(P);
    if (mom.norm() > 1e-6 * std::max(1.0, gmax) * std::pow(radius, k + 1))
      return false;
  }
  return true;
}

// Minimal inner divisor delta of det(Delta) with delta * Delta^{-1} analytic,
// found by trying every candidate sub-multiset in ascending cardinality.
inline FiniteBlaschkeProduct hull_by_enumeration(const MatrixSymbol& Delta,
                                                 const hardy::DiskZeros& dz) {
  std::vector<cplx> all;
  for (const auto& [w, m] : dz.zeros)
    for (int k = 0; k < m; ++k) all.push_back(w);
  for (const auto& zs : sub_multisets(group_zeros(all, 1e-6))) {
    const FiniteBlaschkeProduct delta(1.0, zs);
    bool ok = true;
    for (const auto& [w, m] : dz.zeros) {
      double minDist = 2.0;
      for (const auto& [w2, m2] : dz.zeros)
        if (std::abs(w2 - w) > 1e-9)
          minDist = std::min(minDist, std::abs(w2 - w));
      const double radius =
          std::min({0.02, 0.3 * minDist, 0.25 * (1.0 - std::abs(w))});
      if (!analytic_across(Delta, delta, w, m, radius)) {
        ok = false;
        break;
      }
    }
    if (ok) return delta;
  }
  return FiniteBlaschkeProduct(1.0, std::move(all));
}

// Multiset comparison of zero lists up to tol (greedy matching).
inline bool zeros_match(const std::vector<cplx>& a, std::vector<cplx> b,
                        double tol) {
  if (a.size() != b.size()) return false;
  for (const cplx& z : a) {
    bool found = false;
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (std::abs(*it - z) <= tol) {
        b.erase(it);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracles

#endif  // TESTS_ORACLES_HPP
