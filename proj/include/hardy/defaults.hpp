#ifndef HARDY_DEFAULTS_HPP
#define HARDY_DEFAULTS_HPP

#include <vector>

namespace hardy::defaults {

// Absolute tolerance used by verdicts and truncation-error targets.
inline constexpr double kTol = 1e-8;

// Truncation length (blocks) for single-operator builds.
inline constexpr int kN = 64;

// Extra blocks used when multiplying truncations.
inline constexpr int kBuffer = 32;

// Boundary sample count for sup norms, normality checks and quadrature
// Fourier coefficients of product symbols.
inline constexpr int kSamples = 4096;

// Two Blaschke zeros are identified when within this distance.
inline constexpr double kZeroMatchTol = 1e-9;

// Zeros must satisfy |z| < 1 - kZeroMargin at parse time.
inline constexpr double kZeroMargin = 1e-10;

// Truncation ladder for hyponormal / normal_operator evidence.
inline std::vector<int> ladder() { return {16, 32, 64}; }

}  // namespace hardy::defaults

#endif  // HARDY_DEFAULTS_HPP
