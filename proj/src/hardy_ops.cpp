#include "hardy/hardy_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Normalized decay envelope g(x) with ||Phi_hat(+-x)|| <= C * g(x):
// banded profiles use the indicator of [0, bandwidth], geometric ones
// boundRate^x.
double envelope(const DecayProfile& p, int x) {
  if (p.banded) return x <= p.bandwidth ? 1.0 : 0.0;
  return std::pow(p.boundRate, x);
}

// sum_{d in Z} g(|d|)
double envelopeColumnSum(const DecayProfile& p) {
  if (p.banded) return 2.0 * p.bandwidth + 1.0;
  return (1.0 + p.boundRate) / (1.0 - p.boundRate);
}

// sum_{e >= s} g(e)
double envelopeTail(const DecayProfile& p, int s) {
  if (p.banded) return std::max(0, p.bandwidth - s + 1);
  return std::pow(p.boundRate, s) / (1.0 - p.boundRate);
}

}  // namespace

DecayProfile probe_decay(const MatrixSymbol& Phi) {
  DecayProfile p;
  p.decayRate = Phi.max_zero_modulus();
  p.banded = (p.decayRate == 0.0);
  p.bandwidth = Phi.bandwidth();
  if (p.banded) {
    p.boundRate = 0.0;
    for (int k = 0; k <= p.bandwidth; ++k) {
      p.constant = std::max(p.constant, Phi.fourier(k).operatorNorm());
      p.constant = std::max(p.constant, Phi.fourier(-k).operatorNorm());
    }
    return p;
  }
  p.boundRate = std::min(p.decayRate + 0.1, 0.5 * (1.0 + p.decayRate));
  double rk = 1.0;
  for (int k = 0; k <= 512 && rk > 1e-200; ++k) {
    const double norm = std::max(Phi.fourier(k).operatorNorm(),
                                 Phi.fourier(-k).operatorNorm());
    p.constant = std::max(p.constant, norm / rk);
    rk *= p.boundRate;
  }
  return p;
}

TruncatedOperator toeplitz(const MatrixSymbol& Phi, int N) {
  if (N < 1) throw Error("toeplitz truncation needs N >= 1");
  const int n = Phi.n();
  const DecayProfile p = probe_decay(Phi);
  TruncatedOperator op;
  op.n = n;
  op.N = N;
  op.decayRate = p.decayRate;
  op.boundRate = p.boundRate;
  op.tailConstant = p.constant;
  op.entries.resize(static_cast<Eigen::Index>(n) * N,
                    static_cast<Eigen::Index>(n) * N);
  std::vector<Eigen::MatrixXcd> coeff(2 * N - 1);
  for (int d = -(N - 1); d <= N - 1; ++d) coeff[d + N - 1] = Phi.fourier(d);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      op.entries.block(static_cast<Eigen::Index>(i) * n,
                       static_cast<Eigen::Index>(j) * n, n, n) =
          coeff[i - j + N - 1];
  return op;
}

TruncatedOperator hankel_rect(const MatrixSymbol& Phi, int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("hankel truncation needs size >= 1");
  const int n = Phi.n();
  const DecayProfile p = probe_decay(Phi);
  TruncatedOperator op;
  op.n = n;
  op.N = cols;
  op.decayRate = p.decayRate;
  op.boundRate = p.boundRate;
  op.tailConstant = p.constant;
  op.entries.resize(static_cast<Eigen::Index>(n) * rows,
                    static_cast<Eigen::Index>(n) * cols);
  std::vector<Eigen::MatrixXcd> coeff(rows + cols - 1);
  for (int d = 1; d <= rows + cols - 1; ++d) coeff[d - 1] = Phi.fourier(-d);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      op.entries.block(static_cast<Eigen::Index>(i) * n,
                       static_cast<Eigen::Index>(j) * n, n, n) =
          coeff[i + j];
  return op;
}

TruncatedOperator hankel(const MatrixSymbol& Phi, int N) {
  return hankel_rect(Phi, N, N);
}

int hankel_gram_rows(const DecayProfile& a, const DecayProfile& b, int N,
                     double tol) {
  const int wa = a.banded ? a.bandwidth : 0;
  const int wb = b.banded ? b.bandwidth : 0;
  const double rho = std::max(a.boundRate, b.boundRate);
  if (rho == 0.0) return N + std::max(a.bandwidth, b.bandwidth);
  // Treat a banded profile as geometric: C * [x <= w] <= (C * rho^-w) rho^x.
  const double ceff = a.constant * b.constant *
                      std::pow(rho, -static_cast<double>(wa + wb));
  // Tail of the gram beyond K rows is <= ceff * rho^{2K} / (1 - rho^2).
  const double target = tol * (1.0 - rho * rho) / ceff;
  int extra = 0;
  if (target < 1.0)
    extra = static_cast<int>(
        std::ceil(std::log(target) / (2.0 * std::log(rho)))) - N;
  extra = std::clamp(extra, 0, 2048);
  return N + extra;
}

std::vector<Eigen::MatrixXcd> product_fourier(const MatrixSymbol& A,
                                              const MatrixSymbol& B, int lo,
                                              int hi, int samples,
                                              double tol) {
  if (A.n() != B.n()) throw Error("product_fourier dimension mismatch");
  if (lo > hi) throw Error("product_fourier needs lo <= hi");
  if (samples < 4) throw Error("product_fourier needs at least 4 samples");
  const DecayProfile pa = probe_decay(A);
  const DecayProfile pb = probe_decay(B);
  const int maxAbs = std::max(std::abs(lo), std::abs(hi));

  const double rho = std::max(pa.boundRate, pb.boundRate);
  if (rho == 0.0) {
    // Trigonometric polynomial: quadrature is exact once the sample count
    // clears the full bandwidth plus the requested index.
    if (samples <= pa.bandwidth + pb.bandwidth + maxAbs)
      throw GrammarOverflow(
          "product_fourier: sample count below the product bandwidth");
  } else {
    const int wa = pa.banded ? pa.bandwidth : 0;
    const int wb = pb.banded ? pb.bandwidth : 0;
    const double ceff = pa.constant * pb.constant *
                        std::pow(rho, -static_cast<double>(wa + wb));
    const double alias = 2.0 * ceff *
                         (samples + 2.0 / (1.0 - rho * rho) + 1.0) *
                         std::pow(rho, samples - maxAbs) /
                         ((1.0 - rho) * (1.0 - rho));
    if (!(alias <= tol))
      throw GrammarOverflow(
          "product_fourier: aliasing bound exceeds tolerance; increase "
          "samples");
  }

  const int n = A.n();
  std::vector<Eigen::MatrixXcd> prod(samples);
  for (int s = 0; s < samples; ++s) {
    const double t = kTwoPi * s / samples;
    prod[s] = A.eval_boundary(t) * B.eval_boundary(t);
  }
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(hi - lo + 1);
  for (int m = lo; m <= hi; ++m) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < samples; ++s)
      c += prod[s] * std::polar(1.0, -kTwoPi * static_cast<double>(s) * m /
                                         samples);
    out.push_back(c / static_cast<double>(samples));
  }
  return out;
}

TruncatedOperator self_commutator(const MatrixSymbol& Phi, int N, double tol,
                                  int samples) {
  if (N < 1) throw Error("self_commutator needs N >= 1");
  const int n = Phi.n();
  const MatrixSymbol adj = Phi.adjoint();
  const DecayProfile p = probe_decay(Phi);

  // Toeplitz part: T(Phi*Phi - Phi Phi*) on the N window.
  const auto c1 = product_fourier(adj, Phi, -(N - 1), N - 1, samples, tol);
  const auto c2 = product_fourier(Phi, adj, -(N - 1), N - 1, samples, tol);
  TruncatedOperator op;
  op.n = n;
  op.N = N;
  op.decayRate = p.decayRate;
  op.boundRate = p.boundRate;
  op.tailConstant = p.constant * p.constant *
                    (p.banded ? (2.0 * p.bandwidth + 1.0)
                              : 3.0 / (1.0 - p.boundRate * p.boundRate));
  op.entries.resize(static_cast<Eigen::Index>(n) * N,
                    static_cast<Eigen::Index>(n) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      op.entries.block(static_cast<Eigen::Index>(i) * n,
                       static_cast<Eigen::Index>(j) * n, n, n) =
          c1[i - j + N - 1] - c2[i - j + N - 1];

  // Hankel grams H_{Phi*}^* H_{Phi*} - H_Phi^* H_Phi with enough rows that
  // the neglected tail stays below tol/2 each.
  const int K = hankel_gram_rows(p, p, N, 0.5 * tol);
  const TruncatedOperator ha = hankel_rect(adj, K, N);
  const TruncatedOperator hb = hankel_rect(Phi, K, N);
  op.entries += ha.entries.adjoint() * ha.entries;
  op.entries -= hb.entries.adjoint() * hb.entries;
  if (p.boundRate > 0.0) {
    const int w = p.banded ? p.bandwidth : 0;
    const double ceff =
        p.constant * p.constant *
        std::pow(p.boundRate, -2.0 * static_cast<double>(w));
    op.truncationError = 2.0 * ceff * std::pow(p.boundRate, 2.0 * K) /
                         (1.0 - p.boundRate * p.boundRate);
  }

  op.entries = (0.5 * (op.entries + op.entries.adjoint())).eval();
  return op;
}

TruncatedOperator op_product(const std::vector<OpRequest>& ops, int N,
                             int buffer, std::optional<double> tol) {
  if (ops.empty()) throw Error("op_product needs at least one factor");
  if (N < 1 || buffer < 0) throw Error("op_product needs N >= 1, buffer >= 0");
  const int n = ops.front().symbol.n();
  for (const auto& r : ops)
    if (r.symbol.n() != n) throw Error("op_product dimension mismatch");

  const int M = N + buffer;

  auto build = [M](const OpRequest& r) {
    TruncatedOperator t = r.kind == OpKind::Toeplitz ? toeplitz(r.symbol, M)
                                                     : hankel(r.symbol, M);
    if (r.adjoint) t.entries = t.entries.adjoint().eval();
    return t;
  };

  std::vector<DecayProfile> profiles;
  profiles.reserve(ops.size());
  for (const auto& r : ops) profiles.push_back(probe_decay(r.symbol));

  TruncatedOperator acc = build(ops.front());
  // Certified entrywise error, tracked as a profile over the distance
  // d = M-1-j from the truncation edge: the tail a multiplication ignores
  // only matters near the edge, and later factors can carry it only as far
  // inward as their own envelope reaches.
  std::vector<double> err(M, 0.0);
  double flat = profiles.front().constant;  // bound on true product entries
  double rhoMax = profiles.front().decayRate;
  double boundMax = profiles.front().boundRate;

  for (size_t k = 1; k < ops.size(); ++k) {
    const TruncatedOperator f = build(ops[k]);
    const DecayProfile& p = profiles[k];
    acc.entries = (acc.entries * f.entries).eval();

    std::vector<double> next(M, 0.0);
    for (int d = 0; d < M; ++d) {
      double propagated = 0.0;
      for (int u = 0; u < M; ++u)
        if (err[u] != 0.0)
          propagated += err[u] * envelope(p, std::abs(u - d));
      next[d] = p.constant * propagated +
                flat * p.constant * envelopeTail(p, d + 1);
    }
    err.swap(next);
    flat *= p.constant * envelopeColumnSum(p);
    rhoMax = std::max(rhoMax, p.decayRate);
    boundMax = std::max(boundMax, p.boundRate);
  }

  double eps = 0.0;
  for (int d = buffer; d < M; ++d) eps = std::max(eps, err[d]);
  if (tol && eps > *tol)
    throw BufferTooSmall("op_product: certified truncation bound " +
                         std::to_string(eps) + " exceeds tolerance " +
                         std::to_string(*tol));

  TruncatedOperator out;
  out.n = n;
  out.N = N;
  out.entries = acc.entries
                    .topLeftCorner(static_cast<Eigen::Index>(n) * N,
                                   static_cast<Eigen::Index>(n) * N)
                    .eval();
  out.decayRate = rhoMax;
  out.boundRate = boundMax;
  out.tailConstant = flat;
  out.truncationError = eps;
  return out;
}

CauchyKernelVector kernel_vector(cplx alpha, int N) {
  if (std::abs(alpha) >= 1.0)
    throw InvalidZero("kernel_vector needs |alpha| < 1");
  if (N < 1) throw Error("kernel_vector needs N >= 1");
  CauchyKernelVector kv;
  kv.alpha = alpha;
  kv.N = N;
  kv.vec.resize(N);
  const double scale = std::sqrt(1.0 - std::norm(alpha));
  cplx pw = 1.0;
  for (int k = 0; k < N; ++k) {
    kv.vec(k) = scale * pw;
    pw *= alpha;
  }
  return kv;
}

}  // namespace hardy
