// Command-line front end: parse symbol files, run analyses, emit JSON or
// text reports. Exit codes: 0 holds/normal-class, 1 fails/not-subnormal,
// 2 inconclusive/exceptional, 64 usage error, 65 input error, 70 internal.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardy/classify.hpp"
#include "hardy/completion.hpp"
#include "hardy/inner_matrix.hpp"
#include "hardy/json_io.hpp"

namespace {

using namespace hardy;
using io::json;
using Clock = std::chrono::steady_clock;

// Flag values that are syntactically malformed are usage errors (64), as
// opposed to well-formed inputs whose data is bad (65).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double msSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

cplx parseComplex(const std::string& text, const std::string& flag) {
  std::string t = text;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
    t = t.substr(1, t.size() - 2);
  const auto comma = t.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return cplx(re, 0.0);
    }
    const std::string a = t.substr(0, comma);
    const std::string b = t.substr(comma + 1);
    std::size_t ua = 0, ub = 0;
    const double re = std::stod(a, &ua);
    const double im = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size()) throw std::invalid_argument(t);
    return cplx(re, im);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a complex number as re or re,im, got \"" +
                     text + "\"");
  }
}

std::vector<int> parseLadder(const std::string& text) {
  std::vector<int> Ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      Ns.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--ladder: expected a comma list of positive integers, "
                       "got \"" + text + "\"");
    }
  }
  if (Ns.empty()) throw UsageError("--ladder: empty list");
  return Ns;
}

json matrixToJsonRows(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k)
      row.push_back(io::to_json(M(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- text rendering ------------------------------------------------------

std::string compact(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void printVerdictText(const json& v, const std::string& indent) {
  std::cout << indent << v["status"].get<std::string>()
            << "  defect=" << v["defect"].dump()
            << "  atN=" << v["atN"].dump() << "\n";
  if (v.contains("witness")) {
    const json& w = v["witness"];
    std::cout << indent << "  witness: value=" << w["value"].dump() << "  "
              << w["description"].get<std::string>() << "\n";
  }
}

void printText(const json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "inputs") {
      std::cout << "inputs:";
      for (const auto& [k, v] : value.items()) std::cout << " " << k << "=" << compact(v);
      std::cout << "\n";
    } else if (key == "verdict" && value.is_object() && value.contains("status") &&
               value.contains("defect")) {
      std::cout << "verdict: ";
      printVerdictText(value, "");
    } else if (key == "verdict" && value.is_object()) {
      // completion verdict
      std::cout << "status: " << value["status"].get<std::string>() << "\n";
      if (value.contains("beta")) std::cout << "beta: " << value["beta"].dump() << "\n";
      if (value.contains("matchedFamily"))
        std::cout << "matchedFamily: " << value["matchedFamily"].dump() << "\n";
      if (value["rationalRefinement"].get<bool>())
        std::cout << "rationalRefinement: true\n";
      for (const json& d : value["diagnostics"])
        std::cout << "note: " << d.get<std::string>() << "\n";
    } else if (key == "report" && value.is_object() && value.contains("checks")) {
      std::cout << "checks:\n";
      for (const json& c : value["checks"]) {
        std::cout << "  " << c["name"].get<std::string>();
        if (c["required"].get<bool>()) std::cout << " [required]";
        if (c["expectedFails"].get<bool>()) std::cout << " [expected to fail]";
        std::cout << ": ";
        printVerdictText(c["verdict"], "");
      }
      std::cout << "consistent: " << value["consistent"].dump() << "\n";
      for (const json& n : value["notes"])
        std::cout << "note: " << n.get<std::string>() << "\n";
    } else if (key == "timings") {
      std::cout << "timings:";
      for (const auto& [k, v] : value.items()) std::cout << " " << k << "=" << v.dump() << "ms";
      std::cout << "\n";
    } else {
      std::cout << key << ": " << compact(value) << "\n";
    }
  }
}

void emit(json& report, bool text, bool timings, double parseMs, double runMs) {
  if (timings) {
    json t;
    t["parseMs"] = parseMs;
    t["runMs"] = runMs;
    report["timings"] = std::move(t);
  }
  if (text)
    printText(report);
  else
    std::cout << report.dump(2) << "\n";
}

int exitFor(Status s) {
  switch (s) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    default: return 2;
  }
}

int exitFor(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Normal:
    case CompletionStatus::QuasinormalAfterShift: return 0;
    case CompletionStatus::NotSubnormal: return 1;
    default: return 2;
  }
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeOpts {
  std::string path;
  std::string test;
  std::string Kpath;
  std::string betaStr;
  std::string ladderStr;
  int N = defaults::kN;
  int buffer = defaults::kBuffer;
  int samples = defaults::kSamples;
  double tol = defaults::kTol;
  bool text = false;
  bool timings = false;
  CLI::Option* optN = nullptr;
  CLI::Option* optLadder = nullptr;
  CLI::Option* optBeta = nullptr;
  CLI::Option* optK = nullptr;
};

void addOutputFlags(CLI::App* sub, bool& text, bool& timings) {
  auto* jf = sub->add_flag("--json", "emit a JSON report on stdout (default)");
  auto* tf = sub->add_flag("--text", text, "emit a human-readable report instead");
  jf->excludes(tf);
  tf->excludes(jf);
  sub->add_flag("--timings", timings,
                "include wall-clock timings in the report (nondeterministic)");
}

CLI::App* addAnalyze(CLI::App* sub, AnalyzeOpts& A) {
  sub->add_option("symbol", A.path, "matrix symbol JSON file")->required();
  sub->add_option("--test", A.test, "which analysis to run")
      ->required()
      ->check(CLI::IsMember({"hyponormal", "normal", "2-hyponormal",
                             "3-hyponormal", "quasinormal", "quasinormal-shift",
                             "rank", "certificate", "unitary", "normal-symbol",
                             "inner", "sup-norm"}));
  A.optN = sub->add_option("--N", A.N, "truncation size in blocks");
  sub->add_option("--buffer", A.buffer, "extra blocks for operator products");
  sub->add_option("--tol", A.tol, "verdict tolerance");
  sub->add_option("--samples", A.samples, "boundary sample count");
  A.optLadder = sub->add_option("--ladder", A.ladderStr,
                                "comma list of truncation sizes");
  A.optBeta = sub->add_option("--beta", A.betaStr,
                              "shift for --test quasinormal-shift (re or re,im)");
  A.optK = sub->add_option("--K", A.Kpath,
                           "certificate matrix JSON file for --test certificate");
  addOutputFlags(sub, A.text, A.timings);
  return sub;
}

int runAnalyze(const AnalyzeOpts& A) {
  const auto t0 = Clock::now();
  const MatrixSymbol Phi = io::load_matrix(A.path);
  const double parseMs = msSince(t0);

  std::vector<int> Ns;
  if (A.optLadder->count() > 0)
    Ns = parseLadder(A.ladderStr);
  else if (A.optN->count() > 0)
    Ns = {A.N};
  else
    Ns = defaults::ladder();

  json inputs;
  inputs["symbol"] = A.path;
  inputs["test"] = A.test;

  json report;
  report["command"] = "analyze";
  int code = 0;

  const auto t1 = Clock::now();
  if (A.test == "hyponormal" || A.test == "normal") {
    inputs["ladder"] = Ns;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const Verdict v = (A.test == "hyponormal") ? hyponormal(Phi, Ns, A.tol)
                                               : normal_operator(Phi, Ns, A.tol);
    report["verdict"] = io::to_json(v);
    code = exitFor(v.status);
  } else if (A.test == "2-hyponormal" || A.test == "3-hyponormal") {
    inputs["N"] = A.N;
    inputs["buffer"] = A.buffer;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const int k = (A.test == "2-hyponormal") ? 2 : 3;
    const Verdict v = k_hyponormal(Phi, k, A.N, A.buffer, A.tol);
    report["verdict"] = io::to_json(v);
    code = exitFor(v.status);
  } else if (A.test == "quasinormal") {
    inputs["N"] = A.N;
    inputs["buffer"] = A.buffer;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const Verdict v = quasinormal_defect(Phi, A.N, A.buffer, A.tol);
    report["verdict"] = io::to_json(v);
    code = exitFor(v.status);
  } else if (A.test == "quasinormal-shift") {
    if (A.optBeta->count() == 0)
      throw UsageError("--beta is required for --test quasinormal-shift");
    const cplx beta = parseComplex(A.betaStr, "--beta");
    inputs["beta"] = io::to_json(beta);
    inputs["N"] = A.N;
    inputs["buffer"] = A.buffer;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const Verdict v = quasinormal_after_shift(Phi, beta, A.N, A.buffer, A.tol);
    report["verdict"] = io::to_json(v);
    code = exitFor(v.status);
  } else if (A.test == "rank") {
    inputs["N"] = A.N;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    report["rank"] = commutator_rank(Phi, A.N, A.tol);
  } else if (A.test == "certificate") {
    if (A.optK->count() == 0)
      throw UsageError("--K is required for --test certificate");
    const MatrixSymbol K = io::load_matrix(A.Kpath);
    inputs["K"] = A.Kpath;
    inputs["samples"] = A.samples;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const Verdict v = hyponormality_certificate(Phi, K, A.samples, A.tol);
    report["verdict"] = io::to_json(v);
    code = exitFor(v.status);
  } else if (A.test == "unitary") {
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const UnitaryTest ut = normality_unitary_test(Phi, 0, A.tol);
    report["verdict"] = io::to_json(ut.verdict);
    report["unitary"] = matrixToJsonRows(ut.U);
    code = exitFor(ut.verdict.status);
  } else if (A.test == "normal-symbol") {
    inputs["samples"] = A.samples;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const SymbolNormality r = is_normal_symbol(Phi, A.samples, A.tol);
    report["normal"] = r.normal;
    report["defect"] = r.defect;
    code = r.normal ? 0 : 1;
  } else if (A.test == "inner") {
    inputs["samples"] = A.samples;
    inputs["tol"] = A.tol;
    report["inputs"] = std::move(inputs);
    const InnerCheck r = is_inner(Phi, A.samples, A.tol);
    report["inner"] = r.inner;
    report["defect"] = r.defect;
    code = r.inner ? 0 : 1;
  } else {  // sup-norm
    inputs["samples"] = A.samples;
    report["inputs"] = std::move(inputs);
    report["supNorm"] = sup_norm(Phi, A.samples);
  }

  json out = std::move(report);
  emit(out, A.text, A.timings, parseMs, msSince(t1));
  return code;
}

// ---- completion classify ---------------------------------------------------

struct ClassifyOpts {
  std::string alphaStr;
  std::string betaStr;
  std::string phiPath;
  std::string psiPath;
  double tol = 1e-9;
  int N = defaults::kN;
  int buffer = defaults::kBuffer;
  bool verify = false;
  bool text = false;
  bool timings = false;
};

CLI::App* addClassify(CLI::App* sub, ClassifyOpts& C) {
  sub->add_option("--alpha", C.alphaStr, "diagonal zero of the (0,0) corner")
      ->required();
  sub->add_option("--beta", C.betaStr, "diagonal zero of the (1,1) corner")
      ->required();
  sub->add_option("--phi", C.phiPath, "scalar symbol JSON for the (0,1) entry")
      ->required();
  sub->add_option("--psi", C.psiPath, "scalar symbol JSON for the (1,0) entry")
      ->required();
  sub->add_option("--tol", C.tol, "pattern-match tolerance");
  sub->add_flag("--verify", C.verify,
                "cross-validate the verdict with operator tests");
  sub->add_option("--N", C.N, "truncation size for --verify");
  sub->add_option("--buffer", C.buffer, "product buffer for --verify");
  addOutputFlags(sub, C.text, C.timings);
  return sub;
}

int runClassify(const ClassifyOpts& C) {
  const cplx alpha = parseComplex(C.alphaStr, "--alpha");
  const cplx beta = parseComplex(C.betaStr, "--beta");
  const auto t0 = Clock::now();
  const ScalarSymbol phi = io::load_scalar(C.phiPath);
  const ScalarSymbol psi = io::load_scalar(C.psiPath);
  const double parseMs = msSince(t0);

  json report;
  report["command"] = "completion-classify";
  json inputs;
  inputs["alpha"] = io::to_json(alpha);
  inputs["beta"] = io::to_json(beta);
  inputs["phi"] = C.phiPath;
  inputs["psi"] = C.psiPath;
  inputs["tol"] = C.tol;
  report["inputs"] = std::move(inputs);

  const auto t1 = Clock::now();
  const CompletionVerdict v = classify_candidate(alpha, beta, phi, psi, C.tol);
  report["verdict"] = io::to_json(v);

  if (C.verify) {
    MatrixSymbol Phi(2);
    Phi.at(0, 0) = ScalarSymbol::coanalytic(1.0, FiniteBlaschkeProduct::factor(alpha));
    Phi.at(1, 1) = Phi.at(0, 0);
    Phi.at(0, 1) = phi;
    Phi.at(1, 0) = psi;
    const CompletionReport rep = verify_completion(Phi, v, C.N, C.buffer);
    report["report"] = io::to_json(rep);
  }

  json out = std::move(report);
  emit(out, C.text, C.timings, parseMs, msSince(t1));
  return exitFor(v.status);
}

// ---- completion build ------------------------------------------------------

struct BuildOpts {
  std::string familyPath;
  std::string tag = "family1";
  std::string alphaStr = "0";
  std::string muStr = "1";
  std::string zetaStr = "0";
  std::string outPath;
  double theta = 0.0;
  double omega = 0.0;
  bool text = false;
  bool timings = false;
};

CLI::App* addBuild(CLI::App* sub, BuildOpts& B) {
  sub->add_option("--family", B.familyPath,
                  "completion family JSON file (overrides inline flags)");
  sub->add_option("--tag", B.tag, "family1 | family2 | quasinormal")
      ->check(CLI::IsMember({"family1", "family2", "quasinormal"}));
  sub->add_option("--alpha", B.alphaStr, "common diagonal zero (re or re,im)");
  sub->add_option("--mu", B.muStr, "family2 coanalytic coefficient");
  sub->add_option("--theta", B.theta, "phase angle theta (radians)");
  sub->add_option("--omega", B.omega, "phase angle omega (radians)");
  sub->add_option("--zeta", B.zetaStr, "additive constant (re or re,im)");
  sub->add_option("--out", B.outPath, "also write the symbol JSON to this file");
  addOutputFlags(sub, B.text, B.timings);
  return sub;
}

int runBuild(const BuildOpts& B) {
  const auto t0 = Clock::now();
  CompletionFamily f;
  if (!B.familyPath.empty()) {
    f = io::family_from_json(io::read_json_file(B.familyPath));
  } else {
    f.tag = io::family_tag_from_name(B.tag);
    f.alpha = parseComplex(B.alphaStr, "--alpha");
    f.mu = parseComplex(B.muStr, "--mu");
    f.thetaAngle = B.theta;
    f.omegaAngle = B.omega;
    f.zeta = parseComplex(B.zetaStr, "--zeta");
  }
  const double parseMs = msSince(t0);

  const auto t1 = Clock::now();
  const MatrixSymbol Phi = build_completion(f);
  json report;
  report["command"] = "completion-build";
  json inputs;
  inputs["family"] = io::to_json(f);
  report["inputs"] = std::move(inputs);
  report["symbol"] = io::to_json(Phi);

  if (!B.outPath.empty()) {
    std::ofstream out(B.outPath);
    if (!out) throw UsageError("--out: cannot write " + B.outPath);
    out << report["symbol"].dump(2) << "\n";
  }

  json out = std::move(report);
  emit(out, B.text, B.timings, parseMs, msSince(t1));
  return 0;
}

// ---- kernel / hull / coprime / factor --------------------------------------

struct KernelOpts {
  std::string phiminusPath;
  std::string deltaPath;
  int N = defaults::kN;
  double tol = defaults::kTol;
  bool text = false;
  bool timings = false;
};

CLI::App* addKernel(CLI::App* sub, KernelOpts& K) {
  sub->add_option("phiminus", K.phiminusPath,
                  "analytic matrix symbol JSON (the conjugate part of the full "
                  "symbol)")
      ->required();
  sub->add_option("--delta", K.deltaPath, "candidate inner matrix JSON")
      ->required();
  sub->add_option("--N", K.N, "truncation size in blocks");
  sub->add_option("--tol", K.tol, "verdict tolerance");
  addOutputFlags(sub, K.text, K.timings);
  return sub;
}

int runKernel(const KernelOpts& K) {
  const auto t0 = Clock::now();
  const MatrixSymbol Phiminus = io::load_matrix(K.phiminusPath);
  const InnerMatrixFunction Delta(io::load_matrix(K.deltaPath));
  const double parseMs = msSince(t0);

  json report;
  report["command"] = "kernel";
  json inputs;
  inputs["phiminus"] = K.phiminusPath;
  inputs["delta"] = K.deltaPath;
  inputs["N"] = K.N;
  inputs["tol"] = K.tol;
  report["inputs"] = std::move(inputs);

  const auto t1 = Clock::now();
  const Verdict v = kernel_check(Phiminus, Delta, K.N, K.tol);
  report["verdict"] = io::to_json(v);

  json out = std::move(report);
  emit(out, K.text, K.timings, parseMs, msSince(t1));
  return exitFor(v.status);
}

struct HullOpts {
  std::string deltaPath;
  int samples = 256;
  double tol = 1e-9;
  bool text = false;
  bool timings = false;
};

CLI::App* addHull(CLI::App* sub, HullOpts& H) {
  sub->add_option("delta", H.deltaPath, "inner matrix symbol JSON")->required();
  sub->add_option("--samples", H.samples, "boundary samples for the inner check");
  sub->add_option("--tol", H.tol, "inner-check tolerance");
  addOutputFlags(sub, H.text, H.timings);
  return sub;
}

int runHull(const HullOpts& H) {
  const auto t0 = Clock::now();
  const InnerMatrixFunction Delta(io::load_matrix(H.deltaPath), H.samples, H.tol);
  const double parseMs = msSince(t0);

  json report;
  report["command"] = "hull";
  json inputs;
  inputs["delta"] = H.deltaPath;
  report["inputs"] = std::move(inputs);

  const auto t1 = Clock::now();
  const FiniteBlaschkeProduct hull = diagonal_hull(Delta);
  const DiskZeros dz = det_disk_zeros(Delta.symbol());
  report["hull"] = io::to_json(hull);
  report["degree"] = hull.degree();
  json zeros = json::array();
  for (const auto& [w, m] : dz.zeros) {
    json zj;
    zj["zero"] = io::to_json(w);
    zj["multiplicity"] = m;
    zeros.push_back(std::move(zj));
  }
  report["detZeros"] = std::move(zeros);
  report["detDegree"] = dz.degree;

  json out = std::move(report);
  emit(out, H.text, H.timings, parseMs, msSince(t1));
  return 0;
}

struct CoprimeOpts {
  std::string deltaPath;
  std::string thetaPath;
  double tol = 1e-9;
  bool text = false;
  bool timings = false;
};

CLI::App* addCoprime(CLI::App* sub, CoprimeOpts& C) {
  sub->add_option("delta", C.deltaPath, "inner matrix symbol JSON")->required();
  sub->add_option("--theta", C.thetaPath, "Blaschke product JSON file")
      ->required();
  sub->add_option("--tol", C.tol, "point-test singular-value threshold");
  addOutputFlags(sub, C.text, C.timings);
  return sub;
}

int runCoprime(const CoprimeOpts& C) {
  const auto t0 = Clock::now();
  const InnerMatrixFunction Delta(io::load_matrix(C.deltaPath));
  const FiniteBlaschkeProduct theta = io::load_blaschke(C.thetaPath);
  const double parseMs = msSince(t0);

  json report;
  report["command"] = "coprime";
  json inputs;
  inputs["delta"] = C.deltaPath;
  inputs["theta"] = C.thetaPath;
  inputs["tol"] = C.tol;
  report["inputs"] = std::move(inputs);

  const auto t1 = Clock::now();
  const bool viaHull = coprime_diag(theta, Delta);
  const PointTest pt = coprime_point_test(theta, Delta.symbol(), C.tol);
  report["coprime"] = viaHull;
  json ptj;
  ptj["pass"] = pt.pass;
  ptj["minSingular"] = pt.minSingular;
  if (pt.failingZero) ptj["failingZero"] = io::to_json(*pt.failingZero);
  report["pointTest"] = std::move(ptj);

  json out = std::move(report);
  emit(out, C.text, C.timings, parseMs, msSince(t1));
  return viaHull ? 0 : 1;
}

struct FactorOpts {
  std::string path;
  bool text = false;
  bool timings = false;
};

CLI::App* addFactor(CLI::App* sub, FactorOpts& F) {
  sub->add_option("symbol", F.path,
                  "scalar symbol JSON; the strictly coanalytic part is "
                  "factored (a purely analytic symbol is factored directly)")
      ->required();
  addOutputFlags(sub, F.text, F.timings);
  return sub;
}

int runFactor(const FactorOpts& F) {
  const auto t0 = Clock::now();
  const ScalarSymbol s = io::load_scalar(F.path);
  const double parseMs = msSince(t0);

  ScalarSymbol target = s.minus_part();
  if (target.is_zero(0.0)) target = s;

  json report;
  report["command"] = "factor";
  json inputs;
  inputs["symbol"] = F.path;
  report["inputs"] = std::move(inputs);

  const auto t1 = Clock::now();
  const CoprimeFactorization cf = coprime_factorization(target);
  report["theta"] = io::to_json(cf.theta);
  report["thetaDegree"] = cf.theta.degree();
  report["cofactor"] = io::to_json(cf.cofactor);

  json out = std::move(report);
  emit(out, F.text, F.timings, parseMs, msSince(t1));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block Toeplitz/Hankel analysis of rational matrix symbols "
               "built from finite Blaschke products"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  AnalyzeOpts A;
  ClassifyOpts C;
  BuildOpts B;
  KernelOpts K;
  HullOpts H;
  CoprimeOpts P;
  FactorOpts F;

  CLI::App* an = addAnalyze(
      app.add_subcommand("analyze", "run an operator or symbol test"), A);

  CLI::App* comp = app.add_subcommand("completion", "subnormal-completion tools");
  comp->require_subcommand(1);
  CLI::App* cls = addClassify(
      comp->add_subcommand("classify", "classify a candidate pair (phi, psi)"), C);
  CLI::App* bld = addBuild(
      comp->add_subcommand("build", "build a completion symbol from a family"), B);
  CLI::App* cls2 = addClassify(
      app.add_subcommand("completion-classify",
                         "alias for `completion classify`"), C);
  CLI::App* bld2 = addBuild(
      app.add_subcommand("completion-build", "alias for `completion build`"), B);

  CLI::App* kern = addKernel(
      app.add_subcommand("kernel",
                         "verify a closed-form Hankel kernel description"), K);
  CLI::App* hull = addHull(
      app.add_subcommand("hull", "scalar inner hull of an inner matrix"), H);
  CLI::App* cop = addCoprime(
      app.add_subcommand("coprime",
                         "coprimeness of a Blaschke product and an inner "
                         "matrix"), P);
  CLI::App* fac = addFactor(
      app.add_subcommand("factor",
                         "coprime inner/conjugate-analytic factorization"), F);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (an->parsed()) return runAnalyze(A);
    if (cls->parsed() || cls2->parsed()) return runClassify(C);
    if (bld->parsed() || bld2->parsed()) return runBuild(B);
    if (kern->parsed()) return runKernel(K);
    if (hull->parsed()) return runHull(H);
    if (cop->parsed()) return runCoprime(P);
    if (fac->parsed()) return runFactor(F);
    std::cerr << "usage error: no command selected\n";
    return 64;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const BufferTooSmall& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const GrammarOverflow& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const PoleEvaluation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
