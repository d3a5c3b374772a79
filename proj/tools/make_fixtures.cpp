// Regenerates the committed JSON fixtures under fixtures/. Every fixture is
// built through the library so the files stay in sync with the symbol
// grammar; run from the repository root (or pass the target directory).
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hardy/completion.hpp"
#include "hardy/inner_matrix.hpp"
#include "hardy/json_io.hpp"

using namespace hardy;
using io::json;
using FBP = FiniteBlaschkeProduct;

namespace {

void writeJson(const std::filesystem::path& dir, const std::string& name,
               const json& j) {
  const auto path = dir / name;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path.string() << "\n";
    std::exit(1);
  }
  out << j.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

// Minus-part matrix [[b_alpha, theta1],[theta0, b_alpha]] used by the kernel
// fixtures: the diagonal is the conjugate part of conj(b_alpha), the corners
// are the conjugate parts of the off-diagonal symbols (note the transpose).
MatrixSymbol minusMatrix(const FBP& theta0, const FBP& theta1, cplx alpha) {
  MatrixSymbol Pm(2);
  Pm.at(0, 0) = ScalarSymbol::analytic(1.0, FBP::factor(alpha));
  Pm.at(1, 1) = Pm.at(0, 0);
  Pm.at(0, 1) = ScalarSymbol::analytic(1.0, theta1);
  Pm.at(1, 0) = ScalarSymbol::analytic(1.0, theta0);
  return Pm;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = (argc > 1) ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  // --- 2x2 symbol with inner-coanalytic diagonal, normal pointwise values,
  // and a scaled-conjugate certificate: Phi(0,0) = Phi(1,1) = conj(theta),
  // Phi(0,1) = conj(theta b_a) + c theta b_b, Phi(1,0) = conj(b_b) +
  // c theta^2 b_a, with theta = b_{0.7}, a = 0.3, b = -0.4 and c just above
  // the sup norm of the conjugate-part matrix.
  {
    const cplx a = 0.3;
    const cplx b = -0.4;
    const FBP th = FBP::factor(0.7);

    MatrixSymbol Pm(2);  // conjugate parts, certificate numerator
    Pm.at(0, 0) = ScalarSymbol::analytic(1.0, th);
    Pm.at(1, 1) = ScalarSymbol::analytic(1.0, th);
    Pm.at(0, 1) = ScalarSymbol::analytic(1.0, FBP::factor(b));
    Pm.at(1, 0) = ScalarSymbol::analytic(1.0, mul(th, FBP::factor(a)));
    const double c = sup_norm(Pm, defaults::kSamples) + 0.1;

    MatrixSymbol Phi(2);
    Phi.at(0, 0) = ScalarSymbol::coanalytic(1.0, th);
    Phi.at(1, 1) = ScalarSymbol::coanalytic(1.0, th);
    Phi.at(0, 1) = ScalarSymbol::coanalytic(1.0, mul(th, FBP::factor(a))) +
                   ScalarSymbol::analytic(c, mul(th, FBP::factor(b)));
    Phi.at(1, 0) = ScalarSymbol::coanalytic(1.0, FBP::factor(b)) +
                   ScalarSymbol::analytic(c, mul(mul(th, th), FBP::factor(a)));
    writeJson(dir, "scaled_conjugate.json", io::to_json(Phi));
    writeJson(dir, "scaled_conjugate_K.json", io::to_json(Pm * cplx(1.0 / c)));
  }

  // --- quasinormal completion at the origin: [[conj(z), conj(z)+2z],
  // [conj(z)+2z, conj(z)]] -- quasinormal, rank-one self-commutator, not
  // normal.
  {
    CompletionFamily f;
    f.tag = FamilyTag::QuasinormalFamily;
    f.alpha = 0.0;
    writeJson(dir, "quasinormal_pair.json", io::to_json(build_completion(f)));
  }

  // --- normal completion pair from the unimodular-multiple family.
  {
    CompletionFamily f;
    f.tag = FamilyTag::Family1;
    f.alpha = 0.3;
    f.thetaAngle = 0.7;
    f.omegaAngle = 1.1;
    f.zeta = cplx(2.0, 1.0);
    const MatrixSymbol Phi = build_completion(f);
    writeJson(dir, "family1_phi.json", io::to_json(Phi.at(0, 1)));
    writeJson(dir, "family1_psi.json", io::to_json(Phi.at(1, 0)));
  }

  // --- candidate pair that trips the borderline-product detector with
  // unequal pole counts: phi = conj(z b_{0.5}) + sqrt(2) z,
  // psi = -0.5 conj(z) - sqrt(2) z. No classification is available there.
  {
    const ScalarSymbol phi =
        ScalarSymbol::coanalytic(1.0, mul(FBP::factor(0.0), FBP::factor(0.5))) +
        ScalarSymbol::analytic(std::sqrt(2.0), FBP::factor(0.0));
    const ScalarSymbol psi =
        ScalarSymbol::coanalytic(-0.5, FBP::factor(0.0)) +
        ScalarSymbol::analytic(-std::sqrt(2.0), FBP::factor(0.0));
    writeJson(dir, "exceptional_phi.json", io::to_json(phi));
    writeJson(dir, "exceptional_psi.json", io::to_json(psi));
  }

  // --- negative control: every entry conj(z); no subnormal completion.
  {
    MatrixSymbol Neg(2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        Neg.at(i, k) = ScalarSymbol::coanalytic(1.0, FBP::factor(0.0));
    writeJson(dir, "negctrl.json", io::to_json(Neg));
  }

  // --- unilateral shift, stored in the 1x1 matrix form.
  writeJson(dir, "shift.json",
            io::to_json(MatrixSymbol::scalar(
                ScalarSymbol::analytic(1.0, FBP::factor(0.0)))));

  // --- kernel fixtures, one per hypothesis case. The minus matrix is
  // [[b_alpha, theta1],[theta0, b_alpha]]; Delta is the closed-form kernel
  // inner function for that case.
  {
    struct CaseFixture {
      const char* name;
      FBP theta0;
      FBP theta1;
      cplx alpha;
      KernelCase kase;
    };
    const FBP b05 = FBP::factor(0.5);
    const CaseFixture cases[] = {
        {"caseA", mul(FBP::power(0.3, 2), b05), FBP::factor(0.6), 0.3,
         KernelCase::A},
        {"caseB", FBP::factor(0.6), mul(FBP::power(0.3, 2), b05), 0.3,
         KernelCase::B},
        {"caseC", b05, FBP::factor(0.3), 0.0, KernelCase::C},
        {"caseD", FBP::factor(0.3), mul(FBP::factor(0.3), FBP::factor(0.4)),
         0.3, KernelCase::D},
    };
    for (const CaseFixture& c : cases) {
      const InnerMatrixFunction Delta =
          hankel_kernel_delta(c.theta0, c.theta1, 1.0, 1.0, c.alpha, c.kase);
      writeJson(dir, std::string("phiminus_") + c.name + ".json",
                io::to_json(minusMatrix(c.theta0, c.theta1, c.alpha)));
      writeJson(dir, std::string("delta_") + c.name + ".json",
                io::to_json(Delta.symbol()));
    }
  }

  // --- malformed input: a Blaschke zero on the unit circle (parsers must
  // reject it).
  writeJson(dir, "badzero.json",
            json::parse(R"({"n":1,"entries":[[[
              {"coeff":[1,0],"kind":"analytic","zeros":[[1.0,0]]}]]]})"));

  return 0;
}
