#include "hardy/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hardy::io {

namespace {

const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void rejectUnknownKeys(const json& j, std::initializer_list<const char*> known,
                       const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || (it.key() == k);
    if (!ok) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
  }
}

double numberFrom(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

void checkZeroInDisk(cplx z, const std::string& where) {
  const double r = std::abs(z);
  if (!(r < 1.0 - defaults::kZeroMargin)) {
    std::ostringstream msg;
    msg << where << ": zero with |z| = " << r
        << " must lie strictly inside the unit disk";
    throw InvalidZero(msg.str());
  }
}

std::vector<cplx> zerosFrom(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of zeros");
  std::vector<cplx> zeros;
  zeros.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const cplx z = cplx_from_json(j[k], at);
    checkZeroInDisk(z, at);
    zeros.push_back(z);
  }
  return zeros;
}

SymbolTerm termFrom(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a term object");
  rejectUnknownKeys(j, {"coeff", "kind", "constant", "zeros"}, where);

  SymbolTerm t;
  const json* coeff = find(j, "coeff");
  if (!coeff) throw ParseError(where + ": missing \"coeff\"");
  t.coeff = cplx_from_json(*coeff, where + ".coeff");

  const json* kind = find(j, "kind");
  if (!kind || !kind->is_string())
    throw ParseError(where +
                     ": missing \"kind\" (\"analytic\" or \"coanalytic\")");
  const std::string ks = kind->get<std::string>();
  if (ks == "analytic") {
    t.kind = TermKind::Analytic;
  } else if (ks == "coanalytic") {
    t.kind = TermKind::Coanalytic;
  } else {
    throw ParseError(where + ".kind: expected \"analytic\" or \"coanalytic\"," +
                     " got \"" + ks + "\"");
  }

  cplx constant(1.0);
  if (const json* c = find(j, "constant"))
    constant = cplx_from_json(*c, where + ".constant");
  std::vector<cplx> zeros;
  if (const json* zs = find(j, "zeros"))
    zeros = zerosFrom(*zs, where + ".zeros");
  t.inner = FiniteBlaschkeProduct(constant, std::move(zeros));
  return t;
}

json termToJson(const SymbolTerm& t) {
  json j;
  j["coeff"] = to_json(t.coeff);
  j["kind"] = (t.kind == TermKind::Analytic) ? "analytic" : "coanalytic";
  if (t.inner.constant() != cplx(1.0))
    j["constant"] = to_json(t.inner.constant());
  json zs = json::array();
  for (cplx z : t.inner.zeros()) zs.push_back(to_json(z));
  j["zeros"] = std::move(zs);
  return j;
}

}  // namespace

// + 0.0 canonicalizes IEEE negative zero so reports never print -0.0.
json to_json(cplx z) {
  return json::array({z.real() + 0.0, z.imag() + 0.0});
}

cplx cplx_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected [re, im]");
  return {numberFrom(j[0], where), numberFrom(j[1], where)};
}

json to_json(const FiniteBlaschkeProduct& B) {
  json j;
  j["constant"] = to_json(B.constant());
  json zs = json::array();
  for (cplx z : B.zeros()) zs.push_back(to_json(z));
  j["zeros"] = std::move(zs);
  return j;
}

FiniteBlaschkeProduct blaschke_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("Blaschke product: expected an object");
  rejectUnknownKeys(j, {"constant", "zeros"}, "Blaschke product");
  cplx constant(1.0);
  if (const json* c = find(j, "constant"))
    constant = cplx_from_json(*c, "constant");
  std::vector<cplx> zeros;
  if (const json* zs = find(j, "zeros")) zeros = zerosFrom(*zs, "zeros");
  return FiniteBlaschkeProduct(constant, std::move(zeros));
}

json to_json(const ScalarSymbol& s) {
  json j = json::array();
  for (const SymbolTerm& t : s.terms()) j.push_back(termToJson(t));
  return j;
}

ScalarSymbol scalar_from_json(const json& j, const std::string& where) {
  if (!j.is_array())
    throw ParseError(where + ": expected an array of terms");
  std::vector<SymbolTerm> terms;
  terms.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    terms.push_back(termFrom(j[k], where + "[" + std::to_string(k) + "]"));
  return ScalarSymbol(std::move(terms));
}

json to_json(const MatrixSymbol& Phi) {
  json j;
  j["n"] = Phi.n();
  json rows = json::array();
  for (int i = 0; i < Phi.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < Phi.n(); ++k) row.push_back(to_json(Phi.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

MatrixSymbol matrix_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("matrix symbol: expected an object with \"n\" and "
                     "\"entries\"");
  rejectUnknownKeys(j, {"n", "entries"}, "matrix symbol");
  const json* nj = find(j, "n");
  if (!nj || !nj->is_number_integer() || nj->get<int>() < 1)
    throw ParseError("matrix symbol: \"n\" must be a positive integer");
  const int n = nj->get<int>();
  const json* entries = find(j, "entries");
  if (!entries || !entries->is_array() ||
      static_cast<int>(entries->size()) != n)
    throw ParseError("matrix symbol: \"entries\" must be an array of " +
                     std::to_string(n) + " rows");
  MatrixSymbol Phi(n);
  for (int i = 0; i < n; ++i) {
    const json& row = (*entries)[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("entries[" + std::to_string(i) + "]: expected " +
                       std::to_string(n) + " columns");
    for (int k = 0; k < n; ++k) {
      const std::string where =
          "entries[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      Phi.at(i, k) = scalar_from_json(row[k], where);
    }
  }
  return Phi;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    default: return "Inconclusive";
  }
}

std::string completion_status_name(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Normal: return "Normal";
    case CompletionStatus::QuasinormalAfterShift: return "QuasinormalAfterShift";
    case CompletionStatus::ExceptionalCaseUnresolved:
      return "ExceptionalCaseUnresolved";
    default: return "NotSubnormal";
  }
}

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Family1: return "family1";
    case FamilyTag::Family2: return "family2";
    default: return "quasinormal";
  }
}

FamilyTag family_tag_from_name(const std::string& name) {
  if (name == "family1") return FamilyTag::Family1;
  if (name == "family2") return FamilyTag::Family2;
  if (name == "quasinormal") return FamilyTag::QuasinormalFamily;
  throw ParseError("family tag: expected \"family1\", \"family2\" or "
                   "\"quasinormal\", got \"" + name + "\"");
}

json to_json(const Verdict& v) {
  json j;
  j["status"] = status_name(v.status);
  j["defect"] = v.defect;
  j["atN"] = v.atN;
  if (v.witness) {
    json w;
    w["value"] = v.witness->value;
    w["description"] = v.witness->description;
    json vec = json::array();
    for (Eigen::Index i = 0; i < v.witness->vector.size(); ++i)
      vec.push_back(to_json(v.witness->vector(i)));
    w["vector"] = std::move(vec);
    j["witness"] = std::move(w);
  }
  return j;
}

json to_json(const CompletionFamily& f) {
  json j;
  j["tag"] = family_tag_name(f.tag);
  j["alpha"] = to_json(f.alpha);
  j["mu"] = to_json(f.mu);
  j["thetaAngle"] = f.thetaAngle;
  j["omegaAngle"] = f.omegaAngle;
  j["zeta"] = to_json(f.zeta);
  return j;
}

CompletionFamily family_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("completion family: expected an object");
  rejectUnknownKeys(j, {"tag", "alpha", "mu", "thetaAngle", "omegaAngle",
                        "zeta"},
                    "completion family");
  const json* tag = find(j, "tag");
  if (!tag || !tag->is_string())
    throw ParseError("completion family: missing \"tag\"");
  CompletionFamily f;
  f.tag = family_tag_from_name(tag->get<std::string>());
  const json* alpha = find(j, "alpha");
  if (!alpha) throw ParseError("completion family: missing \"alpha\"");
  f.alpha = cplx_from_json(*alpha, "alpha");
  checkZeroInDisk(f.alpha, "alpha");
  if (const json* mu = find(j, "mu")) f.mu = cplx_from_json(*mu, "mu");
  if (const json* th = find(j, "thetaAngle"))
    f.thetaAngle = numberFrom(*th, "thetaAngle");
  if (const json* om = find(j, "omegaAngle"))
    f.omegaAngle = numberFrom(*om, "omegaAngle");
  if (const json* ze = find(j, "zeta")) f.zeta = cplx_from_json(*ze, "zeta");
  return f;
}

json to_json(const CompletionVerdict& v) {
  json j;
  j["status"] = completion_status_name(v.status);
  if (v.beta) j["beta"] = to_json(*v.beta);
  if (v.matchedFamily) j["matchedFamily"] = to_json(*v.matchedFamily);
  j["rationalRefinement"] = v.rationalRefinement;
  j["diagnostics"] = v.diagnostics;
  return j;
}

json to_json(const CompletionReport& r) {
  json j;
  json checks = json::array();
  for (const CompletionCheck& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["required"] = c.required;
    cj["expectedFails"] = c.expectedFails;
    cj["verdict"] = to_json(c.verdict);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["consistent"] = r.consistent;
  j["notes"] = r.notes;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

template <class Fn>
auto withPathContext(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidZero& e) {
    throw InvalidZero(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

MatrixSymbol load_matrix(const std::string& path) {
  const json j = read_json_file(path);
  return withPathContext(path, [&] { return matrix_from_json(j); });
}

ScalarSymbol load_scalar(const std::string& path) {
  const json j = read_json_file(path);
  return withPathContext(path, [&]() -> ScalarSymbol {
    if (j.is_array()) return scalar_from_json(j, "symbol");
    MatrixSymbol Phi = matrix_from_json(j);
    if (Phi.n() != 1)
      throw ParseError("expected a scalar symbol (term list or 1 x 1 "
                       "matrix), got n = " + std::to_string(Phi.n()));
    return Phi.at(0, 0);
  });
}

FiniteBlaschkeProduct load_blaschke(const std::string& path) {
  const json j = read_json_file(path);
  return withPathContext(path, [&] { return blaschke_from_json(j); });
}

}  // namespace hardy::io
