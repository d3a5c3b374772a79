#ifndef HARDY_JSON_IO_HPP
#define HARDY_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "hardy/classify.hpp"
#include "hardy/completion.hpp"

namespace hardy::io {

// ordered_json keeps insertion order, so identical inputs serialize to
// byte-identical reports.
using json = nlohmann::ordered_json;

json to_json(cplx z);
cplx cplx_from_json(const json& j, const std::string& where);

// {"constant": [re, im], "zeros": [[re, im], ...]}
json to_json(const FiniteBlaschkeProduct& B);
FiniteBlaschkeProduct blaschke_from_json(const json& j);

// A scalar symbol is a list of term objects
// {"coeff": [re, im], "kind": "analytic"|"coanalytic",
//  "constant": [re, im] (optional, default [1, 0]),
//  "zeros": [[re, im], ...] (optional, default [])}.
json to_json(const ScalarSymbol& s);
ScalarSymbol scalar_from_json(const json& j, const std::string& where);

// {"n": k, "entries": [[ [term, ...], ... ], ...]} (row-major, n x n)
json to_json(const MatrixSymbol& Phi);
MatrixSymbol matrix_from_json(const json& j);

json to_json(const Verdict& v);
json to_json(const CompletionFamily& f);
json to_json(const CompletionVerdict& v);
json to_json(const CompletionReport& r);

CompletionFamily family_from_json(const json& j);

std::string status_name(Status s);
std::string completion_status_name(CompletionStatus s);
std::string family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);

// File loaders; errors carry the path and field context in ParseError, and
// InvalidZero for zeros on or outside the unit circle.
json read_json_file(const std::string& path);
MatrixSymbol load_matrix(const std::string& path);
ScalarSymbol load_scalar(const std::string& path);  // n = 1 matrix or term list
FiniteBlaschkeProduct load_blaschke(const std::string& path);

}  // namespace hardy::io

#endif  // HARDY_JSON_IO_HPP
