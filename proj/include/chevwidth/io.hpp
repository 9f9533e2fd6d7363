#pragma once

#include <string>

#include "json.hpp"

#include "chevwidth/factor.hpp"
#include "chevwidth/ktheory.hpp"
#include "chevwidth/tavgen.hpp"

namespace chevwidth::io {

using json = nlohmann::ordered_json;

// Elements are coefficient lists in t, index = exponent:
//   {"ring":"F5[t]","coeffs":[1,0,2]}           1 + 2t^2
//   {"ring":"F5[t,t^-1]","low":-1,"coeffs":[1,1]}  t^-1 + 1
//   {"ring":"F5(t)","num":[1,1],"den":[0,1]}   (1 + t)/t
// Coefficients over F_{p^k} are field codes (base-p digits of the
// polynomial in the generator x). Integers and F_q elements use a single
// coefficient. Readers also accept a bare integer or an expression string.
json to_json(const Elem& e);
Elem elem_from_json(const Ring& ring, const json& j);

/// {"ring":..., "rows":[[entry,...],...]} with entries written as text.
json to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const json& j);
Matrix matrix_from_json(const json& j);

/// [{"root": index, "param": element}, ...]
json to_json(const SteinbergWord& w);
SteinbergWord word_from_json(const RootSystem& system, const Ring& ring, const json& j);

json to_json(const RootSystem& R);
json to_json(const UnitriangularForm& f);
json to_json(const Factorization& f);
json to_json(const Place& v);
json to_json(const K2Class& c);
json to_json(const K2GroupReport& r);
json to_json(const ExactSequenceReport& r);
json to_json(const LiftSweep& s);

/// Deterministic text: two-space indentation and a trailing newline.
std::string dump(const json& j);
json load_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace chevwidth::io
