#pragma once

// JSON encodings shared by the CLI and the tests.

#include "json.hpp"
#include "staircase/arquiver.hpp"
#include "staircase/classifier.hpp"
#include "staircase/nilpairs.hpp"
#include "staircase/quadform.hpp"

namespace staircase::json {

using nlohmann::json;

// {"lambda":[...], "rows":[[...],...]}
json encode(const IntVector& v);
IntVector decode_int_vector(const json& j);

// {"decision":..., "witness": IntVector|null, "value": q(witness)|null, "bound":...}
json encode(const FormVerdict& v, const UnitForm& f);

json encode(const ClassificationReport& r);
json encode(const ARQuiver& ar);
json encode(const OrbitQuiver& oq);

// Row-major matrix of rational strings "p/q".
json encode(const RationalMatrix& m);
RationalMatrix decode_matrix(const json& j, std::size_t rows, std::size_t cols);

// {"dims": {"s,t": k, ...}}
json encode(const BigradedSpace& v);
BigradedSpace decode_space(const json& j);

// BigradedSpace plus "phi"/"psi": {"s,t": matrix}
json encode(const GradedPair& p);
GradedPair decode_pair(const json& j);

// {"lambda":..., "rows":..., "matrices": {"a:i,j": matrix, ...}}
json encode(const Representation& m);
Representation decode_representation(const json& j);

// Parses text, rethrowing JSON errors as ParseError.
json parse(const std::string& text);

}  // namespace staircase::json
