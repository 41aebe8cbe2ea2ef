#pragma once

// JSON encodings shared by the CLI and tests. Every number is a decimal
// string; keys keep insertion order so output is byte-stable.

#include <json.hpp>

#include "nodal/bell.hpp"
#include "nodal/chow.hpp"
#include "nodal/exact.hpp"
#include "nodal/partitions.hpp"
#include "nodal/qseries.hpp"

namespace nodal {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
/// Coefficients ascending in d.
Json to_json(const UniPolyD& p);
/// {"d", "k", "s", "x"}.
Json to_json(const LinearForm& f);
Json to_json(const ChernNumbers& c);
/// Array of "p/q" strings, q^0 first.
Json to_json(const PowerSeries& s);
/// [{"exponents": [...], "coefficient": "p/q"}], in monomial order.
Json to_json(const SparsePoly& p);
/// {"L^2*H^3": "p/q", ...}.
Json to_json(const GradedClass& c);
/// Blocks as arrays of 1-based elements.
Json to_json(const SetPartition& pi);

}  // namespace nodal
