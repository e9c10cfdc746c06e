#pragma once

#include "asnp/bounds.hpp"
#include "asnp/function.hpp"
#include "asnp/polygon.hpp"
#include "asnp/zeta.hpp"

#include <json.hpp>

namespace asnp {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& n);
BigInt big_from_json(const Json& j);

// {"width": int, "vertices": [[int, "num/den"]], "slopes": [{"slope": "num/den", "mult": int}]}
Json polygon_to_json(const NewtonPolygon& polygon);
// Reads "vertices" when present, otherwise "slopes".
NewtonPolygon polygon_from_json(const Json& j);

Json slopes_to_json(const SlopeMultiset& slopes);
SlopeMultiset slopes_from_json(const Json& j);

// {"p": int, "g": int, "base_slopes": [...], "branch": [{"label": str, "d": int}]}
Json ramification_to_json(const RamificationData& rd);
RamificationData ramification_from_json(const Json& j);

// {"p": int, "num": [int,...], "den": [int,...]}, coefficients low-to-high.
// Reading also accepts {"p": int, "f": "x^3 + 2*x"}.
Json function_to_json(const PrimeFieldFunction& f);
PrimeFieldFunction function_from_json(const Json& j);

// {"q": int, "genus": int, "coeffs": [int,...]}
Json lpoly_to_json(const LPolynomial& l);
LPolynomial lpoly_from_json(const Json& j);

}  // namespace asnp
