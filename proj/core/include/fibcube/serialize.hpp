#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fibcube/bitstring.hpp"
#include "fibcube/counting_polynomial.hpp"
#include "fibcube/induced_hypercube.hpp"

namespace fibcube {

// Strings serialize as ASCII '0'/'1' sequences, leftmost character first. In
// CSV contexts the empty string is written as this literal token.
inline constexpr std::string_view kEmptyCsvToken = "(empty)";

std::string csv_token(const BitString& s);

// {"bottom": "...", "support": [i, ...], "top": "..."} with 1-based
// coordinates. The top is redundant but kept for readability; parsing
// verifies it against bottom and support.
nlohmann::json to_json(const InducedHypercube& h);
InducedHypercube cube_from_json(const nlohmann::json& j);

// {"n": n, "coeffs": [c0, c1, ...]}. Coefficients that fit in 64 bits are
// emitted as JSON numbers, larger ones as decimal strings.
nlohmann::json to_json(const CountingPolynomial& poly, int n);
CountingPolynomial poly_from_json(const nlohmann::json& j, int* n_out = nullptr);

}  // namespace fibcube
