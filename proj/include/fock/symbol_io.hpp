#pragma once

#include <string>

#include <json.hpp>

#include "fock/symbol.hpp"

namespace fock {

// JSON form of a symbol:
//   {"n": 1, "scale": [re, im], "prefactor": [0], "A": [[[re, im]]],
//    "b": [[re, im]], "c0": [re, im]}
// Complex values may also appear as plain numbers (imaginary part 0).  On
// input, "n" is required; every other field defaults to identity/zero.
nlohmann::json symbol_to_json(const ExponentialSymbol& f);
ExponentialSymbol symbol_from_json(const nlohmann::json& j);

// Parses either inline JSON text or (if `text` starts with '@') the contents
// of the file named after the '@'.  All malformed input surfaces as
// ParseError with a human-readable position.
ExponentialSymbol parse_symbol(const std::string& text);

}  // namespace fock
