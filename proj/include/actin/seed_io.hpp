#pragma once

#include <string>

#include "actin/engine.hpp"

namespace actin {

/// Parses "[a,b]" (brackets and surrounding whitespace optional) into a centred seed.
/// Throws SeedParseError with the offending character offset.
ExplicitSeed parse_seed(const std::string& text);

/// "[a,b]"
std::string format_seed(const ExplicitSeed& seed);

}  // namespace actin
