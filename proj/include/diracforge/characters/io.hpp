#pragma once

#include "diracforge/characters/character.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace diracforge::characters {

/// Text format: a header line "<label> weight-basis|irreducible-basis", then
/// one "<p/q,...> <multiplicity>" line per weight. Cone series add
/// "polarizer=<coords> offset=<C|none> window=<B>" (and optionally
/// "floor=<F>") to the header. Blank lines and '#' comments are ignored.
std::string formatCharacter(const FormalCharacter& chi);
std::string formatSeries(const ConeSeries& sigma);

/// sourceName is used in ParseError messages ("file:line: field ...").
std::variant<FormalCharacter, ConeSeries> parseCharacterText(std::string_view text, const std::string& sourceName);
std::variant<FormalCharacter, ConeSeries> readCharacterFile(const std::string& path);

FormalCharacter readFormalCharacter(const std::string& path);
ConeSeries readConeSeries(const std::string& path);

/// "1,0,-1/2" -> weight.
Weight parseWeight(std::string_view text);
std::string formatWeight(const Weight& w);

}  // namespace diracforge::characters
