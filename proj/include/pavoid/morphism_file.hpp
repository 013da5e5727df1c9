#pragma once

#include "pavoid/morphisms.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace pavoid {

// Text format, one item per line:
//
//   # comment (from '#' to end of line)
//   alphabet: 012        mandatory, fixes letter order
//   target: 012          optional, defaults to the alphabet
//   0 -> 0121021201210   one rule per source letter
//
// LF and CRLF line endings are accepted and whitespace around tokens is
// ignored. The alphabet value is either a run of letters ("012") or
// whitespace/comma separated single-character symbols ("0 1 2").
Morphism parse_morphism(std::string_view text);
Morphism read_morphism_file(const std::filesystem::path& path);

// Inverse of parse_morphism; the `target:` line is only written when it
// differs from the alphabet.
std::string format_morphism(const Morphism& m);

}  // namespace pavoid
