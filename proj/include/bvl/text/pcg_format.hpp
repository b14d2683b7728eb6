#pragma once

#include "bvl/pc/presentation.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace bvl {

// Line-oriented presentation format ('#' starts a comment):
//
//   p 5
//   gens x y z
//   relorder z 7            # optional, overrides p for one generator
//   pow x = 1               # '1' is the empty word
//   comm y x = z^-1         # [y, x] = z^-1, y later than x
//
// Omitted rules are trivial.

/// Throws ParseError (with line number), WeightViolation or UnknownGenerator.
PcPresentation parse_presentation(std::string_view text);
/// Writes nontrivial rules only; parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const PcPresentation& pres);

PcPresentation read_presentation(const std::filesystem::path& path);
void write_presentation(const std::filesystem::path& path, const PcPresentation& pres);

}  // namespace bvl
