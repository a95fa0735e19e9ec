#pragma once

#include <cstdint>
#include <string>

#include "tpa/presentation.hpp"

namespace tpa {

/// Parses
///   quiver <name> { vertices: v1 v2 ...; arrows: a: v1 -> v2; ...; }
///   relations { <coeff>*<path> (+|-) ... ; ... }
/// where a path "b*a" means a, then b. The relations block is optional and
/// '#' starts a comment. Errors carry line and column.
AlgebraPresentation parse_presentation(const std::string& text, std::uint64_t field = 0);

std::string render_presentation(const AlgebraPresentation& p);

}  // namespace tpa
