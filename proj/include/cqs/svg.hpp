#pragma once

#include <cqs/presolution.hpp>

#include <optional>
#include <string>

namespace cqs {

enum class SvgWhat { minimal, maximal, presolution, mresolution };

/**
 * Static SVG 1.1 picture of a fan: the cone sigma, the triangle Delta with
 * its primitive interior lattice points, the fan rays, and (for
 * P-/M-resolutions) the roof segments with their heights. Byte-identical
 * output for identical input; all geometry is computed exactly and only
 * formatted at fixed precision.
 *
 * `chain` is required for presolution/mresolution and ignored otherwise.
 */
std::string render_svg(const CyclicQuotient& cq, SvgWhat what,
                       const std::optional<Chain>& chain = std::nullopt);

}  // namespace cqs
