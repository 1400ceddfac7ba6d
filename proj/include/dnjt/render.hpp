/** @file render.hpp
 *  ASCII and SVG pictures of path tuples and HPairs. Height runs upward,
 *  doubled position runs to the right. Output depends only on the input.
 */
#pragma once

#include "dnjt/regions.hpp"

namespace dnjt {

enum class RenderFormat { ascii, svg };

std::string render_paths(const PathTuple& t, int n, RenderFormat f);
/// Lower/upper profiles, their duals (dotted in SVG) and the given regions shaded.
std::string render_hpair(const HPair& h, const std::vector<Region>& shaded, RenderFormat f);

}  // namespace dnjt
