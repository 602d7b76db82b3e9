#pragma once

#include <string>

#include "nilmix/grid.hpp"
#include "nilmix/involution.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// Dynkin diagram with one label per node. Short simple roots are drawn in parentheses; double
/// and triple bonds point towards the short root. The extra node of D and E hangs below the chain.
std::string render_dynkin(SimpleType t, const std::vector<std::string>& labels);

std::string render_wdd(const WeightedDynkinDiagram& w);
/// Black nodes as ●, white as ○, arrows listed with 1-based node numbers.
std::string render_satake(const SatakeDiagram& s);
/// Two-row table of d_0(i), d_1(i) for i >= 0 with d_0(0) and d_1(4) in brackets.
std::string render_grid(const MixedGrading& g);

}  // namespace nilmix
