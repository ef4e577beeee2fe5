#pragma once

#include <string>
#include <vector>

#include "farey/modulus.hpp"
#include "farey/path.hpp"
#include "farey/rational.hpp"

namespace farey {

// Upper-half-plane picture of a graph window: edges drawn as semicircular
// geodesics over the real axis, edges to infinity as vertical segments,
// optional highlighted paths on top.  Output is byte-deterministic: all
// coordinates come from exact arithmetic rounded to fixed hundredths.
struct PlotRequest {
    Modulus modulus;
    Rational xmin, xmax;
    long qmax;
    std::vector<PathTheta> highlights;
    long px_per_unit = 600;
};

std::string render_svg(const PlotRequest& req);

} // namespace farey
