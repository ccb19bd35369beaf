#pragma once

#include <string>

#include "pluriperiod/fuchsian.hpp"

namespace pluriperiod {

/// SVG rendering of the fundamental octagon in the disk model: the unit
/// circle, the eight geodesic sides (circular arcs orthogonal to the
/// boundary), vertex labels, and side-pairing labels.
std::string octagon_svg(const OctagonGroup& og);

/// Generator matrices as CSV (name,a,b,c,d) at full double precision.
std::string generators_csv(const GroupModel& G);

}  // namespace pluriperiod
