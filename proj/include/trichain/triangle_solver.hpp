#pragma once

// Constructing hyperbolic triangles from two interior angles and the area.

#include "trichain/halfplane.hpp"

namespace trichain {

// Clockwise oriented geodesic triangle with prescribed area and interior
// angles angle1 at v1 and angle2 at v2; the third angle is determined by the
// defect relation area = pi - angle1 - angle2 - angle3. Returned in normal
// pose: v1 = i and v2 above it on the vertical geodesic. Area zero yields the
// fully degenerate triangle at i.
//
// Throws InfeasibleTriangleError unless all three angles lie in (0, pi) when
// the area is positive. The construction is closed form (angle-side law of
// cosines), so there is no iteration to diverge.
Triangle solve_triangle(double area, double angle1, double angle2);

}  // namespace trichain
