#include "trichain/triangle_solver.hpp"

#include <cmath>

namespace trichain {

namespace {

// Length of the side enclosed by angles u and v, opposite to w, where
// (u, v, w) are the interior angles of a triangle of area S. Evaluates
//   cosh(len) - 1 = 2 sin(S/2) cos((w - u - v)/2) / (sin u sin v)
// which is free of cancellation even for tiny areas, then converts through
// asinh for an accurate short-side length.
double side_between(double u, double v, double w, double area) {
    const double coshm1 =
        2.0 * std::sin(0.5 * area) * std::cos(0.5 * (w - u - v)) / (std::sin(u) * std::sin(v));
    return 2.0 * std::asinh(std::sqrt(std::max(coshm1, 0.0) * 0.5));
}

}  // namespace

Triangle solve_triangle(double area, double angle1, double angle2) {
    if (area <= 0.0) {
        if (area < 0.0) throw InfeasibleTriangleError("triangle area must be nonnegative");
        const PointH at_i(0.0, 1.0);
        return Triangle{at_i, at_i, at_i};
    }
    if (!(area < kPi)) throw InfeasibleTriangleError("triangle area must be below pi");
    const double angle3 = kPi - area - angle1 - angle2;
    for (double a : {angle1, angle2, angle3}) {
        if (!(a > 0.0) || !(a < kPi)) {
            throw InfeasibleTriangleError("interior angles must lie in (0, pi)");
        }
    }
    const double len12 = side_between(angle1, angle2, angle3, area);
    const double len13 = side_between(angle1, angle3, angle2, area);
    const PointH v1(0.0, 1.0);
    const PointH v2(0.0, std::exp(len12));
    // Placing v3 clockwise of the v1->v2 ray makes the vertex order clockwise,
    // hence the signed area positive.
    const PointH v3 = point_at(v1, kTwoPi - angle1, len13);
    return Triangle{v1, v2, v3};
}

}  // namespace trichain
