#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <cmath>

#include "trichain/halfplane.hpp"

namespace trichain::testing {

// Signed hyperbolic area through the boundary integral of dx/y (Green's
// theorem applied to the area form dx dy / y^2). Along a geodesic semicircle
// x = m + r cos(phi), y = r sin(phi) the integrand is exactly -dphi, and along
// vertical geodesics it vanishes, so the oracle is closed form. Anticlockwise
// boundary orientation gives the positive integral; the library counts
// clockwise positive, hence the leading sign flip.
inline double oracle_signed_area(const Triangle& t) {
    auto edge = [](const PointH& p, const PointH& q) {
        if (std::abs(p.x - q.x) < 1e-14) return 0.0;
        const double m =
            0.5 * (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (q.x - p.x);
        const double phi_p = std::atan2(p.y, p.x - m);
        const double phi_q = std::atan2(q.y, q.x - m);
        return -(phi_q - phi_p);
    };
    return -(edge(t.v1, t.v2) + edge(t.v2, t.v3) + edge(t.v3, t.v1));
}

// ln 2 = integral of dy/y from 1 to 2, the distance between i and 2i.
inline constexpr double kDistI2I = 0.69314718055994529;

}  // namespace trichain::testing
