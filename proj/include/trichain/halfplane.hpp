#pragma once

// Primitives of the upper half-plane model: points, PSL(2,R) isometries,
// elliptic classification, oriented ray angles and signed triangle areas.

#include <array>
#include <complex>

#include "trichain/errors.hpp"

namespace trichain {

// Tolerances shared across the library.
inline constexpr double kEllipticTol = 1e-9;    // trace margin for classification
inline constexpr double kDegenerateTol = 1e-9;  // hyperbolic distance below which points coincide
inline constexpr double kDetTol = 1e-12;        // allowed determinant drift before renormalizing

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Reduce an angle to the representative in [0, 2*pi).
double wrap_angle(double a);

// Reduce an angle difference to the representative in (-pi, pi].
double wrap_signed(double a);

// A point x + iy of the upper half-plane, y > 0.
struct PointH {
    double x = 0.0;
    double y = 1.0;

    PointH() = default;
    PointH(double x_, double y_);

    std::complex<double> as_complex() const { return {x, y}; }
};

// Hyperbolic distance between two points.
double distance(const PointH& p, const PointH& q);

// An element of PSL(2,R), stored as a determinant-one matrix [[a,b],[c,d]]
// with canonical sign: the first nonzero entry of (a,b,c,d) is positive.
// Matrices are only defined up to an overall sign, so the canonical
// representative makes equality testing and serialization deterministic.
class Isometry {
public:
    Isometry() : a_(1), b_(0), c_(0), d_(1) {}

    // Normalizes the determinant to one and fixes the canonical sign.
    // Throws DomainError if the determinant is not positive or not finite.
    Isometry(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double trace() const { return a_ + d_; }

    Isometry inverse() const { return Isometry(d_, -b_, -c_, a_); }

    std::array<double, 4> entries() const { return {a_, b_, c_, d_}; }

private:
    double a_, b_, c_, d_;
};

Isometry identity();

// Matrix product, re-canonicalized.
Isometry compose(const Isometry& g, const Isometry& h);
inline Isometry operator*(const Isometry& g, const Isometry& h) { return compose(g, h); }

// Moebius action (az+b)/(cz+d). Throws NumericOverflowError if |cz+d| underflows.
PointH apply(const Isometry& g, const PointH& z);

// Distance between projective classes: min over the sign ambiguity of the
// max-norm entry difference.
double psl_distance(const Isometry& g, const Isometry& h);

enum class IsometryClass { Elliptic, Parabolic, Hyperbolic, Identity };

// Classification by trace, with tolerance kEllipticTol.
IsometryClass classify(const Isometry& g);

// Unique fixed point of an elliptic element:
//   (a-d)/(2c) + i*sqrt(4-(a+d)^2)/(2|c|).
// Throws NotEllipticError otherwise.
PointH fixed_point(const Isometry& g);

// Anticlockwise angle of rotation in (0, 2*pi) of an elliptic element, read
// off as the complex argument of the derivative at the fixed point.
// Throws NotEllipticError otherwise.
double rotation_angle(const Isometry& g);

// The elliptic element rotating anticlockwise by `angle` in (0, 2*pi) about z.
// Throws DomainError if the angle is outside (0, 2*pi).
Isometry rotation(double angle, const PointH& z);

// The (unique) upper-triangular isometry sending i to p; it maps vertical
// geodesics to vertical geodesics.
Isometry vertical_translation(const PointH& p);

// Oriented angle in [0, 2*pi), measured anticlockwise, between the upward
// vertical geodesic ray at `base` and the geodesic ray from `base` through
// `toward`. Throws DegeneratePointError if the two points coincide.
double ray_direction(const PointH& base, const PointH& toward);

// Oriented angle in [0, 2*pi) at `base` from the ray toward `toward1` to the
// ray toward `toward2`, i.e. ray_direction(base, toward2) - ray_direction(base, toward1).
double oriented_angle(const PointH& base, const PointH& toward1, const PointH& toward2);

// An oriented geodesic triangle; coincident vertices are allowed.
struct Triangle {
    PointH v1, v2, v3;
};

// Signed hyperbolic area. Magnitude is the angle defect pi - (sum of interior
// angles); the sign is positive for clockwise vertex order. Triangles with two
// vertices closer than kDegenerateTol have area zero.
double signed_area(const Triangle& t);

// Point at hyperbolic distance `dist` from `base` along the ray with oriented
// direction `direction` (same convention as ray_direction).
PointH point_at(const PointH& base, double direction, double dist);

}  // namespace trichain
