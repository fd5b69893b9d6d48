#include "trichain/halfplane.hpp"

#include <algorithm>
#include <cmath>

namespace trichain {

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // guards fmod results that round up to 2*pi
    return r;
}

double wrap_signed(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r > kPi) r -= kTwoPi;
    if (r <= -kPi) r += kTwoPi;
    return r;
}

PointH::PointH(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 1e-15) || !std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("point is not strictly inside the upper half-plane");
    }
}

double distance(const PointH& p, const PointH& q) {
    // cosh(d) = 1 + rho^2/(2 y_p y_q); evaluated as 2*asinh(sqrt(rho^2/(4 y_p y_q)))
    // to stay accurate for nearby points, where acosh(1 + u) loses all precision.
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double rho2 = dx * dx + dy * dy;
    return 2.0 * std::asinh(std::sqrt(rho2 / (4.0 * p.y * q.y)));
}

Isometry::Isometry(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    const double det = a_ * d_ - b_ * c_;
    if (!std::isfinite(det) || det <= 0.0) {
        throw DomainError("matrix does not represent an orientation-preserving isometry");
    }
    if (std::abs(det - 1.0) > kDetTol) {
        const double s = 1.0 / std::sqrt(det);
        a_ *= s;
        b_ *= s;
        c_ *= s;
        d_ *= s;
    }
    // canonical sign: first nonzero of (a, b, c, d) positive
    for (double e : {a_, b_, c_, d_}) {
        if (e != 0.0) {
            if (e < 0.0) {
                a_ = -a_;
                b_ = -b_;
                c_ = -c_;
                d_ = -d_;
            }
            break;
        }
    }
}

Isometry identity() { return Isometry(); }

Isometry compose(const Isometry& g, const Isometry& h) {
    return Isometry(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                    g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
}

PointH apply(const Isometry& g, const PointH& z) {
    const std::complex<double> w = z.as_complex();
    const std::complex<double> den = g.c() * w + g.d();
    if (std::abs(den) < 1e-300) {
        throw NumericOverflowError("Moebius denominator underflow");
    }
    const std::complex<double> r = (g.a() * w + g.b()) / den;
    // Im((aw+b)/(cw+d)) = y/|cw+d|^2, positive in exact arithmetic.
    return PointH(r.real(), std::max(r.imag(), 1e-300));
}

double psl_distance(const Isometry& g, const Isometry& h) {
    double plus = 0.0, minus = 0.0;
    const auto ge = g.entries();
    const auto he = h.entries();
    for (int k = 0; k < 4; ++k) {
        plus = std::max(plus, std::abs(ge[k] - he[k]));
        minus = std::max(minus, std::abs(ge[k] + he[k]));
    }
    return std::min(plus, minus);
}

IsometryClass classify(const Isometry& g) {
    const double t = std::abs(g.trace());
    if (t < 2.0 - kEllipticTol) return IsometryClass::Elliptic;
    if (psl_distance(g, identity()) < kEllipticTol) return IsometryClass::Identity;
    if (t <= 2.0 + kEllipticTol) return IsometryClass::Parabolic;
    return IsometryClass::Hyperbolic;
}

namespace {

// 4 - trace^2, evaluated through the determinant identity
//   4 - (a+d)^2 = -(a-d)^2 - 4bc,
// which has no cancellation for nearly parabolic elements, where the direct
// form loses half the significant digits.
double four_minus_trace_squared(const Isometry& g) {
    const double ad = g.a() - g.d();
    return std::max(-ad * ad - 4.0 * g.b() * g.c(), 0.0);
}

}  // namespace

PointH fixed_point(const Isometry& g) {
    if (classify(g) != IsometryClass::Elliptic) {
        throw NotEllipticError("fixed_point requires an elliptic isometry");
    }
    // c != 0 for elliptic elements (otherwise trace^2 >= 4).
    return PointH((g.a() - g.d()) / (2.0 * g.c()),
                  std::sqrt(four_minus_trace_squared(g)) / (2.0 * std::abs(g.c())));
}

double rotation_angle(const Isometry& g) {
    if (classify(g) != IsometryClass::Elliptic) {
        throw NotEllipticError("rotation_angle requires an elliptic isometry");
    }
    // arg of the derivative at the fixed point,
    //   ((a+d)^2/2 - 1) - i*(a+d)*sgn(c)*sqrt(4-(a+d)^2)/2,
    // which avoids the branch cases of the arctan form.
    const double tr = g.trace();
    const double sgn_c = g.c() > 0.0 ? 1.0 : -1.0;
    const double disc = four_minus_trace_squared(g);
    const double re = 1.0 - 0.5 * disc;  // trace^2/2 - 1, through the stable discriminant
    const double im = -tr * sgn_c * 0.5 * std::sqrt(disc);
    double angle = std::atan2(im, re);
    if (angle <= 0.0) angle += kTwoPi;  // the value never lies on the positive real axis
    return angle;
}

Isometry rotation(double angle, const PointH& z) {
    if (!(angle > 0.0) || !(angle < kTwoPi)) {
        throw DomainError("rotation angle must lie in (0, 2*pi)");
    }
    const double co = std::cos(0.5 * angle);
    const double si = std::sin(0.5 * angle);
    const double x = z.x, y = z.y;
    return Isometry(co - x / y * si, (x * x / y + y) * si, -si / y, co + x / y * si);
}

Isometry vertical_translation(const PointH& p) {
    return Isometry(p.y, p.x, 0.0, 1.0);
}

double ray_direction(const PointH& base, const PointH& toward) {
    if (distance(base, toward) <= kDegenerateTol) {
        throw DegeneratePointError("ray_direction requires distinct points");
    }
    // Transporting base to i turns the direction into
    //   arg((x-x_p)^2 + y^2 - y_p^2 - 2i*y_p*(x-x_p))  mod 2*pi.
    const double dx = toward.x - base.x;
    const double re = dx * dx + toward.y * toward.y - base.y * base.y;
    const double im = -2.0 * base.y * dx;
    double angle = std::atan2(im, re);
    if (angle < 0.0) angle += kTwoPi;
    return wrap_angle(angle);
}

double oriented_angle(const PointH& base, const PointH& toward1, const PointH& toward2) {
    return wrap_angle(ray_direction(base, toward2) - ray_direction(base, toward1));
}

double signed_area(const Triangle& t) {
    if (distance(t.v1, t.v2) <= kDegenerateTol || distance(t.v2, t.v3) <= kDegenerateTol ||
        distance(t.v3, t.v1) <= kDegenerateTol) {
        return 0.0;
    }
    // At each vertex, the oriented angle from the ray toward the previous
    // vertex to the ray toward the next one is +interior for clockwise order
    // and -interior for anticlockwise order, so the signed sum s determines
    // both the orientation and the defect: area = sgn(s) * (pi - |s|). This
    // stays exact for slim triangles, where the Euclidean orientation of the
    // vertices can disagree with that of the geodesic boundary.
    const double s = wrap_signed(ray_direction(t.v1, t.v2) - ray_direction(t.v1, t.v3)) +
                     wrap_signed(ray_direction(t.v2, t.v3) - ray_direction(t.v2, t.v1)) +
                     wrap_signed(ray_direction(t.v3, t.v1) - ray_direction(t.v3, t.v2));
    return s >= 0.0 ? kPi - s : -(kPi + s);
}

PointH point_at(const PointH& base, double direction, double dist) {
    PointH tip(0.0, std::exp(dist));
    const double dir = wrap_angle(direction);
    if (dir != 0.0) {
        tip = apply(rotation(dir, PointH(0.0, 1.0)), tip);
    }
    return apply(vertical_translation(base), tip);
}

}  // namespace trichain
