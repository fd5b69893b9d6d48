#include "trichain/repspace.hpp"

#include <cmath>
#include <limits>

#include "trichain/triangle_solver.hpp"

namespace trichain {

AngleVector::AngleVector(std::vector<double> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 3) throw DomainError("angle vector needs at least 3 entries");
    double sum = 0.0;
    for (double a : alpha_) {
        if (!(a > 0.0) || !(a < kTwoPi)) {
            throw DomainError("boundary angles must lie strictly in (0, 2*pi)");
        }
        sum += a;
    }
    lambda_ = sum - kTwoPi * (alpha_.size() - 1);
    if (!(lambda_ > 0.0)) {
        throw InfeasibleAnglesError("angle sum does not exceed 2*pi*(n-1)");
    }
}

PointConfiguration fixed_points(const DTRepresentation& rep) {
    const int n = rep.n();
    PointConfiguration cfg;
    cfg.C.reserve(n);
    for (const Isometry& g : rep.gens) cfg.C.push_back(fixed_point(g));
    const PantsCurves pc = make_pants_curves(n);
    cfg.B.reserve(n - 3);
    for (const Word& w : pc.b) cfg.B.push_back(fixed_point(evaluate(w, rep.gens)));
    return cfg;
}

double beta(const DTRepresentation& rep, int i) {
    const int n = rep.n();
    if (i < 0 || i > n - 2) throw DomainError("beta index out of range");
    if (i == 0) return kTwoPi - rep.alpha[0];
    if (i == n - 2) return rep.alpha[n - 1];
    const PantsCurves pc = make_pants_curves(n);
    return rotation_angle(evaluate(pc.b[i - 1], rep.gens));
}

std::vector<double> beta_all(const DTRepresentation& rep) {
    const int n = rep.n();
    std::vector<double> out(n - 1);
    out[0] = kTwoPi - rep.alpha[0];
    out[n - 2] = rep.alpha[n - 1];
    const PantsCurves pc = make_pants_curves(n);
    for (int i = 1; i <= n - 3; ++i) out[i] = rotation_angle(evaluate(pc.b[i - 1], rep.gens));
    return out;
}

double volume_cocycle(const std::vector<Isometry>& gens, const PointH& z) {
    const int n = static_cast<int>(gens.size());
    double vol = 0.0;
    // Fundamental 2-chain terms (c_1, c_2), (c_1 c_2, c_3), ...; the last term
    // (c_1..c_{n-1}, c_n) is a degenerate triangle since the relator closes.
    Isometry prefix = gens[0];
    PointH prev = apply(prefix, z);
    for (int i = 2; i <= n - 1; ++i) {
        prefix = prefix * gens[i - 1];
        const PointH next = apply(prefix, z);
        vol += signed_area(Triangle{z, prev, next});
        prev = next;
    }
    for (int i = 0; i < n; ++i) {
        vol -= signed_area(Triangle{fixed_point(gens[i]), z, apply(gens[i], z)});
    }
    return vol;
}

double volume_cocycle(const DTRepresentation& rep, const PointH& z) {
    return volume_cocycle(rep.gens, z);
}

double volume_chain(const DTRepresentation& rep) {
    const int n = rep.n();
    const PointConfiguration cfg = fixed_points(rep);
    auto b_full = [&](int i) -> const PointH& {
        if (i == 0) return cfg.C[0];
        if (i == n - 2) return cfg.C[n - 1];
        return cfg.B[i - 1];
    };
    double sum = 0.0;
    for (int i = 0; i <= n - 3; ++i) {
        sum += signed_area(Triangle{b_full(i), cfg.C[i + 1], b_full(i + 1)});
    }
    return -2.0 * sum;
}

double theta_bar(const Isometry& g) {
    switch (classify(g)) {
        case IsometryClass::Elliptic:
            return rotation_angle(g);
        case IsometryClass::Hyperbolic:
            return 0.0;
        case IsometryClass::Identity:
            return kTwoPi;
        case IsometryClass::Parabolic: {
            // Orient the representative so the trace is +2; the sign of c then
            // separates the two parabolic classes (c < 0 is the limit of
            // rotations with angle -> 0, c > 0 the limit with angle -> 2*pi).
            const double flip = g.trace() < 0.0 ? -1.0 : 1.0;
            const double c = flip * g.c();
            const double b = flip * g.b();
            if (c < 0.0 || (c == 0.0 && b > 0.0)) return 0.0;
            return kTwoPi;
        }
    }
    return 0.0;
}

EulerData euler_class(const std::vector<Isometry>& gens) {
    EulerData out;
    out.volume = volume_cocycle(gens, PointH(0.0, 1.0));
    double theta_sum = 0.0;
    for (const Isometry& g : gens) theta_sum += theta_bar(g);
    const double k_real = (out.volume + theta_sum) / kTwoPi;
    out.euler_class = static_cast<int>(std::lround(k_real));
    if (std::abs(k_real - out.euler_class) > 1e-5) {
        throw NonIntegerEulerError("Euler class residual too large");
    }
    return out;
}

EulerData euler_class(const DTRepresentation& rep) { return euler_class(rep.gens); }

DTRepresentation conjugate(const DTRepresentation& rep, const Isometry& h) {
    DTRepresentation out{rep.alpha, rep.gens};
    const Isometry hinv = h.inverse();
    for (Isometry& g : out.gens) g = h * g * hinv;
    return out;
}

RepDiagnostics validate(const DTRepresentation& rep) {
    RepDiagnostics d;
    const int n = rep.n();
    if (static_cast<int>(rep.gens.size()) != n) {
        d.message = "generator count does not match angle count";
        return d;
    }
    Isometry prod;
    for (const Isometry& g : rep.gens) prod = prod * g;
    d.relator_residual = psl_distance(prod, identity());
    d.angle_residuals.assign(n, std::numeric_limits<double>::infinity());
    bool all_elliptic = true;
    for (int i = 0; i < n; ++i) {
        if (classify(rep.gens[i]) == IsometryClass::Elliptic) {
            d.angle_residuals[i] = std::abs(rotation_angle(rep.gens[i]) - rep.alpha[i]);
        } else {
            all_elliptic = false;
        }
    }
    if (!all_elliptic) {
        d.message = "a generator image is not elliptic";
        d.volume_residual = std::numeric_limits<double>::infinity();
        return d;
    }
    d.volume_residual =
        std::abs(volume_cocycle(rep, PointH(0.0, 1.0)) + rep.alpha.lambda());
    bool ok = d.relator_residual <= kRelatorTol && d.volume_residual <= kVolumeTol;
    for (double r : d.angle_residuals) ok = ok && r <= kGenAngleTol;
    d.pass = ok;
    return d;
}

namespace {

double interior_angle_at(const PointH& v, const PointH& p, const PointH& q) {
    const double d = wrap_angle(ray_direction(v, p) - ray_direction(v, q));
    return std::min(d, kTwoPi - d);
}

}  // namespace

TripleConfig classify_triple(const std::array<double, 3>& alpha,
                             const std::array<Isometry, 3>& gens) {
    for (const Isometry& g : gens) {
        if (classify(g) != IsometryClass::Elliptic) {
            throw DomainError("classify_triple requires elliptic isometries");
        }
    }
    if (psl_distance(gens[0] * gens[1] * gens[2], identity()) > 1e-9) {
        throw DomainError("classify_triple requires product equal to the identity");
    }
    const std::array<PointH, 3> fp = {fixed_point(gens[0]), fixed_point(gens[1]),
                                      fixed_point(gens[2])};
    const double d01 = distance(fp[0], fp[1]);
    const double d12 = distance(fp[1], fp[2]);
    const double d20 = distance(fp[2], fp[0]);
    const double sum = alpha[0] + alpha[1] + alpha[2];
    if (d01 <= kDegenerateTol && d12 <= kDegenerateTol && d20 <= kDegenerateTol) {
        if (std::abs(sum - kTwoPi) > 1e-8 && std::abs(sum - 2.0 * kTwoPi) > 1e-8) {
            throw InconsistentConfigurationError(
                "coincident fixed points but angle sum is not a multiple of 2*pi");
        }
        return TripleConfig::Coincident;
    }
    if (d01 <= kDegenerateTol || d12 <= kDegenerateTol || d20 <= kDegenerateTol) {
        throw InconsistentConfigurationError("exactly two fixed points coincide");
    }
    const double area = signed_area(Triangle{fp[0], fp[1], fp[2]});
    const bool clockwise = area > 0.0;
    const std::array<double, 3> measured = {interior_angle_at(fp[0], fp[1], fp[2]),
                                            interior_angle_at(fp[1], fp[2], fp[0]),
                                            interior_angle_at(fp[2], fp[0], fp[1])};
    for (int i = 0; i < 3; ++i) {
        const double expected = clockwise ? kPi - 0.5 * alpha[i] : 0.5 * alpha[i];
        if (std::abs(measured[i] - expected) > 1e-8) {
            throw InconsistentConfigurationError("interior angles do not match the angle data");
        }
    }
    return clockwise ? TripleConfig::ClockwiseTriangle : TripleConfig::AnticlockwiseTriangle;
}

EllipticTriple construct_triple(const std::array<double, 3>& alpha) {
    for (double a : alpha) {
        if (!(a > 0.0) || !(a < kTwoPi)) {
            throw DomainError("boundary angles must lie strictly in (0, 2*pi)");
        }
    }
    const double sum = alpha[0] + alpha[1] + alpha[2];
    EllipticTriple out;
    out.alpha = alpha;
    const double band_tol = 1e-12;
    if (std::abs(sum - kTwoPi) <= band_tol || std::abs(sum - 2.0 * kTwoPi) <= band_tol) {
        const PointH z(0.0, 1.0);
        out.fixed = {z, z, z};
    } else if (sum > 2.0 * kTwoPi) {
        const Triangle t =
            solve_triangle(0.5 * (sum - 2.0 * kTwoPi), kPi - 0.5 * alpha[0], kPi - 0.5 * alpha[1]);
        out.fixed = {t.v1, t.v2, t.v3};
    } else if (sum < kTwoPi) {
        // Mirror image of the clockwise solution: x -> -x reverses orientation.
        const Triangle t =
            solve_triangle(0.5 * (kTwoPi - sum), 0.5 * alpha[0], 0.5 * alpha[1]);
        out.fixed = {PointH(-t.v1.x, t.v1.y), PointH(-t.v2.x, t.v2.y), PointH(-t.v3.x, t.v3.y)};
    } else {
        throw EmptyVarietyError("no representation exists for angle sums in (2*pi, 4*pi)");
    }
    for (int i = 0; i < 3; ++i) out.gens[i] = rotation(alpha[i], out.fixed[i]);
    return out;
}

}  // namespace trichain
