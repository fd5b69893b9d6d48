#include "trichain/torus.hpp"

#include <cmath>

namespace trichain {

TorusElement::TorusElement(std::vector<double> t) : theta(std::move(t)) {
    for (double& v : theta) v = wrap_angle(v);
}

std::vector<double> TorusElement::increments() const {
    std::vector<double> inc(theta.size());
    double prev = 0.0;
    for (size_t j = 0; j < theta.size(); ++j) {
        inc[j] = wrap_angle(theta[j] - prev);
        prev = theta[j];
    }
    return inc;
}

namespace {

Isometry rotation_or_identity(double angle, const PointH& z) {
    const double a = wrap_angle(angle);
    if (a == 0.0) return identity();
    return rotation(a, z);
}

// Prefix products P_m = rot(inc_1, B_1) ... rot(inc_m, B_m), m = 0..n-3,
// built from the fixed points of the representation acted on.
std::vector<Isometry> prefix_products(const TorusElement& theta, const std::vector<PointH>& B) {
    const std::vector<double> inc = theta.increments();
    std::vector<Isometry> P(theta.dim() + 1);
    for (int m = 1; m <= theta.dim(); ++m) {
        P[m] = P[m - 1] * rotation_or_identity(inc[m - 1], B[m - 1]);
    }
    return P;
}

}  // namespace

DTRepresentation act_on_rep(const TorusElement& theta, const DTRepresentation& rep) {
    const int n = rep.n();
    if (theta.dim() != n - 3) throw DomainError("torus element dimension must be n-3");
    const PointConfiguration cfg = fixed_points(rep);
    const std::vector<Isometry> P = prefix_products(theta, cfg.B);
    DTRepresentation out{rep.alpha, rep.gens};
    for (int i = 3; i <= n; ++i) {
        const Isometry& g = P[std::min(i - 2, n - 3)];
        out.gens[i - 1] = g * rep.gens[i - 1] * g.inverse();
    }
    return out;
}

TriangleChain act_on_chain(const TorusElement& theta, const TriangleChain& chain) {
    const int n = chain.n();
    if (theta.dim() != n - 3) throw DomainError("torus element dimension must be n-3");
    const std::vector<Isometry> P = prefix_products(theta, chain.B);
    TriangleChain out = chain;
    for (int i = 3; i <= n; ++i) {
        out.C[i - 1] = apply(P[std::min(i - 2, n - 3)], chain.C[i - 1]);
    }
    for (int i = 2; i <= n - 3; ++i) {
        out.B[i - 1] = apply(P[i - 1], chain.B[i - 1]);
    }
    return out;
}

ProjectivePoint act_on_cp(const TorusElement& theta, const ProjectivePoint& p) {
    if (!(p.norm_squared() > 0.0)) {
        throw ZeroVectorError("projective point has no nonzero coordinate");
    }
    if (theta.dim() != p.dim() - 1) throw DomainError("torus element dimension must be n-3");
    ProjectivePoint out = p;
    for (int j = 1; j < p.dim(); ++j) {
        out.z[j] *= std::polar(1.0, -theta.theta[j - 1]);
    }
    return out;
}

FlowTrajectory flow_trajectory(const DTRepresentation& rep, int direction, int steps, double dt) {
    const int n = rep.n();
    if (direction < 1 || direction > n - 3) throw DomainError("flow direction out of range");
    if (steps < 1 || !(dt > 0.0)) throw DomainError("flow needs steps >= 1 and dt > 0");
    FlowTrajectory out;
    out.direction = direction;
    const TriangleChain base = to_chain(rep);
    for (double a : area_params(base)) {
        if (a < 1e-3 * rep.alpha.lambda()) out.boundary_warning = true;
    }
    out.samples.reserve(steps + 1);
    for (int s = 0; s <= steps; ++s) {
        const double t = s * dt;
        std::vector<double> th(n - 3, 0.0);
        th[direction - 1] = t;
        const DTRepresentation moved = act_on_rep(TorusElement(th), rep);
        out.samples.push_back({t, angle_params(to_chain(moved))});
    }
    return out;
}

}  // namespace trichain
