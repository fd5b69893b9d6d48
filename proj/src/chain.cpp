#include "trichain/chain.hpp"

#include <algorithm>
#include <cmath>

namespace trichain {

const PointH& TriangleChain::b_full(int i) const {
    const int nn = n();
    if (i == 0) return C[0];
    if (i == nn - 2) return C[nn - 1];
    return B[i - 1];
}

Triangle TriangleChain::triangle(int i) const {
    return Triangle{b_full(i), C[i + 1], b_full(i + 1)};
}

std::vector<double> TriangleChain::doubled_areas() const {
    std::vector<double> a(n() - 2);
    for (int i = 0; i <= n() - 3; ++i) a[i] = 2.0 * signed_area(triangle(i));
    return a;
}

TriangleChain to_chain(const DTRepresentation& rep) {
    PointConfiguration cfg = fixed_points(rep);
    return TriangleChain{rep.alpha, std::move(cfg.C), std::move(cfg.B)};
}

DTRepresentation from_chain(const TriangleChain& chain) {
    const ChainDiagnostics d = validate_chain(chain);
    if (!d.pass) {
        throw InvalidChainError("chain fails structural validation: " +
                                (d.message.empty() ? std::string("residual ") +
                                                         std::to_string(d.worst())
                                                   : d.message));
    }
    DTRepresentation rep{chain.alpha, {}};
    rep.gens.reserve(chain.n());
    for (int i = 0; i < chain.n(); ++i) {
        rep.gens.push_back(rotation(chain.alpha[i], chain.C[i]));
    }
    return rep;
}

namespace {

double interior_angle_at(const PointH& v, const PointH& p, const PointH& q) {
    const double d = wrap_angle(ray_direction(v, p) - ray_direction(v, q));
    return std::min(d, kTwoPi - d);
}

bool triangle_degenerate(const Triangle& t) {
    return distance(t.v1, t.v2) <= kDegenerateTol || distance(t.v2, t.v3) <= kDegenerateTol ||
           distance(t.v3, t.v1) <= kDegenerateTol;
}

}  // namespace

double ChainDiagnostics::worst() const {
    double w = area_sum_residual;
    for (double r : angle_residuals) w = std::max(w, r);
    for (double r : degeneracy_residuals) w = std::max(w, r);
    for (double r : supplementary_residuals) w = std::max(w, r);
    return w;
}

ChainDiagnostics validate_chain(const TriangleChain& chain) {
    ChainDiagnostics d;
    const int n = chain.n();
    if (static_cast<int>(chain.C.size()) != n || static_cast<int>(chain.B.size()) != n - 3) {
        d.message = "point counts do not match the angle count";
        return d;
    }
    const std::vector<double>& alpha = chain.alpha.values();
    const std::vector<double> areas = chain.doubled_areas();

    // beta recursion from the measured areas:
    //   beta_{i+1} = sum_{j<=i} 2[D_j] - sum_{j<=i+2} alpha_j + 2(i+2)pi.
    d.beta.assign(n - 1, 0.0);
    d.beta[0] = kTwoPi - alpha[0];
    for (int i = 0; i + 1 <= n - 2; ++i) {
        d.beta[i + 1] = d.beta[i] + areas[i] - alpha[i + 1] + kTwoPi;
    }
    double area_sum = 0.0;
    for (double a : areas) area_sum += a;
    d.area_sum_residual = std::abs(area_sum - chain.alpha.lambda());

    bool ok = d.area_sum_residual <= kAreaSumTol;
    for (int i = 1; i <= n - 3; ++i) {
        if (!(d.beta[i] > 0.0) || !(d.beta[i] < kTwoPi)) {
            ok = false;
            d.message = "beta recursion leaves (0, 2*pi) at index " + std::to_string(i);
        }
    }

    d.angle_residuals.assign(n - 2, 0.0);
    d.degeneracy_residuals.assign(n - 2, 0.0);
    d.degenerate.assign(n - 2, false);
    for (int i = 0; i <= n - 3; ++i) {
        const Triangle t = chain.triangle(i);
        if (triangle_degenerate(t)) {
            d.degenerate[i] = true;
            const double spread = std::max({distance(t.v1, t.v2), distance(t.v2, t.v3),
                                            distance(t.v3, t.v1)});
            d.degeneracy_residuals[i] = spread;
            if (spread > kDegenerateTol) ok = false;
            continue;
        }
        if (signed_area(t) <= 0.0) {
            ok = false;
            d.message = "triangle " + std::to_string(i) + " is not clockwise";
            continue;
        }
        const double at_b = interior_angle_at(t.v1, t.v2, t.v3);
        const double at_c = interior_angle_at(t.v2, t.v3, t.v1);
        const double at_next = interior_angle_at(t.v3, t.v1, t.v2);
        double r = std::abs(at_b - 0.5 * d.beta[i]);
        r = std::max(r, std::abs(at_c - (kPi - 0.5 * alpha[i + 1])));
        r = std::max(r, std::abs(at_next - (kPi - 0.5 * d.beta[i + 1])));
        d.angle_residuals[i] = r;
        if (r > kChainAngleTol) ok = false;
    }

    // Supplementary angles at shared vertices of adjacent non-degenerate
    // triangles (the non-degenerate form of the gluing condition).
    d.supplementary_residuals.assign(std::max(n - 3, 0), 0.0);
    for (int i = 0; i + 1 <= n - 3; ++i) {
        if (d.degenerate[i] || d.degenerate[i + 1]) continue;
        const PointH& shared = chain.b_full(i + 1);
        const double a1 = interior_angle_at(shared, chain.b_full(i), chain.C[i + 1]);
        const double a2 = interior_angle_at(shared, chain.C[i + 2], chain.b_full(i + 2));
        d.supplementary_residuals[i] = std::abs(a1 + a2 - kPi);
        if (d.supplementary_residuals[i] > kChainAngleTol) ok = false;
    }

    d.pass = ok && d.message.empty();
    return d;
}

TriangleChain apply_to_chain(const Isometry& g, const TriangleChain& chain) {
    TriangleChain out = chain;
    for (PointH& p : out.C) p = apply(g, p);
    for (PointH& p : out.B) p = apply(g, p);
    return out;
}

TriangleChain normal_form(const TriangleChain& chain) {
    const PointH& base = chain.C[0];
    Isometry move = vertical_translation(base).inverse();
    // Chain points in order of appearance along the construction.
    std::vector<PointH> ordered;
    ordered.push_back(chain.C[1]);
    for (int i = 1; i <= chain.n() - 3; ++i) {
        ordered.push_back(chain.C[i + 1]);
        ordered.push_back(chain.B[i - 1]);
    }
    ordered.push_back(chain.C[chain.n() - 1]);
    for (const PointH& p : ordered) {
        if (distance(base, p) > kDegenerateTol) {
            const double dir = ray_direction(apply(move, base), apply(move, p));
            if (dir != 0.0) move = rotation(kTwoPi - dir, apply(move, base)) * move;
            break;
        }
    }
    return apply_to_chain(move, chain);
}

}  // namespace trichain
