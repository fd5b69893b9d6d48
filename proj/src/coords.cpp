#include "trichain/coords.hpp"

#include <algorithm>
#include <cmath>

namespace trichain {

double ProjectivePoint::norm_squared() const {
    double s = 0.0;
    for (const Complex& c : z) s += std::norm(c);
    return s;
}

ProjectivePoint normalize(const ProjectivePoint& p, double target) {
    const double n2 = p.norm_squared();
    if (!(n2 > 0.0)) throw ZeroVectorError("projective point has no nonzero coordinate");
    ProjectivePoint out = p;
    const double scale = std::sqrt(target / n2);
    for (Complex& c : out.z) c *= scale;
    for (Complex& c : out.z) {
        if (std::abs(c) != 0.0) {
            const Complex phase = std::conj(c) / std::abs(c);
            for (Complex& w : out.z) w *= phase;
            c = Complex(std::abs(c), 0.0);
            break;
        }
    }
    return out;
}

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    const double np = std::sqrt(p.norm_squared());
    const double nq = std::sqrt(q.norm_squared());
    if (!(np > 0.0) || !(nq > 0.0)) throw ZeroVectorError("projective point has no nonzero coordinate");
    if (p.dim() != q.dim()) throw DomainError("projective points of different dimension");
    Complex overlap(0.0, 0.0);
    for (int k = 0; k < p.dim(); ++k) overlap += (q.z[k] / nq) * std::conj(p.z[k] / np);
    double perp2 = 0.0;
    for (int k = 0; k < p.dim(); ++k) {
        perp2 += std::norm(q.z[k] / nq - overlap * p.z[k] / np);
    }
    return std::atan2(std::sqrt(perp2), std::abs(overlap));
}

std::vector<double> area_params(const TriangleChain& chain) {
    std::vector<double> a = chain.doubled_areas();
    for (double& v : a) v = std::max(v, 0.0);
    return a;
}

ActionAngleCoords angle_params(const TriangleChain& chain) {
    const int n = chain.n();
    ActionAngleCoords out;
    out.a = area_params(chain);
    out.gamma.assign(n - 3, 0.0);
    out.sigma.assign(n - 3, 0.0);
    const std::vector<double>& alpha = chain.alpha.values();
    int last_pos = out.a[0] > 0.0 ? 0 : -1;
    double acc = 0.0;
    for (int i = 1; i <= n - 3; ++i) {
        double g;
        if (last_pos < 0) {
            g = 0.0;
        } else if (out.a[i] == 0.0) {
            g = kPi - 0.5 * alpha[i + 1];
        } else {
            g = oriented_angle(chain.b_full(i), chain.C[i + 1], chain.C[last_pos + 1]);
        }
        out.gamma[i - 1] = wrap_angle(g);
        acc += g;
        out.sigma[i - 1] = wrap_angle(acc);
        if (out.a[i] > 0.0) last_pos = i;
    }
    return out;
}

double area_param_arcsin(const TriangleChain& chain, int i, double beta_i, double beta_next) {
    const PointH& b = chain.b_full(i);
    const PointH& c = chain.C[i + 1];
    const double alpha_i2 = chain.alpha[i + 1];
    const double coshm1 =
        ((c.x - b.x) * (c.x - b.x) + (c.y - b.y) * (c.y - b.y)) / (2.0 * c.y * b.y);
    const double ratio = std::sin(0.5 * alpha_i2) * std::sin(0.5 * beta_i) /
                         (2.0 * std::sin(0.25 * (alpha_i2 + kTwoPi - beta_next - beta_i)));
    return 4.0 * std::asin(std::clamp(ratio * coshm1, -1.0, 1.0));
}

ProjectivePoint coordinate_map(const TriangleChain& chain) {
    const ActionAngleCoords aa = angle_params(chain);
    ProjectivePoint p;
    p.z.resize(chain.n() - 2);
    p.z[0] = Complex(std::sqrt(aa.a[0]), 0.0);
    for (size_t j = 0; j < aa.sigma.size(); ++j) {
        p.z[j + 1] = std::polar(std::sqrt(aa.a[j + 1]), aa.sigma[j]);
    }
    return normalize(p, chain.alpha.lambda());
}

ProjectivePoint coordinate_map(const DTRepresentation& rep) {
    return coordinate_map(to_chain(rep));
}

namespace {

// Below this fraction of lambda a requested area is collapsed to an exactly
// degenerate triangle; the corresponding homogeneous coordinate is too small
// to displace the projective point at the working precision.
constexpr double kCollapseFraction = 1e-22;

}  // namespace

TriangleChain chain_from_projective(const AngleVector& alpha, const ProjectivePoint& p) {
    const int n = alpha.n();
    if (p.dim() != n - 2) {
        throw DomainError("projective point dimension does not match the angle count");
    }
    const double lambda = alpha.lambda();
    const ProjectivePoint zn = normalize(p, lambda);

    std::vector<PointH> C(n), B(std::max(n - 3, 0));
    C[0] = PointH(0.0, 1.0);
    auto set_b_full = [&](int i, const PointH& pt) {
        // i = 1..n-2; the last alias is C_n.
        if (i == n - 2) {
            C[n - 1] = pt;
        } else {
            B[i - 1] = pt;
        }
    };

    double beta_k = kTwoPi - alpha[0];
    int last_pos = -1;       // last step with a positive area
    double last_arg = 0.0;   // complex argument of its coordinate
    double pending = 0.0;    // accumulated (pi - alpha_{l+2}/2) over collapsed steps
    for (int k = 0; k <= n - 3; ++k) {
        const double a_k = std::norm(zn.z[k]);
        const double beta_next = beta_k + a_k - alpha[k + 1] + kTwoPi;
        const PointH base = (k == 0) ? C[0] : B[k - 1];  // B_k in the 1-based indexing
        if (a_k < kCollapseFraction * lambda) {
            C[k + 1] = base;
            set_b_full(k + 1, base);
            if (last_pos >= 0) pending += kPi - 0.5 * alpha[k + 1];
        } else {
            const Triangle t =
                solve_triangle(0.5 * a_k, 0.5 * beta_k, kPi - 0.5 * alpha[k + 1]);
            double direction = 0.0;
            if (last_pos >= 0) {
                // The oriented angle from the new ray to the ray toward the
                // last non-collapsed triangle equals the phase difference of
                // the coordinates minus the contribution of the collapsed
                // block in between.
                const double gamma_k =
                    wrap_angle(std::arg(zn.z[k]) - last_arg - pending);
                direction = wrap_angle(ray_direction(base, C[last_pos + 1]) - gamma_k);
            }
            Isometry place = vertical_translation(base);
            if (direction != 0.0) place = rotation(direction, base) * place;
            C[k + 1] = apply(place, t.v2);
            set_b_full(k + 1, apply(place, t.v3));
            last_pos = k;
            last_arg = std::arg(zn.z[k]);
            pending = 0.0;
        }
        beta_k = beta_next;
    }
    return TriangleChain{alpha, std::move(C), std::move(B)};
}

DTRepresentation construct_from_projective(const AngleVector& alpha, const ProjectivePoint& p) {
    return from_chain(chain_from_projective(alpha, p));
}

std::vector<double> moment_mu(const DTRepresentation& rep) {
    const int n = rep.n();
    const std::vector<double> betas = beta_all(rep);
    std::vector<double> mu(n - 3);
    const double lambda = rep.alpha.lambda();
    for (int j = 0; j < n - 3; ++j) {
        mu[j] = (rep.alpha[j + 2] + betas[j + 2] - betas[j + 1] - kTwoPi) / (2.0 * lambda);
    }
    return mu;
}

std::vector<double> moment_nu(const ProjectivePoint& p) {
    const double n2 = p.norm_squared();
    if (!(n2 > 0.0)) throw ZeroVectorError("projective point has no nonzero coordinate");
    std::vector<double> nu(p.dim() - 1);
    for (int j = 1; j < p.dim(); ++j) nu[j - 1] = std::norm(p.z[j]) / (2.0 * n2);
    return nu;
}

double fubini_study(const ProjectivePoint& p, const std::vector<Complex>& u,
                    const std::vector<Complex>& v) {
    const double n2 = p.norm_squared();
    if (!(n2 > 0.0)) throw ZeroVectorError("projective point has no nonzero coordinate");
    const int m = p.dim();
    if (static_cast<int>(u.size()) != m || static_cast<int>(v.size()) != m) {
        throw DomainError("tangent vectors must match the ambient dimension");
    }
    auto herm = [m](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        Complex s(0.0, 0.0);
        for (int k = 0; k < m; ++k) s += x[k] * std::conj(y[k]);
        return s;
    };
    std::vector<Complex> uh = u, vh = v;
    const Complex cu = herm(u, p.z) / n2;
    const Complex cv = herm(v, p.z) / n2;
    for (int k = 0; k < m; ++k) {
        uh[k] -= cu * p.z[k];
        vh[k] -= cv * p.z[k];
    }
    return -herm(uh, vh).imag() / n2;
}

namespace {

// Ambient representative of the point with the given chart coordinates,
// computed through the full inverse-then-forward round trip so that finite
// differences probe the geometric construction and not just the formulas.
std::vector<Complex> chart_point(const AngleVector& alpha, const std::vector<double>& a_tail,
                                 const std::vector<double>& sigma) {
    const double lambda = alpha.lambda();
    double a0 = lambda;
    for (double v : a_tail) a0 -= v;
    if (!(a0 > 0.0)) throw BoundaryProximityError("area coordinates leave the simplex");
    ProjectivePoint p;
    p.z.resize(alpha.n() - 2);
    p.z[0] = Complex(std::sqrt(a0), 0.0);
    for (size_t j = 0; j < a_tail.size(); ++j) {
        p.z[j + 1] = std::polar(std::sqrt(std::max(a_tail[j], 0.0)), sigma[j]);
    }
    return coordinate_map(chain_from_projective(alpha, p)).z;
}

}  // namespace

WolpertResidual wolpert_check(const AngleVector& alpha, const ActionAngleCoords& base, int i,
                              int j, double step) {
    const int n = alpha.n();
    const int m = n - 3;
    if (i < 1 || i > m || j < 1 || j > m) throw DomainError("coordinate index out of range");
    const double lambda = alpha.lambda();
    for (double v : base.a) {
        if (v < 1e-3 * lambda) {
            throw BoundaryProximityError(
                "finite differences are unreliable near the polytope boundary");
        }
    }
    const std::vector<double> a_tail(base.a.begin() + 1, base.a.end());
    const double ha = step * lambda;
    const double hs = step;

    ProjectivePoint at;
    at.z = chart_point(alpha, a_tail, base.sigma);
    auto area_dir = [&](int idx) {
        std::vector<double> plus = a_tail, minus = a_tail;
        plus[idx - 1] += ha;
        minus[idx - 1] -= ha;
        const auto zp = chart_point(alpha, plus, base.sigma);
        const auto zm = chart_point(alpha, minus, base.sigma);
        std::vector<Complex> d(zp.size());
        for (size_t k = 0; k < d.size(); ++k) d[k] = (zp[k] - zm[k]) / (2.0 * ha);
        return d;
    };
    auto angle_dir = [&](int idx) {
        std::vector<double> plus = base.sigma, minus = base.sigma;
        plus[idx - 1] += hs;
        minus[idx - 1] -= hs;
        const auto zp = chart_point(alpha, a_tail, plus);
        const auto zm = chart_point(alpha, a_tail, minus);
        std::vector<Complex> d(zp.size());
        for (size_t k = 0; k < d.size(); ++k) d[k] = (zp[k] - zm[k]) / (2.0 * hs);
        return d;
    };

    const auto da_i = area_dir(i);
    const auto da_j = area_dir(j);
    const auto ds_i = angle_dir(i);
    const auto ds_j = angle_dir(j);

    WolpertResidual r;
    const double delta = (i == j) ? 0.5 : 0.0;
    r.mixed = std::abs(lambda * fubini_study(at, da_i, ds_j) - delta);
    r.area_area = std::abs(lambda * fubini_study(at, da_i, da_j));
    r.angle_angle = std::abs(lambda * fubini_study(at, ds_i, ds_j));
    return r;
}

}  // namespace trichain
