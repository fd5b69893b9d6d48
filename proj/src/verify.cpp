#include "trichain/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "trichain/sampling.hpp"
#include "trichain/torus.hpp"

namespace trichain {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
}

// Runs fn(trial) over [0, count) sharded across workers and returns the
// largest reported residual. A thrown exception counts as an infinite
// residual with its message attached.
struct TrialOutcome {
    double worst = 0.0;
    std::string message;
};

TrialOutcome parallel_max(int count, int workers, const std::function<double(int)>& fn) {
    workers = std::max(1, std::min(workers, count));
    std::vector<TrialOutcome> outcomes(workers);
    auto run_range = [&](int w, int lo, int hi) {
        for (int t = lo; t < hi; ++t) {
            try {
                outcomes[w].worst = std::max(outcomes[w].worst, fn(t));
            } catch (const std::exception& e) {
                outcomes[w].worst = std::numeric_limits<double>::infinity();
                if (outcomes[w].message.empty()) outcomes[w].message = e.what();
            }
        }
    };
    if (workers == 1) {
        run_range(0, 0, count);
        return outcomes[0];
    }
    std::vector<std::thread> pool;
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(run_range, w, w * chunk, std::min(count, (w + 1) * chunk));
    }
    for (auto& th : pool) th.join();
    TrialOutcome total;
    for (const TrialOutcome& o : outcomes) {
        total.worst = std::max(total.worst, o.worst);
        if (total.message.empty()) total.message = o.message;
    }
    return total;
}

CheckResult finish(CheckResult r, const TrialOutcome& outcome, Clock::time_point start) {
    r.worst = outcome.worst;
    r.pass = outcome.worst <= 1.0;
    r.seconds = elapsed(start);
    if (!outcome.message.empty()) r.detail += (r.detail.empty() ? "" : "; ") + outcome.message;
    return r;
}

std::vector<int> pick_zero_indices(int dim, int how_many, Rng& rng) {
    std::vector<int> idx;
    while (static_cast<int>(idx.size()) < how_many) {
        const int k = static_cast<int>(rng.uniform(0.0, dim));
        if (std::find(idx.begin(), idx.end(), std::min(k, dim - 1)) == idx.end()) {
            idx.push_back(std::min(k, dim - 1));
        }
    }
    return idx;
}

}  // namespace

CheckResult check_elliptic_roundtrip(int count, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "elliptic fixed-point/angle round-trip";
    const double tol = 1e-10;
    const TrialOutcome out = parallel_max(count, workers, [&](int t) {
        Rng rng(trial_seed(seed, t));
        // Margin keeps |trace| classifiably below 2; rotations closer to the
        // identity than the classification tolerance have no angle.
        const double angle = rng.uniform(1e-3, kTwoPi - 1e-3);
        const PointH z = sample_point(rng);
        const Isometry g = rotation(angle, z);
        const double r1 = distance(fixed_point(g), z);
        const double r2 = std::abs(rotation_angle(g) - angle);
        // Inverse direction: a generic elliptic element reassembled from its
        // invariants must reproduce the matrix.
        const double r3 = psl_distance(rotation(rotation_angle(g), fixed_point(g)), g);
        return std::max({r1, r2, r3}) / tol;
    });
    r.detail = std::to_string(count) + " random (angle, point) pairs, tol 1e-10";
    return finish(std::move(r), out, start);
}

CheckResult check_trichotomy() {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "three-puncture trichotomy and volume table";
    const double tol = 1e-9;
    double worst = 0.0;
    std::string message;
    struct Case {
        std::array<double, 3> alpha;
        TripleConfig expect;
        int euler;
    };
    const double q = 0.5 * kPi;
    const std::vector<Case> cases = {
        {{3 * q, 3 * q, 3 * q}, TripleConfig::ClockwiseTriangle, 2},
        {{5.0, 5.2, 4.9}, TripleConfig::ClockwiseTriangle, 2},
        {{q, q, q}, TripleConfig::AnticlockwiseTriangle, 1},
        {{1.1, 0.8, 2.0}, TripleConfig::AnticlockwiseTriangle, 1},
        {{3 * q, 3 * q, 2 * q}, TripleConfig::Coincident, 2},
        {{q, q, 2 * q}, TripleConfig::Coincident, 1},
    };
    try {
        for (const Case& c : cases) {
            const EllipticTriple triple = construct_triple(c.alpha);
            if (classify_triple(c.alpha, triple.gens) != c.expect) {
                message = "configuration mismatch";
                worst = std::numeric_limits<double>::infinity();
                break;
            }
            const double sum = c.alpha[0] + c.alpha[1] + c.alpha[2];
            double expected_vol = 0.0;
            if (c.expect == TripleConfig::ClockwiseTriangle) expected_vol = 2.0 * kTwoPi - sum;
            if (c.expect == TripleConfig::AnticlockwiseTriangle) expected_vol = kTwoPi - sum;
            std::vector<Isometry> gens(triple.gens.begin(), triple.gens.end());
            worst = std::max(worst,
                             std::abs(volume_cocycle(gens, PointH(0.4, 0.9)) - expected_vol) / tol);
            const EulerData e = euler_class(gens);
            if (e.euler_class != c.euler) {
                message = "Euler class mismatch";
                worst = std::numeric_limits<double>::infinity();
                break;
            }
        }
        // The band with no representations must reject.
        for (const std::array<double, 3>& bad :
             {std::array<double, 3>{kPi, kPi, kPi}, std::array<double, 3>{2.2, 2.2, 2.2}}) {
            try {
                construct_triple(bad);
                message = "empty band accepted";
                worst = std::numeric_limits<double>::infinity();
            } catch (const EmptyVarietyError&) {
            }
        }
    } catch (const std::exception& e) {
        worst = std::numeric_limits<double>::infinity();
        message = e.what();
    }
    r.detail = "table rows + empty band, tol 1e-9";
    return finish(std::move(r), {worst, message}, start);
}

CheckResult check_volume_cross(int per_n, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "volume cross-oracle and base-point independence";
    const double tol_cross = 1e-7, tol_base = 1e-8;
    const int ns = 5;  // n = 4..8
    const TrialOutcome out = parallel_max(ns * per_n, workers, [&](int t) {
        const int n = 4 + t / per_n;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        const DTRepresentation rep = sample_dt_representation(alpha, rng);
        const double lambda = alpha.lambda();
        const double vc = volume_cocycle(rep, sample_point(rng));
        const double vt = volume_chain(rep);
        double worst = std::abs(vc - vt) / tol_cross;
        worst = std::max(worst, std::abs(vt + lambda) / tol_cross);
        double lo = vc, hi = vc;
        for (int k = 0; k < 4; ++k) {
            const double v = volume_cocycle(rep, sample_point(rng));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::max(worst, (hi - lo) / tol_base);
    });
    r.detail = std::to_string(per_n) + " representations per n in 4..8, tol 1e-7 / 1e-8";
    return finish(std::move(r), out, start);
}

CheckResult check_bijection(int per_n, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "coordinate bijection round-trip";
    const double tol = 1e-9;
    const int ns = 5;  // n = 4..8
    const TrialOutcome out = parallel_max(ns * per_n, workers, [&](int t) {
        const int n = 4 + t / per_n;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        const int zeros = (t % per_n) % (n - 3);  // 0 .. n-4 vanishing coordinates
        const ProjectivePoint p = normalize(
            sample_projective(n - 2, rng, pick_zero_indices(n - 2, zeros, rng)), alpha.lambda());
        const DTRepresentation rep = construct_from_projective(alpha, p);
        double worst = fs_distance(coordinate_map(rep), p) / tol;
        if (t % 10 == 0) {
            // Conjugation invariance and reconstruction up to conjugacy.
            const DTRepresentation moved = conjugate(rep, sample_isometry(rng));
            worst = std::max(worst, fs_distance(coordinate_map(moved), p) / tol);
            const DTRepresentation rebuilt =
                construct_from_projective(alpha, coordinate_map(rep));
            const std::vector<double> b1 = beta_all(rep), b2 = beta_all(rebuilt);
            for (size_t k = 0; k < b1.size(); ++k) {
                worst = std::max(worst, std::abs(b1[k] - b2[k]) / tol);
            }
            if (!validate(rebuilt).pass) worst = std::numeric_limits<double>::infinity();
        }
        return worst;
    });
    r.detail = std::to_string(per_n) +
               " points per n in 4..8 incl. boundary strata, FS distance tol 1e-9";
    return finish(std::move(r), out, start);
}

CheckResult check_equivariance(int count, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "torus equivariance and moment-map intertwining";
    const double tol_eq = 1e-9, tol_mu = 1e-10;
    const TrialOutcome out = parallel_max(count, workers, [&](int t) {
        const int n = 4 + t % 5;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        const DTRepresentation rep = sample_dt_representation(alpha, rng);
        std::vector<double> th(n - 3);
        for (double& v : th) v = rng.uniform(0.0, kTwoPi);
        const TorusElement theta(th);
        const ProjectivePoint image = coordinate_map(rep);
        double worst =
            fs_distance(coordinate_map(act_on_rep(theta, rep)), act_on_cp(theta, image)) / tol_eq;
        const std::vector<double> mu = moment_mu(rep);
        const std::vector<double> nu = moment_nu(image);
        for (size_t k = 0; k < mu.size(); ++k) {
            worst = std::max(worst, std::abs(mu[k] - nu[k]) / tol_mu);
        }
        return worst;
    });
    r.detail = std::to_string(count) + " random (theta, rep), tol 1e-9 / 1e-10";
    return finish(std::move(r), out, start);
}

CheckResult check_flow_dynamics(std::uint64_t seed) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "action-angle dynamics along coordinate flows";
    const double tol_slope = 1e-6, tol_area = 1e-10, tol_close = 1e-9;
    double worst = 0.0;
    std::string message;
    try {
        Rng rng(seed);
        for (int n : {4, 5, 6}) {
            const AngleVector alpha = sample_alpha(n, rng);
            // Interior point of the moment polytope: balanced gaussian areas.
            DTRepresentation rep = sample_dt_representation(alpha, rng);
            for (int attempt = 0; attempt < 64; ++attempt) {
                const std::vector<double> a = area_params(to_chain(rep));
                if (*std::min_element(a.begin(), a.end()) > 0.05 * alpha.lambda()) break;
                rep = sample_dt_representation(alpha, rng);
            }
            const ProjectivePoint at = coordinate_map(rep);
            for (int dir = 1; dir <= n - 3; ++dir) {
                const int steps = 16;
                const double dt = 0.02;
                const FlowTrajectory traj = flow_trajectory(rep, dir, steps, dt);
                const ActionAngleCoords& first = traj.samples.front().coords;
                for (int s = 1; s <= steps; ++s) {
                    const ActionAngleCoords& cur = traj.samples[s].coords;
                    const ActionAngleCoords& prev = traj.samples[s - 1].coords;
                    const double slope =
                        wrap_signed(cur.sigma[dir - 1] - prev.sigma[dir - 1]) / dt;
                    worst = std::max(worst, std::abs(slope + 1.0) / tol_slope);
                    for (size_t k = 0; k < cur.a.size(); ++k) {
                        worst = std::max(worst, std::abs(cur.a[k] - first.a[k]) / tol_area);
                    }
                    for (int k = 0; k < n - 3; ++k) {
                        if (k == dir - 1) continue;
                        worst = std::max(
                            worst, std::abs(wrap_signed(cur.sigma[k] - first.sigma[k])) / tol_close);
                    }
                }
                std::vector<double> th(n - 3, 0.0);
                th[dir - 1] = kTwoPi;
                const double closure =
                    fs_distance(coordinate_map(act_on_rep(TorusElement(th), rep)), at);
                worst = std::max(worst, closure / tol_close);
            }
        }
    } catch (const std::exception& e) {
        worst = std::numeric_limits<double>::infinity();
        message = e.what();
    }
    r.detail = "n in 4..6, every direction: slope -1 (1e-6), areas frozen (1e-10), period 2*pi (1e-9)";
    return finish(std::move(r), {worst, message}, start);
}

CheckResult check_wolpert(int points, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "Darboux identity for the projective pullback";
    const double tol = 1e-4;
    const TrialOutcome out = parallel_max(points, workers, [&](int t) {
        const int n = 4 + t % 3;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        const double lambda = alpha.lambda();
        // Interior base point with a uniform margin from the boundary.
        std::vector<double> weights(n - 2);
        double total = 0.0;
        for (double& w : weights) {
            w = 0.15 + rng.uniform(0.0, 1.0);
            total += w;
        }
        ActionAngleCoords base;
        base.a.resize(n - 2);
        for (int k = 0; k < n - 2; ++k) base.a[k] = lambda * weights[k] / total;
        base.gamma.assign(n - 3, 0.0);
        base.sigma.resize(n - 3);
        for (double& s : base.sigma) s = rng.uniform(0.0, kTwoPi);
        double worst = 0.0;
        for (int i = 1; i <= n - 3; ++i) {
            for (int j = 1; j <= n - 3; ++j) {
                const WolpertResidual res = wolpert_check(alpha, base, i, j);
                worst = std::max({worst, res.mixed, res.area_area, res.angle_angle});
            }
        }
        return worst / tol;
    });
    r.detail = std::to_string(points) + " interior points, n in 4..6, blocks vs (1/2) delta, tol 1e-4";
    return finish(std::move(r), out, start);
}

CheckResult check_chain_validity(int per_n, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "chain structure and moment polytope";
    const double tol_angle = 1e-8, tol_margin = 1e-10;
    const int ns = 5;
    const TrialOutcome out = parallel_max(ns * per_n, workers, [&](int t) {
        const int n = 4 + t / per_n;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        const int zeros = (t % per_n) % (n - 3);
        const ProjectivePoint p = normalize(
            sample_projective(n - 2, rng, pick_zero_indices(n - 2, zeros, rng)), alpha.lambda());
        const DTRepresentation rep = construct_from_projective(alpha, p);
        const TriangleChain chain = to_chain(rep);
        const ChainDiagnostics d = validate_chain(chain);
        if (!d.pass) return std::numeric_limits<double>::infinity();
        double worst = d.worst() / tol_angle;
        const std::vector<double> mu = moment_mu(rep);
        double mu_sum = 0.0;
        for (double m : mu) {
            worst = std::max(worst, -m / tol_margin);
            worst = std::max(worst, (m - 0.5) / tol_margin);
            mu_sum += m;
        }
        worst = std::max(worst, (mu_sum - 0.5) / tol_margin);
        return worst;
    });
    r.detail = std::to_string(per_n) + " chains per n in 4..8, angle laws 1e-8, simplex margin 1e-10";
    return finish(std::move(r), out, start);
}

namespace {

// Independent six-case reference for the vertical-ray angle, transcribed from
// the arctan case table rather than the atan2 form used by the library.
double gamma_reference(double x, double y) {
    const double d = x * x + y * y - 1.0;
    if (x == 0.0) return y > 1.0 ? 0.0 : kPi;
    if (d == 0.0) return x > 0.0 ? 1.5 * kPi : 0.5 * kPi;
    if (d < 0.0) return wrap_angle(kPi - std::atan(2.0 * x / d));
    return wrap_angle(-std::atan(2.0 * x / d));
}

double gamma_dx(double x, double y) {
    const double d = x * x + y * y - 1.0;
    return 2.0 * (x * x - y * y + 1.0) / (4.0 * x * x + d * d);
}

double gamma_dy(double x, double y) {
    const double d = x * x + y * y - 1.0;
    return 4.0 * x * y / (4.0 * x * x + d * d);
}

}  // namespace

CheckResult check_gamma_formulas(int count, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "vertical-ray angle closed forms and C1 seams";
    const double tol = 1e-10, tol_fd = 1e-5;
    const PointH unit_i(0.0, 1.0);
    const TrialOutcome out = parallel_max(count, workers, [&](int t) {
        Rng rng(trial_seed(seed, t));
        PointH z = sample_point(rng);
        while (distance(z, unit_i) < 1e-3) z = sample_point(rng);
        const double g = ray_direction(unit_i, z);
        double worst = std::abs(wrap_signed(g - gamma_reference(z.x, z.y))) / tol;
        const double d = z.x * z.x + z.y * z.y - 1.0;
        const Complex closed =
            Complex(d, -2.0 * z.x) / std::sqrt(4.0 * z.x * z.x + d * d);
        worst = std::max(worst, std::abs(std::polar(1.0, g) - closed) / tol);
        // Two-point ratio, a genuinely different code path.
        PointH p = sample_point(rng);
        while (distance(z, p) < 1e-3) p = sample_point(rng);
        const Complex lhs =
            std::polar(1.0, ray_direction(z, p)) / std::polar(1.0, ray_direction(p, z));
        const Complex den(p.x - z.x, p.y + z.y);
        const Complex rhs = std::conj(den) / den;
        worst = std::max(worst, std::abs(lhs - rhs) / tol);
        return worst;
    });
    double worst = out.worst;
    // C1 seams across x = 0 and across the unit circle, against the closed-form
    // partial derivatives.
    const double h = 1e-4;
    auto gamma_at = [&](double x, double y) { return ray_direction(unit_i, PointH(x, y)); };
    for (double y : {0.2, 0.4, 0.6, 0.8, 1.25, 1.6, 2.0, 3.0, 5.0}) {
        const double fd = wrap_signed(gamma_at(h, y) - gamma_at(-h, y)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - gamma_dx(0.0, y)) / tol_fd);
    }
    for (double t : {-1.2, -0.8, -0.5, -0.2, 0.2, 0.5, 0.8, 1.2}) {
        const double x = std::sin(t), y = std::cos(t);
        const double fdx = wrap_signed(gamma_at(x + h, y) - gamma_at(x - h, y)) / (2.0 * h);
        const double fdy = wrap_signed(gamma_at(x, y + h) - gamma_at(x, y - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fdx - gamma_dx(x, y)) / tol_fd);
        worst = std::max(worst, std::abs(fdy - gamma_dy(x, y)) / tol_fd);
    }
    r.detail = std::to_string(count) + " random points tol 1e-10; seam derivatives tol 1e-5";
    return finish(std::move(r), {worst, out.message}, start);
}

CheckResult check_arcsin_area(int chains, std::uint64_t seed, int workers) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = "law-of-cosines area formula vs angle defect";
    const double tol = 1e-8;
    const TrialOutcome out = parallel_max(chains, workers, [&](int t) {
        const int n = 4 + t % 5;
        Rng rng(trial_seed(seed, t));
        const AngleVector alpha = sample_alpha(n, rng);
        ProjectivePoint p = sample_projective(n - 2, rng);
        if (t % 3 == 0) {
            // Push one triangle close to degeneracy, down to doubled area 1e-7.
            p = normalize(p, alpha.lambda());
            const int k = static_cast<int>(rng.uniform(0.0, n - 2)) % (n - 2);
            const double tiny = std::pow(10.0, rng.uniform(-7.0, -4.0));
            p.z[k] *= std::sqrt(tiny) / std::abs(p.z[k]);
        }
        const DTRepresentation rep = construct_from_projective(alpha, normalize(p, alpha.lambda()));
        const TriangleChain chain = to_chain(rep);
        const std::vector<double> a = area_params(chain);
        const std::vector<double> betas = beta_all(rep);  // matrix route, independent of areas
        double worst = 0.0;
        for (int i = 0; i <= n - 3; ++i) {
            const double closed = area_param_arcsin(chain, i, betas[i], betas[i + 1]);
            worst = std::max(worst, std::abs(closed - a[i]) / tol);
        }
        return worst;
    });
    r.detail = std::to_string(chains) + " chains incl. near-degenerate triangles, tol 1e-8";
    return finish(std::move(r), out, start);
}

std::vector<CheckResult> run_battery(const VerifyOptions& options) {
    auto scaled = [&](int count) { return std::max(1, static_cast<int>(count * options.scale)); };
    std::vector<CheckResult> results;
    results.push_back(check_elliptic_roundtrip(scaled(10000), options.seed, options.workers));
    results.push_back(check_trichotomy());
    results.push_back(check_volume_cross(scaled(200), options.seed + 1, options.workers));
    results.push_back(check_bijection(scaled(500), options.seed + 2, options.workers));
    results.push_back(check_equivariance(scaled(300), options.seed + 3, options.workers));
    results.push_back(check_flow_dynamics(options.seed + 4));
    results.push_back(check_wolpert(scaled(50), options.seed + 5, options.workers));
    results.push_back(check_chain_validity(scaled(100), options.seed + 6, options.workers));
    results.push_back(check_gamma_formulas(scaled(10000), options.seed + 7, options.workers));
    results.push_back(check_arcsin_area(scaled(1000), options.seed + 8, options.workers));
    return results;
}

}  // namespace trichain
