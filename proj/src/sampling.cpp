#include "trichain/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace trichain {

AngleVector sample_alpha(int n, Rng& rng, double min_lambda) {
    if (n < 3) throw DomainError("puncture count must be at least 3");
    const double threshold = kTwoPi * (n - 1) + min_lambda;
    // Angles within ~6e-5 of 2*pi give generators whose trace is within the
    // classification tolerance of 2; the margin keeps every sampled generator
    // classifiably elliptic.
    const double margin = 1e-3;
    while (true) {
        std::vector<double> alpha(n);
        double sum = 0.0;
        for (double& a : alpha) {
            a = rng.uniform(margin, kTwoPi - margin);
            sum += a;
        }
        if (sum > threshold) return AngleVector(std::move(alpha));
    }
}

ProjectivePoint sample_projective(int dim, Rng& rng, const std::vector<int>& zero_indices) {
    ProjectivePoint p;
    p.z.assign(dim, Complex(0.0, 0.0));
    for (int k = 0; k < dim; ++k) {
        if (std::find(zero_indices.begin(), zero_indices.end(), k) == zero_indices.end()) {
            p.z[k] = Complex(rng.gauss(), rng.gauss());
        }
    }
    if (!(p.norm_squared() > 0.0)) {
        for (int k = 0; k < dim; ++k) {
            if (std::find(zero_indices.begin(), zero_indices.end(), k) == zero_indices.end()) {
                p.z[k] = Complex(1.0, 0.0);
                break;
            }
        }
    }
    return p;
}

PointH sample_point(Rng& rng) {
    return PointH(rng.uniform(-2.0, 2.0), std::exp(rng.uniform(-1.5, 1.5)));
}

Isometry sample_isometry(Rng& rng) {
    // Matrix entries stay of order one; wilder conjugators push chains into
    // regions where fixed-point extraction loses the last couple of digits.
    const PointH center(rng.uniform(-0.8, 0.8), std::exp(rng.uniform(-0.6, 0.6)));
    const PointH target(rng.uniform(-0.8, 0.8), std::exp(rng.uniform(-0.6, 0.6)));
    return rotation(rng.uniform(0.1, kTwoPi - 0.1), center) * vertical_translation(target);
}

DTRepresentation sample_dt_representation(const AngleVector& alpha, Rng& rng) {
    const ProjectivePoint p = sample_projective(alpha.n() - 2, rng);
    return construct_from_projective(alpha, p);
}

}  // namespace trichain
