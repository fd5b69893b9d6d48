#pragma once

// Seeded sampling of angle vectors, projective points and representations.
// The generator is hand-rolled on top of mt19937_64 so that outputs are
// bit-identical across standard libraries.

#include <cstdint>
#include <random>

#include "trichain/coords.hpp"

namespace trichain {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gauss() {
        const double u = 1.0 - uniform();  // (0, 1]
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Rejection sampling of alpha in (0, 2*pi)^n until lambda > min_lambda; the
// margin keeps the sampled component away from the empty boundary.
AngleVector sample_alpha(int n, Rng& rng, double min_lambda = 0.05);

// Gaussian coordinates, with the listed indices forced to exactly zero.
ProjectivePoint sample_projective(int dim, Rng& rng, const std::vector<int>& zero_indices = {});

PointH sample_point(Rng& rng);

// A moderate random isometry (rotation composed with a vertical translation).
Isometry sample_isometry(Rng& rng);

// A random element of the compact component: random projective point pushed
// through the inverse construction. Membership is then automatic.
DTRepresentation sample_dt_representation(const AngleVector& alpha, Rng& rng);

}  // namespace trichain
