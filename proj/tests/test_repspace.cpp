#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "trichain/coords.hpp"
#include "trichain/sampling.hpp"

using namespace trichain;

namespace {

DTRepresentation random_rep(int n, Rng& rng) {
    return sample_dt_representation(sample_alpha(n, rng), rng);
}

}  // namespace

TEST_CASE("angle vectors") {
    CHECK_THROWS_AS(AngleVector({1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(AngleVector({1.0, 1.0, 7.0}), DomainError);
    CHECK_THROWS_AS(AngleVector({1.0, 1.0, 1.0}), InfeasibleAnglesError);  // lambda < 0
    const AngleVector ok({6.0, 6.1, 6.2});
    CHECK(ok.lambda() == doctest::Approx(18.3 - 2.0 * kTwoPi));
}

TEST_CASE("theta_bar case table") {
    CHECK(theta_bar(rotation(2.5, PointH(0.1, 0.9))) == doctest::Approx(2.5));
    CHECK(theta_bar(Isometry(2.0, 0.0, 0.0, 0.5)) == 0.0);
    CHECK(theta_bar(identity()) == kTwoPi);
    // [[1,1],[0,1]] is conjugate to rotations degenerating with angle -> 0
    CHECK(theta_bar(Isometry(1.0, 1.0, 0.0, 1.0)) == 0.0);
    CHECK(theta_bar(Isometry(1.0, -1.0, 0.0, 1.0)) == kTwoPi);
    CHECK(theta_bar(Isometry(1.0, 0.0, -0.5, 1.0)) == 0.0);
    CHECK(theta_bar(Isometry(1.0, 0.0, 0.5, 1.0)) == kTwoPi);
}

TEST_CASE("triple construction and trichotomy") {
    const double q = 0.5 * kPi;

    SUBCASE("clockwise, angle sum above 4*pi") {
        const EllipticTriple t = construct_triple({3 * q, 3 * q, 3 * q});
        CHECK(classify_triple(t.alpha, t.gens) == TripleConfig::ClockwiseTriangle);
        CHECK(psl_distance(t.gens[0] * t.gens[1] * t.gens[2], identity()) < 1e-12);
        // interior angles pi - alpha_i/2 = pi/4
        const double area = signed_area(Triangle{t.fixed[0], t.fixed[1], t.fixed[2]});
        CHECK(area == doctest::Approx(0.25 * kPi).epsilon(1e-12));
    }

    SUBCASE("anticlockwise, angle sum below 2*pi") {
        const EllipticTriple t = construct_triple({q, q, q});
        CHECK(classify_triple(t.alpha, t.gens) == TripleConfig::AnticlockwiseTriangle);
        CHECK(psl_distance(t.gens[0] * t.gens[1] * t.gens[2], identity()) < 1e-12);
        const double area = signed_area(Triangle{t.fixed[0], t.fixed[1], t.fixed[2]});
        CHECK(area == doctest::Approx(-0.25 * kPi).epsilon(1e-12));
    }

    SUBCASE("coincident at multiples of 2*pi") {
        const EllipticTriple t = construct_triple({3 * q, 3 * q, 2 * q});
        CHECK(classify_triple(t.alpha, t.gens) == TripleConfig::Coincident);
        CHECK(psl_distance(t.gens[0] * t.gens[1] * t.gens[2], identity()) < 1e-12);
    }

    SUBCASE("empty band") {
        CHECK_THROWS_AS(construct_triple({kPi, kPi, kPi}), EmptyVarietyError);
        CHECK_THROWS_AS(construct_triple({2.5, 2.5, 2.5}), EmptyVarietyError);
    }

    SUBCASE("inconsistent angle data") {
        const EllipticTriple t = construct_triple({3 * q, 3 * q, 3 * q});
        CHECK_THROWS_AS(classify_triple({3 * q, 3 * q + 0.1, 3 * q - 0.1}, t.gens),
                        InconsistentConfigurationError);
    }
}

TEST_CASE("volume on the thrice-punctured sphere") {
    const double q = 0.5 * kPi;
    const PointH z(0.4, 0.9);

    // all generators rotating about one point: volume 0
    const EllipticTriple coin = construct_triple({3 * q, 3 * q, 2 * q});
    std::vector<Isometry> gens(coin.gens.begin(), coin.gens.end());
    CHECK(volume_cocycle(gens, z) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(euler_class(gens).euler_class == 2);

    // clockwise configuration: volume 4*pi - sum(alpha)
    const EllipticTriple cw = construct_triple({5.0, 5.2, 4.9});
    gens.assign(cw.gens.begin(), cw.gens.end());
    CHECK(volume_cocycle(gens, z) == doctest::Approx(2 * kTwoPi - 15.1).epsilon(1e-9));
    CHECK(euler_class(gens).euler_class == 2);

    // anticlockwise configuration: volume 2*pi - sum(alpha), Euler class 1
    const EllipticTriple acw = construct_triple({1.1, 0.8, 2.0});
    gens.assign(acw.gens.begin(), acw.gens.end());
    CHECK(volume_cocycle(gens, z) == doctest::Approx(kTwoPi - 3.9).epsilon(1e-9));
    CHECK(euler_class(gens).euler_class == 1);
}

TEST_CASE("volume is base-point independent") {
    Rng rng(101);
    for (int n : {3, 5, 7}) {
        const DTRepresentation rep = random_rep(n, rng);
        const double ref = volume_cocycle(rep, PointH(0.0, 1.0));
        for (int t = 0; t < 5; ++t) {
            CHECK(volume_cocycle(rep, sample_point(rng)) == doctest::Approx(ref).epsilon(1e-9));
        }
    }
}

TEST_CASE("two volume routes agree with -lambda") {
    Rng rng(103);
    for (int n = 4; n <= 8; ++n) {
        for (int t = 0; t < 20; ++t) {
            const AngleVector alpha = sample_alpha(n, rng);
            const DTRepresentation rep = sample_dt_representation(alpha, rng);
            const double vc = volume_cocycle(rep, PointH(0.0, 1.0));
            const double vt = volume_chain(rep);
            CHECK(vc == doctest::Approx(vt).epsilon(1e-9));
            CHECK(vt == doctest::Approx(-alpha.lambda()).epsilon(1e-9));
            CHECK(euler_class(rep).euler_class == n - 1);
        }
    }
}

TEST_CASE("volume additivity over pants pieces") {
    Rng rng(107);
    const int n = 6;
    const AngleVector alpha = sample_alpha(n, rng);
    const DTRepresentation rep = sample_dt_representation(alpha, rng);
    const PantsCurves pc = make_pants_curves(n);
    const TriangleChain chain = to_chain(rep);
    const std::vector<double> a = chain.doubled_areas();
    double total = 0.0;
    for (int i = 0; i <= n - 3; ++i) {
        // boundary words of the i-th pair of pants: b_i^{-1}, c_{i+2}, b_{i+1}
        auto b_word = [&](int k) {
            if (k == 0) {
                Word w;
                w.letters.push_back({0, -1});
                return w;
            }
            if (k == n - 2) {
                Word w;
                w.letters.push_back({n - 1, 1});
                return w;
            }
            return pc.b[k - 1];
        };
        const std::vector<Isometry> piece = {evaluate(b_word(i).inverse(), rep.gens),
                                             rep.gens[i + 1], evaluate(b_word(i + 1), rep.gens)};
        const double piece_vol = volume_cocycle(piece, PointH(0.0, 1.0));
        CHECK(piece_vol == doctest::Approx(-a[i]).epsilon(1e-9));
        total += piece_vol;
    }
    CHECK(total == doctest::Approx(volume_cocycle(rep, PointH(0.0, 1.0))).epsilon(1e-9));
}

TEST_CASE("milnor-wood bound for elliptic tuples") {
    Rng rng(109);
    int tested = 0;
    while (tested < 100) {
        const int n = 3 + static_cast<int>(rng.raw() % 4);
        std::vector<Isometry> gens;
        Isometry prod;
        for (int i = 0; i + 1 < n; ++i) {
            gens.push_back(rotation(rng.uniform(0.2, kTwoPi - 0.2), sample_point(rng)));
            prod = prod * gens.back();
        }
        gens.push_back(prod.inverse());
        if (classify(gens.back()) != IsometryClass::Elliptic) continue;
        ++tested;
        const double vol = volume_cocycle(gens, PointH(0.0, 1.0));
        CHECK(std::abs(vol) <= kTwoPi * (n - 2) + 1e-6);
        // the relative Euler class must round cleanly for genuine tuples
        CHECK_NOTHROW(euler_class(gens));
    }
}

TEST_CASE("beta conventions and range") {
    Rng rng(113);
    const int n = 6;
    const AngleVector alpha = sample_alpha(n, rng);
    const DTRepresentation rep = sample_dt_representation(alpha, rng);
    CHECK(beta(rep, 0) == doctest::Approx(kTwoPi - alpha[0]));
    CHECK(beta(rep, n - 2) == doctest::Approx(alpha[n - 1]));
    CHECK_THROWS_AS(beta(rep, n - 1), DomainError);
    for (int i = 1; i <= n - 3; ++i) {
        // range of beta_i from the angle data; the interval has length lambda
        double lo = kTwoPi * (i + 1);
        for (int j = 0; j <= i; ++j) lo -= alpha[j];
        const double hi = lo + alpha.lambda();
        const double b = beta(rep, i);
        CHECK(b >= lo - 1e-9);
        CHECK(b <= hi + 1e-9);
    }
}

TEST_CASE("area parameters from rotation numbers") {
    Rng rng(127);
    const int n = 7;
    const AngleVector alpha = sample_alpha(n, rng);
    const DTRepresentation rep = sample_dt_representation(alpha, rng);
    const std::vector<double> a = to_chain(rep).doubled_areas();
    const std::vector<double> betas = beta_all(rep);
    for (int i = 0; i <= n - 3; ++i) {
        CHECK(a[i] ==
              doctest::Approx(alpha[i + 1] + betas[i + 1] - betas[i] - kTwoPi).epsilon(1e-8));
    }
}

TEST_CASE("membership diagnostics") {
    Rng rng(131);
    const AngleVector alpha = sample_alpha(5, rng);
    const DTRepresentation rep = sample_dt_representation(alpha, rng);
    CHECK(validate(rep).pass);

    // conjugation leaves the diagnostics clean
    CHECK(validate(conjugate(rep, sample_isometry(rng))).pass);

    // perturbing one boundary angle trips the per-generator residual
    std::vector<double> bent = alpha.values();
    bent[2] += 0.1;
    const DTRepresentation wrong{AngleVector(bent), rep.gens};
    const RepDiagnostics d = validate(wrong);
    CHECK(!d.pass);
    CHECK(d.angle_residuals[2] > 0.05);
    CHECK(d.relator_residual < 1e-9);
}

TEST_CASE("conjugation invariance of derived quantities") {
    Rng rng(137);
    const AngleVector alpha = sample_alpha(6, rng);
    const DTRepresentation rep = sample_dt_representation(alpha, rng);
    const DTRepresentation moved = conjugate(rep, sample_isometry(rng));
    CHECK(volume_cocycle(moved, PointH(0.0, 1.0)) ==
          doctest::Approx(volume_cocycle(rep, PointH(0.0, 1.0))).epsilon(1e-9));
    CHECK(euler_class(moved).euler_class == euler_class(rep).euler_class);
    for (int i = 0; i <= 4; ++i) {
        CHECK(beta(moved, i) == doctest::Approx(beta(rep, i)).epsilon(1e-9));
    }
}
