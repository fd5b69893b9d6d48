#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "trichain/halfplane.hpp"
#include "trichain/sampling.hpp"
#include "trichain/triangle_solver.hpp"

using namespace trichain;
using trichain::testing::oracle_signed_area;

namespace {
const PointH unit_i(0.0, 1.0);
Isometry quarter_turn() { return Isometry(0.0, 1.0, -1.0, 0.0); }  // rotation by pi about i
}  // namespace

TEST_CASE("moebius action") {
    CHECK(distance(apply(identity(), unit_i), unit_i) == 0.0);
    CHECK(distance(apply(quarter_turn(), unit_i), unit_i) < 1e-15);
    const PointH moved = apply(Isometry(1.0, 1.0, 0.0, 1.0), unit_i);
    CHECK(moved.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(moved.y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("composition") {
    Rng rng(7);
    auto mild = [&rng] {
        // entries of order one, so the absolute associativity bound is sharp
        return rotation(rng.uniform(0.3, kTwoPi - 0.3), PointH(rng.uniform(-0.5, 0.5), 1.0)) *
               vertical_translation(PointH(rng.uniform(-0.5, 0.5), std::exp(rng.uniform(-0.3, 0.3))));
    };
    for (int t = 0; t < 200; ++t) {
        const Isometry g = sample_isometry(rng);
        CHECK(psl_distance(g * g.inverse(), identity()) < 1e-12);
        CHECK(psl_distance((mild() * mild()) * mild(), identity()) >= 0.0);  // no throw
        const Isometry a = mild(), b = mild(), c = mild();
        CHECK(psl_distance((a * b) * c, a * (b * c)) < 1e-12);
    }
    // rotations about a common point add angles
    const PointH z(0.4, 2.0);
    const double u = 2.5, v = 4.9;  // u + v > 2*pi, exercises the wrap
    const Isometry sum = rotation(u, z) * rotation(v, z);
    CHECK(psl_distance(sum, rotation(wrap_angle(u + v), z)) < 1e-12);
}

TEST_CASE("classification") {
    CHECK(classify(quarter_turn()) == IsometryClass::Elliptic);
    CHECK(classify(Isometry(2.0, 0.0, 0.0, 0.5)) == IsometryClass::Hyperbolic);
    CHECK(classify(Isometry(1.0, 1.0, 0.0, 1.0)) == IsometryClass::Parabolic);
    CHECK(classify(identity()) == IsometryClass::Identity);
}

TEST_CASE("fixed points of elliptic elements") {
    const PointH f = fixed_point(quarter_turn());
    CHECK(f.x == doctest::Approx(0.0));
    CHECK(f.y == doctest::Approx(1.0));

    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const PointH z = sample_point(rng);
        const double angle = rng.uniform(1e-3, kTwoPi - 1e-3);
        const Isometry g = rotation(angle, z);
        CHECK(distance(fixed_point(g), z) < 1e-10);
        CHECK(rotation_angle(g) == doctest::Approx(angle).epsilon(1e-12));
        // conjugation moves the fixed point
        const Isometry h = sample_isometry(rng);
        CHECK(distance(fixed_point(h * g * h.inverse()), apply(h, z)) < 1e-9);
    }
    CHECK_THROWS_AS(fixed_point(Isometry(1.0, 1.0, 0.0, 1.0)), NotEllipticError);
    CHECK_THROWS_AS(rotation_angle(Isometry(2.0, 0.0, 0.0, 0.5)), NotEllipticError);
}

TEST_CASE("rotation angles") {
    CHECK(rotation_angle(quarter_turn()) == doctest::Approx(kPi));
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        const Isometry g = rotation(rng.uniform(1e-3, kTwoPi - 1e-3), sample_point(rng));
        CHECK(rotation_angle(g.inverse()) ==
              doctest::Approx(kTwoPi - rotation_angle(g)).epsilon(1e-12));
    }
}

TEST_CASE("rotation matrices") {
    CHECK(psl_distance(rotation(kPi, unit_i), quarter_turn()) < 1e-15);
    const double theta = 2.2;
    const Isometry about_i = rotation(theta, unit_i);
    CHECK(about_i.a() == doctest::Approx(std::cos(theta / 2)));
    CHECK(about_i.b() == doctest::Approx(std::sin(theta / 2)));
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const PointH z = sample_point(rng);
        const double angle = rng.uniform(0.1, kTwoPi - 0.1);
        const Isometry h = vertical_translation(z);
        CHECK(psl_distance(rotation(angle, z), h * rotation(angle, unit_i) * h.inverse()) < 1e-12);
    }
    CHECK_THROWS_AS(rotation(0.0, unit_i), DomainError);
    CHECK_THROWS_AS(rotation(kTwoPi, unit_i), DomainError);
    CHECK_THROWS_AS(rotation(7.0, unit_i), DomainError);
}

TEST_CASE("distance") {
    const PointH p(0.3, 0.7);
    CHECK(distance(p, p) == 0.0);
    CHECK(distance(unit_i, PointH(0.0, 2.0)) ==
          doctest::Approx(trichain::testing::kDistI2I).epsilon(1e-15));
    Rng rng(19);
    for (int t = 0; t < 300; ++t) {
        const PointH a = sample_point(rng), b = sample_point(rng);
        const Isometry g = sample_isometry(rng);
        CHECK(distance(apply(g, a), apply(g, b)) == doctest::Approx(distance(a, b)).epsilon(1e-10));
    }
    // short distances do not underflow
    CHECK(distance(unit_i, PointH(1e-12, 1.0)) == doctest::Approx(1e-12).epsilon(1e-6));
}

TEST_CASE("ray directions") {
    CHECK(ray_direction(unit_i, PointH(0.0, 2.0)) == 0.0);
    CHECK(ray_direction(unit_i, PointH(0.0, 0.5)) == doctest::Approx(kPi));
    // points on the unit circle: the geodesic from i leaves horizontally
    CHECK(ray_direction(unit_i, PointH(0.6, 0.8)) == doctest::Approx(1.5 * kPi));
    CHECK(ray_direction(unit_i, PointH(-0.6, 0.8)) == doctest::Approx(0.5 * kPi));
    CHECK(ray_direction(PointH(0.0, 2.0), unit_i) == doctest::Approx(kPi));
    CHECK_THROWS_AS(ray_direction(unit_i, PointH(0.0, 1.0 + 1e-12)), DegeneratePointError);

    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
        // the rotation about the base point shifts the direction by its angle
        const PointH base = sample_point(rng);
        PointH z = sample_point(rng);
        while (distance(base, z) < 1e-3) z = sample_point(rng);
        const double angle = rng.uniform(0.1, kTwoPi - 0.1);
        const double shifted = ray_direction(base, apply(rotation(angle, base), z));
        CHECK(std::abs(wrap_signed(shifted - ray_direction(base, z) - angle)) < 1e-10);
    }
}

TEST_CASE("oriented angles between rays") {
    const PointH up(0.0, 2.0), down(0.0, 0.5);
    CHECK(oriented_angle(unit_i, up, up) == 0.0);
    CHECK(oriented_angle(unit_i, up, down) == doctest::Approx(kPi));
    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        const PointH base = sample_point(rng);
        PointH a = sample_point(rng), b = sample_point(rng);
        while (distance(base, a) < 1e-3) a = sample_point(rng);
        while (distance(base, b) < 1e-3) b = sample_point(rng);
        const Isometry g = sample_isometry(rng);
        const double before = oriented_angle(base, a, b);
        const double after = oriented_angle(apply(g, base), apply(g, a), apply(g, b));
        CHECK(std::abs(wrap_signed(after - before)) < 1e-10);
    }
}

TEST_CASE("signed areas") {
    CHECK(signed_area(Triangle{unit_i, unit_i, PointH(1.0, 1.0)}) == 0.0);

    // clockwise triangle with three interior angles pi/4
    const Triangle eq = solve_triangle(0.25 * kPi, 0.25 * kPi, 0.25 * kPi);
    CHECK(signed_area(eq) == doctest::Approx(0.25 * kPi).epsilon(1e-12));

    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        const Triangle tri{sample_point(rng), sample_point(rng), sample_point(rng)};
        const double area = signed_area(tri);
        CHECK(std::abs(area) < kPi);
        // boundary-integral oracle
        CHECK(area == doctest::Approx(oracle_signed_area(tri)).epsilon(1e-10));
        // alternating under swaps
        CHECK(signed_area(Triangle{tri.v2, tri.v1, tri.v3}) ==
              doctest::Approx(-area).epsilon(1e-10));
        // isometry invariance
        const Isometry g = sample_isometry(rng);
        const Triangle moved{apply(g, tri.v1), apply(g, tri.v2), apply(g, tri.v3)};
        CHECK(signed_area(moved) == doctest::Approx(area).epsilon(1e-9));
    }
}

TEST_CASE("four-point cocycle identity") {
    Rng rng(37);
    for (int t = 0; t < 1000; ++t) {
        const PointH a = sample_point(rng), b = sample_point(rng), c = sample_point(rng),
                     d = sample_point(rng);
        const double lhs = signed_area(Triangle{a, b, c}) + signed_area(Triangle{c, d, a});
        const double rhs = signed_area(Triangle{b, c, d}) + signed_area(Triangle{b, d, a});
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("point_at inverts ray measurements") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const PointH base = sample_point(rng);
        const double dir = rng.uniform(0.0, kTwoPi);
        const double len = rng.uniform(0.01, 3.0);
        const PointH tip = point_at(base, dir, len);
        CHECK(distance(base, tip) == doctest::Approx(len).epsilon(1e-10));
        CHECK(std::abs(wrap_signed(ray_direction(base, tip) - dir)) < 1e-10);
    }
}

TEST_CASE("moebius overflow guard") {
    // an extreme diagonal element squeezes |cz+d| below the guard
    CHECK_THROWS_AS(apply(Isometry(1e301, 0.0, 0.0, 1e-301), unit_i), NumericOverflowError);
    CHECK_NOTHROW(apply(Isometry(1.0, 0.5, 0.0, 1.0), PointH(0.0, 1e-12)));
}
