#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichain/sampling.hpp"
#include "trichain/words.hpp"

using namespace trichain;

TEST_CASE("standard pants curves") {
    CHECK(make_pants_curves(3).b.empty());
    CHECK_THROWS_AS(make_pants_curves(2), DomainError);

    const PantsCurves p4 = make_pants_curves(4);
    REQUIRE(p4.b.size() == 1);
    CHECK(format_word(p4.b[0]) == "c2^-1*c1^-1");

    const PantsCurves p5 = make_pants_curves(5);
    REQUIRE(p5.b.size() == 2);
    CHECK(format_word(p5.b[0]) == "c2^-1*c1^-1");
    CHECK(format_word(p5.b[1]) == "c3^-1*c2^-1*c1^-1");
}

TEST_CASE("word text syntax") {
    const Word w = parse_word("c3^-1*c2^-1*c1^-1", 5);
    REQUIRE(w.letters.size() == 3);
    CHECK(w.letters[0].index == 2);
    CHECK(w.letters[0].exponent == -1);
    CHECK(format_word(w) == "c3^-1*c2^-1*c1^-1");
    CHECK(parse_word("", 4).letters.empty());
    CHECK(format_word(parse_word("c1*c2^1", 4)) == "c1*c2");

    CHECK_THROWS_AS(parse_word("c9", 4), DomainError);
    CHECK_THROWS_AS(parse_word("b1", 4), DomainError);
    CHECK_THROWS_AS(parse_word("c2^3", 4), DomainError);
    CHECK_THROWS_AS(parse_word("c0", 4), DomainError);
}

TEST_CASE("evaluation") {
    // rotations about a common point with angle sum 4*pi satisfy the relator
    const int n = 5;
    const PointH z(0.3, 1.4);
    std::vector<Isometry> rep;
    for (int i = 0; i < n; ++i) rep.push_back(rotation(0.8 * kPi, z));

    CHECK(psl_distance(evaluate(Word{}, rep), identity()) == 0.0);

    Word relator;
    for (int i = 0; i < n; ++i) relator.letters.push_back({i, 1});
    CHECK(psl_distance(evaluate(relator, rep), identity()) < 1e-9);

    const Word w = parse_word("c2*c4^-1*c1", n);
    CHECK(psl_distance(evaluate(w * w.inverse(), rep), identity()) < 1e-12);

    Word bad;
    bad.letters.push_back({7, 1});
    CHECK_THROWS_AS(evaluate(bad, rep), DomainError);
}

TEST_CASE("evaluation is a homomorphism") {
    Rng rng(5);
    // generators with entries of order one, so products of a few letters keep
    // the absolute tolerance meaningful
    std::vector<Isometry> rep;
    for (int i = 0; i < 4; ++i) {
        rep.push_back(rotation(rng.uniform(0.2, kTwoPi - 0.2),
                               PointH(rng.uniform(-0.5, 0.5), std::exp(rng.uniform(-0.2, 0.2)))));
    }
    for (int t = 0; t < 100; ++t) {
        Word w1, w2;
        for (int k = 0; k < 3; ++k) {
            w1.letters.push_back({static_cast<int>(rng.raw() % 4), rng.raw() % 2 ? 1 : -1});
            w2.letters.push_back({static_cast<int>(rng.raw() % 4), rng.raw() % 2 ? 1 : -1});
        }
        CHECK(psl_distance(evaluate(w1 * w2, rep), evaluate(w1, rep) * evaluate(w2, rep)) < 1e-11);
    }
}

TEST_CASE("adjacent-inverse cancellation") {
    const Word w = parse_word("c1*c2", 4) * parse_word("c2^-1*c3", 4);
    CHECK(format_word(w) == "c1*c3");
}
