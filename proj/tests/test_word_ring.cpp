#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <algorithm>

#include "test_util.hpp"

using namespace loopalg;
using testutil::random_ideal_power;
using testutil::random_word;

namespace {
GenSetRef g11() { return GenSet::surface(1, 1); }
} // namespace

TEST_CASE("free reduction") {
    auto gens = g11();
    auto a = GroupWord::generator(gens, 0);
    auto b = GroupWord::generator(gens, 1);

    CHECK((a * a.inverse()).is_identity());
    CHECK(a * b * b.inverse() * a == a * a);
    CHECK(word_commutator(a, b).length() == 4);

    // reduce is idempotent by construction
    auto w = parse_word(gens, "a1 b1 b1^-1 a1");
    CHECK(w == a * a);
    CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("word parser and printer round-trip") {
    auto gens = GenSet::surface(2, 3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto w = random_word(gens, rng, 8);
        CHECK(parse_word(gens, print_word(w)) == w);
    }
    CHECK(parse_word(gens, "a1^3") == parse_word(gens, "a1 a1 a1"));
    CHECK(parse_word(gens, "g2").length() == 1);
    CHECK_THROWS_AS((void)parse_word(gens, "q7"), ParseError);
    CHECK_THROWS_AS((void)parse_word(gens, "a1^x"), ParseError);
}

TEST_CASE("ring multiplication and augmentation") {
    auto gens = g11();
    auto a = GroupWord::generator(gens, 0);
    auto b = GroupWord::generator(gens, 1);

    // (a-1)(a-1) = a^2 - 2a + 1
    auto d = fox_delta(a);
    auto sq = ring_mul(d, d);
    GroupRingElement expected(gens);
    expected.add(a * a, Rat(1));
    expected.add(a, Rat(-2));
    expected.add(GroupWord(gens), Rat(1));
    CHECK(sq == expected);

    CHECK(aug(d) == 0);
    GroupRingElement u(gens);
    u.add(a, Rat(3));
    u.add(b, Rat(2));
    CHECK(aug(u) == 5);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        GroupRingElement x(gens), y(gens);
        for (int i = 0; i < 3; ++i) {
            x.add(random_word(gens, rng), testutil::rat(i + 1, 2));
            y.add(random_word(gens, rng), Rat(2 - i));
        }
        CHECK(aug(ring_mul(x, y)) == aug(x) * aug(y));
    }
}

TEST_CASE("boundary words") {
    auto gens = g11();
    // g=1, r=1: zeta = [a1,b1], length 4
    auto zeta = boundary_word(gens, 1, 1, 1);
    CHECK(zeta.length() == 4);
    CHECK(zeta == word_commutator(GroupWord::generator(gens, 0),
                                  GroupWord::generator(gens, 1)));

    auto gens03 = GenSet::surface(0, 3);
    CHECK(boundary_word(gens03, 0, 3, 2) == GroupWord::generator(gens03, 0));

    // g=1, r=2: the relation [a1,b1] g1 g2 = 1 must hold for the solved g1
    auto gens12 = GenSet::surface(1, 2);
    auto g1 = boundary_word(gens12, 1, 2, 1);
    auto rel = word_commutator(GroupWord::generator(gens12, 0),
                               GroupWord::generator(gens12, 1)) *
               g1 * GroupWord::generator(gens12, 2);
    CHECK(rel.is_identity());

    CHECK_THROWS_AS((void)boundary_word(gens, 1, 1, 2), DomainError);
}

TEST_CASE("filtration degree through an expansion") {
    const SurfaceSignature sig(1, 1, 5);
    const Expansion theta = exponential_expansion(sig);
    auto gens = theta.gens();
    auto a = GroupWord::generator(gens, 0);
    auto b = GroupWord::generator(gens, 1);

    CHECK(filtration_degree(fox_delta(a), theta) == 1);
    CHECK(filtration_degree(fox_delta(word_commutator(a, b)), theta) == 2);
    CHECK(filtration_degree(GroupRingElement::one(gens), theta) == 0);
    CHECK(filtration_degree(GroupRingElement(gens), theta) == 6); // zero: >= N+1

    // I^m I^n inside I^{m+n} (degrees capped by the N+1 sentinel)
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_ideal_power(gens, 1, rng);
        auto v = random_ideal_power(gens, 2, rng);
        const int du = filtration_degree(u, theta);
        const int dv = filtration_degree(v, theta);
        CHECK(filtration_degree(ring_mul(u, v), theta) >=
              std::min(du + dv, theta.trunc() + 1));
    }
}

TEST_CASE("filtration degree independent of the expansion") {
    const SurfaceSignature sig(2, 1, 5);
    const Expansion exp_theta = exponential_expansion(sig);
    const Expansion symp_theta = symplectic_expansion(sig);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto u = random_ideal_power(exp_theta.gens(), trial % 3 + 1, rng);
        CHECK(filtration_degree(u, exp_theta) == filtration_degree(u, symp_theta));
    }
}

TEST_CASE("endomorphism application") {
    auto gens = g11();
    auto a = GroupWord::generator(gens, 0);
    auto b = GroupWord::generator(gens, 1);
    // a -> ab, b -> b
    std::vector<GroupWord> images{a * b, b};
    CHECK(apply_endomorphism(images, a * b) == a * b * b);
    CHECK(apply_endomorphism(images, a.inverse()) == (a * b).inverse());
    CHECK(apply_endomorphism(images, word_commutator(a, b)) ==
          word_commutator(a * b, b));
}
