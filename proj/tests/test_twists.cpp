#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopalg/twists.hpp"
#include "test_util.hpp"

using namespace loopalg;
using testutil::random_lie_like;
using testutil::random_word;

namespace {

FreeLoop curve_loop(const Expansion &theta, const std::string &tag) {
    return FreeLoop(classical_curve_word(ClassicalCurve::parse(tag), theta.gens(),
                                         theta.signature().genus));
}

} // namespace

TEST_CASE("L invariant: trivial loop and inversion symmetry") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(1, 1, 4));
    CHECK(L_of(FreeLoop(GroupWord(theta.gens())), theta).is_zero());

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        const FreeLoop c(random_word(theta.gens(), rng));
        CHECK(L_of(c, theta) == L_of(c.inverse(), theta));
    }
}

TEST_CASE("L of the boundary loop") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(1, 1, 5));
    const auto lam = L_of(curve_loop(theta, "zeta"), theta);
    // log theta(zeta) = omega, so L = omega^2/2 and the lambda image is
    // N(omega^2)/2 with nothing below degree 4
    const auto omega = symplectic_form(theta.homology(), 5);
    auto expected = cyclicize(mul(omega, omega));
    expected *= Rat(1, 2);
    CHECK(lam == expected);
    CHECK(lam.lowest_degree() == 4);
}

TEST_CASE("f_of_loop requires f(1) = f'(1) = 0") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(1, 1, 3));
    const FreeLoop a(GroupWord::generator(theta.gens(), 0));
    CHECK_THROWS_AS((void)f_of_loop({Rat(1)}, a, theta), DomainError);
    CHECK_THROWS_AS((void)f_of_loop({Rat(0), Rat(1)}, a, theta), DomainError);
    // f = (t-1)^2 is fine and gives N((theta(a)-1)^2)
    const auto v = f_of_loop({Rat(0), Rat(0), Rat(1)}, a, theta);
    const auto ta = theta.evaluate(a.representative());
    const auto one = TruncatedTensor::unit(theta.homology(), 3);
    CHECK(v == cyclicize(mul(ta - one, ta - one)));
}

TEST_CASE("curve tags parse") {
    CHECK(ClassicalCurve::parse("sep2").h == 2);
    CHECK(ClassicalCurve::parse("zeta").kind == ClassicalCurve::Kind::boundary);
    CHECK_THROWS_AS((void)ClassicalCurve::parse("x9"), ParseError);
    CHECK_THROWS_AS((void)ClassicalCurve::parse("sepx"), ParseError);
}

TEST_CASE("classical twists fix the boundary word") {
    for (int g = 1; g <= 2; ++g) {
        auto gens = GenSet::surface(g, 1);
        const GroupWord zeta = boundary_word(gens, g, 1, 1);
        std::vector<std::string> tags{"a1", "b1", "zeta", "sep1"};
        if (g == 2) tags.push_back("sep2");
        for (const auto &tag : tags) {
            const auto c = ClassicalCurve::parse(tag);
            CHECK(classical_twist(c, gens, g, zeta) == zeta);
        }
    }
}

TEST_CASE("classical twist formulas") {
    auto gens = GenSet::surface(1, 1);
    auto a = GroupWord::generator(gens, 0);
    auto b = GroupWord::generator(gens, 1);
    const auto ta = ClassicalCurve::parse("a1");

    CHECK(classical_twist(ta, gens, 1, a) == a);       // the curve is fixed
    CHECK(classical_twist(ta, gens, 1, b) == b * a);   // one-intersection formula

    // boundary twist: conjugation by zeta
    const auto tz = ClassicalCurve::parse("zeta");
    const GroupWord zeta = boundary_word(gens, 1, 1, 1);
    CHECK(classical_twist(tz, gens, 1, a) == zeta.inverse() * a * zeta);
}

TEST_CASE("chain relation (t_a1 t_b1)^6 = t_zeta on the one-holed torus") {
    auto gens = GenSet::surface(1, 1);
    const auto ta = MappingClassAction::of_twist(ClassicalCurve::parse("a1"), gens, 1);
    const auto tb = MappingClassAction::of_twist(ClassicalCurve::parse("b1"), gens, 1);
    const auto tz = MappingClassAction::of_twist(ClassicalCurve::parse("zeta"), gens, 1);
    MappingClassAction chain = MappingClassAction::identity(gens);
    for (int i = 0; i < 6; ++i) chain = ta.after(tb.after(chain));
    for (int i = 0; i < gens->size(); ++i)
        CHECK(chain.images[i] == tz.images[i]);
}

TEST_CASE("twist theorem: exp(sigma(L(C))) = DN(t_C) on Sigma_{1,1}") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(1, 1, 4));
    for (const std::string tag : {"a1", "b1", "zeta"}) {
        const auto c = ClassicalCurve::parse(tag);
        const TwistOperator op(curve_loop(theta, tag), theta);
        for (int g = 0; g < theta.gens()->size(); ++g) {
            const auto classical =
                theta.evaluate(classical_twist(c, theta.gens(), 1,
                                               GroupWord::generator(theta.gens(), g)));
            CHECK(op.generator_image(g) == classical);
        }
    }
}

TEST_CASE("twist theorem on Sigma_{2,1} at small truncation") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 3));
    for (const std::string tag : {"a1", "sep1"}) {
        const auto c = ClassicalCurve::parse(tag);
        const TwistOperator op(curve_loop(theta, tag), theta);
        for (int g = 0; g < theta.gens()->size(); ++g) {
            const auto classical =
                theta.evaluate(classical_twist(c, theta.gens(), 2,
                                               GroupWord::generator(theta.gens(), g)));
            CHECK(op.generator_image(g) == classical);
        }
    }
}

TEST_CASE("twist operator basics") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 3));
    // scale 0 is the identity
    const TwistOperator expected_id(curve_loop(theta, "a1"), theta, Rat(0));
    for (int g = 0; g < theta.gens()->size(); ++g)
        CHECK(expected_id.generator_image(g) == theta.image(g));
    // a twist along sep1 fixes the second-handle generators
    const TwistOperator op(curve_loop(theta, "sep1"), theta);
    CHECK(op.generator_image(2) == theta.image(2));
    CHECK(op.generator_image(3) == theta.image(3));
    // group-likes are preserved
    CHECK(is_group_like(op.generator_image(0)));
}

TEST_CASE("figure-eight obstruction") {
    const auto rep1 = figure_eight_obstruction(Rat(1), 4);
    CHECK(rep1.b == -2);
    CHECK(rep1.c == 1);
    CHECK(rep1.residual2.is_zero());
    CHECK(rep1.obstruction_coef == Rat(1, 6));
    // residual3 = (1/6) [Y,[Y,X]]
    const auto h = Homology::free_basis({"X", "Y"});
    const auto X = TruncatedTensor::letter(h, 4, 0);
    const auto Y = TruncatedTensor::letter(h, 4, 1);
    auto obstruction = commutator(Y, commutator(Y, X));
    obstruction *= Rat(1, 6);
    CHECK(rep1.residual3 == obstruction.degree_part(3));

    const auto rep0 = figure_eight_obstruction(Rat(0), 3);
    CHECK(rep0.b == 0);
    CHECK(rep0.c == 0);
    CHECK(rep0.residual2.is_zero());
    CHECK(rep0.residual3.is_zero());

    const auto rep6 = figure_eight_obstruction(Rat(6), 3);
    CHECK(rep6.obstruction_coef == 1);

    // linearity of the residual in z
    const auto rep13 = figure_eight_obstruction(Rat(1, 3), 3);
    CHECK(rep13.obstruction_coef == Rat(1, 18));
}

TEST_CASE("pair logs: separating") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    const auto rep = pair_logs(PairKind::separating, {curve_loop(theta, "sep1")}, theta);
    CHECK(rep.filtration >= 4);
    CHECK(lie_membership(rep.value).in_lg_plus);

    // refusal on a non-null-homologous loop
    CHECK_THROWS_AS((void)pair_logs(PairKind::separating,
                                    {FreeLoop(GroupWord::generator(theta.gens(), 0))},
                                    theta),
                    DomainError);
}

TEST_CASE("pair logs: bounding pair") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    auto gens = theta.gens();
    const FreeLoop c1(GroupWord::generator(gens, 0));
    // same homology class: a1 conjugated and multiplied by a commutator
    const FreeLoop c2(GroupWord::generator(gens, 0) *
                      word_commutator(GroupWord::generator(gens, 2),
                                      GroupWord::generator(gens, 3)));
    const auto same = pair_logs(PairKind::bounding_pair, {c1, c1}, theta);
    CHECK(same.value.is_zero());
    const auto rep = pair_logs(PairKind::bounding_pair, {c1, c2}, theta);
    CHECK(rep.filtration >= 3);

    CHECK_THROWS_AS((void)pair_logs(PairKind::bounding_pair,
                                    {c1, FreeLoop(GroupWord::generator(gens, 1))},
                                    theta),
                    DomainError);
}

TEST_CASE("pair logs: commuting pair gives zero") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    // sep1 and zeta are disjoint: their lambda images commute and P = 0
    const auto rep = pair_logs(PairKind::simply_intersecting,
                               {curve_loop(theta, "sep1"), curve_loop(theta, "zeta")},
                               theta);
    CHECK(rep.value.is_zero());
}

TEST_CASE("log of an automorphism") {
    const auto h = Homology::of_surface(1, 1);
    const int N = 5;
    std::mt19937_64 rng(7);

    // identity has log zero
    std::vector<TruncatedTensor> id_imgs{TruncatedTensor::letter(h, N, 0),
                                         TruncatedTensor::letter(h, N, 1)};
    CHECK(log_automorphism(id_imgs, h).is_zero());

    for (int trial = 0; trial < 6; ++trial) {
        // random derivation with degree-raising values
        Derivation d(h, N);
        d.set_value(0, random_lie_like(h, N, rng, 3, 2));
        d.set_value(1, random_lie_like(h, N, rng, 3, 2));
        std::vector<TruncatedTensor> imgs;
        for (int i = 0; i < 2; ++i)
            imgs.push_back(exp_derivation_apply(d, TruncatedTensor::letter(h, N, i)));
        const Derivation lg = log_automorphism(imgs, h);
        for (int i = 0; i < 2; ++i) CHECK(lg.value(i) == d.value(i));
    }

    // degree-raising precondition
    std::vector<TruncatedTensor> bad{TruncatedTensor::letter(h, N, 1),
                                     TruncatedTensor::letter(h, N, 0)};
    CHECK_THROWS_AS((void)log_automorphism(bad, h), ConvergenceError);
}

TEST_CASE("log of a commuting composite splits") {
    // U, V from disjointly supported derivations: log(UV) = log U + log V
    const auto h = Homology::of_surface(2, 1);
    const int N = 4;
    auto letter = [&](int i) { return TruncatedTensor::letter(h, N, i); };
    Derivation d(h, N), dp(h, N);
    d.set_value(0, commutator(letter(0), letter(1)));
    dp.set_value(2, commutator(letter(2), commutator(letter(2), letter(3))));
    std::vector<TruncatedTensor> uv;
    for (int i = 0; i < h->rank(); ++i)
        uv.push_back(exp_derivation_apply(d, exp_derivation_apply(dp, letter(i))));
    const Derivation lg = log_automorphism(uv, h);
    Derivation expected = d;
    expected += dp;
    for (int i = 0; i < h->rank(); ++i) CHECK(lg.value(i) == expected.value(i));
}

TEST_CASE("johnson tau of a separating twist") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    auto gens = theta.gens();

    // identity mapping class
    CHECK(johnson_tau(MappingClassAction::identity(gens), theta).is_zero());

    const auto sep = ClassicalCurve::parse("sep1");
    const auto phi = MappingClassAction::of_twist(sep, gens, 2);
    const auto tau = johnson_tau(phi, theta);
    CHECK(tau == L_of(curve_loop(theta, "sep1"), theta));
    CHECK(tau.lowest_degree() >= 4);
    CHECK(lie_membership(tau).in_lg_plus);

    // non-Torelli input is refused
    CHECK_THROWS_AS(
        (void)johnson_tau(MappingClassAction::of_twist(ClassicalCurve::parse("a1"),
                                                       gens, 2),
                          theta),
        DomainError);
}

TEST_CASE("distinct twist words have distinct tau images") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    auto gens = theta.gens();
    const auto t1 = MappingClassAction::of_twist(ClassicalCurve::parse("sep1"), gens, 2);
    const auto t2 = MappingClassAction::of_twist(ClassicalCurve::parse("zeta"), gens, 2);
    std::vector<TruncatedTensor> taus{johnson_tau(t1, theta), johnson_tau(t2, theta),
                                      johnson_tau(t1.after(t1), theta),
                                      johnson_tau(t1.after(t2), theta)};
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = i + 1; j < taus.size(); ++j)
            CHECK_FALSE(taus[i] == taus[j]);
}

TEST_CASE("johnson tau is additive on disjoint twists") {
    const Expansion theta = symplectic_expansion(SurfaceSignature(2, 1, 4));
    auto gens = theta.gens();
    const auto phi = MappingClassAction::of_twist(ClassicalCurve::parse("sep1"), gens, 2);
    const auto psi = MappingClassAction::of_twist(ClassicalCurve::parse("zeta"), gens, 2);
    const auto tau_prod = johnson_tau(phi.after(psi), theta);
    CHECK(tau_prod == johnson_tau(phi, theta) + johnson_tau(psi, theta));
}

TEST_CASE("naturality under inclusion of the first handle") {
    // tau of the boundary twist on Sigma_{1,1}, computed in lambda
    // coordinates, matches tau of the genus-1 separating twist on
    // Sigma_{2,1} when the expansions are aligned: the curve-adapted
    // expansion for [a1,b1] restricts to the symplectic expansion of the
    // handle.
    const int N = 4;
    const Expansion small = symplectic_expansion(SurfaceSignature(1, 1, N));
    CurveCaseDescriptor desc;
    desc.kind = CurveCaseDescriptor::Kind::separating_null;
    desc.h = 1;
    const Expansion big = curve_adapted_expansion(SurfaceSignature(2, 1, N), desc);

    // image alignment: the handle generators expand identically
    const std::vector<int> incl{0, 1};
    for (int i = 0; i < 2; ++i)
        CHECK(map_letters(small.image(i), big.homology(), incl) == big.image(i));

    const auto tau_small = dehn_nielsen_log(
        MappingClassAction::of_twist(ClassicalCurve::parse("zeta"), small.gens(), 1),
        small);
    const auto tau_big = dehn_nielsen_log(
        MappingClassAction::of_twist(ClassicalCurve::parse("sep1"), big.gens(), 2),
        big);
    CHECK(map_letters(tau_small, big.homology(), incl) == tau_big);
}
