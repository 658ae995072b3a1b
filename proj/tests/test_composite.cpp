#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/composite.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/steps.hpp"

using namespace qwalk;

TEST_CASE("localized states have single support") {
    const CompositeState s = localized(named_state("0"), 0);
    CHECK(s.amplitudes().size() == 1);
    CHECK(s.probability_at(0) == doctest::Approx(1.0));

    const CompositeState h = localized(named_state("h"), -2);
    CHECK(h.support_min() == -2);
    CHECK(h.support_max() == -2);
    CHECK(h.norm() == doctest::Approx(1.0));
}

TEST_CASE("inner products of localized states") {
    const CompositeState z = localized(named_state("0"), 0);
    const CompositeState o = localized(named_state("1"), 0);
    const CompositeState h = localized(named_state("h"), 0);
    CHECK(std::abs(inner(z, z) - 1.0) <= 1e-12);
    CHECK(std::abs(inner(z, o)) <= 1e-12);
    CHECK(std::abs(inner(h, z) - 1.0 / std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("shift_by relocates support and composes additively") {
    const CompositeState h = localized(named_state("h"), 0);
    const CompositeState moved = shift_by(h, 3);
    CHECK(moved.support_min() == 3);
    CHECK(std::abs(inner(moved, localized(named_state("h"), 3)) - 1.0) <= 1e-12);
    CHECK(std::abs(inner(shift_by(h, 0), h) - 1.0) <= 1e-12);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        const Walk w = random_general_walk(rng, 3, 2);
        const CompositeState out = run(w, random_coin(rng));
        const CompositeState once = shift_by(shift_by(out, 5), -2);
        const CompositeState direct = shift_by(out, 3);
        CHECK(once.amplitudes().size() == direct.amplitudes().size());
        CHECK(std::abs(inner(once, direct) - 1.0) <= 1e-10);
    }
}

TEST_CASE("translational invariance") {
    CHECK(is_translationally_invariant(localized(named_state("d"), 7), 1e-9));

    // Two positions carrying orthogonal coin states.
    CompositeState two;
    const CoinState s = named_state("f");
    const CoinState sp = perp(s);
    two.add(0, {0.6 * s.a0(), 0.6 * s.a1()});
    two.add(2, {0.8 * sp.a0(), 0.8 * sp.a1()});
    CHECK(is_translationally_invariant(two, 1e-9));

    // Same coin state at adjacent positions overlaps its own shift.
    CompositeState bad;
    const double rt = 1.0 / std::sqrt(2.0);
    bad.add(0, {rt, 0.0});
    bad.add(1, {rt, 0.0});
    CHECK_FALSE(is_translationally_invariant(bad, 1e-9));
    CHECK_THROWS_AS(is_translationally_invariant(bad, 0.0), std::invalid_argument);
}

TEST_CASE("walk outputs are translationally invariant") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const Walk w = random_general_walk(rng, 4, 3);
        CHECK(is_translationally_invariant(run(w, random_coin(rng)), 1e-9));
    }
}

TEST_CASE("histogram rows") {
    const auto single = histogram(localized(named_state("h"), -2));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == -2);
    CHECK(single[0].second == doctest::Approx(1.0));

    const GeneralStep fused{2, -2, named_state("d"), named_state("0")};
    const auto one = histogram(apply_step(fused, localized(named_state("0"), 0)));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == 2);
    CHECK(one[0].second == doctest::Approx(1.0));

    const auto split = histogram(apply_step(fused, localized(named_state("h"), 0)));
    REQUIRE(split.size() == 2);
    CHECK(split[0].first == -2);
    CHECK(split[0].second == doctest::Approx(0.5));
    CHECK(split[1].first == 2);
    CHECK(split[1].second == doctest::Approx(0.5));

    double total = 0.0;
    for (const auto& [m, p] : split) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ensembles validate their weights") {
    const CompositeState s = localized(named_state("0"), 0);
    CHECK_NOTHROW(CompositeEnsemble({{0.5, s}, {0.5, s}}));
    CHECK_THROWS_AS(CompositeEnsemble({{0.7, s}, {0.7, s}}), std::invalid_argument);
    CHECK_THROWS_AS(CompositeEnsemble({{1.4, s}, {-0.4, s}}), std::invalid_argument);
}

TEST_CASE("norm is preserved by every step variant") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const QuantumStep step = random_step(rng);
        CompositeState st = localized(random_coin(rng), 0);
        for (int k = 0; k < 4; ++k) st = apply_step(step, st);
        CHECK(std::abs(st.norm() - 1.0) <= 1e-10);
    }
}
