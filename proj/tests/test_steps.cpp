#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/oracle.hpp"
#include "qwalk/steps.hpp"

using namespace qwalk;

namespace {

double fidelity(const CompositeState& a, const CompositeState& b) {
    return std::abs(inner(a, b));
}

double distance(const CompositeState& a, const CompositeState& b) {
    CompositeState diff = a;
    for (const auto& [m, av] : b.amplitudes()) diff.add(m, {-av[0], -av[1]});
    return diff.norm();
}

// Reference shift-then-toss pipeline for a factorized general step.
CompositeState recompose(const ShiftPart& shift, const Mat2& toss,
                         const CompositeState& in) {
    CompositeState tossed;
    for (const auto& [m, av] : in.amplitudes()) {
        const auto rotated = toss.apply(av[0], av[1]);
        tossed.add(m, {rotated[0], rotated[1]});
    }
    const CoinState& c = shift.coin;
    const CoinState cp = perp(c);
    CompositeState out;
    for (const auto& [m, av] : tossed.amplitudes()) {
        const cplx along = std::conj(c.a0()) * av[0] + std::conj(c.a1()) * av[1];
        const cplx across = std::conj(cp.a0()) * av[0] + std::conj(cp.a1()) * av[1];
        out.add(m + shift.p, {along * c.a0(), along * c.a1()});
        out.add(m + shift.q, {across * cp.a0(), across * cp.a1()});
    }
    out.compact();
    return out;
}

}  // namespace

TEST_CASE("general step action on its shift basis") {
    const GeneralStep t{-1, -1, named_state("v"), named_state("h")};
    const CompositeState out = apply_step(t, localized(named_state("h"), 0));
    REQUIRE(out.amplitudes().size() == 1);
    CHECK(std::abs(inner(out, localized(named_state("v"), -1)) - 1.0) <= 1e-12);

    const GeneralStep t4{4, -5, named_state("0"), named_state("1")};
    const CompositeState out4 = apply_step(t4, localized(named_state("1"), -3));
    REQUIRE(out4.amplitudes().size() == 1);
    CHECK(std::abs(inner(out4, localized(named_state("0"), 1)) - 1.0) <= 1e-12);
}

TEST_CASE("general step acts linearly on superpositions") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const GeneralStep t = random_general_step(rng);
        const cplx a(0.6, 0.0);
        const cplx b(0.0, 0.8);
        CompositeState in;
        in.add(0, {a * t.shift_in.a0() + b * perp(t.shift_in).a0(),
                   a * t.shift_in.a1() + b * perp(t.shift_in).a1()});
        const CompositeState out = apply_step(t, in);

        CompositeState want;
        const CoinState cp = perp(t.coin_out);
        want.add(t.p, {a * t.coin_out.a0(), a * t.coin_out.a1()});
        want.add(t.q, {b * cp.a0(), b * cp.a1()});
        want.compact();
        CHECK(distance(out, want) <= 1e-12);
    }
}

TEST_CASE("factorize splits into shift and coin toss") {
    const auto [shift_id, toss_id] = factorize(GeneralStep{1, -1, named_state("0"),
                                                           named_state("0")});
    CHECK(shift_id.p == 1);
    CHECK(shift_id.q == -1);
    CHECK((toss_id - Mat2::identity()).norm() <= 1e-12);

    const CoinState c = named_state("d");
    const CoinState s = named_state("f");
    const auto [shift_cs, toss_cs] = factorize(GeneralStep{0, 0, c, s});
    CHECK(shift_cs.p == 0);
    // |c><s| + |c_perp><s_perp| sends s to c.
    const auto img = toss_cs.apply(s.a0(), s.a1());
    CHECK(std::abs(img[0] - c.a0()) <= 1e-12);
    CHECK(std::abs(img[1] - c.a1()) <= 1e-12);

    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
        const GeneralStep t = random_general_step(rng);
        const auto [shift, toss] = factorize(t);
        CompositeState in;
        in.add(0, {cplx(0.36, -0.48), cplx(0.6, 0.52)});
        const double n = in.norm();
        CompositeState unit;
        for (const auto& [m, av] : in.amplitudes()) unit.add(m, {av[0] / n, av[1] / n});
        CHECK(distance(apply_step(t, unit), recompose(shift, toss, unit)) <= 1e-12);
    }
}

TEST_CASE("daisy chains collapse to a single step") {
    const GeneralStep t1{1, -1, named_state("f"), named_state("0")};
    const GeneralStep t2{1, -1, named_state("d"), named_state("f")};
    const GeneralStep whole = compose_daisy_chain({t1, t2});
    CHECK(whole.p == 2);
    CHECK(whole.q == -2);
    CHECK(same_up_to_phase(whole.coin_out, named_state("d"), 1e-12));
    CHECK(same_up_to_phase(whole.shift_in, named_state("0"), 1e-12));

    // Repetition of a coin == shift step.
    std::mt19937_64 rng(2);
    const CoinState u = random_coin(rng);
    const std::vector<GeneralStep> reps(5, GeneralStep{2, -3, u, u});
    const GeneralStep powered = compose_daisy_chain(reps);
    CHECK(powered.p == 10);
    CHECK(powered.q == -15);

    CHECK_THROWS_WITH_AS(
        compose_daisy_chain({GeneralStep{1, 0, named_state("h"), named_state("0")},
                             GeneralStep{5, 5, named_state("0"), named_state("v")}}),
        doctest::Contains("steps 1 and 2"), std::invalid_argument);
    CHECK_THROWS_AS(compose_daisy_chain({}), std::invalid_argument);
}

TEST_CASE("daisy-chain collapse equals sequential application") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<Position> stride(-3, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        std::vector<GeneralStep> chain;
        CoinState carry = random_coin(rng);
        for (int k = 0; k < 3; ++k) {
            // Chain with a stray phase on the link; the collapse must fold
            // it away.
            const cplx ph = std::polar(1.0, 2.0 * 3.14159265358979 * unit(rng));
            const CoinState shift_in =
                k == 0 ? carry : CoinState(ph * carry.a0(), ph * carry.a1());
            GeneralStep s{stride(rng), stride(rng), random_coin(rng), shift_in};
            carry = s.coin_out;
            chain.push_back(s);
        }
        const GeneralStep whole = compose_daisy_chain(chain);
        for (const char* name : {"0", "1"}) {
            CompositeState seq = localized(named_state(name), 0);
            for (const auto& s : chain) seq = apply_step(s, seq);
            CHECK(distance(seq, apply_step(whole, localized(named_state(name), 0))) <=
                  1e-12);
        }
    }
}

TEST_CASE("step equivalence") {
    std::mt19937_64 rng(9);
    const GeneralStep t = random_general_step(rng);
    const GeneralStep swapped{t.q, t.p, perp(t.coin_out), perp(t.shift_in)};
    CHECK(step_equivalent(t, swapped));
    CHECK(step_equivalent(t, t));

    const GeneralStep plain{1, -1, named_state("0"), named_state("0")};
    const GeneralStep other{1, -1, named_state("0"), named_state("h")};
    CHECK_FALSE(step_equivalent(plain, other));
}

TEST_CASE("split step action and decomposition") {
    // Full participation moves everything one site forward.
    const SplitStep full = make_split(1.0, 0.0, named_state("0"));
    const CompositeState fw = apply_step(full, localized(named_state("0"), 2));
    CHECK(std::abs(inner(fw, localized(named_state("0"), 3)) - 1.0) <= 1e-12);

    // Zero participation only rotates the coin, with the phase factor.
    const SplitStep frozen = make_split(0.0, 0.7, named_state("d"));
    const CompositeState st = apply_step(frozen, localized(named_state("0"), 4));
    REQUIRE(st.amplitudes().size() == 1);
    CHECK(st.support_min() == 4);
    const CompositeState want = localized(perp(named_state("d")), 4);
    const cplx ov = inner(want, st);
    CHECK(std::abs(ov - std::polar(1.0, 0.7)) <= 1e-12);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const SplitStep s = make_split(unit(rng), 2.0 * 3.14159265358979 * unit(rng),
                                       random_coin(rng));
        const auto [first, second] = split_step_decomposition(s);
        for (const char* name : {"0", "1"}) {
            const CompositeState in = localized(named_state(name), 0);
            const CompositeState via_pair = apply_step(second, apply_step(first, in));
            CHECK(distance(via_pair, apply_step(s, in)) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(make_split(1.2, 0.0, named_state("0")), std::invalid_argument);
}

TEST_CASE("homogeneous power identities") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Position> stride(-3, 3);
    for (int i = 0; i < 50; ++i) {
        const CoinState u = random_coin(rng);
        const GeneralStep same{stride(rng), stride(rng), u, u};
        for (int N : {2, 5, 8}) {
            CompositeState powered = localized(named_state("1"), 0);
            for (int k = 0; k < N; ++k) powered = apply_step(same, powered);
            const GeneralStep big{same.p * N, same.q * N, u, u};
            CHECK(fidelity(powered, apply_step(big, localized(named_state("1"), 0))) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }

        // Orthogonal coin/shift pair: even powers collapse with a definite
        // sign, so compare amplitudes, not just fidelity.
        const GeneralStep ortho{stride(rng), stride(rng), perp(u), u};
        for (int N : {2, 4, 6}) {
            CompositeState powered = localized(named_state("0"), 0);
            for (int k = 0; k < N; ++k) powered = apply_step(ortho, powered);
            const Position d = (N / 2) * (ortho.p + ortho.q);
            const double sign = (N / 2) % 2 == 0 ? 1.0 : -1.0;
            CompositeState want =
                apply_step(GeneralStep{d, d, u, u}, localized(named_state("0"), 0));
            CompositeState signed_want;
            for (const auto& [m, av] : want.amplitudes()) {
                signed_want.add(m, {sign * av[0], sign * av[1]});
            }
            CHECK(distance(powered, signed_want) <= 1e-12);
        }
    }
}

TEST_CASE("conventional step equals its toss-then-shift pipeline") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const ConventionalStep c = make_conventional(
            2.0 * 3.14159265358979 * unit(rng), 0.5 * 3.14159265358979 * unit(rng),
            2.0 * 3.14159265358979 * unit(rng));
        const CompositeState in = localized(random_coin(rng), 0);
        const Mat2 toss = conventional_coin_matrix(c);
        CompositeState tossed;
        for (const auto& [m, av] : in.amplitudes()) {
            const auto rot = toss.apply(av[0], av[1]);
            tossed.add(m, {rot[0], rot[1]});
        }
        const GeneralStep branch{-1, 1, named_state("0"), named_state("0")};
        CHECK(distance(apply_step(c, in), apply_step(branch, tossed)) <= 1e-12);
    }
    CHECK_THROWS_AS(make_conventional(0.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_conventional(-1.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("displacement contributions per variant") {
    CHECK(displacement(QuantumStep(GeneralStep{3, -4, named_state("h"),
                                               named_state("v")})) == -1);
    CHECK(displacement(QuantumStep(make_conventional(0.1, 0.2, 0.3))) == 0);
    CHECK(displacement(QuantumStep(make_split(0.4, 0.0, named_state("d")))) == 0);
}
