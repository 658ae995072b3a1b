#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/oracle.hpp"
#include "qwalk/walks.hpp"

using namespace qwalk;

namespace {

// Endpoint check: single support position with the wanted coin state up to
// a global phase.
void check_endpoint(const CompositeState& st, Position pos, const CoinState& coin) {
    REQUIRE(st.amplitudes().size() == 1);
    CHECK(st.support_min() == pos);
    CHECK(std::abs(inner(st, localized(coin, pos))) == doctest::Approx(1.0).epsilon(1e-12));
}

}  // namespace

TEST_CASE("walk displacement") {
    const GeneralStep unbiased{1, -1, named_state("d"), named_state("f")};
    CHECK(displacement(Walk({QuantumStep(unbiased)})) == 0);

    const Walk designed({QuantumStep(GeneralStep{-1, -1, named_state("v"), named_state("h")}),
                         QuantumStep(GeneralStep{3, -4, named_state("h"), named_state("v")})});
    CHECK(displacement(designed) == -3);

    for (Position m : {1, 2, 3}) {
        for (long long n : {1, 2}) {
            const Walk w({QuantumStep(GeneralStep{m, m, named_state("d"), named_state("a")})},
                         2 * n);
            CHECK(displacement(w) == 4 * n * m);
        }
    }

    const Walk mixed_kinds({QuantumStep(make_conventional(0.0, 0.3, 0.0)),
                            QuantumStep(make_split(0.5, 0.1, named_state("h"))),
                            QuantumStep(GeneralStep{2, 1, named_state("0"), named_state("0")})});
    CHECK(displacement(mixed_kinds) == 3);
}

TEST_CASE("walk construction rejects bad shapes") {
    CHECK_THROWS_AS(Walk({}), std::invalid_argument);
    CHECK_THROWS_AS(Walk({QuantumStep(GeneralStep{})}, 0), std::invalid_argument);
}

TEST_CASE("two-step construction flows") {
    const QuantumStep t1 = GeneralStep{-1, -1, named_state("v"), named_state("h")};
    const QuantumStep t2 = GeneralStep{3, -4, named_state("h"), named_state("v")};

    check_endpoint(run(Walk({t1}, 2), named_state("h")), -2, named_state("h"));
    check_endpoint(run(Walk({t2}, 2), named_state("h")), -1, named_state("h"));
    check_endpoint(run(Walk({t1, t2}), named_state("h")), 2, named_state("h"));
}

TEST_CASE("four-step construction flows") {
    const QuantumStep t1 = GeneralStep{-1, -1, named_state("h"), named_state("0")};
    const QuantumStep t2 = GeneralStep{-1, -1, named_state("d"), named_state("h")};
    const QuantumStep t3 = GeneralStep{-1, -1, named_state("1"), named_state("d")};
    const QuantumStep t4 = GeneralStep{4, -5, named_state("0"), named_state("1")};

    check_endpoint(run(Walk({t1}, 4), named_state("0")), -4, named_state("0"));
    check_endpoint(run(Walk({t2}, 4), named_state("0")), -4, named_state("v"));
    check_endpoint(run(Walk({t3}, 4), named_state("0")), -4, named_state("0"));
    check_endpoint(run(Walk({t4}, 4), named_state("0")), -2, named_state("0"));
    check_endpoint(run(Walk({t1, t2, t3, t4}), named_state("0")), 1, named_state("0"));
}

TEST_CASE("repeat is equivalent to flattened application") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 30; ++i) {
        const Walk base = random_general_walk(rng, 3, 2);
        const Walk repeated(base.steps, 3);
        CompositeState manual = localized(named_state("f"), 0);
        for (int k = 0; k < 3; ++k) {
            for (const auto& s : base.steps) manual = apply_step(s, manual);
        }
        CHECK(std::abs(inner(manual, run(repeated, named_state("f"))) - 1.0) <= 1e-10);
    }
}

TEST_CASE("orthogonal home states give orthogonal outputs") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const Walk w = random_general_walk(rng, 5, 4);
        const CoinState s = random_coin(rng);
        CHECK(std::abs(inner(run(w, s), run(w, perp(s)))) <= 1e-10);
    }
}

TEST_CASE("run_mixed branch structure") {
    const Walk w({QuantumStep(GeneralStep{1, -1, named_state("f"), named_state("0")})}, 2);

    const CompositeEnsemble pure = run_mixed(w, CoinDensity::pure(named_state("d")));
    REQUIRE(pure.branches().size() == 1);
    CHECK(pure.branches()[0].first == doctest::Approx(1.0));

    const CompositeEnsemble even = run_mixed(w, CoinDensity(0.5, named_state("d")));
    REQUIRE(even.branches().size() == 2);
    CHECK(even.branches()[0].first == doctest::Approx(0.5));
    CHECK(std::abs(inner(even.branches()[0].second, even.branches()[1].second)) <= 1e-10);
}

TEST_CASE("all-negative homogeneous walks never reach positive mean") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<Position> neg(-4, -1);
    std::uniform_int_distribution<int> reps(1, 6);
    for (int i = 0; i < 50; ++i) {
        const GeneralStep t{neg(rng), neg(rng), random_coin(rng), random_coin(rng)};
        const Walk w({QuantumStep(t)}, reps(rng));
        const CompositeState out = run(w, random_coin(rng));
        double mean = 0.0;
        for (const auto& [m, p] : histogram(out)) mean += static_cast<double>(m) * p;
        CHECK(mean < 0.0);
    }
}
