#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/coin.hpp"
#include "qwalk/mat2.hpp"
#include "qwalk/oracle.hpp"

using namespace qwalk;

namespace {
const double pi = std::numbers::pi;
const double rt = 1.0 / std::sqrt(2.0);

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("perp maps the reference states onto their partners") {
    const CoinState one = perp(named_state("0"));
    CHECK(close(one.a0(), 0.0));
    CHECK(close(one.a1(), 1.0));

    const CoinState v = perp(named_state("h"));
    CHECK(close(v.a0(), -rt));
    CHECK(close(v.a1(), rt));

    const CoinState a = perp(named_state("d"));
    CHECK(close(a.a0(), cplx(0.0, rt)));
    CHECK(close(a.a1(), rt));
}

TEST_CASE("perp is an involution up to sign and always orthogonal") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 1000; ++i) {
        const CoinState s = random_coin(rng);
        const CoinState p = perp(s);
        CHECK(std::abs(inner(s, p)) <= 1e-12);
        const CoinState pp = perp(p);
        CHECK(close(pp.a0(), -s.a0()));
        CHECK(close(pp.a1(), -s.a1()));
    }
}

TEST_CASE("qubit vectors of reference densities") {
    const QubitVector z = qubit_vector(named_state("0"));
    CHECK(z.x == doctest::Approx(0.0));
    CHECK(z.z == doctest::Approx(1.0));

    const QubitVector x = qubit_vector(named_state("h"));
    CHECK(x.x == doctest::Approx(1.0));
    CHECK(x.z == doctest::Approx(0.0).epsilon(1e-12));

    const QubitVector mixed = qubit_vector(CoinDensity(0.5, named_state("d")));
    CHECK(mixed.norm() <= 1e-12);
}

TEST_CASE("mixed qubit vector scales with 2r-1") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const CoinState s = random_coin(rng);
        const double r = unit(rng);
        const QubitVector pure = qubit_vector(s);
        const QubitVector mixed = qubit_vector(CoinDensity(r, s));
        CHECK(mixed.x == doctest::Approx((2 * r - 1) * pure.x).epsilon(1e-10));
        CHECK(mixed.y == doctest::Approx((2 * r - 1) * pure.y).epsilon(1e-10));
        CHECK(mixed.z == doctest::Approx((2 * r - 1) * pure.z).epsilon(1e-10));
    }
}

TEST_CASE("from_bloch hits the reference states") {
    CHECK(same_up_to_phase(from_bloch({0.0, 0.0}), named_state("0"), 1e-12));
    CHECK(same_up_to_phase(from_bloch({pi / 2, 0.0}), named_state("h"), 1e-12));
    CHECK(same_up_to_phase(from_bloch({pi / 4, 0.0}), named_state("f"), 1e-12));
    CHECK_THROWS_AS(from_bloch({-0.1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(from_bloch({0.5, 7.0}), std::invalid_argument);
}

TEST_CASE("from_bloch matches the spherical qubit vector") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double theta = pi * u01(rng);
        const double phi = 2.0 * pi * u01(rng) * 0.999;
        const QubitVector v = qubit_vector(from_bloch({theta, phi}));
        CHECK(v.x == doctest::Approx(std::sin(theta) * std::cos(phi)).epsilon(1e-10));
        CHECK(v.y == doctest::Approx(std::sin(theta) * std::sin(phi)).epsilon(1e-10));
        CHECK(v.z == doctest::Approx(std::cos(theta)).epsilon(1e-10));
    }
}

TEST_CASE("bloch angles round trip up to global phase") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const CoinState s = random_coin(rng);
        CHECK(same_up_to_phase(from_bloch(to_bloch(s)), s, 1e-10));
    }
    // Poles canonicalize phi to zero.
    CHECK(to_bloch(named_state("1")).phi == doctest::Approx(0.0));
}

TEST_CASE("named_state covers the token set and rejects others") {
    const CoinState a = named_state("a");
    CHECK(close(a.a0(), cplx(0.0, rt)));
    CHECK(close(a.a1(), rt));
    const CoinState f = named_state("f");
    CHECK(close(f.a0(), std::cos(pi / 8)));
    CHECK(close(f.a1(), std::sin(pi / 8)));
    CHECK_THROWS_AS(named_state("x"), std::invalid_argument);
}

TEST_CASE("state text forms parse") {
    CHECK(same_up_to_phase(parse_state("h"), named_state("h"), 1e-12));
    CHECK(same_up_to_phase(parse_state("bloch:1.5707963267948966,0"), named_state("h"),
                           1e-9));
    const CoinState s = parse_state("0.70710678,0,0,0.70710678");
    CHECK(same_up_to_phase(s, named_state("h"), 1e-7));
    CHECK_THROWS_AS(parse_state(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("bloch:0.1"), std::invalid_argument);
}

TEST_CASE("constructor renormalizes table-style decimals and rejects garbage") {
    const CoinState t(0.989, 0.146);  // three-decimal input, slightly off-norm
    CHECK(std::abs(std::norm(t.a0()) + std::norm(t.a1()) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(CoinState(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CoinState(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("density parsing and validation") {
    const CoinDensity d = parse_density("mix:0.25,h");
    CHECK(d.r() == doctest::Approx(0.25));
    CHECK(same_up_to_phase(d.basis(), named_state("h"), 1e-12));
    CHECK(parse_density("d").r() == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_density("mix:1.5,h"), std::invalid_argument);
    CHECK_THROWS_AS(parse_density("mix:0.5"), std::invalid_argument);
}

TEST_CASE("mix produces the canonical rank-2 form") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const CoinState s1 = random_coin(rng);
        const CoinState s2 = random_coin(rng);
        const double w = unit(rng);
        const CoinDensity rho = mix(w, s1, 1.0 - w, s2);
        CHECK(rho.r() >= 0.5 - 1e-12);
        // Same qubit vector as the weighted average of the inputs.
        const QubitVector got = qubit_vector(rho);
        const QubitVector v1 = qubit_vector(s1);
        const QubitVector v2 = qubit_vector(s2);
        CHECK(got.x == doctest::Approx(w * v1.x + (1 - w) * v2.x).epsilon(1e-9));
        CHECK(got.y == doctest::Approx(w * v1.y + (1 - w) * v2.y).epsilon(1e-9));
        CHECK(got.z == doctest::Approx(w * v1.z + (1 - w) * v2.z).epsilon(1e-9));
        // And the matrix view is a unit-trace Hermitian matrix.
        const Mat2 m = density_matrix(rho);
        CHECK(m.is_hermitian());
        CHECK(m.trace().real() == doctest::Approx(1.0));
    }
}
