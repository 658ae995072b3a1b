#include "qwalk/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qwalk {

CoinState random_coin(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double z = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double global = 2.0 * std::numbers::pi * unit(rng);
    const double theta = std::acos(z);
    const cplx phase = std::polar(1.0, global);
    return CoinState(phase * std::cos(theta / 2.0),
                     phase * std::polar(std::sin(theta / 2.0), phi));
}

CoinDensity random_density(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return CoinDensity(unit(rng), random_coin(rng));
}

GeneralStep random_general_step(std::mt19937_64& rng, Position max_stride) {
    std::uniform_int_distribution<Position> stride(-max_stride, max_stride);
    return GeneralStep{stride(rng), stride(rng), random_coin(rng), random_coin(rng)};
}

QuantumStep random_step(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
        case 0:
            return random_general_step(rng);
        case 1:
            return make_conventional(2.0 * std::numbers::pi * unit(rng),
                                     0.5 * std::numbers::pi * unit(rng),
                                     2.0 * std::numbers::pi * unit(rng));
        default:
            return make_split(unit(rng), 2.0 * std::numbers::pi * unit(rng),
                              random_coin(rng));
    }
}

Walk random_general_walk(std::mt19937_64& rng, int max_steps, Position max_stride) {
    std::uniform_int_distribution<int> count(1, max_steps);
    std::vector<QuantumStep> steps;
    const int n = count(rng);
    steps.reserve(n);
    for (int i = 0; i < n; ++i) steps.push_back(random_general_step(rng, max_stride));
    return Walk(std::move(steps));
}

bool OracleReport::all_pass() const {
    for (const auto& s : suites) {
        if (!s.pass) return false;
    }
    return true;
}

namespace {

CompositeState random_composite(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> support(1, 4);
    std::uniform_int_distribution<Position> pos(-3, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CompositeState st;
    const int terms = support(rng);
    for (int i = 0; i < terms; ++i) {
        const cplx a(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        const cplx b(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        st.add(pos(rng), {a, b});
    }
    const double n = st.norm();
    CompositeState out;
    for (const auto& [m, av] : st.amplitudes()) out.add(m, {av[0] / n, av[1] / n});
    return out;
}

double state_distance(const CompositeState& a, const CompositeState& b) {
    CompositeState diff = a;
    for (const auto& [m, av] : b.amplitudes()) diff.add(m, {-av[0], -av[1]});
    return diff.norm();
}

CompositeState scaled(const CompositeState& a, cplx k) {
    CompositeState out;
    for (const auto& [m, av] : a.amplitudes()) out.add(m, {k * av[0], k * av[1]});
    return out;
}

OracleSuiteResult suite_unitarity(std::mt19937_64& rng, long long trials) {
    OracleSuiteResult res{"unitarity", trials, 0.0, false};
    for (long long t = 0; t < trials; ++t) {
        const QuantumStep step = random_step(rng);
        const CompositeState x = random_composite(rng);
        const CompositeState y = random_composite(rng);
        const cplx before = inner(x, y);
        const cplx after = inner(apply_step(step, x), apply_step(step, y));
        res.max_error = std::max(res.max_error, std::abs(after - before));
    }
    res.pass = res.max_error <= 1e-10;
    return res;
}

OracleSuiteResult suite_translational_invariance(std::mt19937_64& rng,
                                                 long long trials) {
    OracleSuiteResult res{"translational-invariance", trials, 0.0, false};
    bool ok = true;
    for (long long t = 0; t < trials; ++t) {
        const Walk w = random_general_walk(rng, 4, 3);
        const CoinState home = random_coin(rng);
        const CompositeState out = run(w, home);
        if (!is_translationally_invariant(out, 1e-9)) ok = false;
        const double cross = std::abs(inner(out, run(w, perp(home))));
        res.max_error = std::max(res.max_error, cross);
        res.max_error = std::max(res.max_error, std::abs(out.norm() - 1.0));
    }
    res.pass = ok && res.max_error <= 1e-10;
    return res;
}

OracleSuiteResult suite_step_identities(std::mt19937_64& rng, long long trials) {
    OracleSuiteResult res{"step-identities", trials, 0.0, false};
    std::uniform_int_distribution<int> chain_len(2, 4);
    std::uniform_int_distribution<int> power(1, 8);
    std::uniform_int_distribution<int> even_power(1, 3);
    std::uniform_int_distribution<Position> stride(-3, 3);
    const CoinState basis0(1.0, 0.0);
    const CoinState basis1(0.0, 1.0);
    for (long long t = 0; t < trials; ++t) {
        // Chained steps collapse to one step with summed strides.
        const int len = chain_len(rng);
        std::vector<GeneralStep> chain;
        CoinState carry = random_coin(rng);
        for (int i = 0; i < len; ++i) {
            GeneralStep s{stride(rng), stride(rng), random_coin(rng), carry};
            carry = s.coin_out;
            chain.push_back(s);
        }
        const GeneralStep whole = compose_daisy_chain(chain);
        for (const CoinState& b : {basis0, basis1}) {
            CompositeState seq = localized(b, 0);
            for (const auto& s : chain) seq = apply_step(s, seq);
            res.max_error =
                std::max(res.max_error, state_distance(seq, apply_step(whole, localized(b, 0))));
        }

        // N-fold power of a step with matching coin and shift states.
        const CoinState u = random_coin(rng);
        const GeneralStep same{stride(rng), stride(rng), u, u};
        const int N = power(rng);
        CompositeState powered = localized(basis0, 0);
        for (int i = 0; i < N; ++i) powered = apply_step(same, powered);
        const GeneralStep collapsed{same.p * N, same.q * N, u, u};
        const CompositeState direct = apply_step(collapsed, localized(basis0, 0));
        const cplx overlap = inner(direct, powered);
        res.max_error = std::max(res.max_error, std::abs(std::abs(overlap) - 1.0));

        // Even power of a step whose coin is orthogonal to its shift state;
        // the collapse carries an explicit sign, so compare with phase.
        const CoinState u2 = random_coin(rng);
        const GeneralStep ortho{stride(rng), stride(rng), perp(u2), u2};
        const int N2 = 2 * even_power(rng);
        for (const CoinState& b : {basis0, basis1}) {
            CompositeState powered2 = localized(b, 0);
            for (int i = 0; i < N2; ++i) powered2 = apply_step(ortho, powered2);
            const Position d = (N2 / 2) * (ortho.p + ortho.q);
            const double sign = (N2 / 2) % 2 == 0 ? 1.0 : -1.0;
            const CompositeState direct2 = scaled(
                apply_step(GeneralStep{d, d, u2, u2}, localized(b, 0)), sign);
            res.max_error = std::max(res.max_error, state_distance(powered2, direct2));
        }
    }
    res.pass = res.max_error <= 1e-12;
    return res;
}

OracleSuiteResult suite_analytic_payoff(std::mt19937_64& rng, long long trials) {
    OracleSuiteResult res{"analytic-payoff", trials, 0.0, false};
    const Observable obs[3] = {mu(), delta(), zero_projector()};
    std::uniform_int_distribution<int> which(0, 2);
    for (long long t = 0; t < trials; ++t) {
        const Walk w = random_general_walk(rng, 6, 5);
        const Observable& o = obs[which(rng)];
        const CoinDensity home = random_density(rng);
        const double direct = payoff(o, w, home);
        const double closed = payoff_analytic(analyze(o, w, 0.0), home);
        res.max_error = std::max(res.max_error, std::abs(direct - closed));
    }
    res.pass = res.max_error <= 1e-9;
    return res;
}

OracleSuiteResult suite_mean_position_complement(std::mt19937_64& rng,
                                                 long long trials) {
    OracleSuiteResult res{"mean-position-complement", trials, 0.0, false};
    const Observable pos = mu();
    for (long long t = 0; t < trials; ++t) {
        const Walk w = random_general_walk(rng, 5, 4);
        const CoinState s = random_coin(rng);
        const double lhs = payoff(pos, w, perp(s));
        const double rhs = static_cast<double>(displacement(w)) - payoff(pos, w, s);
        res.max_error = std::max(res.max_error, std::abs(lhs - rhs));
    }
    res.pass = res.max_error <= 1e-9;
    return res;
}

OracleSuiteResult suite_parrondo_convexity(std::mt19937_64& rng, long long trials) {
    OracleSuiteResult res{"parrondo-convexity", trials, 0.0, false};
    // A family with a generous Parrondo region, so rejection sampling of
    // pure Parrondo states terminates quickly.
    const CoinState f = named_state("f");
    const CoinState d = named_state("d");
    const std::vector<QuantumStep> steps = {
        GeneralStep{1, -1, f, named_state("0")},
        GeneralStep{1, -1, d, f},
    };
    const WalkFamily fam = build_family(steps, 3);
    const Observable o = mu();
    std::vector<CoinObservableAnalysis> analyses;
    for (const auto& w : fam.walks) analyses.push_back(analyze(o, w, 0.0));
    const auto flagged = [&](const CoinDensity& home) {
        for (size_t i = 0; i + 1 < analyses.size(); ++i) {
            if (classify(analyses[i], home) != Outcome::Lose) return false;
        }
        return classify(analyses.back(), home) == Outcome::Win;
    };
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    bool ok = true;
    long long done = 0;
    for (long long t = 0; t < trials; ++t) {
        CoinState a, b;
        int found = 0;
        for (int attempt = 0; attempt < 4000 && found < 2; ++attempt) {
            const CoinState cand = random_coin(rng);
            if (flagged(CoinDensity::pure(cand))) {
                (found == 0 ? a : b) = cand;
                ++found;
            }
        }
        if (found < 2) {
            ok = false;
            break;
        }
        const double weight = unit(rng);
        if (!flagged(mix(weight, a, 1.0 - weight, b))) ok = false;
        ++done;
    }
    res.trials = done;
    res.pass = ok;
    return res;
}

}  // namespace

OracleReport run_oracle(std::uint64_t seed, long long trials) {
    std::mt19937_64 rng(seed);
    OracleReport report;
    report.suites.push_back(suite_unitarity(rng, trials));
    report.suites.push_back(suite_translational_invariance(rng, trials));
    report.suites.push_back(suite_step_identities(rng, std::min<long long>(trials, 200)));
    report.suites.push_back(suite_analytic_payoff(rng, std::min<long long>(trials, 1000)));
    report.suites.push_back(suite_mean_position_complement(rng, trials));
    report.suites.push_back(
        suite_parrondo_convexity(rng, std::min<long long>(trials, 100)));
    return report;
}

void print_oracle_report(std::ostream& out, const OracleReport& report) {
    for (const auto& s : report.suites) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-28s trials=%-6lld max_err=%.3e %s",
                      s.name.c_str(), s.trials, s.max_error,
                      s.pass ? "PASS" : "FAIL");
        out << line << '\n';
    }
    out << (report.all_pass() ? "oracle: all suites passed"
                              : "oracle: FAILURES detected")
        << '\n';
}

}  // namespace qwalk
