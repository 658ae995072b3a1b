#include "qwalk/steps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

GeneralStep make_general(Position p, Position q, const CoinState& coin_out,
                         const CoinState& shift_in) {
    return {p, q, coin_out, shift_in};
}

ConventionalStep make_conventional(double alpha, double beta, double gamma) {
    const double pi = std::numbers::pi;
    if (!(alpha >= 0.0 && alpha < 2.0 * pi) || !(gamma >= 0.0 && gamma < 2.0 * pi)) {
        throw std::invalid_argument("alpha and gamma must lie in [0, 2*pi)");
    }
    if (!(beta >= 0.0 && beta <= pi / 2.0)) {
        throw std::invalid_argument("beta must lie in [0, pi/2]");
    }
    return {alpha, beta, gamma};
}

SplitStep make_split(double delta_frac, double delta_phase, const CoinState& coin) {
    if (!(delta_frac >= 0.0 && delta_frac <= 1.0)) {
        throw std::invalid_argument("delta fraction must lie in [0, 1]");
    }
    return {delta_frac, delta_phase, coin};
}

CompositeState apply_step(const GeneralStep& step, const CompositeState& state) {
    const CoinState& s = step.shift_in;
    const CoinState sp = perp(s);
    const CoinState& c = step.coin_out;
    const CoinState cp = perp(c);
    CompositeState out;
    for (const auto& [m, av] : state.amplitudes()) {
        const cplx along = std::conj(s.a0()) * av[0] + std::conj(s.a1()) * av[1];
        const cplx across = std::conj(sp.a0()) * av[0] + std::conj(sp.a1()) * av[1];
        out.add(m + step.p, {along * c.a0(), along * c.a1()});
        out.add(m + step.q, {across * cp.a0(), across * cp.a1()});
    }
    out.compact();
    return out;
}

Mat2 conventional_coin_matrix(const ConventionalStep& step) {
    const double cb = std::cos(step.beta);
    const double sb = std::sin(step.beta);
    return {std::polar(cb, step.alpha), -std::polar(sb, -step.gamma),
            std::polar(sb, step.gamma), std::polar(cb, -step.alpha)};
}

CompositeState apply_step(const ConventionalStep& step, const CompositeState& state) {
    const Mat2 toss = conventional_coin_matrix(step);
    CompositeState out;
    for (const auto& [m, av] : state.amplitudes()) {
        const auto tossed = toss.apply(av[0], av[1]);
        out.add(m - 1, {tossed[0], 0.0});
        out.add(m + 1, {0.0, tossed[1]});
    }
    out.compact();
    return out;
}

CompositeState apply_step(const SplitStep& step, const CompositeState& state) {
    const CoinState& c = step.coin;
    const CoinState cp = perp(c);
    const double walk_amp = std::sqrt(step.delta_frac);
    const cplx stay0 = std::polar(std::sqrt(1.0 - step.delta_frac), step.delta_phase);
    const cplx stay1 = -std::polar(std::sqrt(1.0 - step.delta_frac), -step.delta_phase);
    CompositeState out;
    for (const auto& [m, av] : state.amplitudes()) {
        // |0;m> -> stay0 |c_perp;m> + walk_amp |c;m+1>
        out.add(m, {av[0] * stay0 * cp.a0(), av[0] * stay0 * cp.a1()});
        out.add(m + 1, {av[0] * walk_amp * c.a0(), av[0] * walk_amp * c.a1()});
        // |1;m> -> stay1 |c;m> + walk_amp |c_perp;m-1>
        out.add(m, {av[1] * stay1 * c.a0(), av[1] * stay1 * c.a1()});
        out.add(m - 1, {av[1] * walk_amp * cp.a0(), av[1] * walk_amp * cp.a1()});
    }
    out.compact();
    return out;
}

CompositeState apply_step(const QuantumStep& step, const CompositeState& state) {
    return std::visit([&](const auto& s) { return apply_step(s, state); }, step);
}

std::pair<ShiftPart, Mat2> factorize(const GeneralStep& step) {
    return {ShiftPart{step.p, step.q, step.coin_out},
            basis_change(step.coin_out, step.shift_in)};
}

GeneralStep compose_daisy_chain(const std::vector<GeneralStep>& steps) {
    if (steps.empty()) {
        throw std::invalid_argument("cannot compose an empty step chain");
    }
    Position p_total = 0;
    Position q_total = 0;
    cplx phase = 1.0;
    for (size_t i = 0; i < steps.size(); ++i) {
        p_total += steps[i].p;
        q_total += steps[i].q;
        if (i + 1 < steps.size()) {
            const cplx link = inner(steps[i + 1].shift_in, steps[i].coin_out);
            if (std::abs(std::abs(link) - 1.0) > 1e-9) {
                throw std::invalid_argument(
                    "steps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                    " are not chained: coin state of the former differs from the "
                    "shift state of the latter");
            }
            phase *= link / std::abs(link);
        }
    }
    const CoinState& last = steps.back().coin_out;
    return {p_total, q_total, CoinState(phase * last.a0(), phase * last.a1()),
            steps.front().shift_in};
}

bool step_equivalent(const GeneralStep& a, const GeneralStep& b, double tol) {
    // Compare actions on |0;0> and |1;0> with one shared phase factor,
    // extracted from the first nonzero amplitude of the first pair.
    cplx shared_phase = 0.0;
    for (const CoinState& basis : {CoinState(1.0, 0.0), CoinState(0.0, 1.0)}) {
        const CompositeState ra = apply_step(a, localized(basis, 0));
        const CompositeState rb = apply_step(b, localized(basis, 0));
        const cplx overlap = inner(rb, ra);
        if (std::abs(std::abs(overlap) - 1.0) > tol) return false;
        if (std::abs(shared_phase) == 0.0) {
            shared_phase = overlap / std::abs(overlap);
        } else if (std::abs(overlap / std::abs(overlap) - shared_phase) > tol) {
            return false;
        }
    }
    return true;
}

std::pair<GeneralStep, GeneralStep> split_step_decomposition(const SplitStep& s) {
    const CoinState zero(1.0, 0.0);
    const CoinState bridge(std::sqrt(s.delta_frac),
                           -std::polar(std::sqrt(1.0 - s.delta_frac), s.delta_phase));
    return {GeneralStep{0, -1, zero, zero}, GeneralStep{1, 0, s.coin, bridge}};
}

Position displacement(const QuantumStep& step) {
    if (const auto* g = std::get_if<GeneralStep>(&step)) return g->p + g->q;
    return 0;
}

}  // namespace qwalk
