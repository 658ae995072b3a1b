#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "qwalk/composite.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

/// Coin-conditioned step with independent strides: the component along
/// shift_in moves p sites and becomes coin_out, the orthogonal component
/// moves q sites and becomes perp(coin_out). p and q are unrelated; both
/// may point the same way.
struct GeneralStep {
    Position p = 0;
    Position q = 0;
    CoinState coin_out;
    CoinState shift_in;
};

/// SU(2) coin toss followed by the unit shift |0>: m-1, |1>: m+1.
struct ConventionalStep {
    double alpha = 0.0;  // [0, 2*pi)
    double beta = 0.0;   // [0, pi/2]
    double gamma = 0.0;  // [0, 2*pi)
};

/// Split step: a sqrt(delta_frac) portion of the amplitude walks, the rest
/// stays put and only rotates its coin.
struct SplitStep {
    double delta_frac = 1.0;   // in [0, 1]
    double delta_phase = 0.0;  // radians
    CoinState coin;
};

using QuantumStep = std::variant<GeneralStep, ConventionalStep, SplitStep>;

GeneralStep make_general(Position p, Position q, const CoinState& coin_out,
                         const CoinState& shift_in);
ConventionalStep make_conventional(double alpha, double beta, double gamma);
SplitStep make_split(double delta_frac, double delta_phase, const CoinState& coin);

CompositeState apply_step(const QuantumStep& step, const CompositeState& state);
CompositeState apply_step(const GeneralStep& step, const CompositeState& state);
CompositeState apply_step(const ConventionalStep& step, const CompositeState& state);
CompositeState apply_step(const SplitStep& step, const CompositeState& state);

/// The SU(2) coin-toss matrix of a conventional step.
Mat2 conventional_coin_matrix(const ConventionalStep& step);

/// Branch strides plus the coin basis they act in.
struct ShiftPart {
    Position p = 0;
    Position q = 0;
    CoinState coin;
};

/// Split a general step into its pure-shift part and the coin-toss matrix
/// |c><s| + |c_perp><s_perp|; applying the toss and then the shift
/// reproduces the step.
std::pair<ShiftPart, Mat2> factorize(const GeneralStep& step);

/// Collapse a chain where each step's coin state equals the next step's
/// shift state (up to phase) into the single equivalent step
/// T(sum p, sum q; last coin, first shift). Phases picked up along the
/// chain are folded into the returned coin state, so the collapse is exact.
GeneralStep compose_daisy_chain(const std::vector<GeneralStep>& steps);

/// True when the two steps act identically (up to one shared global phase)
/// on the localized basis states.
bool step_equivalent(const GeneralStep& a, const GeneralStep& b, double tol = 1e-9);

/// The two general steps whose product realizes a split step
/// (first applied, second applied).
std::pair<GeneralStep, GeneralStep> split_step_decomposition(const SplitStep& s);

/// Net stride contribution p + q; zero for conventional and split steps.
Position displacement(const QuantumStep& step);

}  // namespace qwalk
