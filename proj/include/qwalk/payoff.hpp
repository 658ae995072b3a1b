#pragma once

#include <optional>

#include "qwalk/observables.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

enum class Outcome { Win, Lose, Tie };

char outcome_letter(Outcome o);

/// A single-walk game: walk, observable, and the target payoff the
/// expectation value has to beat.
struct GameSpec {
    Walk walk;
    Observable observable;
    double target_payoff = 0.0;
};

/// The walk/observable pair reduced to the coin space: the 2x2 operator
/// whose eigenstates bound every achievable payoff, plus the dot-product
/// threshold equivalent to the target payoff.
struct CoinObservableAnalysis {
    Mat2 o_matrix;         // computational basis, Hermitian
    double o_max = 0.0;
    double o_min = 0.0;
    CoinState v_max;
    CoinState v_min;
    double target_payoff = 0.0;
    /// Empty when o_max == o_min within 1e-10: every home state then
    /// yields the same payoff and no threshold exists.
    std::optional<double> omega_cap;

    bool degenerate() const { return !omega_cap.has_value(); }
};

/// Expectation value of the observable in the walk's output from the given
/// home density.
double payoff(const Observable& o, const Walk& w, const CoinDensity& home);

/// Convenience overload for pure home states.
double payoff(const Observable& o, const Walk& w, const CoinState& home);

/// The 2x2 coin-space reduction of the conjugated observable, built from
/// the walk's action on the two computational home states.
Mat2 reduced_coin_operator(const Observable& o, const Walk& w);

CoinObservableAnalysis analyze(const Observable& o, const Walk& w, double omega);

/// Payoff computed from the analysis alone, without running the walk
/// again.
double payoff_analytic(const CoinObservableAnalysis& a, const CoinDensity& home);

Outcome classify(const CoinObservableAnalysis& a, const CoinDensity& home,
                 double tie_tol = 1e-9);

}  // namespace qwalk
