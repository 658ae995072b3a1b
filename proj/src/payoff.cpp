#include "qwalk/payoff.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

char outcome_letter(Outcome o) {
    switch (o) {
        case Outcome::Win: return 'W';
        case Outcome::Lose: return 'L';
        default: return 'T';
    }
}

double payoff(const Observable& o, const Walk& w, const CoinDensity& home) {
    return expectation(o, run_mixed(w, home));
}

double payoff(const Observable& o, const Walk& w, const CoinState& home) {
    return expectation(o, run(w, home));
}

Mat2 reduced_coin_operator(const Observable& o, const Walk& w) {
    const CompositeState out0 = run(w, CoinState(1.0, 0.0));
    const CompositeState out1 = run(w, CoinState(0.0, 1.0));
    const cplx e00 = matrix_element(o, out0, out0);
    const cplx e01 = matrix_element(o, out0, out1);
    const cplx e10 = matrix_element(o, out1, out0);
    const cplx e11 = matrix_element(o, out1, out1);
    if (std::abs(e00.imag()) > 1e-10 || std::abs(e11.imag()) > 1e-10 ||
        std::abs(e01 - std::conj(e10)) > 1e-10) {
        throw std::runtime_error("reduced coin operator came out non-Hermitian");
    }
    // Store the exactly Hermitian version.
    const cplx off = 0.5 * (e01 + std::conj(e10));
    return {e00.real(), off, std::conj(off), e11.real()};
}

CoinObservableAnalysis analyze(const Observable& o, const Walk& w, double omega) {
    CoinObservableAnalysis out;
    out.o_matrix = reduced_coin_operator(o, w);
    const HermitianEigen eig = eigen_hermitian(out.o_matrix);
    out.o_max = eig.max_value;
    out.o_min = eig.min_value;
    out.v_max = eig.max_vector;
    out.v_min = eig.min_vector;
    out.target_payoff = omega;
    const double gap = out.o_max - out.o_min;
    if (gap > 1e-10) {
        out.omega_cap = (2.0 * omega - (out.o_max + out.o_min)) / gap;
    }
    return out;
}

double payoff_analytic(const CoinObservableAnalysis& a, const CoinDensity& home) {
    const double dot = qubit_vector(a.v_max).dot(qubit_vector(home));
    return 0.5 * (a.o_max - a.o_min) * dot + 0.5 * (a.o_max + a.o_min);
}

Outcome classify(const CoinObservableAnalysis& a, const CoinDensity& home,
                 double tie_tol) {
    if (a.degenerate()) {
        const double constant = 0.5 * (a.o_max + a.o_min);
        if (constant > a.target_payoff + tie_tol) return Outcome::Win;
        if (constant < a.target_payoff - tie_tol) return Outcome::Lose;
        return Outcome::Tie;
    }
    const double t = qubit_vector(a.v_max).dot(qubit_vector(home));
    if (t > *a.omega_cap + tie_tol) return Outcome::Win;
    if (t < *a.omega_cap - tie_tol) return Outcome::Lose;
    return Outcome::Tie;
}

}  // namespace qwalk
