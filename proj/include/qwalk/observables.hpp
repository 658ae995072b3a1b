#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/composite.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

using PositionWeight = std::function<double(Position)>;

/// I_2 (x) sum_m f(m)|m><m|. The weight is evaluated lazily on a state's
/// support, so no lattice window is ever needed.
struct PositionFunction {
    PositionWeight f;
};

/// sum_i lambda_i |U_i><U_i| with mutually orthogonal composite states.
/// Covers any Hermitian operator over a finite window at sparse cost.
struct SpectralObservable {
    std::vector<std::pair<double, CompositeState>> terms;
};

/// A (x) sum_m f(m)|m><m| with a Hermitian coin-space factor.
struct CoinKronPosition {
    Mat2 coin_matrix;
    PositionWeight f;
};

using Observable = std::variant<PositionFunction, SpectralObservable, CoinKronPosition>;

/// Position operator: f(m) = m.
Observable mu();

/// Sign-of-position operator: f(m) = sign(m), f(0) = 0. Its expectation is
/// the probability of sitting at positive positions minus that at negative
/// ones.
Observable delta();

/// Projector onto the home position: f(0) = 1, otherwise 0.
Observable zero_projector();

/// Spectral observable; the terms must be mutually orthogonal (checked,
/// rejected otherwise).
Observable spectral(std::vector<std::pair<double, CompositeState>> terms);

/// General matrix element <a|O|b>.
cplx matrix_element(const Observable& o, const CompositeState& a,
                    const CompositeState& b);

double expectation(const Observable& o, const CompositeState& x);
double expectation(const Observable& o, const CompositeEnsemble& x);

}  // namespace qwalk
