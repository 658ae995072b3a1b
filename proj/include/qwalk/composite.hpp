#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

using Position = std::int64_t;

/// Coin amplitude pair attached to one lattice position.
using Amp2 = std::array<cplx, 2>;

/// Sparse state on the coin (x) position composite space: a map from
/// integer lattice position to a complex coin pair, with implicit zeros
/// elsewhere. The lattice is unbounded; only the finite support is stored.
class CompositeState {
public:
    CompositeState() = default;

    const std::map<Position, Amp2>& amplitudes() const { return amps_; }

    /// Accumulate amplitude at (position, coin component).
    void add(Position m, const Amp2& a);

    /// Drop entries whose squared magnitude fell below 1e-28 (round-off
    /// residue from cancellations). Norm change is far below any tolerance
    /// used in this library.
    void compact();

    double norm() const;

    bool empty() const { return amps_.empty(); }
    Position support_min() const;
    Position support_max() const;

    /// Probability of finding the walker at m, any coin outcome.
    double probability_at(Position m) const;

private:
    std::map<Position, Amp2> amps_;
};

/// Convex mixture of composite pure states; weights sum to one.
class CompositeEnsemble {
public:
    CompositeEnsemble() = default;
    explicit CompositeEnsemble(std::vector<std::pair<double, CompositeState>> branches);

    const std::vector<std::pair<double, CompositeState>>& branches() const {
        return branches_;
    }

private:
    std::vector<std::pair<double, CompositeState>> branches_;
};

/// The product state |s;m>.
CompositeState localized(const CoinState& s, Position m);

cplx inner(const CompositeState& a, const CompositeState& b);

/// Every support position moved by d, coin pairs untouched.
CompositeState shift_by(const CompositeState& a, Position d);

/// True when the state is orthogonal to all of its nonzero shifts across
/// its own span.
bool is_translationally_invariant(const CompositeState& a, double tol = 1e-9);

/// (position, probability) rows sorted ascending by position.
std::vector<std::pair<Position, double>> histogram(const CompositeState& a);

}  // namespace qwalk
