#pragma once

#include <vector>

#include "qwalk/steps.hpp"

namespace qwalk {

/// A walk is an ordered step list applied first-to-last, optionally
/// repeated as a whole. Powers stay symbolic; the step list is never
/// flattened.
struct Walk {
    std::vector<QuantumStep> steps;
    long long repeat = 1;

    Walk() = default;
    Walk(std::vector<QuantumStep> s, long long rep = 1);

    long long total_steps() const {
        return repeat * static_cast<long long>(steps.size());
    }
};

/// Net walk displacement: sum of p + q over all applied steps. Labels the
/// walk unbiased (0), forward-biased (> 0) or backward-biased (< 0).
Position displacement(const Walk& w);

/// Run the walk from the home position with a pure coin state.
CompositeState run(const Walk& w, const CoinState& home);

/// Run from a mixed home state; yields one branch per nonzero weight of
/// the rank-2 decomposition.
CompositeEnsemble run_mixed(const Walk& w, const CoinDensity& home);

}  // namespace qwalk
