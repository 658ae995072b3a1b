#include "qwalk/walks.hpp"

#include <stdexcept>

namespace qwalk {

Walk::Walk(std::vector<QuantumStep> s, long long rep) : steps(std::move(s)), repeat(rep) {
    if (steps.empty()) throw std::invalid_argument("a walk needs at least one step");
    if (repeat < 1) throw std::invalid_argument("walk repeat count must be positive");
}

Position displacement(const Walk& w) {
    Position per_cycle = 0;
    for (const auto& step : w.steps) per_cycle += displacement(step);
    return per_cycle * w.repeat;
}

CompositeState run(const Walk& w, const CoinState& home) {
    CompositeState state = localized(home, 0);
    for (long long rep = 0; rep < w.repeat; ++rep) {
        for (const auto& step : w.steps) state = apply_step(step, state);
    }
    return state;
}

CompositeEnsemble run_mixed(const Walk& w, const CoinDensity& home) {
    std::vector<std::pair<double, CompositeState>> branches;
    if (home.r() > 0.0) branches.emplace_back(home.r(), run(w, home.basis()));
    if (home.r() < 1.0) branches.emplace_back(1.0 - home.r(), run(w, perp(home.basis())));
    return CompositeEnsemble(std::move(branches));
}

}  // namespace qwalk
