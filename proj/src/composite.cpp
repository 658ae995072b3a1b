#include "qwalk/composite.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

void CompositeState::add(Position m, const Amp2& a) {
    auto& slot = amps_[m];
    slot[0] += a[0];
    slot[1] += a[1];
}

void CompositeState::compact() {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::norm(it->second[0]) + std::norm(it->second[1]) < 1e-28) {
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
}

double CompositeState::norm() const {
    double total = 0.0;
    for (const auto& [m, a] : amps_) total += std::norm(a[0]) + std::norm(a[1]);
    return std::sqrt(total);
}

Position CompositeState::support_min() const {
    if (amps_.empty()) throw std::out_of_range("empty composite state");
    return amps_.begin()->first;
}

Position CompositeState::support_max() const {
    if (amps_.empty()) throw std::out_of_range("empty composite state");
    return amps_.rbegin()->first;
}

double CompositeState::probability_at(Position m) const {
    const auto it = amps_.find(m);
    if (it == amps_.end()) return 0.0;
    return std::norm(it->second[0]) + std::norm(it->second[1]);
}

CompositeEnsemble::CompositeEnsemble(
    std::vector<std::pair<double, CompositeState>> branches)
    : branches_(std::move(branches)) {
    double total = 0.0;
    for (const auto& [w, st] : branches_) {
        if (w < -1e-12) throw std::invalid_argument("ensemble weight is negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("ensemble weights must sum to 1");
    }
}

CompositeState localized(const CoinState& s, Position m) {
    CompositeState out;
    out.add(m, {s.a0(), s.a1()});
    return out;
}

cplx inner(const CompositeState& a, const CompositeState& b) {
    cplx total = 0.0;
    const auto& bm = b.amplitudes();
    for (const auto& [m, av] : a.amplitudes()) {
        const auto it = bm.find(m);
        if (it == bm.end()) continue;
        total += std::conj(av[0]) * it->second[0] + std::conj(av[1]) * it->second[1];
    }
    return total;
}

CompositeState shift_by(const CompositeState& a, Position d) {
    CompositeState out;
    for (const auto& [m, av] : a.amplitudes()) out.add(m + d, av);
    return out;
}

bool is_translationally_invariant(const CompositeState& a, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (a.empty()) return true;
    const Position span = a.support_max() - a.support_min();
    const auto& amps = a.amplitudes();
    for (Position d = 1; d <= span; ++d) {
        cplx overlap = 0.0;
        for (const auto& [m, av] : amps) {
            const auto it = amps.find(m - d);
            if (it == amps.end()) continue;
            overlap +=
                std::conj(av[0]) * it->second[0] + std::conj(av[1]) * it->second[1];
        }
        if (std::abs(overlap) > tol) return false;
    }
    return true;
}

std::vector<std::pair<Position, double>> histogram(const CompositeState& a) {
    std::vector<std::pair<Position, double>> rows;
    rows.reserve(a.amplitudes().size());
    for (const auto& [m, av] : a.amplitudes()) {
        rows.emplace_back(m, std::norm(av[0]) + std::norm(av[1]));
    }
    return rows;
}

}  // namespace qwalk
