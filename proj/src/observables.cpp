#include "qwalk/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

Observable mu() {
    return PositionFunction{[](Position m) { return static_cast<double>(m); }};
}

Observable delta() {
    return PositionFunction{[](Position m) { return m > 0 ? 1.0 : (m < 0 ? -1.0 : 0.0); }};
}

Observable zero_projector() {
    return PositionFunction{[](Position m) { return m == 0 ? 1.0 : 0.0; }};
}

Observable spectral(std::vector<std::pair<double, CompositeState>> terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
        for (size_t j = i + 1; j < terms.size(); ++j) {
            if (std::abs(inner(terms[i].second, terms[j].second)) > 1e-10) {
                throw std::invalid_argument(
                    "spectral observable: eigenstates " + std::to_string(i) + " and " +
                    std::to_string(j) + " are not orthogonal");
            }
        }
    }
    return SpectralObservable{std::move(terms)};
}

namespace {

cplx weighted_overlap(const PositionWeight& f, const CompositeState& a,
                      const CompositeState& b) {
    cplx total = 0.0;
    const auto& bm = b.amplitudes();
    for (const auto& [m, av] : a.amplitudes()) {
        const auto it = bm.find(m);
        if (it == bm.end()) continue;
        const double w = f(m);
        if (w == 0.0) continue;
        total += w * (std::conj(av[0]) * it->second[0] + std::conj(av[1]) * it->second[1]);
    }
    return total;
}

cplx coin_weighted_overlap(const Mat2& A, const PositionWeight& f,
                           const CompositeState& a, const CompositeState& b) {
    cplx total = 0.0;
    const auto& bm = b.amplitudes();
    for (const auto& [m, av] : a.amplitudes()) {
        const auto it = bm.find(m);
        if (it == bm.end()) continue;
        const double w = f(m);
        if (w == 0.0) continue;
        const auto rotated = A.apply(it->second[0], it->second[1]);
        total += w * (std::conj(av[0]) * rotated[0] + std::conj(av[1]) * rotated[1]);
    }
    return total;
}

}  // namespace

cplx matrix_element(const Observable& o, const CompositeState& a,
                    const CompositeState& b) {
    if (const auto* pf = std::get_if<PositionFunction>(&o)) {
        return weighted_overlap(pf->f, a, b);
    }
    if (const auto* sp = std::get_if<SpectralObservable>(&o)) {
        cplx total = 0.0;
        for (const auto& [lambda, u] : sp->terms) {
            total += lambda * std::conj(inner(u, a)) * inner(u, b);
        }
        return total;
    }
    const auto& kron = std::get<CoinKronPosition>(o);
    return coin_weighted_overlap(kron.coin_matrix, kron.f, a, b);
}

double expectation(const Observable& o, const CompositeState& x) {
    return matrix_element(o, x, x).real();
}

double expectation(const Observable& o, const CompositeEnsemble& x) {
    double total = 0.0;
    for (const auto& [w, st] : x.branches()) total += w * expectation(o, st);
    return total;
}

}  // namespace qwalk
