#include "qwalk/parrondo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qwalk {

WalkFamily build_family(const std::vector<QuantumStep>& steps, long long cycles) {
    if (steps.empty()) throw std::invalid_argument("family needs at least one step");
    if (cycles < 1) throw std::invalid_argument("cycle count must be positive");
    WalkFamily fam;
    fam.base_steps = steps;
    fam.cycles = cycles;
    const long long m = static_cast<long long>(steps.size());
    for (const auto& step : steps) {
        fam.walks.emplace_back(std::vector<QuantumStep>{step}, cycles * m);
    }
    fam.walks.emplace_back(steps, cycles);
    return fam;
}

std::vector<Outcome> label_vector(const WalkFamily& fam, const Observable& o,
                                  double omega, const CoinDensity& home,
                                  double tie_tol) {
    std::vector<Outcome> labels;
    labels.reserve(fam.walks.size());
    for (const auto& w : fam.walks) {
        labels.push_back(classify(analyze(o, w, omega), home, tie_tol));
    }
    return labels;
}

namespace {

bool is_parrondo_pattern(const std::vector<Outcome>& labels) {
    for (size_t i = 0; i + 1 < labels.size(); ++i) {
        if (labels[i] != Outcome::Lose) return false;
    }
    return !labels.empty() && labels.back() == Outcome::Win;
}

Outcome classify_dot(const CoinObservableAnalysis& a, double dot, double tie_tol) {
    if (a.degenerate()) {
        const double constant = 0.5 * (a.o_max + a.o_min);
        if (constant > a.target_payoff + tie_tol) return Outcome::Win;
        if (constant < a.target_payoff - tie_tol) return Outcome::Lose;
        return Outcome::Tie;
    }
    if (dot > *a.omega_cap + tie_tol) return Outcome::Win;
    if (dot < *a.omega_cap - tie_tol) return Outcome::Lose;
    return Outcome::Tie;
}

}  // namespace

bool parrondo_test(const WalkFamily& fam, const Observable& o, double omega,
                   const CoinDensity& home, double tie_tol) {
    return is_parrondo_pattern(label_vector(fam, o, omega, home, tie_tol));
}

std::vector<std::string> RegionMap::distinct_labels() const {
    std::set<std::string> seen;
    for (const auto& node : nodes) {
        std::string key;
        for (Outcome l : node.labels) key.push_back(outcome_letter(l));
        seen.insert(key);
    }
    return {seen.begin(), seen.end()};
}

RegionMap region_map(const WalkFamily& fam, const Observable& o, double omega,
                     int n_theta, int n_phi, double tie_tol) {
    if (n_theta < 2 || n_phi < 2) {
        throw std::invalid_argument("grid must be at least 2x2");
    }
    std::vector<CoinObservableAnalysis> analyses;
    analyses.reserve(fam.walks.size());
    for (const auto& w : fam.walks) analyses.push_back(analyze(o, w, omega));

    const double pi = std::numbers::pi;
    RegionMap map;
    map.n_theta = n_theta;
    map.n_phi = n_phi;
    map.nodes.reserve(static_cast<size_t>(n_theta) * n_phi);
    for (int j = 0; j < n_theta; ++j) {
        const double theta = pi * j / (n_theta - 1);
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * pi * k / (n_phi - 1);
            double phi_state = std::fmod(phi, 2.0 * pi);
            if (2.0 * pi - phi_state < 1e-12) phi_state = 0.0;
            const CoinState u = from_bloch({theta, phi_state});
            const QubitVector su = qubit_vector(u);

            RegionNode node;
            node.theta = theta;
            node.phi = phi;
            node.labels.reserve(analyses.size());
            for (const auto& a : analyses) {
                node.labels.push_back(
                    classify_dot(a, qubit_vector(a.v_max).dot(su), tie_tol));
            }
            node.parrondo = is_parrondo_pattern(node.labels);
            map.nodes.push_back(std::move(node));
        }
    }
    return map;
}

std::vector<WalkCap> region_caps(const WalkFamily& fam, const Observable& o,
                                 double omega) {
    std::vector<WalkCap> caps;
    const size_t last = fam.walks.size() - 1;
    for (size_t i = 0; i < fam.walks.size(); ++i) {
        const CoinObservableAnalysis a = analyze(o, fam.walks[i], omega);
        WalkCap cap;
        cap.walk_index = static_cast<int>(i) + 1;
        const bool want_win = (i == last);
        if (a.degenerate()) {
            const double constant = 0.5 * (a.o_max + a.o_min);
            const bool satisfied = want_win ? constant > omega : constant < omega;
            cap.sense = satisfied ? "all" : "none";
        } else {
            cap.normal = qubit_vector(a.v_max);
            cap.omega_cap = a.omega_cap;
            cap.sense = want_win ? "above" : "below";
        }
        caps.push_back(std::move(cap));
    }
    return caps;
}

PersistenceScan persistence_scan(const std::vector<QuantumStep>& steps,
                                 const Observable& o, double omega,
                                 const CoinDensity& home, long long n_from,
                                 long long n_to, double tie_tol) {
    if (n_from < 1 || n_to < n_from) {
        throw std::invalid_argument("cycle range must be nonempty and start at 1 or above");
    }
    PersistenceScan scan;
    for (long long n = n_from; n <= n_to; ++n) {
        const WalkFamily fam = build_family(steps, n);
        PersistenceRow row;
        row.n = n;
        std::vector<Outcome> labels;
        for (const auto& w : fam.walks) {
            const CoinObservableAnalysis a = analyze(o, w, omega);
            row.payoffs.push_back(payoff_analytic(a, home));
            labels.push_back(classify(a, home, tie_tol));
        }
        row.parrondo = is_parrondo_pattern(labels);
        scan.rows.push_back(std::move(row));
    }
    auto first = std::find_if(scan.rows.begin(), scan.rows.end(),
                              [](const PersistenceRow& r) { return r.parrondo; });
    scan.persistent = first != scan.rows.end() &&
                      std::all_of(first, scan.rows.end(),
                                  [](const PersistenceRow& r) { return r.parrondo; });
    return scan;
}

std::vector<double> commutation_diagnostic(const std::vector<QuantumStep>& steps,
                                           const Observable& o, long long n,
                                           long long n_prime) {
    const WalkFamily fa = build_family(steps, n);
    const WalkFamily fb = build_family(steps, n_prime);
    std::vector<double> norms;
    for (size_t i = 0; i < fa.walks.size(); ++i) {
        const Mat2 oa = reduced_coin_operator(o, fa.walks[i]);
        const Mat2 ob = reduced_coin_operator(o, fb.walks[i]);
        norms.push_back((oa * ob - ob * oa).norm());
    }
    return norms;
}

std::vector<GeneralStep> design_daisy_chain(const DesignSpec& spec) {
    if (spec.m < 2 || spec.m % 2 != 0) {
        throw std::invalid_argument("the construction requires an even number of steps (m >= 2)");
    }
    const size_t m = static_cast<size_t>(spec.m);
    if (spec.strides.size() != m) {
        throw std::invalid_argument("need exactly m stride pairs");
    }
    if (spec.intermediates.size() != m - 2) {
        throw std::invalid_argument("need exactly m-2 intermediate states");
    }

    Position head_p_sum = 0;  // sum of p over the first m-1 steps
    for (size_t i = 0; i + 1 < m; ++i) {
        const auto [p, q] = spec.strides[i];
        if (p >= 0) {
            throw std::invalid_argument("constraint violated: p[" + std::to_string(i + 1) +
                                        "] must be negative");
        }
        if (q >= 0) {
            throw std::invalid_argument("constraint violated: q[" + std::to_string(i + 1) +
                                        "] must be negative");
        }
        head_p_sum += p;
    }
    const auto [p_last, q_last] = spec.strides[m - 1];
    if (!(p_last > -head_p_sum)) {
        throw std::invalid_argument(
            "constraint violated: p[m] must exceed -(p[1]+...+p[m-1])");
    }
    if (!(q_last < head_p_sum)) {
        throw std::invalid_argument(
            "constraint violated: q[m] must be below p[1]+...+p[m-1]");
    }
    if (!(p_last < -q_last)) {
        throw std::invalid_argument("constraint violated: p[m] must be below -q[m]");
    }

    const CoinState& w = spec.target;
    const CoinState wp = perp(w);
    std::vector<GeneralStep> steps;
    steps.reserve(m);
    // Chain: w -> c1 -> ... -> c_{m-2} -> w_perp -> w.
    std::vector<CoinState> chain;
    chain.push_back(w);
    for (const auto& c : spec.intermediates) chain.push_back(c);
    chain.push_back(wp);
    chain.push_back(w);
    for (size_t i = 0; i < m; ++i) {
        steps.push_back(GeneralStep{spec.strides[i].first, spec.strides[i].second,
                                    chain[i + 1], chain[i]});
    }
    return steps;
}

ParrondoCap parrondo_cap(const std::vector<GeneralStep>& designed_steps) {
    if (designed_steps.empty()) {
        throw std::invalid_argument("empty step list");
    }
    long long q_sum = 0;
    long long qp_diff = 0;
    for (const auto& s : designed_steps) {
        q_sum += s.q;
        qp_diff += s.q - s.p;
    }
    if (qp_diff == 0) {
        throw std::invalid_argument("threshold undefined: sum of q equals sum of p");
    }
    long long num = q_sum;
    long long den = qp_diff;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    ParrondoCap cap;
    cap.threshold_num = g ? num / g : num;
    cap.threshold_den = g ? den / g : den;
    cap.nu_max = std::acos(std::clamp(2.0 * cap.threshold() - 1.0, -1.0, 1.0));
    return cap;
}

}  // namespace qwalk
