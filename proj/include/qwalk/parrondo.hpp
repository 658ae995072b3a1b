#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/payoff.hpp"

namespace qwalk {

/// The m+1 walks built from m base steps and a cycle count n: m
/// single-step walks of n*m steps each, plus the sequenced walk of the
/// full step list repeated n times.
struct WalkFamily {
    std::vector<QuantumStep> base_steps;
    long long cycles = 1;
    std::vector<Walk> walks;
};

WalkFamily build_family(const std::vector<QuantumStep>& steps, long long cycles);

/// Per-walk classification of one home density.
std::vector<Outcome> label_vector(const WalkFamily& fam, const Observable& o,
                                  double omega, const CoinDensity& home,
                                  double tie_tol = 1e-9);

/// True when the home state loses every single-step walk yet wins the
/// sequenced one.
bool parrondo_test(const WalkFamily& fam, const Observable& o, double omega,
                   const CoinDensity& home, double tie_tol = 1e-9);

struct RegionNode {
    double theta = 0.0;
    double phi = 0.0;
    std::vector<Outcome> labels;
    bool parrondo = false;
};

/// Classification of every node of an inclusive (theta, phi) lattice over
/// the Bloch sphere, using one precomputed analysis per walk. Node labels
/// are exact classifications of the node state; nothing is interpolated.
struct RegionMap {
    int n_theta = 0;
    int n_phi = 0;
    std::vector<RegionNode> nodes;  // row-major, theta outer

    /// Distinct label vectors present, as strings of W/L/T letters.
    std::vector<std::string> distinct_labels() const;
};

RegionMap region_map(const WalkFamily& fam, const Observable& o, double omega,
                     int n_theta, int n_phi, double tie_tol = 1e-9);

/// One spherical-cap constraint per walk: the set of winning (sense
/// "above") or losing (sense "below") states is
/// { u : normal . S(u) <above/below> omega_cap }. Walks with a degenerate
/// analysis contribute "all" or "none". The intersection of all rows is
/// exactly the Parrondo region.
struct WalkCap {
    int walk_index = 0;  // 1-based
    QubitVector normal;
    std::optional<double> omega_cap;
    std::string sense;  // "below", "above", "all", "none"
};

std::vector<WalkCap> region_caps(const WalkFamily& fam, const Observable& o,
                                 double omega);

struct PersistenceRow {
    long long n = 0;
    std::vector<double> payoffs;  // one per walk
    bool parrondo = false;
};

struct PersistenceScan {
    std::vector<PersistenceRow> rows;
    /// True when the flag holds from the first n where it appears through
    /// the end of the scanned range. No claim beyond the range.
    bool persistent = false;
};

PersistenceScan persistence_scan(const std::vector<QuantumStep>& steps,
                                 const Observable& o, double omega,
                                 const CoinDensity& home, long long n_from,
                                 long long n_to, double tie_tol = 1e-9);

/// Frobenius norms of the commutators [o_i(n), o_i(n_prime)] per walk
/// index; all zero means the two cycle counts carve identical regions.
std::vector<double> commutation_diagnostic(const std::vector<QuantumStep>& steps,
                                           const Observable& o, long long n,
                                           long long n_prime);

/// Inputs for the daisy-chained construction that makes a chosen target
/// state a Parrondo state of its family for the position observable and
/// target payoff zero, at every cycle count.
struct DesignSpec {
    int m = 2;  // even, >= 2
    CoinState target;
    std::vector<CoinState> intermediates;             // m - 2 states
    std::vector<std::pair<Position, Position>> strides;  // m (p, q) pairs
};

std::vector<GeneralStep> design_daisy_chain(const DesignSpec& spec);

/// Latitude threshold of a designed family: pure states at latitude nu
/// from the target are Parrondo states exactly when cos^2(nu/2) exceeds
/// threshold(), i.e. nu < nu_max.
struct ParrondoCap {
    long long threshold_num = 0;  // reduced fraction
    long long threshold_den = 1;
    double nu_max = 0.0;          // radians

    double threshold() const {
        return static_cast<double>(threshold_num) / static_cast<double>(threshold_den);
    }
};

ParrondoCap parrondo_cap(const std::vector<GeneralStep>& designed_steps);

}  // namespace qwalk
