#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "qwalk/parrondo.hpp"

namespace qwalk {

/// Random generators shared by the property suites and the randomized
/// tests. All draws depend only on the engine state, so a fixed seed
/// reproduces the same report byte for byte.
CoinState random_coin(std::mt19937_64& rng);
CoinDensity random_density(std::mt19937_64& rng);
GeneralStep random_general_step(std::mt19937_64& rng, Position max_stride = 5);
QuantumStep random_step(std::mt19937_64& rng);
Walk random_general_walk(std::mt19937_64& rng, int max_steps = 6,
                         Position max_stride = 5);

struct OracleSuiteResult {
    std::string name;
    long long trials = 0;
    double max_error = 0.0;
    bool pass = false;
};

struct OracleReport {
    std::vector<OracleSuiteResult> suites;
    bool all_pass() const;
};

/// Run every property suite. `trials` scales the randomized-case count;
/// suites with a fixed published case count use min(their count, trials).
OracleReport run_oracle(std::uint64_t seed, long long trials);

void print_oracle_report(std::ostream& out, const OracleReport& report);

}  // namespace qwalk
