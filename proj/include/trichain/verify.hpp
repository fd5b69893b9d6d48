#pragma once

// The invariant battery behind the acceptance suite and the `verify` CLI
// command. Every check pins its tolerance here; callers only choose trial
// counts, seeds and the worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "trichain/coords.hpp"

namespace trichain {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst residual over all trials, as a fraction of its tolerance
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    double scale = 1.0;  // multiplies the trial counts of the sampled checks
    std::uint64_t seed = 20210901;
    int workers = 1;
};

// The ten checks, in the order they are reported.
CheckResult check_elliptic_roundtrip(int count, std::uint64_t seed, int workers);
CheckResult check_trichotomy();
CheckResult check_volume_cross(int per_n, std::uint64_t seed, int workers);
CheckResult check_bijection(int per_n, std::uint64_t seed, int workers);
CheckResult check_equivariance(int count, std::uint64_t seed, int workers);
CheckResult check_flow_dynamics(std::uint64_t seed);
CheckResult check_wolpert(int points, std::uint64_t seed, int workers);
CheckResult check_chain_validity(int per_n, std::uint64_t seed, int workers);
CheckResult check_gamma_formulas(int count, std::uint64_t seed, int workers);
CheckResult check_arcsin_area(int chains, std::uint64_t seed, int workers);

std::vector<CheckResult> run_battery(const VerifyOptions& options);

}  // namespace trichain
