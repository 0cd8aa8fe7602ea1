#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgw/semigroup.hpp"

namespace sgw {

struct SweepConfig {
    int gamma_max = 0;
    int genus_max = 1;
    int threads = 1;
    int split_depth = 6;
};

// One member of a (gamma, g) population, for the CSV listing.
struct MemberRow {
    std::vector<int> gaps;
    int genus = 0, frobenius = 0, multiplicity = 0;
    bool symmetric = false;
    long long w_s = 0, w_k = 0, ramification = 0;
    long long r_k = 0;
    int k_odd_tail = 0;
    bool bounds_checked = false;
    long long lower_k = 0, upper_k = 0, lower_s = 0, upper_s = 0;
    bool within_k = false, within_s = false;
    bool attains_min_k = false, attains_max_k = false;
};

struct Prop2Report {
    bool applicable = false;  // gamma >= 1 and g >= 3*gamma
    uint64_t mult4_population = 0;
    std::vector<std::pair<int, long long>> spectrum;       // (k, expected W_K)
    std::vector<int> family_in_range;                      // k with valid construction
    std::vector<std::vector<int>> family_gaps;             // gap sets, same order
};

struct SweepRecord {
    int gamma = 0;
    int g = 0;
    uint64_t population = 0;
    bool vacuous() const { return population == 0; }

    long long min_w_k = 0, max_w_k = 0, min_w_s = 0, max_w_s = 0;
    std::vector<std::vector<int>> min_attainers;  // gap sets, lexicographic
    std::vector<std::vector<int>> max_attainers;

    bool bounds_checked = false;  // g >= 2*gamma+1
    long long lower_k = 0, upper_k = 0, lower_s = 0, upper_s = 0;

    bool lower_attained = false;
    bool upper_attained = false;
    bool minimizer_construction_ok = false;   // g >= 3*gamma+1 and post-checks pass
    bool minimizer_in_min_attainers = false;
    bool maximizer_construction_ok = false;
    bool max_attainers_exactly_s0 = false;

    std::optional<long long> remark_expected_min;  // g == 2*gamma or 2*gamma+1
    bool remark_checked = false;                   // non-vacuous remark cell
    bool remark_ok = true;

    Prop2Report prop2;

    std::vector<std::string> violations;      // sorted
    std::vector<MemberRow> members;           // sorted by gap set
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRecord> records;  // (gamma, g) lexicographic
    uint64_t total_violations = 0;
    uint64_t total_population = 0;
    double wall_seconds = 0.0;
};

// For each gamma <= gamma_max and g in [2*gamma, genus_max]: enumerate the
// gamma-hyperelliptic population, verify the weight identities on every
// member, check the eq. (1)/(2) bounds for g >= 2*gamma+1, the Remark minima
// at g = 2*gamma and 2*gamma+1, and the multiplicity-4 spectrum for
// g >= 3*gamma. Violations land in the records; nothing throws.
SweepResult run_sweep(const SweepConfig& config);

// Identity checks shared by the sweep and the acceptance suite. Returns
// human-readable violation strings (empty when everything holds).
std::vector<std::string> identity_violations(const Semigroup& s, int gamma);

nlohmann::json sweep_json(const SweepResult& result, bool include_runtime = true);
std::string sweep_csv(const SweepResult& result);

} // namespace sgw
