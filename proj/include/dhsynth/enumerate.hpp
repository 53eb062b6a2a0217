#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhsynth/baseline.hpp"
#include "dhsynth/circuit.hpp"
#include "dhsynth/synth.hpp"

namespace dhs {

struct ComparisonRow {
    int n = 0;
    std::uint64_t matrix_id = 0;
    std::vector<unsigned> basis;  // selected masks, ascending
    int prop_cz = 0, prop_1q = 0;
    int base_cz = 0, base_1q = 0;
    // Improvement 100*(base - prop)/base, defined only when base > 0;
    // undefined entries are recorded as skips.
    bool imp_cz_defined = false, imp_1q_defined = false;
    double imp_cz_pct = 0.0, imp_1q_pct = 0.0;
};

struct SweepSummary {
    int rows = 0;
    int skipped_cz = 0, skipped_1q = 0;
    // Unweighted mean over rows with a defined improvement.
    double mean_cz = 0.0, mean_1q = 0.0;
    // Diagnostics: mean over all rows with undefined improvements counted
    // as 0, and the ratio of sums 100*(1 - sum(prop)/sum(base)).
    double mean_cz_incl_zero = 0.0, mean_1q_incl_zero = 0.0;
    double ratio_cz = 0.0, ratio_1q = 0.0;
};

struct SweepResult {
    std::vector<ComparisonRow> rows;
    SweepSummary summary;
};

// Runs both pipelines on one gate and verifies each circuit against the
// target (proposed at tol 1e-10, optimized baseline at 1e-9); a
// verification failure throws std::runtime_error (oracle breach).
// Pass a prebuilt MuxStructure for n to amortize the solver setup.
ComparisonRow compare_one(int n, std::uint64_t id);
ComparisonRow compare_one(const MuxStructure& st, int n, std::uint64_t id);

// Exhaustive sweep over all 2^(2^n - 1) gates; n in {2, 3, 4}.
SweepResult sweep(int n);

// Uniform random sample of `count` ids for larger n (n <= 6).
SweepResult sweep_sampled(int n, int count, std::uint64_t seed);

SweepSummary summarize(const std::vector<ComparisonRow>& rows);

// CSV with header n,matrix_id,basis,prop_cz,prop_1q,base_cz,base_1q,
// imp_cz_pct,imp_1q_pct; basis '+'-joined; percentages with one decimal;
// undefined improvements emitted as "skip".
std::string to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace dhs
