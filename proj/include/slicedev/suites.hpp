#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicedev/arm.hpp"
#include "slicedev/develop.hpp"
#include "slicedev/hull.hpp"
#include "slicedev/indicatrix.hpp"

namespace slicedev {

// Knobs for the randomized verification suites. Trials are independent
// and take their seeds from derive_seed(seed, trial), so serial and
// parallel runs produce identical reports.
struct RunConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    bool parallel = true;  // OpenMP kernel; the serial loop is the reference
    int samples_per_link = 4;
    int pairwise_trials = 1000;
    int projection_trials = 1000;
    int sandwich_trials = 1000;
    int base_points = 64;
    int max_hull_points = 50;
};

// A failing trial, serialized for replay.
struct FailureRecord {
    int trial = -1;
    std::uint64_t seed = 0;
    std::string what;
    nlohmann::json detail;
};

struct ArmSuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int disk_violations = 0;
    int simplicity_failures = 0;
    int pairwise_trials = 0;
    int pairwise_failures = 0;
    int errors = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::vector<FailureRecord> failures;

    bool passed() const {
        return disk_violations + simplicity_failures + pairwise_failures + errors == 0;
    }
};

struct BaseCaseReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int arc_failures = 0;
    int disk_failures = 0;
    int equality_failures = 0;
    double max_arc_deviation = 0.0;
    std::vector<FailureRecord> failures;

    bool passed() const { return arc_failures + disk_failures + equality_failures == 0; }
};

struct IndicatrixSuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int turning_failures = 0;
    int projection_trials = 0;
    int projection_failures = 0;
    int sandwich_trials = 0;
    int sandwich_failures = 0;
    int errors = 0;
    double max_projection_error = 0.0;
    double min_sandwich_slack = std::numeric_limits<double>::infinity();
    std::vector<FailureRecord> failures;

    bool passed() const {
        return turning_failures + projection_failures + sandwich_failures + errors == 0;
    }
};

struct SliceSuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int curves = 0;
    int degenerate = 0;
    int failed_curves = 0;
    int errors = 0;
    int left_nonsimple = 0;  // reported, not asserted
    double min_angle_slack = std::numeric_limits<double>::infinity();
    std::vector<FailureRecord> failures;

    bool passed() const { return failed_curves + errors == 0; }
};

// Deterministic trial inputs, shared between the suites and any external
// cross-check (e.g. the brute-force simplicity oracle in the tests).
struct ArmTrial {
    std::uint64_t seed = 0;
    ChainSpec spec;
    std::vector<double> beta;
    SampleMode mode = SampleMode::Uniform;
};

struct SliceTrial {
    std::uint64_t seed = 0;
    Polytope polytope;
    PlaneSpec plane;
};

ArmTrial make_arm_trial(std::uint64_t master_seed, int trial);
SliceTrial make_slice_trial(std::uint64_t master_seed, int trial, int max_hull_points);

ArmSuiteReport run_arm_suite(const RunConfig& cfg);
BaseCaseReport run_base_case_suite(const RunConfig& cfg);
IndicatrixSuiteReport run_indicatrix_suite(const RunConfig& cfg);
SliceSuiteReport run_slice_suite(const RunConfig& cfg);

}  // namespace slicedev
