#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwapprox/csv.hpp"
#include "pwapprox/sampling.hpp"

namespace pw::harness {

struct SequenceSpec {
    std::string rule = "equidistant"; // equidistant | kadec
    double delta = 0.1;
    std::uint64_t seed = 1;
    int window = 512; // K
};

struct SystemSpec {
    std::string kind = "identity"; // identity | hilbert | lowpass | adversarial
    double cutoff = kPi;           // lowpass
    double omega = 0.0;            // adversarial
    double t = 0.0;                // adversarial
    int stage = -1;                // adversarial build N; -1 = max configured stage
};

struct SignalSpec {
    std::string kind = "triangle"; // constant | triangle | bandlimited_random
    std::uint64_t seed = 1;
    double sigma = kPi;
};

struct TimeGridSpec {
    double t_min = -8.0;
    double t_max = 8.0;
    std::size_t count = 257;
    std::vector<double> explicit_points; // overrides the range when nonempty
};

struct ExperimentConfig {
    std::string experiment; // reconstruct | walsh-converge | divergence | lebesgue | riesz | export-kernel
    std::size_t grid_m = 4096;
    SequenceSpec sequence;
    SystemSpec system;
    SignalSpec signal;
    std::vector<int> stages;
    TimeGridSpec t_grid;
    std::string engine = "sampling"; // reconstruct: sampling | oversampled
    double oversampling = 1.0;
    int walsh_max_level = 10;
    bool walsh_both_limits = false;
    bool inclusive_limit = false;
    bool exploratory = false;
    int kernel_refine = 1;
    int n_max = 16;
    int phi_hat_length = 512;
    double worst_case_sigma = kPi;
    std::string out;
    std::string gram_out;

    // Strict parse: unknown keys are rejected with the offending key path.
    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);

    // Canonical (key-sorted, compact) form embedded in every report.
    std::string resolved_json() const;
};

// Runs one experiment and returns the finished CSV document.
csv::Document run(const ExperimentConfig& cfg);

csv::Document run_reconstruct(const ExperimentConfig& cfg);
csv::Document run_walsh_converge(const ExperimentConfig& cfg);
csv::Document run_divergence(const ExperimentConfig& cfg);
csv::Document run_lebesgue(const ExperimentConfig& cfg);
csv::Document run_riesz(const ExperimentConfig& cfg);
csv::Document run_export_kernel(const ExperimentConfig& cfg);

// Shared resolution helpers (also used by tests).
SamplingSequence make_sequence(const ExperimentConfig& cfg, int required_window);
std::vector<double> make_time_grid(const ExperimentConfig& cfg);

} // namespace pw::harness
