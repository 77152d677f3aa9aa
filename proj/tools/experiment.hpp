#pragma once

// Experiment driver: translates a flat key = value config into one of the
// lab's measurement modes, collects pass/fail assertions against the pinned
// tolerances, and renders plot-ready CSV series.  Everything up to the final
// directory write is pure, so runs are reproducible byte for byte.

#include "salpeter/field.hpp"
#include "salpeter/wave.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace salpeter::lab {

enum class Mode {
    massless_evolve,
    massive_evolve,
    tail_survey,
    derivative_scan,
    wave_contrast,
    verify_all,
};

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/// Assertion thresholds, overridable per run through tol_* config keys.
struct Tolerances {
    double cross_massless = 1e-6;   // kernel vs spectral, relative
    double cross_massive = 1e-4;    // branch-cut tail vs spectral, relative
    double derivative_real = 1e-12; // |Re d/dt phi(x,0)| vs sup of the profile
    double mover_cancellation = 1e-12; // |right + left - field| vs sup
    double mover_visibility = 1e-4;    // exterior mover amplitude vs sup (lower bound)
    double unitarity = 1e-12;          // norm drift, relative
    double partition = 1e-10;          // interior + exterior vs total, relative
    double confinement = 1e-12;        // compact-data wave amplitude outside the shadow
    double wave_equivalence = 1e-6;    // d'Alembert vs spectral, relative
    double initial_exterior = 1e-20;   // exterior mass fraction at t = 0

    bool operator==(const Tolerances&) const = default;
};

struct ExperimentConfig {
    Mode mode = Mode::verify_all;
    // Initial datum.
    double center = 0.0;
    double radius = 1.0;
    double amplitude = 1.0;
    // Grid.
    double half_length = 64.0;
    long long n_points = 1 << 14;
    // Dispersion.
    double mass = 1.0;
    // Schedule and probe points (meaning depends on the mode; see README).
    std::vector<double> times{0.0, 0.2, 0.5, 1.0};
    std::vector<double> points{3.0, 4.0, 6.0, 8.0};
    Tolerances tol;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parse config text.  Unknown or duplicate keys, malformed numbers and
/// unknown modes are hard errors (std::invalid_argument naming the line).
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& file);

/// Canonical echo of a config; parse_config round-trips it exactly.
std::string serialize_config(const ExperimentConfig& config);

struct Assertion {
    std::string suite;
    std::string name;
    double observed;
    double threshold;
    std::string relation; // observed <relation> threshold
    bool pass;
};

struct OutputFile {
    std::string name;     // e.g. "leakage_massless.csv"
    std::string contents; // manifest block + header + rows
};

struct RunResult {
    std::vector<Assertion> assertions;
    std::vector<OutputFile> files;
    bool all_passed() const;
};

/// Execute the configured mode.  No filesystem access; throws
/// std::invalid_argument (bad parameter combinations), domain_too_small or
/// accuracy_failure.
RunResult run_experiment(const ExperimentConfig& config);

/// Write every produced file plus summary.csv under out_dir.
void write_outputs(const RunResult& result, const std::filesystem::path& out_dir);

/// Interior/exterior L2-mass bookkeeping of an evolution history against the
/// matching causal shadows (one interval per slice).
struct LeakageRecord {
    double time;
    double shadow_left;
    double shadow_right;
    double interior_mass;
    double exterior_mass;
    double total_mass; // summed independently, not interior + exterior
    double exterior_fraction;
};
std::vector<LeakageRecord> leakage_series(const std::vector<Field>& history,
                                          const std::vector<Interval>& shadows);

} // namespace salpeter::lab
