#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vdwsurf/scenario.hpp"

namespace vdwsurf {

enum class SweepQuantity { u_ratio, force_z, force_par, cp_potential };

/// Maps the CLI names u_ratio | force_z | force_par | cp_potential.
SweepQuantity parse_quantity(const std::string& name);

struct SweepRow {
    double omega_a_rel;
    std::vector<double> values;  ///< NaN marks a reported gap
};

struct SweepResult {
    std::vector<std::string> columns;  ///< leading "omega_a_rel", then one per curve
    std::vector<SweepRow> rows;        ///< in grid order
    std::vector<double> gaps;          ///< omega_A values skipped at undamped poles
};

/// Uniform omega_A sweep of one quantity over [omega_a_min_rel,
/// omega_a_max_rel] with `points` samples. Undamped pole crossings
/// (omega_A = omega_B with gamma_B = 0) become NaN rows recorded in `gaps`;
/// any other per-point failure aborts with the offending omega_A in the
/// message. Points are evaluated on `threads` worker threads (0 = hardware
/// concurrency); the result is deterministic and in grid order regardless.
SweepResult run_sweep(const Scenario& s, SweepQuantity quantity, unsigned threads = 0);

/// Preset sweeps 2..5 (see README): multi-curve variants of run_sweep with
/// fixed per-curve overrides of `base`.
SweepResult figure_sweep(int figure_id, const Scenario& base, unsigned threads = 0);

/// CSV: header line, one row per grid point, %.16e floats, comma separated,
/// '\n' line ends. Gap rows carry "nan" in the value columns.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv_file(const SweepResult& result, const std::string& path);

/// figure_sweep + write_csv_file.
void emit_figure(int figure_id, const Scenario& base, const std::string& out_path,
                 unsigned threads = 0);

}  // namespace vdwsurf
