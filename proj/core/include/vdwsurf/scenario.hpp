#pragma once

#include <stdexcept>
#include <string>

#include "vdwsurf/atoms.hpp"
#include "vdwsurf/geometry.hpp"
#include "vdwsurf/media.hpp"
#include "vdwsurf/quadrature.hpp"

namespace vdwsurf {

/// Complete problem statement in reduced units: frequencies in units of the
/// surface-mode frequency (omega_S = 1 by construction), lengths in units of
/// the reference length, which the presets tie to the atom-atom distance.
/// Defaults describe the bundled sapphire-like medium with atom A swept
/// through the surface resonance.
struct Scenario {
    double eta = 2.71;           ///< medium background constant
    double eps0 = 6.57;          ///< medium static permittivity
    double gamma_rel = 0.015;    ///< medium damping / omega_S
    double omega_s_hz = 0.0;     ///< absolute omega_S, annotation only; 0 = unset
    double omega_b_rel = 0.9;    ///< atom B transition / omega_S
    double gamma_b_rel = 1e-3;   ///< atom B width / omega_S; 0 turns the crossing into a gap
    double alpha_b0_rel = 1.0;   ///< alpha_B(0) in reference-length^3
    Orientation orientation = Orientation::parallel;
    double z_a_rel = 0.1;        ///< z_A / R
    double r_rel = 1.0;          ///< atom-atom distance in reference lengths
    double z_a_alpha = 0.0;      ///< z_A in units alpha_B(0)^{1/3}; > 0 overrides alpha_b0_rel
    double omega_a_min_rel = 0.7;
    double omega_a_max_rel = 1.3;
    int points = 600;            ///< sweep grid size, >= 2
    double rel_tol = 1e-9;       ///< quadrature tolerance

    bool operator==(const Scenario&) const = default;
};

class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line(line) {}

    int line;  ///< 1-based; 0 when the error is not tied to one line
};

/// Parses the line-oriented "key = value" format; '#' starts a comment.
/// Unknown keys and malformed or out-of-range values are errors carrying the
/// line number. Keys not present keep their values from `base`, so a file
/// may override just a few fields of a preset.
Scenario parse_scenario(const std::string& text, const Scenario& base = {});

/// Full round-trippable listing: parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Range and consistency checks for a fully assembled scenario; throws
/// ScenarioParseError (line 0) on violation. parse_scenario calls this.
void validate_scenario(const Scenario& s);

/// Derived pieces. Frequencies are already in surface-mode units, so the
/// medium is built with omega_S = 1.
MediumModel scenario_medium(const Scenario& s);
double scenario_alpha_b0(const Scenario& s);   ///< honours z_a_alpha override
double scenario_z_a(const Scenario& s);        ///< z_a_rel * r_rel
AtomSpec scenario_atom_B(const Scenario& s);
AtomSpec scenario_atom_A(const Scenario& s, double omega_a_rel);  ///< unit dipole strength
PairGeometry scenario_geometry(const Scenario& s);
QuadratureSpec scenario_quadrature(const Scenario& s);

}  // namespace vdwsurf
