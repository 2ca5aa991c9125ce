#pragma once

#include <complex>

#include "vdwsurf/atoms.hpp"
#include "vdwsurf/geometry.hpp"
#include "vdwsurf/media.hpp"
#include "vdwsurf/quadrature.hpp"

namespace vdwsurf {

/// Scalar geometry-plus-reflection weight W entering the two-atom potential:
/// one half of the trace of the product of the two reduced Green dyadics,
/// written out in closed form. Units 1/length^6. For r_coeff = 0 it reduces
/// to the free-space value 3/R^6.
double w_factor(const PairGeometry& geom, std::complex<double> r_coeff);

/// Same quantity assembled literally as Re Tr[G(A->B) . conj(G(B->A))] / 2
/// from reduced_greens. Slower; kept as an independent cross-check path.
double w_factor_via_trace(const PairGeometry& geom, std::complex<double> r_coeff);

/// Dimensionless interface modification factor W R^6 / 3: the ratio of W to
/// its free-space value. Equals 1 for r_coeff = 0.
double interface_bracket(const PairGeometry& geom, std::complex<double> r_coeff);

/// One evaluation of the potential of an excited atom A and a ground atom B,
/// energies in units hbar * w_ref.
struct PotentialBreakdown {
    double off_resonant;    ///< imaginary-frequency integral
    double resonant;        ///< pole contribution at the A transition
    double total;           ///< off_resonant + resonant
    double u0_reference;    ///< free-space scale 2 d_A^2 alpha_B(0) / R^6
    double ratio_resonant;  ///< resonant / u0_reference
};

/// Full evaluation at transition frequency omega_A of atom A. The omega_A
/// argument overrides atomA.omega_0 so one AtomSpec can serve a frequency
/// sweep; atomA contributes its dipole strength. Throws std::domain_error on
/// the undamped crossing omega_A = omega_B with gamma_B = 0.
PotentialBreakdown u_ab_breakdown(const AtomSpec& atomA, const AtomSpec& atomB,
                                  const PairGeometry& geom, const MediumModel& medium,
                                  const HostModel& host, double omega_A,
                                  const QuadratureSpec& quad = {});

/// Resonant part alone, normalized to the free-space scale. Independent of
/// d_A^2 and alpha_B(0); this is the cheap quantity the frequency sweeps plot.
double u_resonant_ratio(const AtomSpec& atomB, const PairGeometry& geom,
                        const MediumModel& medium, const HostModel& host,
                        double omega_A);

/// Position-dependent single-atom potential near the interface, at height
/// z_A, split the same way. Energies in units hbar * w_ref.
struct CasimirPolderBreakdown {
    double off_resonant;
    double resonant;
    double total;
};

CasimirPolderBreakdown casimir_polder_breakdown(const AtomSpec& atomA, double z_A,
                                                const MediumModel& medium,
                                                const HostModel& host, double omega_A,
                                                const QuadratureSpec& quad = {});

double casimir_polder(const AtomSpec& atomA, double z_A, const MediumModel& medium,
                      const HostModel& host, double omega_A,
                      const QuadratureSpec& quad = {});

/// |resonant| with the interface present over |resonant| with the reflection
/// coefficient forced to zero, all else equal. Evaluate at omega_A =
/// surface_mode_frequency(medium) for the headline enhancement. Throws
/// std::domain_error when the free-space resonant term vanishes
/// (omega_A = omega_B).
double enhancement_exact(const AtomSpec& atomB, const PairGeometry& geom,
                         const MediumModel& medium, const HostModel& host,
                         double omega_A);

/// Closed-form estimate sigma_sq^2 (omega_S / Gamma)^2 (1 + 4 z_A z_B / R^2)^-3
/// of the on-resonance enhancement; accurate while both atoms stay close to
/// the surface (within a couple of percent up to z ~ 0.2 R).
double enhancement_estimate(double sigma_sq, double omega_S, double Gamma,
                            double z_A, double z_B, double R);

}  // namespace vdwsurf
