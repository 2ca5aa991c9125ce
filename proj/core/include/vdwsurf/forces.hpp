#pragma once

#include <array>

#include "vdwsurf/atoms.hpp"
#include "vdwsurf/geometry.hpp"
#include "vdwsurf/media.hpp"
#include "vdwsurf/potentials.hpp"

namespace vdwsurf {

/// Resonance profile x^4 / [(x^2 - y^2)^2 + (y z)^2]. Despite the shared
/// letter in the usual notation this is unrelated to the Onsager
/// local-field factor. Throws std::domain_error when the denominator
/// vanishes (x = +-y together with y z = 0).
double lorentzian_line(double x, double y, double z);

/// Force on the excited atom A, raw components in reduced units together
/// with the conventional normalization F0 = d_A^2 / (2 z_A^4).
struct ForceResult {
    std::array<double, 2> F_parallel;  ///< raw in-plane (x, y) components
    double F_z;                        ///< raw normal component
    double normalization;              ///< F0

    std::array<double, 2> F_parallel_ratio() const {
        return {F_parallel[0] / normalization, F_parallel[1] / normalization};
    }
    double F_z_ratio() const { return F_z / normalization; }
};

/// Closed-form resonant force on atom A near the surface-mode frequency,
/// vacuum host. Keeps the two terms that survive near omega_S: the
/// surface-reflected self-interaction of A and the image-mediated coupling
/// to B. omega_A overrides atomA.omega_0, as in u_ab_breakdown. Throws
/// std::domain_error on the undamped crossing omega_A = omega_B, gamma_B = 0.
ForceResult resonant_force(const AtomSpec& atomA, const AtomSpec& atomB,
                           const PairGeometry& geom, const MediumModel& medium,
                           double omega_A);

/// The potential whose exact negative gradient the closed-form force is:
/// resonant self term plus the image-mediated pair term, with the
/// off-resonant and direct r-independent pieces dropped (they do not carry
/// the surface-mode enhancement).
double resonant_kept_potential(const AtomSpec& atomA, const AtomSpec& atomB,
                               const PairGeometry& geom, const MediumModel& medium,
                               double omega_A);

struct GradientCheckReport {
    std::array<double, 3> analytic;     ///< gradient-form force components
    std::array<double, 3> finite_diff;  ///< central differences of the kept potential
    double max_rel_mismatch;            ///< inf-norm mismatch over inf-norm of analytic
    double step;                        ///< step actually used
};

/// Central-difference validation of the closed form against the kept
/// potential, displacing atom A along each axis. The analytic side is
/// evaluated through the gradient expression directly, a separate code path
/// from resonant_force. step must stay below 5% of both z_A and R, and above
/// the cancellation floor (~1e3 eps times the geometry scale); violations
/// throw std::invalid_argument / std::domain_error.
GradientCheckReport gradient_force_check(const AtomSpec& atomA, const AtomSpec& atomB,
                                         const PairGeometry& geom,
                                         const MediumModel& medium, double omega_A,
                                         double step);

/// Diagnostic: central-difference force from the full potential (single-atom
/// part plus the two-atom potential, both quadrature terms included), for
/// judging how much the kept-terms approximation leaves out. Accuracy is
/// limited by quad.rel_tol; tighten it below the expected relative
/// difference U(x+h)-U(x-h) before trusting digits.
std::array<double, 3> full_potential_force_fd(const AtomSpec& atomA, const AtomSpec& atomB,
                                              const PairGeometry& geom,
                                              const MediumModel& medium,
                                              const HostModel& host, double omega_A,
                                              double step, const QuadratureSpec& quad = {});

}  // namespace vdwsurf
