#pragma once

#include <complex>

namespace vdwsurf {

enum class AtomState { excited, ground };

/// Isotropic two-level atom in reduced units: frequencies in units of the
/// reference frequency, dipole strength d_sq = |d|^2 / (hbar w_ref l_ref^3).
/// Excited atoms carry gamma = 0: their line enters only through the
/// principal-value structure, and a finite width would not be meaningful
/// at this level of description.
struct AtomSpec {
    double omega_0;  ///< transition frequency, > 0
    double gamma;    ///< transition width, >= 0; pinned to 0 when excited
    double d_sq;     ///< reduced squared dipole moment, > 0
    AtomState state;

    static AtomSpec excited(double omega_0, double d_sq);
    static AtomSpec ground(double omega_0, double gamma, double d_sq);

    /// Same constructors, parametrized by the static polarizability
    /// alpha(0) = 2 d_sq / (3 omega_0) instead of d_sq.
    static AtomSpec ground_from_alpha0(double omega_0, double gamma, double alpha0);
    static AtomSpec excited_from_alpha0(double omega_0, double alpha0);
};

/// Two-level polarizability,
///   alpha(w) = s * (2 d_sq / 3 omega_0) * omega_0^2 / (omega_0^2 - w^2 - i w gamma),
/// with s = +1 for ground and -1 for excited state. Throws std::domain_error
/// on an undamped pole (gamma = 0 and omega = +-omega_0).
std::complex<double> polarizability(const AtomSpec& atom, std::complex<double> omega);

/// alpha(i xi), xi >= 0: real, and of one sign (positive for ground atoms).
double polarizability_imag_axis(const AtomSpec& atom, double xi);

/// alpha(0) = 2 d_sq / (3 omega_0), with the excited-state sign: the excited
/// two-level atom has negative static polarizability.
double static_polarizability(const AtomSpec& atom);

}  // namespace vdwsurf
