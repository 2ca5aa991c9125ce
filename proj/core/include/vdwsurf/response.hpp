#pragma once

#include <complex>

#include "vdwsurf/media.hpp"

namespace vdwsurf {

/// Quasistatic reflection coefficient of the interface,
/// r = (eps_m - eps_host)/(eps_m + eps_host). Valid while all relevant
/// distances stay small against the transition wavelengths.
std::complex<double> fresnel_r(std::complex<double> eps_host,
                               std::complex<double> eps_medium);

/// Onsager cavity factor [3 eps / (2 eps + 1)]^2 attached to each
/// interaction with the embedding host; exactly 1 in vacuum.
std::complex<double> local_field_factor(std::complex<double> eps_host);

/// Exact partial-fraction split of the vacuum-host reflection coefficient
/// of a Lorentz medium,
///
///   r(w) = background + sigma_sq * omega_S^2 / (omega_S^2 - w^2 - i w Gamma).
///
/// This is an algebraic identity, not a fit: background = (eta-1)/(eta+1)
/// and sigma_sq = 2 eta omega_P^2 / ((eta+1)^2 omega_S^2), which equals
/// (eps(0)-1)/(eps(0)+1) - background.
struct ResonantDecomposition {
    double background;
    double sigma_sq;
    double omega_S;
    double Gamma;

    /// background + resonant_part(omega); equals fresnel_r for the vacuum host.
    std::complex<double> reconstruct(std::complex<double> omega) const;

    /// The pole term alone. This is the piece that survives near omega_S and
    /// drives the resonant force expressions.
    std::complex<double> resonant_part(std::complex<double> omega) const;
};

ResonantDecomposition resonant_decomposition(const MediumModel& m);

}  // namespace vdwsurf
