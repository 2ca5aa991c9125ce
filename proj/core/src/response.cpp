#include "vdwsurf/response.hpp"

#include <cmath>
#include <stdexcept>

namespace vdwsurf {

std::complex<double> fresnel_r(std::complex<double> eps_host,
                               std::complex<double> eps_medium) {
    std::complex<double> denom = eps_medium + eps_host;
    if (std::abs(denom) < 1e-300)
        throw std::domain_error("fresnel_r: eps_medium + eps_host vanishes");
    return (eps_medium - eps_host) / denom;
}

std::complex<double> local_field_factor(std::complex<double> eps_host) {
    std::complex<double> denom = 2.0 * eps_host + 1.0;
    if (std::abs(denom) < 1e-300)
        throw std::domain_error("local_field_factor: 2 eps + 1 vanishes");
    std::complex<double> l = 3.0 * eps_host / denom;
    return l * l;
}

std::complex<double> ResonantDecomposition::resonant_part(
    std::complex<double> omega) const {
    std::complex<double> denom =
        omega_S * omega_S - omega * omega -
        std::complex<double>(0.0, 1.0) * omega * Gamma;
    return sigma_sq * omega_S * omega_S / denom;
}

std::complex<double> ResonantDecomposition::reconstruct(
    std::complex<double> omega) const {
    return background + resonant_part(omega);
}

ResonantDecomposition resonant_decomposition(const MediumModel& m) {
    double omega_S = surface_mode_frequency(m);
    if (!(omega_S > 0.0))
        throw std::domain_error("resonant_decomposition: medium has no surface mode");
    double background = (m.eta - 1.0) / (m.eta + 1.0);
    // The microscopic form; identical to (eps0-1)/(eps0+1) - background and
    // well defined for metals where eps0 is infinite.
    double sigma_sq = 2.0 * m.eta * m.omega_P * m.omega_P /
                      ((m.eta + 1.0) * (m.eta + 1.0) * omega_S * omega_S);
    return ResonantDecomposition{background, sigma_sq, omega_S, m.Gamma};
}

}  // namespace vdwsurf
