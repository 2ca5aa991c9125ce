#include "vdwsurf/atoms.hpp"

#include <cmath>
#include <stdexcept>

namespace vdwsurf {

namespace {

void check_common(double omega_0, double gamma, double d_sq) {
    if (!(std::isfinite(omega_0) && omega_0 > 0.0))
        throw std::invalid_argument("atom: omega_0 must be > 0");
    if (!(std::isfinite(gamma) && gamma >= 0.0))
        throw std::invalid_argument("atom: gamma must be >= 0");
    if (!(std::isfinite(d_sq) && d_sq > 0.0))
        throw std::invalid_argument("atom: d_sq must be > 0");
}

double d_sq_from_alpha0(double omega_0, double alpha0) {
    if (!(std::isfinite(alpha0) && alpha0 > 0.0))
        throw std::invalid_argument("atom: alpha0 must be > 0");
    return 1.5 * omega_0 * alpha0;
}

}  // namespace

AtomSpec AtomSpec::excited(double omega_0, double d_sq) {
    check_common(omega_0, 0.0, d_sq);
    return AtomSpec{omega_0, 0.0, d_sq, AtomState::excited};
}

AtomSpec AtomSpec::ground(double omega_0, double gamma, double d_sq) {
    check_common(omega_0, gamma, d_sq);
    return AtomSpec{omega_0, gamma, d_sq, AtomState::ground};
}

AtomSpec AtomSpec::ground_from_alpha0(double omega_0, double gamma, double alpha0) {
    return ground(omega_0, gamma, d_sq_from_alpha0(omega_0, alpha0));
}

AtomSpec AtomSpec::excited_from_alpha0(double omega_0, double alpha0) {
    return excited(omega_0, d_sq_from_alpha0(omega_0, alpha0));
}

std::complex<double> polarizability(const AtomSpec& atom, std::complex<double> omega) {
    std::complex<double> denom =
        atom.omega_0 * atom.omega_0 - omega * omega -
        std::complex<double>(0.0, 1.0) * omega * atom.gamma;
    if (std::abs(denom) == 0.0)
        throw std::domain_error("polarizability: undamped pole at omega = omega_0");
    double sign = atom.state == AtomState::ground ? 1.0 : -1.0;
    double front = sign * 2.0 * atom.d_sq / (3.0 * atom.omega_0);
    return front * atom.omega_0 * atom.omega_0 / denom;
}

double polarizability_imag_axis(const AtomSpec& atom, double xi) {
    if (!(xi >= 0.0)) throw std::domain_error("polarizability_imag_axis: xi must be >= 0");
    double denom = atom.omega_0 * atom.omega_0 + xi * xi + xi * atom.gamma;
    double sign = atom.state == AtomState::ground ? 1.0 : -1.0;
    return sign * 2.0 * atom.d_sq * atom.omega_0 / (3.0 * denom);
}

double static_polarizability(const AtomSpec& atom) {
    double sign = atom.state == AtomState::ground ? 1.0 : -1.0;
    return sign * 2.0 * atom.d_sq / (3.0 * atom.omega_0);
}

}  // namespace vdwsurf
