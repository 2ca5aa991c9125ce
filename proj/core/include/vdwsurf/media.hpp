#pragma once

#include <complex>
#include <functional>

namespace vdwsurf {

/// Single-resonance Lorentz model of the half-space medium,
///
///   eps_m(w) = eta * (1 + omega_P^2 / (omega_T^2 - w^2 - i w Gamma)).
///
/// Frequencies are in units of the reference frequency. omega_T = 0 with
/// omega_P > 0 describes a metal.
struct MediumModel {
    double eta;      ///< background dielectric constant, >= 1
    double omega_P;  ///< coupling strength, >= 0
    double omega_T;  ///< resonance frequency, >= 0
    double Gamma;    ///< absorption width, > 0
};

/// Validates parameter ranges and returns the model. Throws
/// std::invalid_argument on violation.
MediumModel make_medium(double eta, double omega_P, double omega_T, double Gamma);

/// Closed-form inversion from observables: background constant eta, static
/// permittivity eps0 (may be +infinity for a metal), surface-mode frequency
/// omega_S against a vacuum host, and damping Gamma. Requires eps0 > eta.
MediumModel from_observables(double eta, double eps0, double omega_S, double Gamma);

/// eps_m at complex frequency; total on the upper half plane and the real
/// axis whenever Gamma > 0.
std::complex<double> permittivity_at(const MediumModel& m, std::complex<double> omega);

/// eps_m(i xi) for xi >= 0. Real, > eta, strictly decreasing in xi.
double permittivity_imag_axis(const MediumModel& m, double xi);

/// Pole of the vacuum-host reflection coefficient,
/// omega_S = sqrt(eta omega_P^2 / (eta + 1) + omega_T^2). Independent of Gamma.
double surface_mode_frequency(const MediumModel& m);

/// eps_m(0) = eta (1 + omega_P^2 / omega_T^2); +infinity for a metal.
double static_permittivity(const MediumModel& m);

/// Permittivity of the host filling the atoms' half space. The vacuum host
/// short-circuits to exactly 1 so that vacuum results carry no round-off
/// from the host factors.
class HostModel {
public:
    static HostModel vacuum();
    static HostModel constant(double eps);
    static HostModel custom(std::function<std::complex<double>(std::complex<double>)> fn);

    std::complex<double> at(std::complex<double> omega) const;
    /// eps(i xi); real part only, since model hosts are lossless there.
    double imag_axis(double xi) const;
    bool is_vacuum() const { return kind_ == Kind::vacuum; }

private:
    enum class Kind { vacuum, constant, custom };
    Kind kind_ = Kind::vacuum;
    double const_eps_ = 1.0;
    std::function<std::complex<double>(std::complex<double>)> fn_;
};

}  // namespace vdwsurf
