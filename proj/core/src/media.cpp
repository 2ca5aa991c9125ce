#include "vdwsurf/media.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace vdwsurf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

MediumModel make_medium(double eta, double omega_P, double omega_T, double Gamma) {
    require(std::isfinite(eta) && eta >= 1.0, "medium: eta must be >= 1");
    require(std::isfinite(omega_P) && omega_P >= 0.0, "medium: omega_P must be >= 0");
    require(std::isfinite(omega_T) && omega_T >= 0.0, "medium: omega_T must be >= 0");
    require(std::isfinite(Gamma) && Gamma > 0.0, "medium: Gamma must be > 0");
    return MediumModel{eta, omega_P, omega_T, Gamma};
}

MediumModel from_observables(double eta, double eps0, double omega_S, double Gamma) {
    require(std::isfinite(eta) && eta >= 1.0, "medium: eta must be >= 1");
    require(std::isfinite(omega_S) && omega_S > 0.0, "medium: omega_S must be > 0");
    require(!std::isnan(eps0) && eps0 > eta, "medium: eps0 must exceed eta");

    if (std::isinf(eps0)) {
        // Metal: omega_T -> 0 while eps0 = eta (1 + omega_P^2/omega_T^2) -> inf.
        double omega_P = omega_S * std::sqrt((eta + 1.0) / eta);
        return make_medium(eta, omega_P, 0.0, Gamma);
    }
    double a = eps0 / eta - 1.0;  // omega_P^2 / omega_T^2
    double omega_T_sq = omega_S * omega_S / (1.0 + eta * a / (eta + 1.0));
    double omega_P_sq = a * omega_T_sq;
    return make_medium(eta, std::sqrt(omega_P_sq), std::sqrt(omega_T_sq), Gamma);
}

std::complex<double> permittivity_at(const MediumModel& m, std::complex<double> omega) {
    std::complex<double> denom =
        m.omega_T * m.omega_T - omega * omega -
        std::complex<double>(0.0, 1.0) * omega * m.Gamma;
    return m.eta * (1.0 + m.omega_P * m.omega_P / denom);
}

double permittivity_imag_axis(const MediumModel& m, double xi) {
    if (!(xi >= 0.0)) throw std::domain_error("permittivity_imag_axis: xi must be >= 0");
    double denom = m.omega_T * m.omega_T + xi * xi + xi * m.Gamma;
    return m.eta * (1.0 + m.omega_P * m.omega_P / denom);
}

double surface_mode_frequency(const MediumModel& m) {
    return std::sqrt(m.eta * m.omega_P * m.omega_P / (m.eta + 1.0) +
                     m.omega_T * m.omega_T);
}

double static_permittivity(const MediumModel& m) {
    if (m.omega_T == 0.0 && m.omega_P > 0.0)
        return std::numeric_limits<double>::infinity();
    if (m.omega_P == 0.0) return m.eta;
    return m.eta * (1.0 + m.omega_P * m.omega_P / (m.omega_T * m.omega_T));
}

HostModel HostModel::vacuum() { return HostModel{}; }

HostModel HostModel::constant(double eps) {
    if (!(std::isfinite(eps) && eps >= 1.0))
        throw std::invalid_argument("host: constant permittivity must be >= 1");
    HostModel h;
    h.kind_ = Kind::constant;
    h.const_eps_ = eps;
    return h;
}

HostModel HostModel::custom(std::function<std::complex<double>(std::complex<double>)> fn) {
    if (!fn) throw std::invalid_argument("host: custom model needs a callable");
    HostModel h;
    h.kind_ = Kind::custom;
    h.fn_ = std::move(fn);
    return h;
}

std::complex<double> HostModel::at(std::complex<double> omega) const {
    switch (kind_) {
        case Kind::vacuum: return {1.0, 0.0};
        case Kind::constant: return {const_eps_, 0.0};
        case Kind::custom: return fn_(omega);
    }
    return {1.0, 0.0};
}

double HostModel::imag_axis(double xi) const {
    if (!(xi >= 0.0)) throw std::domain_error("host: xi must be >= 0");
    if (kind_ == Kind::vacuum) return 1.0;
    if (kind_ == Kind::constant) return const_eps_;
    return fn_(std::complex<double>(0.0, xi)).real();
}

}  // namespace vdwsurf
