#include "vdwsurf/potentials.hpp"

#include <cmath>
#include <stdexcept>

#include "vdwsurf/response.hpp"

namespace vdwsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm_sq(std::complex<double> z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// Resonance weight of the B response at the A transition,
// w_B^2 (w_B^2 - w_A^2) / [(w_B^2 - w_A^2)^2 + (w_A gamma_B)^2].
// Throws on the undamped crossing, where the pole is not integrable.
double b_resonance_weight(double omega_A, double omega_B, double gamma_B) {
    double diff = omega_B * omega_B - omega_A * omega_A;
    double denom = diff * diff + omega_A * gamma_B * omega_A * gamma_B;
    if (denom == 0.0)
        throw std::domain_error(
            "u_ab: undamped crossing omega_A = omega_B (gamma_B = 0)");
    return omega_B * omega_B * diff / denom;
}

void check_pair(const AtomSpec& atomA, const AtomSpec& atomB, double omega_A) {
    if (atomA.state != AtomState::excited)
        throw std::invalid_argument("u_ab: atom A must be excited");
    if (atomB.state != AtomState::ground)
        throw std::invalid_argument("u_ab: atom B must be in the ground state");
    if (!(std::isfinite(omega_A) && omega_A > 0.0))
        throw std::invalid_argument("u_ab: omega_A must be > 0");
}

}  // namespace

double w_factor(const PairGeometry& geom, std::complex<double> r_coeff) {
    double R = geom.R();
    double Rp = geom.R_prime();
    double R2 = R * R;
    double Rp2 = Rp * Rp;
    double R3 = R2 * R;
    double Rp3 = Rp2 * Rp;
    double R6 = R3 * R3;
    double Rp6 = Rp3 * Rp3;

    double rp4 = geom.R_par * geom.R_par * geom.R_par * geom.R_par;
    double zz = geom.Z() * geom.Z_plus();
    double cross = -(3.0 * (rp4 - zz * zz) + R2 * Rp2) / (R3 * R2 * Rp3 * Rp2);

    return 3.0 / R6 + norm_sq(r_coeff) * 3.0 / Rp6 + r_coeff.real() * cross;
}

double w_factor_via_trace(const PairGeometry& geom, std::complex<double> r_coeff) {
    ReducedDyadic g_ab = reduced_greens(geom, r_coeff, Direction::a_to_b);
    ReducedDyadic g_ba = reduced_greens(geom, r_coeff, Direction::b_to_a);
    return 0.5 * trace_product(g_ab, conj(g_ba)).real();
}

double interface_bracket(const PairGeometry& geom, std::complex<double> r_coeff) {
    double R3 = geom.R() * geom.R() * geom.R();
    return w_factor(geom, r_coeff) * R3 * R3 / 3.0;
}

PotentialBreakdown u_ab_breakdown(const AtomSpec& atomA, const AtomSpec& atomB,
                                  const PairGeometry& geom, const MediumModel& medium,
                                  const HostModel& host, double omega_A,
                                  const QuadratureSpec& quad) {
    check_pair(atomA, atomB, omega_A);
    AtomSpec a_eff = AtomSpec::excited(omega_A, atomA.d_sq);
    double alpha_B0 = static_polarizability(atomB);

    // Imaginary-frequency branch. Everything under the integral is real:
    // permittivities, reflection coefficient and polarizabilities are all
    // real on the positive imaginary axis.
    auto integrand = [&](double xi) {
        double eps_h = host.imag_axis(xi);
        double eps_m = permittivity_imag_axis(medium, xi);
        double r = (eps_m - eps_h) / (eps_m + eps_h);
        double lf = 3.0 * eps_h / (2.0 * eps_h + 1.0);
        // Each propagator carries one cavity-over-permittivity factor
        // [3e/(2e+1)]^2 / e; two propagators appear under the trace.
        double g_weight = lf * lf / eps_h;
        return polarizability_imag_axis(a_eff, xi) *
               polarizability_imag_axis(atomB, xi) * g_weight * g_weight *
               w_factor(geom, r);
    };
    double off_resonant = -(1.0 / kPi) * halfline_integral(integrand, quad);

    // Pole branch at the A transition.
    std::complex<double> eps_h = host.at(omega_A);
    std::complex<double> eps_m = permittivity_at(medium, omega_A);
    std::complex<double> r_A = fresnel_r(eps_h, eps_m);
    double host_weight = norm_sq(local_field_factor(eps_h) / eps_h);
    double weight = b_resonance_weight(omega_A, atomB.omega_0, atomB.gamma);
    double R3 = geom.R() * geom.R() * geom.R();
    double u0 = 2.0 * atomA.d_sq * alpha_B0 / (R3 * R3);
    double ratio = -host_weight * weight * interface_bracket(geom, r_A);
    double resonant = u0 * ratio;

    return PotentialBreakdown{off_resonant, resonant, off_resonant + resonant, u0,
                              ratio};
}

double u_resonant_ratio(const AtomSpec& atomB, const PairGeometry& geom,
                        const MediumModel& medium, const HostModel& host,
                        double omega_A) {
    if (atomB.state != AtomState::ground)
        throw std::invalid_argument("u_ab: atom B must be in the ground state");
    if (!(std::isfinite(omega_A) && omega_A > 0.0))
        throw std::invalid_argument("u_ab: omega_A must be > 0");
    std::complex<double> eps_h = host.at(omega_A);
    std::complex<double> r_A = fresnel_r(eps_h, permittivity_at(medium, omega_A));
    double host_weight = norm_sq(local_field_factor(eps_h) / eps_h);
    double weight = b_resonance_weight(omega_A, atomB.omega_0, atomB.gamma);
    return -host_weight * weight * interface_bracket(geom, r_A);
}

CasimirPolderBreakdown casimir_polder_breakdown(const AtomSpec& atomA, double z_A,
                                                const MediumModel& medium,
                                                const HostModel& host, double omega_A,
                                                const QuadratureSpec& quad) {
    if (atomA.state != AtomState::excited)
        throw std::invalid_argument("casimir_polder: atom A must be excited");
    if (!(std::isfinite(omega_A) && omega_A > 0.0))
        throw std::invalid_argument("casimir_polder: omega_A must be > 0");
    if (!(std::isfinite(z_A) && z_A > 0.0))
        throw std::invalid_argument("casimir_polder: z_A must be > 0");
    AtomSpec a_eff = AtomSpec::excited(omega_A, atomA.d_sq);

    auto integrand = [&](double xi) {
        double eps_h = host.imag_axis(xi);
        double eps_m = permittivity_imag_axis(medium, xi);
        double r = (eps_m - eps_h) / (eps_m + eps_h);
        double lf = 3.0 * eps_h / (2.0 * eps_h + 1.0);
        double s = scattered_trace_interface(z_A, r).real();
        return polarizability_imag_axis(a_eff, xi) * (lf * lf / eps_h) * s;
    };
    double off_resonant = -(1.0 / (2.0 * kPi)) * halfline_integral(integrand, quad);

    std::complex<double> eps_h = host.at(omega_A);
    std::complex<double> r_A = fresnel_r(eps_h, permittivity_at(medium, omega_A));
    std::complex<double> pole_weight = local_field_factor(eps_h) * r_A / eps_h;
    double resonant =
        -atomA.d_sq / (6.0 * z_A * z_A * z_A) * pole_weight.real();

    return CasimirPolderBreakdown{off_resonant, resonant, off_resonant + resonant};
}

double casimir_polder(const AtomSpec& atomA, double z_A, const MediumModel& medium,
                      const HostModel& host, double omega_A,
                      const QuadratureSpec& quad) {
    return casimir_polder_breakdown(atomA, z_A, medium, host, omega_A, quad).total;
}

double enhancement_exact(const AtomSpec& atomB, const PairGeometry& geom,
                         const MediumModel& medium, const HostModel& host,
                         double omega_A) {
    double with_surface = u_resonant_ratio(atomB, geom, medium, host, omega_A);
    // Same expression with the reflection coefficient forced to zero; the
    // bracket collapses to 1 and only the host and resonance weights remain.
    std::complex<double> eps_h = host.at(omega_A);
    double host_weight = norm_sq(local_field_factor(eps_h) / eps_h);
    double weight = b_resonance_weight(omega_A, atomB.omega_0, atomB.gamma);
    double free_space = -host_weight * weight;
    if (free_space == 0.0)
        throw std::domain_error(
            "enhancement_exact: free-space resonant term vanishes at omega_A = omega_B");
    return std::abs(with_surface) / std::abs(free_space);
}

double enhancement_estimate(double sigma_sq, double omega_S, double Gamma,
                            double z_A, double z_B, double R) {
    if (!(sigma_sq > 0.0) || !(omega_S > 0.0) || !(Gamma > 0.0) || !(z_A > 0.0) ||
        !(z_B > 0.0) || !(R > 0.0))
        throw std::invalid_argument("enhancement_estimate: all arguments must be > 0");
    double q = omega_S / Gamma;
    double geom_cut = 1.0 + 4.0 * z_A * z_B / (R * R);
    return sigma_sq * sigma_sq * q * q / (geom_cut * geom_cut * geom_cut);
}

}  // namespace vdwsurf
