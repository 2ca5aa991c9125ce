#include "vdwsurf/forces.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "vdwsurf/response.hpp"

namespace vdwsurf {

namespace {

void check_force_args(const AtomSpec& atomA, const AtomSpec& atomB, double omega_A) {
    if (atomA.state != AtomState::excited)
        throw std::invalid_argument("force: atom A must be excited");
    if (atomB.state != AtomState::ground)
        throw std::invalid_argument("force: atom B must be in the ground state");
    if (!(std::isfinite(omega_A) && omega_A > 0.0))
        throw std::invalid_argument("force: omega_A must be > 0");
}

struct KeptTerms {
    double re_r;     // Re of the resonant reflection term at omega_A
    double abs2_r;   // |...|^2 of the same
    double re_alpha; // Re alpha_B(omega_A)
};

KeptTerms kept_terms(const AtomSpec& atomB, const MediumModel& medium, double omega_A) {
    ResonantDecomposition dec = resonant_decomposition(medium);
    std::complex<double> r_u = dec.resonant_part(omega_A);
    double re_alpha = polarizability(atomB, omega_A).real();
    return KeptTerms{r_u.real(), std::norm(r_u), re_alpha};
}

double kept_potential_at(const KeptTerms& k, double d_sq,
                         const std::array<double, 3>& pos_A,
                         const std::array<double, 3>& pos_B) {
    double z = pos_A[2];
    double dx = pos_A[0] - pos_B[0];
    double dy = pos_A[1] - pos_B[1];
    double dz = pos_A[2] + pos_B[2];  // image of B sits at -z_B
    double rp2 = dx * dx + dy * dy + dz * dz;
    double rp6 = rp2 * rp2 * rp2;
    return -d_sq / (6.0 * z * z * z) * k.re_r -
           2.0 * d_sq * k.re_alpha * k.abs2_r / rp6;
}

// Negative gradient of kept_potential_at in the canonical embedding.
std::array<double, 3> kept_force_vector(const KeptTerms& k, double d_sq,
                                        const PairGeometry& geom) {
    double z = geom.z_A;
    double rp2 = geom.R_prime() * geom.R_prime();
    double rp8 = rp2 * rp2 * rp2 * rp2;
    double pair = -12.0 * d_sq * k.re_alpha * k.abs2_r / rp8;
    double self = -d_sq / (2.0 * z * z * z * z) * k.re_r;
    return {pair * geom.R_par, 0.0, self + pair * geom.Z_plus()};
}

}  // namespace

double lorentzian_line(double x, double y, double z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw std::invalid_argument("lorentzian_line: arguments must be finite");
    double diff = x * x - y * y;
    double denom = diff * diff + y * z * y * z;
    if (denom == 0.0)
        throw std::domain_error("lorentzian_line: pole at x = +-y with y z = 0");
    return x * x * x * x / denom;
}

ForceResult resonant_force(const AtomSpec& atomA, const AtomSpec& atomB,
                           const PairGeometry& geom, const MediumModel& medium,
                           double omega_A) {
    check_force_args(atomA, atomB, omega_A);

    ResonantDecomposition dec = resonant_decomposition(medium);
    double sq = dec.sigma_sq;
    double omega_S = dec.omega_S;
    double omega_B = atomB.omega_0;
    double alpha_B0 = static_polarizability(atomB);

    double line_S = lorentzian_line(omega_S, omega_A, dec.Gamma);
    double line_B = lorentzian_line(omega_B, omega_A, atomB.gamma);
    double detune_B = 1.0 - omega_A * omega_A / (omega_B * omega_B);
    double detune_S = 1.0 - omega_A * omega_A / (omega_S * omega_S);

    double rp2 = geom.R_prime() * geom.R_prime();
    double rp8 = rp2 * rp2 * rp2 * rp2;
    double z = geom.z_A;
    double z4 = z * z * z * z;

    double pair_coeff =
        12.0 * atomA.d_sq * alpha_B0 / rp8 * detune_B * line_B * sq * sq * line_S;
    double f_par_x = -geom.R_par * pair_coeff;

    double f_z = -atomA.d_sq / (2.0 * z4) * sq * line_S *
                 (detune_S + 24.0 * z4 * geom.Z_plus() * alpha_B0 / rp8 *
                                 detune_B * line_B * sq);

    double f0 = atomA.d_sq / (2.0 * z4);
    return ForceResult{{f_par_x, 0.0}, f_z, f0};
}

double resonant_kept_potential(const AtomSpec& atomA, const AtomSpec& atomB,
                               const PairGeometry& geom, const MediumModel& medium,
                               double omega_A) {
    check_force_args(atomA, atomB, omega_A);
    KeptTerms k = kept_terms(atomB, medium, omega_A);
    return kept_potential_at(k, atomA.d_sq, geom.pos_A(), geom.pos_B());
}

GradientCheckReport gradient_force_check(const AtomSpec& atomA, const AtomSpec& atomB,
                                         const PairGeometry& geom,
                                         const MediumModel& medium, double omega_A,
                                         double step) {
    check_force_args(atomA, atomB, omega_A);
    double scale = std::max(geom.z_A, geom.R_prime());
    if (!(std::isfinite(step) && step > 0.0) ||
        step > 0.05 * std::min(geom.z_A, geom.R()))
        throw std::invalid_argument(
            "gradient_force_check: step must be positive and below 5% of z_A and R");
    if (step < 1e3 * DBL_EPSILON * scale)
        throw std::domain_error(
            "gradient_force_check: step is inside the cancellation floor");

    KeptTerms k = kept_terms(atomB, medium, omega_A);
    std::array<double, 3> pos_A = geom.pos_A();
    std::array<double, 3> pos_B = geom.pos_B();

    std::array<double, 3> fd{};
    for (int axis = 0; axis < 3; ++axis) {
        std::array<double, 3> plus = pos_A, minus = pos_A;
        plus[axis] += step;
        minus[axis] -= step;
        double up = kept_potential_at(k, atomA.d_sq, plus, pos_B);
        double dn = kept_potential_at(k, atomA.d_sq, minus, pos_B);
        fd[axis] = -(up - dn) / (2.0 * step);
    }

    std::array<double, 3> an = kept_force_vector(k, atomA.d_sq, geom);
    double num = 0.0, den = DBL_MIN;
    for (int axis = 0; axis < 3; ++axis) {
        num = std::max(num, std::abs(fd[axis] - an[axis]));
        den = std::max(den, std::abs(an[axis]));
    }
    return GradientCheckReport{an, fd, num / den, step};
}

std::array<double, 3> full_potential_force_fd(const AtomSpec& atomA, const AtomSpec& atomB,
                                              const PairGeometry& geom,
                                              const MediumModel& medium,
                                              const HostModel& host, double omega_A,
                                              double step, const QuadratureSpec& quad) {
    check_force_args(atomA, atomB, omega_A);
    if (!(std::isfinite(step) && step > 0.0) ||
        step > 0.05 * std::min(geom.z_A, geom.R()))
        throw std::invalid_argument(
            "full_potential_force_fd: step must be positive and below 5% of z_A and R");

    std::array<double, 3> pos_B = geom.pos_B();
    auto total_at = [&](const std::array<double, 3>& pos) {
        double z = pos[2];
        double r_par = std::hypot(pos[0] - pos_B[0], pos[1] - pos_B[1]);
        PairGeometry g = make_pair_geometry(z, pos_B[2], r_par);
        return casimir_polder(atomA, z, medium, host, omega_A, quad) +
               u_ab_breakdown(atomA, atomB, g, medium, host, omega_A, quad).total;
    };

    std::array<double, 3> pos_A = geom.pos_A();
    std::array<double, 3> fd{};
    for (int axis = 0; axis < 3; ++axis) {
        std::array<double, 3> plus = pos_A, minus = pos_A;
        plus[axis] += step;
        minus[axis] -= step;
        fd[axis] = -(total_at(plus) - total_at(minus)) / (2.0 * step);
    }
    return fd;
}

}  // namespace vdwsurf
