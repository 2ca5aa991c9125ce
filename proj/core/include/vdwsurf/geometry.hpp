#pragma once

#include <array>
#include <complex>

namespace vdwsurf {

enum class Orientation { parallel, perpendicular };

/// Which atom sits closer to the surface when the pair axis is normal to it.
enum class PerpendicularPlacement { b_farther, b_closer };

/// Two atoms above the interface plane z = 0, canonically embedded in the
/// x-z plane: A at (R_par, 0, z_A), B at (0, 0, z_B). Lengths are in units
/// of the reference length.
struct PairGeometry {
    double z_A;    ///< height of atom A (the excited one), > 0
    double z_B;    ///< height of atom B, > 0
    double R_par;  ///< in-plane separation, >= 0

    double Z() const { return z_A - z_B; }
    double Z_plus() const { return z_A + z_B; }
    double R() const;        ///< atom-atom distance, > 0 required downstream
    double R_prime() const;  ///< distance from A to the image of B

    std::array<double, 3> pos_A() const { return {R_par, 0.0, z_A}; }
    std::array<double, 3> pos_B() const { return {0.0, 0.0, z_B}; }
};

/// Validates z_A > 0, z_B > 0, R_par >= 0 and coincidence (R > 0).
PairGeometry make_pair_geometry(double z_A, double z_B, double R_par);

/// The two standard arrangements at atom-atom distance R: parallel puts both
/// atoms at height z_A with in-plane separation R; perpendicular stacks them
/// on one surface normal, by default with B farther from the surface
/// (z_B = z_A + R). PerpendicularPlacement::b_closer requires z_A > R.
PairGeometry build_pair_geometry(double z_A, Orientation orientation, double R,
                                 PerpendicularPlacement placement =
                                     PerpendicularPlacement::b_farther);

/// Dense 3x3 dyadic in units of 1/length^3, row-major.
struct ReducedDyadic {
    std::array<std::complex<double>, 9> m{};

    std::complex<double>& operator()(int i, int j) { return m[3 * i + j]; }
    const std::complex<double>& operator()(int i, int j) const { return m[3 * i + j]; }

    std::complex<double> trace() const;
};

ReducedDyadic operator+(const ReducedDyadic& a, const ReducedDyadic& b);
ReducedDyadic operator*(std::complex<double> s, const ReducedDyadic& a);
ReducedDyadic conj(const ReducedDyadic& a);

/// Tr[a . b].
std::complex<double> trace_product(const ReducedDyadic& a, const ReducedDyadic& b);

/// Static dipole coupling dyadic (3 vv - |v|^2 I)/|v|^5 of a separation
/// vector v. Symmetric, traceless, even in v.
ReducedDyadic direct_dyadic(const std::array<double, 3>& v);

/// Image contribution: direct dyadic of the source-image separation,
/// right-multiplied by the mirror matrix diag(-1, -1, +1). Requires v_z > 0
/// (the image sits below the interface).
ReducedDyadic image_dyadic(const std::array<double, 3>& v);

enum class Direction { a_to_b, b_to_a };

/// Reduced quasistatic two-point Green dyadic between the atom sites:
/// direct part plus r_coeff times the image part. The full dyadic is
/// recovered by attaching the host local-field and permittivity factors,
/// which the callers re-attach analytically.
ReducedDyadic reduced_greens(const PairGeometry& geom, std::complex<double> r_coeff,
                             Direction dir = Direction::a_to_b);

/// Interface part of the reduced one-point scattered trace at height z_A:
/// r_coeff / (2 z_A^3). The position-independent cavity self-term is
/// deliberately dropped; only gradients of this object are physical.
std::complex<double> scattered_trace_interface(double z_A, std::complex<double> r_coeff);

}  // namespace vdwsurf
