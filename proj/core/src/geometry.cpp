#include "vdwsurf/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace vdwsurf {

double PairGeometry::R() const { return std::hypot(R_par, Z()); }

double PairGeometry::R_prime() const { return std::hypot(R_par, Z_plus()); }

PairGeometry make_pair_geometry(double z_A, double z_B, double R_par) {
    if (!(std::isfinite(z_A) && z_A > 0.0))
        throw std::invalid_argument("geometry: z_A must be > 0");
    if (!(std::isfinite(z_B) && z_B > 0.0))
        throw std::invalid_argument("geometry: z_B must be > 0");
    if (!(std::isfinite(R_par) && R_par >= 0.0))
        throw std::invalid_argument("geometry: R_par must be >= 0");
    PairGeometry g{z_A, z_B, R_par};
    if (!(g.R() > 0.0))
        throw std::invalid_argument("geometry: atoms coincide");
    return g;
}

PairGeometry build_pair_geometry(double z_A, Orientation orientation, double R,
                                 PerpendicularPlacement placement) {
    if (!(std::isfinite(R) && R > 0.0))
        throw std::invalid_argument("geometry: R must be > 0");
    if (orientation == Orientation::parallel)
        return make_pair_geometry(z_A, z_A, R);
    double z_B = placement == PerpendicularPlacement::b_farther ? z_A + R : z_A - R;
    if (placement == PerpendicularPlacement::b_closer && !(z_B > 0.0))
        throw std::invalid_argument(
            "geometry: perpendicular pair with B closer needs z_A > R");
    return make_pair_geometry(z_A, z_B, 0.0);
}

std::complex<double> ReducedDyadic::trace() const { return m[0] + m[4] + m[8]; }

ReducedDyadic operator+(const ReducedDyadic& a, const ReducedDyadic& b) {
    ReducedDyadic out;
    for (int k = 0; k < 9; ++k) out.m[k] = a.m[k] + b.m[k];
    return out;
}

ReducedDyadic operator*(std::complex<double> s, const ReducedDyadic& a) {
    ReducedDyadic out;
    for (int k = 0; k < 9; ++k) out.m[k] = s * a.m[k];
    return out;
}

ReducedDyadic conj(const ReducedDyadic& a) {
    ReducedDyadic out;
    for (int k = 0; k < 9; ++k) out.m[k] = std::conj(a.m[k]);
    return out;
}

std::complex<double> trace_product(const ReducedDyadic& a, const ReducedDyadic& b) {
    std::complex<double> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t += a(i, j) * b(j, i);
    return t;
}

ReducedDyadic direct_dyadic(const std::array<double, 3>& v) {
    double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (!(r2 > 0.0)) throw std::invalid_argument("direct_dyadic: zero separation");
    double r = std::sqrt(r2);
    double inv_r5 = 1.0 / (r2 * r2 * r);
    ReducedDyadic out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // 3 (v_i v_j) keeps the matrix exactly symmetric bit-for-bit.
            double val = 3.0 * (v[i] * v[j]);
            if (i == j) val -= r2;
            out(i, j) = val * inv_r5;
        }
    return out;
}

ReducedDyadic image_dyadic(const std::array<double, 3>& v) {
    if (!(v[2] > 0.0))
        throw std::invalid_argument("image_dyadic: source-image vector must rise out of the surface");
    ReducedDyadic out = direct_dyadic(v);
    // Right-multiplication by the mirror diag(-1,-1,+1) flips the x and y columns.
    for (int i = 0; i < 3; ++i) {
        out(i, 0) = -out(i, 0);
        out(i, 1) = -out(i, 1);
    }
    return out;
}

ReducedDyadic reduced_greens(const PairGeometry& geom, std::complex<double> r_coeff,
                             Direction dir) {
    double sx = dir == Direction::a_to_b ? 1.0 : -1.0;
    // A minus B for a_to_b, reversed for b_to_a. The direct part is even in
    // its argument; the image part is not.
    std::array<double, 3> sep{sx * geom.R_par, 0.0, sx * geom.Z()};
    std::array<double, 3> sep_image{sx * geom.R_par, 0.0, geom.Z_plus()};
    return direct_dyadic(sep) + r_coeff * image_dyadic(sep_image);
}

std::complex<double> scattered_trace_interface(double z_A, std::complex<double> r_coeff) {
    if (!(z_A > 0.0))
        throw std::invalid_argument("scattered_trace_interface: z_A must be > 0");
    return r_coeff / (2.0 * z_A * z_A * z_A);
}

}  // namespace vdwsurf
