// ============================================================
//  symbol.hpp -- Fourier-space generators of the linearized system
//
//  Two objects: the 4x4 real generator A1(k) acting on the
//  compressible state (rho, phi1, n, phi2), and the full 8x8
//  complex generator A(xi) acting on (rho, m, n, w).  The k = 0
//  point is excluded: the electrostatic coupling carries 1/k.
// ============================================================
#pragma once

#include "bnsp/params.hpp"

#include <Eigen/Dense>
#include <complex>

namespace bnsp {

using Mat4  = Eigen::Matrix4d;
using CMat4 = Eigen::Matrix4cd;
using CMat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vec3  = Eigen::Vector3d;

// Quartic dispersion polynomial theta^4 + a3 theta^3 + a2 theta^2 + a1 theta + a0
// of A1(k).  All coefficients real for admissible parameters.
struct CharPoly {
    double a3, a2, a1, a0;
    double k;

    std::complex<double> eval(std::complex<double> th) const {
        return (((th + a3) * th + a2) * th + a1) * th + a0;
    }
    std::complex<double> deriv(std::complex<double> th) const {
        return ((4.0 * th + 3.0 * a3) * th + 2.0 * a2) * th + a1;
    }
};

// A1(k): rows (rho, phi1, n, phi2).  Throws std::domain_error for k <= 0.
Mat4 build_compressible_symbol(const FluidParams& p, double k);

// A(xi): 8x8 complex block matrix with the electrostatic coupling
// +/- i rhobar xi / |xi|^2.  Throws std::domain_error for xi = 0.
CMat8 build_full_symbol(const FluidParams& p, const Vec3& xi);

// Coefficients of det(theta I - A1(k)).  Throws std::domain_error for k <= 0.
CharPoly characteristic_coefficients(const FluidParams& p, double k);

// Independent oracle: the same quartic assembled from the two damped-oscillator
// factors [th(th + mu k^2/rho) + c1sq k^2 + rho][th(th + mubar k^2/rho) + c2sq k^2 + rho]
// minus rho^2, expanded by coefficient comparison.
CharPoly factored_characteristic(const FluidParams& p, double k);

} // namespace bnsp
