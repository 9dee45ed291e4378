#include "bnsp/symbol.hpp"

namespace bnsp {

static void require_positive_k(double k) {
    if (!(k > 0.0))
        throw std::domain_error("[symbol] wavenumber must be positive; the electrostatic "
                                "coupling carries 1/k");
}

Mat4 build_compressible_symbol(const FluidParams& p, double k) {
    require_positive_k(k);
    const double rb = p.rhobar;
    Mat4 A = Mat4::Zero();
    A(0, 1) = -k;
    A(1, 0) = p.c1sq * k + rb / k;
    A(1, 1) = -(p.mu() / rb) * k * k;
    A(1, 2) = -rb / k;
    A(2, 3) = -k;
    A(3, 0) = -rb / k;
    A(3, 2) = p.c2sq * k + rb / k;
    A(3, 3) = -(p.mubar() / rb) * k * k;
    return A;
}

CMat8 build_full_symbol(const FluidParams& p, const Vec3& xi) {
    const double k2 = xi.squaredNorm();
    if (!(k2 > 0.0)) throw std::domain_error("[symbol] zero wavevector");
    const std::complex<double> I(0.0, 1.0);
    const double rb = p.rhobar;

    CMat8 A = CMat8::Zero();
    // rho row: -i xi . m
    for (int j = 0; j < 3; ++j) A(0, 1 + j) = -I * xi(j);
    // n row: -i xi . w
    for (int j = 0; j < 3; ++j) A(4, 5 + j) = -I * xi(j);
    // momentum rows
    for (int r = 0; r < 3; ++r) {
        // m row r: density and electrostatic couplings
        A(1 + r, 0) = -I * p.c1sq * xi(r) - I * rb * xi(r) / k2;
        A(1 + r, 4) = I * rb * xi(r) / k2;
        // w row r
        A(5 + r, 0) = I * rb * xi(r) / k2;
        A(5 + r, 4) = -I * p.c2sq * xi(r) - I * rb * xi(r) / k2;
        for (int c = 0; c < 3; ++c) {
            const double lap = (r == c) ? k2 : 0.0;
            A(1 + r, 1 + c) = -(p.mu1 / rb) * lap - (p.mu2 / rb) * xi(r) * xi(c);
            A(5 + r, 5 + c) = -(p.mubar1 / rb) * lap - (p.mubar2 / rb) * xi(r) * xi(c);
        }
    }
    return A;
}

CharPoly characteristic_coefficients(const FluidParams& p, double k) {
    require_positive_k(k);
    const double rb = p.rhobar, k2 = k * k;
    const double mu = p.mu(), mub = p.mubar();
    CharPoly c;
    c.k  = k;
    c.a3 = (mu + mub) * k2 / rb;
    c.a2 = mu * mub * k2 * k2 / (rb * rb) + (p.c1sq + p.c2sq) * k2 + 2.0 * rb;
    c.a1 = ((p.c1sq * mub / rb + p.c2sq * mu / rb) * k2 + mu + mub) * k2;
    c.a0 = p.c1sq * p.c2sq * k2 * k2 + (p.c1sq + p.c2sq) * rb * k2;
    return c;
}

CharPoly factored_characteristic(const FluidParams& p, double k) {
    require_positive_k(k);
    // [th^2 + b1 th + d1][th^2 + b2 th + d2] - rb^2 with
    // b_i = visc_i k^2 / rb, d_i = c_i^2 k^2 + rb.
    const double rb = p.rhobar, k2 = k * k;
    const double b1 = p.mu() * k2 / rb, b2 = p.mubar() * k2 / rb;
    const double d1 = p.c1sq * k2 + rb, d2 = p.c2sq * k2 + rb;
    CharPoly c;
    c.k  = k;
    c.a3 = b1 + b2;
    c.a2 = d1 + d2 + b1 * b2;
    c.a1 = b1 * d2 + b2 * d1;
    c.a0 = d1 * d2 - rb * rb;
    return c;
}

} // namespace bnsp
