// ============================================================
//  spectrum.hpp -- eigenvalue branches of A1(k) and their
//  low/high frequency expansions
//
//  The quartic dispersion polynomial has two conjugate pairs
//  below the first branch collision: an acoustic pair whose
//  imaginary part vanishes linearly as k -> 0 and an
//  oscillator pair whose imaginary part approaches the plasma
//  frequency sqrt(2 rhobar).  Branch labels: 1,2 acoustic
//  (+Im, -Im), 3,4 plasma (+Im, -Im).
// ============================================================
#pragma once

#include "bnsp/symbol.hpp"

#include <array>
#include <optional>
#include <vector>

namespace bnsp {

using Roots4 = std::array<std::complex<double>, 4>;

// ===== Eigenvalues =====

// Roots of the dispersion quartic at one wavenumber.  k = 0 is the polynomial
// limit theta^2 (theta^2 + 2 rhobar): {0, 0, +i sqrt(2 rhobar), -i sqrt(2 rhobar)}.
// Unordered. Companion-matrix eigensolve with Newton polish.
Roots4 eigenvalues(const FluidParams& p, double k);

// Residual bound the roots satisfy: |p(theta)| <= tol * (1 + |theta|^4).
double root_residual(const CharPoly& c, std::complex<double> th);

struct EigenBranches {
    std::vector<double> k;
    std::vector<Roots4> theta;   // branch-labeled 1..4 = index 0..3
    std::vector<double> gap;     // minimal pairwise eigenvalue distance per sample
};

// Continuous branch labeling over an increasing grid.  Seeding at the first
// sample (must satisfy k[0] <= eps1/10): branch 1 (3) is the +Im member of the
// conjugate pair with the smaller (larger) |Im|.  Labels propagate by
// minimal-displacement matching over all 24 assignments.
// Throws std::invalid_argument on bad grids, std::runtime_error when the first
// sample's pairs are too close to seed (gap < 1e-10).
EigenBranches track_branches(const FluidParams& p, const std::vector<double>& k_grid,
                             double eps1 = 0.1);

// ===== Expansion coefficients (closed form) =====

struct ExpansionCoefficients {
    // low frequency
    double re_quad;      // -(mu+mubar)/(4 rhobar)
    double re_quartic;   // +(mu-mubar)(c1sq-c2sq)/(8 rhobar^2) for branch 1; branch 3 gets the opposite sign
    double im_linear;    // c = sqrt((c1sq+c2sq)/2)
    double im_cubic;     // a = -(c1sq-c2sq)^2/(16 rhobar c) - (mu+mubar)^2/(32 rhobar^2 c)
    double plasma;       // sqrt(2 rhobar)
    double im_quad;      // (c1sq+c2sq)/(4 sqrt(2 rhobar))
    // high frequency
    double hi_limit1;    // -c1sq rhobar / mu
    double hi_limit3;    // -c2sq rhobar / mubar
    double hi_rate2;     // -mu/rhobar      (theta2 ~ hi_rate2 k^2 + c1sq rhobar/mu)
    double hi_rate4;     // -mubar/rhobar
};

ExpansionCoefficients expansion_coefficients(const FluidParams& p);

// ===== Expansion verification =====

struct FitLine {
    std::string quantity;    // e.g. "branch1_im_remainder"
    double slope;            // fitted log-log slope of the remainder
    double prefactor;        // remainder / k^round(slope) at the smallest sample
    double threshold;        // required minimal slope (signed; decay slopes for high-k are negative)
    bool pass;
};

struct FitReport {
    std::vector<FitLine> lines;
    bool all_pass() const;
};

// Fits remainder slopes after subtracting the closed-form low-frequency terms.
// Requires >= 4 samples inside (0, eps1]. Slope thresholds: 4 - 0.2 for the
// acoustic remainders and the plasma imaginary remainder, 6 - 0.3 for the
// plasma real remainder.
FitReport verify_low_expansion(const FluidParams& p, const std::vector<double>& k_samples);

// Fits the high-frequency remainders: theta1 -> -c1sq rhobar/mu and
// theta3 -> -c2sq rhobar/mubar with O(k^-2), and theta2 + (mu/rhobar) k^2 ->
// c1sq rhobar/mu (resp. barred) with O(k^-2).  Branches are assigned per
// sample by minimal-cost matching against the four model values.
FitReport verify_high_expansion(const FluidParams& p, const std::vector<double>& k_samples);

} // namespace bnsp
