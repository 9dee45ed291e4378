// ============================================================
//  params.hpp -- fluid parameters, run configuration, config I/O
//
//  Two-fluid compressible model with electrostatic coupling.
//  Fluid 1 carries (mu1, mu2, c1sq), fluid 2 carries
//  (mubar1, mubar2, c2sq); both share the background density
//  rhobar.  The combined longitudinal viscosities are
//  mu = mu1 + mu2 and mubar = mubar1 + mubar2.
// ============================================================
#pragma once

#include <stdexcept>
#include <string>

namespace bnsp {

// ===== Errors =====

// Configuration failures carry a short machine-readable code that the CLI
// surfaces verbatim (e.g. "config_not_found", "config_parse", "config_invalid").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
private:
    std::string code_;
};

// ===== Fluid parameters =====

struct FluidParams {
    double mu1    = 1.0;   // shear viscosity, fluid 1
    double mu2    = 0.0;   // bulk viscosity, fluid 1
    double mubar1 = 2.0;   // shear viscosity, fluid 2
    double mubar2 = 0.0;   // bulk viscosity, fluid 2
    double rhobar = 1.0;   // background density (both fluids)
    double c1sq   = 1.0;   // squared sound speed, fluid 1
    double c2sq   = 2.0;   // squared sound speed, fluid 2

    double mu()    const { return mu1 + mu2; }
    double mubar() const { return mubar1 + mubar2; }

    bool equal_sound_speeds() const;
    bool distinct_viscosities() const;

    // Throws std::invalid_argument naming the violated admissibility condition:
    // mu1 > 0, 3*mu1 + 2*mu2 > 0 (same for the barred pair), rhobar > 0,
    // c1sq > 0, c2sq > 0.
    void validate() const;
};

// Base sound speed of the coupled acoustic mode: sqrt((c1sq + c2sq)/2).
double front_speed(const FluidParams& p);

// ===== Run configuration =====

struct RunConfig {
    double eps1  = 0.1;    // low band: chi1 == 1 below eps1, == 0 above 2*eps1
    double K     = 10.0;   // high band: chi3 == 0 below K, == 1 above K+1
    double sigma = 0.5;    // mollifier width for full-symbol transforms
    double kmax  = 0.0;    // quadrature cutoff; 0 means derived: K + 24/sigma
    double rtol  = 1e-8;
    double atol  = 1e-12;

    double resolved_kmax() const { return kmax > 0.0 ? kmax : K + 24.0 / sigma; }

    // Throws ConfigError("config_invalid", ...) unless
    // 0 < 2*eps1 < K, sigma > 0, resolved_kmax() >= K + 10/sigma,
    // rtol > 0, atol > 0.
    void validate() const;
};

// ===== State indexing =====

// Compressible 4-state (scalar symbol): (rho, phi1, n, phi2), where
// phi1, phi2 are the longitudinal momentum potentials of the two fluids.
enum class Var4 : int { rho = 0, phi1 = 1, n = 2, phi2 = 3 };

// Full 8-state: (rho, m1, m2, m3, n, w1, w2, w3).
enum class Var8 : int { rho = 0, m1 = 1, m2 = 2, m3 = 3, n = 4, w1 = 5, w2 = 6, w3 = 7 };

// ===== Config I/O =====

struct Loaded {
    FluidParams params;
    RunConfig   config;
};

// Flat "key = value" text, one pair per line, '#' starts a comment.
// Recognized keys: mu1 mu2 mubar1 mubar2 rhobar c1sq c2sq
//                  eps1 K sigma kmax rtol atol.
// Unknown keys are an error (ConfigError "config_parse").
Loaded parse_config(const std::string& text);
Loaded load_config(const std::string& path);

} // namespace bnsp
