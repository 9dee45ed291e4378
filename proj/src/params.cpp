#include "bnsp/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace bnsp {

// ===== FluidParams =====

bool FluidParams::equal_sound_speeds() const {
    return std::abs(c1sq - c2sq) <= 1e-12 * std::max(c1sq, c2sq);
}

bool FluidParams::distinct_viscosities() const {
    return std::abs(mu() - mubar()) > 1e-12 * std::max(std::abs(mu()), std::abs(mubar()));
}

void FluidParams::validate() const {
    auto fail = [](const std::string& cond, double got) {
        std::ostringstream os;
        os << "[FluidParams] admissibility violated: " << cond << " (got " << got << ")";
        throw std::invalid_argument(os.str());
    };
    if (!(mu1 > 0.0)) fail("mu1 > 0", mu1);
    if (!(3.0 * mu1 + 2.0 * mu2 > 0.0)) fail("3*mu1 + 2*mu2 > 0", 3.0 * mu1 + 2.0 * mu2);
    if (!(mubar1 > 0.0)) fail("mubar1 > 0", mubar1);
    if (!(3.0 * mubar1 + 2.0 * mubar2 > 0.0)) fail("3*mubar1 + 2*mubar2 > 0", 3.0 * mubar1 + 2.0 * mubar2);
    if (!(rhobar > 0.0)) fail("rhobar > 0", rhobar);
    if (!(c1sq > 0.0)) fail("c1sq > 0", c1sq);
    if (!(c2sq > 0.0)) fail("c2sq > 0", c2sq);
}

double front_speed(const FluidParams& p) {
    return std::sqrt(0.5 * (p.c1sq + p.c2sq));
}

// ===== RunConfig =====

void RunConfig::validate() const {
    auto fail = [](const std::string& cond) {
        throw ConfigError("config_invalid", "[RunConfig] " + cond);
    };
    if (!(eps1 > 0.0)) fail("eps1 must be positive");
    if (!(2.0 * eps1 < K)) fail("band overlap: 2*eps1 must be below K");
    if (!(sigma > 0.0)) fail("sigma must be positive");
    if (!(resolved_kmax() >= K + 10.0 / sigma))
        fail("kmax too small: need kmax >= K + 10/sigma to resolve the mollified tail");
    if (!(rtol > 0.0)) fail("rtol must be positive");
    if (!(atol > 0.0)) fail("atol must be positive");
}

// ===== Config I/O =====

Loaded parse_config(const std::string& text) {
    Loaded out;
    std::map<std::string, double*> keys{
        {"mu1", &out.params.mu1},       {"mu2", &out.params.mu2},
        {"mubar1", &out.params.mubar1}, {"mubar2", &out.params.mubar2},
        {"rhobar", &out.params.rhobar}, {"c1sq", &out.params.c1sq},
        {"c2sq", &out.params.c2sq},     {"eps1", &out.config.eps1},
        {"K", &out.config.K},           {"sigma", &out.config.sigma},
        {"kmax", &out.config.kmax},     {"rtol", &out.config.rtol},
        {"atol", &out.config.atol},
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        if (std::find_if(line.begin(), line.end(), notspace) == line.end()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config_parse",
                              "line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("config_parse",
                              "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        try {
            size_t pos = 0;
            double v = std::stod(val, &pos);
            if (pos != val.size()) throw std::invalid_argument(val);
            *it->second = v;
        } catch (const std::exception&) {
            throw ConfigError("config_parse", "line " + std::to_string(lineno) +
                                                  ": bad numeric value '" + val + "'");
        }
    }
    out.params.validate();
    out.config.validate();
    return out;
}

Loaded load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config_not_found", "cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

} // namespace bnsp
