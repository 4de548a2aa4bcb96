#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oblate/numeric.hpp"

namespace oblate {

enum class PrecisionMode { working, hybrid, extended };

struct PrecisionContext {
    int ndec{15};        // decimal digits of the working tier
    int ndec_refine{15}; // decimal digits of the eigenvalue refinement tier
    int minacc{8};       // desired accurate digits

    void validate() const {
        if (ndec < 7 || ndec_refine < ndec || minacc < 1 || minacc > ndec)
            throw std::invalid_argument("PrecisionContext: invalid settings");
    }
};

// minacc defaults follow the precision mode; extended drops back to 8
// desired digits once c_i exceeds 20.
inline PrecisionContext make_context(PrecisionMode mode, double c_imag = 0.0, int minacc_override = 0) {
    PrecisionContext ctx;
    switch (mode) {
        case PrecisionMode::working:
            ctx = {real_traits<double>::ndec, real_traits<double>::ndec, 8};
            break;
        case PrecisionMode::hybrid:
            ctx = {real_traits<double>::ndec, real_traits<dd>::ndec, 8};
            break;
        case PrecisionMode::extended:
            ctx = {real_traits<dd>::ndec, real_traits<dd>::ndec, c_imag > 20.0 ? 8 : 15};
            break;
    }
    if (minacc_override != 0) {
        if (minacc_override < 1 || minacc_override > ctx.ndec)
            throw std::invalid_argument("minacc outside [1, ndec]");
        ctx.minacc = minacc_override;
    }
    ctx.validate();
    return ctx;
}

enum class WarningKind {
    duplicate_eigenvalue,
    low_radial_accuracy,
    low_ms_normalization,
};

struct Warning {
    WarningKind kind;
    int m{0};
    int l1{0};
    int l2{0};      // second degree for duplicate eigenvalues
    int parity{0};  // 0 even, 1 odd
    int digits{0};  // estimated digits for accuracy warnings
    std::string detail;
};

using WarningLog = std::vector<Warning>;

} // namespace oblate
