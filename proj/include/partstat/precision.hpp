#pragma once

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace partstat {

// Working-precision policy shared by every numerical kernel. `digits` is the
// claimed decimal accuracy of returned values; evaluation happens with `guard`
// extra digits on top. quadrature_cutoff_sigma widens integral truncation radii
// in units of the Gaussian decay scale.
struct PrecisionContext {
    long digits = 50;
    long guard = 20;
    double quadrature_cutoff_sigma = 1.0;

    PrecisionContext() = default;
    explicit PrecisionContext(long digits_, long guard_ = 20, double sigma = 1.0)
        : digits(digits_), guard(guard_), quadrature_cutoff_sigma(sigma) {
        if (digits < 15) throw std::invalid_argument("PrecisionContext: digits must be >= 15");
        if (guard < 0) throw std::invalid_argument("PrecisionContext: guard must be >= 0");
        if (!(sigma > 0)) throw std::invalid_argument("PrecisionContext: sigma must be > 0");
    }

    long work_digits() const { return digits + guard; }

    // Binary precision for mpfr variables, with a fixed safety pad.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(
            std::ceil(static_cast<double>(work_digits()) * 3.3219280948873626) + 16);
    }

    // A context with the same policy but more claimed digits (never fewer).
    PrecisionContext with_min_digits(long min_digits) const {
        PrecisionContext out = *this;
        if (out.digits < min_digits) out.digits = min_digits;
        return out;
    }
};

}  // namespace partstat
