#include "partstat/transforms.hpp"

#include <cmath>

#include "partstat/errors.hpp"
#include "partstat/specialfn.hpp"

namespace partstat {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kPi = 3.141592653589793;

std::string fmt_c(const Complex& v) { return v.to_string(12); }

void require_upper_half(const Complex& z, const char* who) {
    if (!(z.im > 0L)) {
        throw Error(std::string(who) + ": Im z must be positive");
    }
}

// The elementary block shared by the inversion laws: a ratio of half-integer
// powers of -iz against the eta value in the /24 frame.
Complex bridge_term(const Complex& z, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    Real pi = Real::pi(bits);
    Complex miz = -times_i(z);
    Complex s12 = pow_half_int(miz, 1);
    Complex s32 = pow_half_int(miz, 3);
    Complex inner = -(s12 / (pi * 32L)) + s32 / 13824L + 1L / (s12 * 24L);
    return inner * (sqrt(Real(6L, bits)) * 2L) / eval_eta(z / 24L, ctx);
}

Real inv_16_sqrt3_pi(mpfr_prec_t bits) {
    return Real(1L, bits) / (sqrt(Real(3L, bits)) * Real::pi(bits) * 16L);
}

Real inv_48_sqrt6(mpfr_prec_t bits) {
    return Real(1L, bits) / (sqrt(Real(6L, bits)) * 48L);
}

}  // namespace

Complex eval_holomorphic_part(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "eval_holomorphic_part");
    Real pi = Real::pi(ctx.bits());
    Complex q = exp(times_i(z) * (pi * 48L));
    return eval_R2(q, ctx) * exp(times_i(z) * (pi * -2L));
}

Complex eval_M(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "eval_M");
    Complex z24 = z * 24L;
    Complex eta24 = eval_eta(z24, ctx);
    return eval_holomorphic_part(z, ctx) - nonholo_series(z, ctx) -
           1L / (eta24 * 24L) + eval_E2(z24, ctx) / (eta24 * 8L);
}

Complex eta_axis_integral(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "eta_axis_integral");
    mpfr_prec_t bits = ctx.bits();
    Complex zl(round_prec(z.re, bits), round_prec(z.im, bits));
    Real zero(0L, bits);
    RealIntegrand f = [=, &ctx](const Real& u) {
        Complex tau(zero, u / 24L);
        return eval_eta(tau, ctx) * pow_half_int(Complex(u, zero) - times_i(zl), -3);
    };
    // The integrand dies like e^(-2 pi/u) toward 0 and like e^(-pi u/288) at
    // the far end; the omitted [0, delta] sliver is below working precision.
    double need = static_cast<double>(ctx.work_digits()) * kLn10;
    double delta = 2.0 * kPi / need;
    double hi = 288.0 * (need + 30.0) / kPi;
    auto breaks = geometric_panel_breaks(delta, delta, hi, bits);
    return integrate_checked(f, breaks, ctx);
}

Complex eta_vertical_integral(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "eta_vertical_integral");
    mpfr_prec_t bits = ctx.bits();
    Real y = round_prec(z.im, bits);
    Real xr = round_prec(z.re, bits);
    Real mexp(Rat(-3, 2), bits);
    RealIntegrand f = [=, &ctx](const Real& v) {
        Complex tau(-xr / 24L, (y + v) / 24L);
        return eval_eta(tau, ctx) * pow(y * 2L + v, mexp);
    };
    double need = static_cast<double>(ctx.work_digits()) * kLn10;
    double hi = 288.0 * (need + 30.0) / kPi;
    auto breaks = geometric_panel_breaks(0.0, 0.5, hi, bits);
    return times_i(integrate_checked(f, breaks, ctx));
}

ResidualReport verify_R_inversion(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "verify_R_inversion");
    mpfr_prec_t bits = ctx.bits();
    Complex lhs = eval_holomorphic_part(-(1L / z), ctx);
    Complex s32 = pow_half_int(-times_i(z), 3);
    // The rescaled holomorphic term carries a minus sign; the unit tests pin
    // the measured failure of the opposite choice.
    Complex rhs = bridge_term(z, ctx) -
                  s32 * eval_holomorphic_part(z / 576L, ctx) * inv_48_sqrt6(bits) +
                  s32 * eta_axis_integral(z, ctx) * inv_16_sqrt3_pi(bits);
    return make_residual_report("cor-3.5", "z=" + fmt_c(z), lhs, rhs, ctx);
}

ResidualReport verify_N_inversion(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "verify_N_inversion");
    mpfr_prec_t bits = ctx.bits();
    Complex lhs = nonholo_integral(-(1L / z), ctx);
    Complex s32 = pow_half_int(-times_i(z), 3);
    Complex vpart = times_i(s32 * eta_vertical_integral(z, ctx));
    Complex fpart = s32 * eta_axis_integral(z, ctx);
    Complex rhs = -(vpart + fpart) * inv_16_sqrt3_pi(bits);
    return make_residual_report("lemma-nonholo", "z=" + fmt_c(z), lhs, rhs, ctx);
}

ResidualReport verify_M_inversion(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "verify_M_inversion");
    mpfr_prec_t bits = ctx.bits();
    // In the sum of the holomorphic and non-holomorphic inversion laws the two
    // eta-integral corrections are equal and opposite, so neither integral
    // appears here; only the elementary bridge block survives.
    auto combined = [&](const Complex& zz) {
        return eval_holomorphic_part(zz, ctx) + nonholo_series(zz, ctx);
    };
    Complex lhs = combined(-(1L / z));
    Complex s32 = pow_half_int(-times_i(z), 3);
    Complex rhs = bridge_term(z, ctx) - s32 * combined(z / 576L) * inv_48_sqrt6(bits);
    return make_residual_report("m-inversion", "z=" + fmt_c(z), lhs, rhs, ctx);
}

ResidualReport verify_M_periodicity(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "verify_M_periodicity");
    Complex lhs = eval_M(z + Complex(1L, ctx.bits()), ctx);
    Complex rhs = eval_M(z, ctx);
    return make_residual_report("m-periodicity", "z=" + fmt_c(z), lhs, rhs, ctx);
}

ResidualReport verify_N_series(const Complex& z, const PrecisionContext& ctx) {
    require_upper_half(z, "verify_N_series");
    Complex lhs = nonholo_integral(z, ctx);
    Complex rhs = nonholo_series(z, ctx);
    return make_residual_report("n-series", "z=" + fmt_c(z), lhs, rhs, ctx);
}

Real laplacian_residual(const std::function<Complex(const Complex&)>& f,
                        const Complex& z, const Real& step,
                        const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    Real h = round_prec(step, bits);
    if (!(h > 0L)) throw Error("laplacian_residual: step must be positive");
    Real pi = Real::pi(bits);
    Complex fc = f(z);
    Complex vsum(0L, bits);
    Complex dsum(0L, bits);
    // Eight equally spaced points on a circle of radius h give the flat
    // Laplacian from the mean value defect and d/dzbar from the first moment,
    // both with O(h^2) error.
    for (long j = 0; j < 8; ++j) {
        Real s(bits), c(bits);
        sin_cos(s, c, pi * Real(Rat(j, 4), bits));
        Complex d(c, s);
        Complex v = f(z + d * h);
        vsum += v;
        dsum += d * v;
    }
    Complex lap = (vsum / 8L - fc) * (Real(4L, bits) / sqr(h));
    Complex dzbar = dsum / (h * 8L);
    Real y = round_prec(z.im, bits);
    Complex val = -(lap * sqr(y)) + times_i(dzbar) * (y * 3L);
    return abs(val);
}

Real laplacian_check(const Complex& z, const Real& step, const PrecisionContext& ctx) {
    require_upper_half(z, "laplacian_check");
    if (!(z.im > step * 4L)) {
        throw Error("laplacian_check: Im z must exceed four times the step");
    }
    auto f = [&](const Complex& zz) { return eval_M(zz, ctx); };
    return laplacian_residual(f, z, step, ctx);
}

}  // namespace partstat
