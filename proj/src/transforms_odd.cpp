#include "partstat/transforms.hpp"

#include <cmath>
#include <complex>

#include "partstat/errors.hpp"
#include "partstat/modular.hpp"
#include "partstat/specialfn.hpp"

namespace partstat {

namespace {

Real series_stop_tol(const PrecisionContext& ctx) {
    return Real::pow10(-(ctx.work_digits() + 5), ctx.bits());
}

bool tail_negligible(const Complex& t1, const Complex& t2, const Complex& acc,
                     const Real& tol) {
    Real mag = abs(t1) + abs(t2);
    Real floor = abs(acc);
    if (floor < 1L) floor = Real(1L, tol.prec());
    return mag < tol * floor;
}

std::string fmt_c(const Complex& v) { return v.to_string(12); }

std::string frame_desc(long h, long k, long hp, const Complex& z) {
    return "(h,k,h')=(" + std::to_string(h) + "," + std::to_string(k) + "," +
           std::to_string(hp) + ") z=" + fmt_c(z);
}

std::complex<double> to_cd(const Complex& v) {
    return {v.re.to_double(), v.im.to_double()};
}

void check_series_radius(const Complex& q, const char* who) {
    if (abs(q) > 0.9) {
        throw SlowConvergenceError(std::string(who) +
                                   ": |q| > 0.9 converges too slowly");
    }
}

// q1 at the half exponent, e^(pi i (h' + i/z)/k), for the k-odd laws whose
// series run in q1^(1/2).
Complex frame_q1_half(long hprime, long k, const Complex& z,
                      const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    Complex t = Complex(Real(hprime, bits), Real(0L, bits)) + times_i(1L / z);
    return exp(times_i(t) * (Real::pi(bits) / k));
}

// Gaussian kernel integral of the w-dependent odd laws:
//   int exp(-3 pi z (x^2 - 2x)/(2k)) / (2 sinh(-pi i w - u(x)/2)) dx
// with u(x) = i pi r0 - (2 pi z / k) x. The Gaussian peaks at x = 1.
Complex odd_theorem_kernel(long k, const Rat& r0, const Complex& z,
                           const Complex& w, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    Real pi = Real::pi(bits);
    Complex c = z * ((pi * 3L) / (2 * k));
    Complex slope = z * ((pi * 2L) / k);
    Complex u0(Real(0L, bits), pi * Real(r0, bits));

    Real radius = gaussian_cutoff(c.re, ctx) + 2L;
    double xmax = radius.to_double() + 1.0;
    const double pid = std::acos(-1.0);
    // sinh zeros sit at u = -2 pi i (w + m)
    std::complex<double> p0(2.0 * pid * w.im.to_double(),
                            -2.0 * pid * w.re.to_double());
    double dx = detail::pole_distance_x(to_cd(u0), to_cd(slope), p0, 2.0 * pid,
                                        xmax);
    if (dx < 1e-3) {
        throw PoleProximityError(
            "odd theorem kernel: pole within 1e-3 of the contour (k=" +
            std::to_string(k) + ")");
    }
    double step = std::min(0.125, dx / 2);
    auto breaks = gaussian_panel_breaks(Real(1L, bits), radius, -2.5, 2.5, bits,
                                        step);
    Complex piw = times_i(w) * pi;
    auto f = [&](const Real& x) -> Complex {
        Complex u = u0 - slope * x;
        return exp(-(c * (x - 2L)) * x) / (sinh(-piw - u / 2L) * 2L);
    };
    return integrate_checked(f, breaks, ctx);
}

}  // namespace

Complex eval_g_odd(const Complex& q, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    check_series_radius(q, "eval_g_odd");
    Real tol = series_stop_tol(ctx);
    // Both wings of the bilateral sum coincide, so fold them into one.
    Complex acc(Real(Rat(1, 2), bits));
    for (long m = 1;; ++m) {
        Complex t = pow_int(q, (3 * m * m + m) / 2) * 2L / (1L + pow_int(q, m));
        if (m % 2) t = -t;
        acc += t;
        if (m >= 3 && tail_negligible(t, t, acc, tol)) break;
        if (m > 20000) throw SlowConvergenceError("eval_g_odd: series tail stuck");
    }
    return acc / qpochhammer_value(q, ctx);
}

Complex eval_h_odd(const Complex& q, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    check_series_radius(q, "eval_h_odd");
    Real tol = series_stop_tol(ctx);
    Complex acc(Real(Rat(-1, 4), bits));
    for (long m = 1;; ++m) {
        Complex qm = pow_int(q, m);
        Complex den = 1L + qm;
        Complex common = 1L / (den * den * den);
        Complex t1 = pow_int(q, (3 * m * m + m) / 2) * (1L - qm * 3L) * common;
        Complex t2 = pow_int(q, (3 * m * m + 3 * m) / 2) * (qm - Complex(3L, bits)) * common;
        if (m % 2) {
            t1 = -t1;
            t2 = -t2;
        }
        acc += t1 + t2;
        if (m >= 3 && tail_negligible(t1, t2, acc, tol)) break;
        if (m > 20000) throw SlowConvergenceError("eval_h_odd: series tail stuck");
    }
    return acc / qpochhammer_value(q, ctx);
}

Complex eval_m_odd(const Complex& q, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    check_series_radius(q, "eval_m_odd");
    Real tol = series_stop_tol(ctx);
    Complex acc(0L, bits);
    for (long m = 0;; ++m) {
        Complex den = 1L - pow_int(q, 2 * m + 1);
        Complex t1 = pow_int(q, 3 * m * m + 5 * m) / den;
        Complex t2 = pow_int(q, 3 * m * m + 3 * m - 1) / den;
        if (m % 2) {
            t1 = -t1;
            t2 = -t2;
        }
        acc += t1 + t2;
        if (m >= 3 && tail_negligible(t1, t2, acc, tol)) break;
        if (m > 20000) throw SlowConvergenceError("eval_m_odd: series tail stuck");
    }
    return acc / qpochhammer_value(q * q, ctx);
}

Complex eval_h_odd_w(const Complex& q, const Complex& w, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    check_series_radius(q, "eval_h_odd_w");
    Real pole_tol(1e-6, bits);
    Real tol = series_stop_tol(ctx);
    // Single-pi convention: this series alternates in half steps of w.
    Complex E = exp(times_i(w) * Real::pi(bits));
    Complex d0 = 1L + E;
    if (abs(d0) < pole_tol) {
        throw PoleProximityError("eval_h_odd_w: denominator vanishes at m=0");
    }
    Complex acc = 1L / d0;
    for (long m = 1;; ++m) {
        Complex qm = pow_int(q, m);
        Complex d1 = 1L + E * qm;
        Complex d2 = qm + E;  // the m < 0 denominator, rescaled by q^m
        if (abs(d1) < pole_tol || abs(d2) < pole_tol * abs(qm)) {
            throw PoleProximityError("eval_h_odd_w: denominator vanishes near m=" +
                                     std::to_string(m));
        }
        Complex e = pow_int(q, (3 * m * m + m) / 2);
        Complex t1 = e / d1;
        Complex t2 = e / d2;
        if (m % 2) {
            t1 = -t1;
            t2 = -t2;
        }
        acc += t1 + t2;
        if (m >= 3 && tail_negligible(t1, t2, acc, tol)) break;
        if (m > 20000) throw SlowConvergenceError("eval_h_odd_w: series tail stuck");
    }
    return acc / qpochhammer_value(q, ctx);
}

Complex eval_l_odd_w(const Complex& q, const Complex& w, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    check_series_radius(q, "eval_l_odd_w");
    Real pole_tol(1e-6, bits);
    Real tol = series_stop_tol(ctx);
    Complex E = exp(times_i(w) * (Real::pi(bits) * 2L));
    Complex acc(0L, bits);
    for (long m = 0;; ++m) {
        Complex qo = pow_int(q, 2 * m + 1);
        Complex d1 = 1L - E * qo;
        Complex d2 = qo - E;  // the m -> -m-1 denominator, rescaled by q^(2m+1)
        if (abs(d1) < pole_tol || abs(d2) < pole_tol * abs(qo)) {
            throw PoleProximityError("eval_l_odd_w: denominator vanishes near m=" +
                                     std::to_string(m));
        }
        Complex t1 = pow_int(q, 3 * m * m + 5 * m) / d1;
        Complex t2 = -(pow_int(q, 3 * m * m + 3 * m - 1) / d2);
        if (m % 2) {
            t1 = -t1;
            t2 = -t2;
        }
        acc += t1 + t2;
        if (m >= 3 && tail_negligible(t1, t2, acc, tol)) break;
        if (m > 20000) throw SlowConvergenceError("eval_l_odd_w: series tail stuck");
    }
    return acc / qpochhammer_value(q * q, ctx);
}

namespace {

ResidualReport odd_corollary_k_odd(long h, long k, const Complex& z,
                                   const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    long hp = solve_hprime_mult4(h, k);
    Complex q = frame_q(h, k, z, ctx);
    Complex lhs = eval_R2_odd(q, ctx);

    Real pi = Real::pi(bits);
    Complex q1h = frame_q1_half(hp, k, z, ctx);
    Complex om2 = omega(2 * h, k, ctx);
    Complex invz = 1L / z;
    Complex zs = sqrt(z);
    Complex zs3 = pow_int(zs, 3);
    Complex zs5 = pow_int(zs, 5);
    Real rt2 = sqrt(Real(2L, bits));

    Complex decay = exp(invz * (pi / (24 * k)) - z * ((pi * 2L) / (3 * k)));
    Complex ph1 = exp_pi_i(Rat(h, 2 * k) + Rat(k + 1 + 3 * h * k, 2), ctx);
    Complex pref1 = -(om2 * decay * ph1) / rt2;
    Complex term1 = pref1 * (-(Real(3L * k, bits) / (pi * 8L)) *
                                 eval_g_odd(q1h, ctx) / zs3 -
                             eval_h_odd(q1h, ctx) / (zs5 * 16L));

    Complex ssum(0L, bits);
    for (long nu = 0; nu < k; ++nu) {
        for (int sg = 1; sg >= -1; sg -= 2) {
            Complex ph = exp_pi_i(
                Rat(3 * hp * (nu - 3 * nu * nu) + sg - 6 * sg * nu, 6 * k), ctx);
            Complex val = ph * mordell_odd(sg > 0 ? OddMordellKind::IPlus
                                                  : OddMordellKind::IMinus,
                                           k, nu, z, ctx);
            ssum += (sg > 0) ? val : -val;
        }
    }
    Complex ph2 = exp_pi_i(Rat(k * (3 * h + 1), 2) + Rat(h, 2 * k), ctx);
    Complex term2 = -(om2 * zs * ssum) * ph2 *
                    exp(-(z * ((pi * 2L) / (3 * k)))) / (rt2 * (8L * k));

    return make_residual_report("odd-k-odd", frame_desc(h, k, hp, z), lhs,
                                term1 + term2, ctx);
}

ResidualReport odd_corollary_k_even(long h, long k, const Complex& z,
                                    const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    long hp = solve_hprime(h, k, HprimeConvention::mod4K);
    Complex q = frame_q(h, k, z, ctx);
    Complex lhs = eval_R2_odd(q, ctx);

    Real pi = Real::pi(bits);
    Complex q1 = frame_q1(hp, k, z, ctx);
    Complex om = omega(h, k / 2, ctx);
    Complex invz = 1L / z;
    Complex zs = sqrt(z);
    Complex zs3 = pow_int(zs, 3);
    Complex zs5 = pow_int(zs, 5);

    Complex decay = exp(-(z * ((pi * 2L) / (3 * k))) - invz * ((pi * 10L) / (3 * k)));
    Complex ph1 = exp_pi_i(Rat(-hp, 2) + Rat(h + 7 * hp, 2 * k), ctx);
    Complex term1 = ph1 * decay * om *
                    (-(Real(3L * k, bits) / (pi * 8L)) * eval_m_odd(q1, ctx) / zs3 -
                     pow_int(q1, -2) * eval_R2_odd(q1, ctx) / zs5);

    Complex ssum(0L, bits);
    for (long nu = 0; nu < k / 2; ++nu) {
        for (int sg = 1; sg >= -1; sg -= 2) {
            Complex ph = exp_pi_i(
                Rat(3 * hp * (-6 * nu - 6 * nu * nu + 2 * sg * nu + sg) - 6 * nu + sg,
                    3 * k),
                ctx);
            Complex val = ph * mordell_odd(sg > 0 ? OddMordellKind::JPlus
                                                  : OddMordellKind::JMinus,
                                           k, nu, z, ctx);
            ssum += (nu % 2) ? -val : val;
        }
    }
    Complex ph2 =
        exp_pi_i(Rat(h - 3 * hp - 2, 2 * k) + Rat((1 + hp) / 2, 1), ctx);
    Complex term2 =
        om * zs * ssum * ph2 * exp(-(z * ((pi * 2L) / (3 * k)))) / (8L * k);

    return make_residual_report("odd-k-even", frame_desc(h, k, hp, z), lhs,
                                term1 + term2, ctx);
}

ResidualReport odd_theorem_k_odd(long h, long k, const Complex& z,
                                 const Complex& w, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    double bound = 1.0 / (6.0 * k);
    if (!(std::fabs(w.re.to_double()) < bound)) {
        throw PoleProximityError(
            "odd theorem (k odd): needs |Re w| < 1/(6k); at the boundary the "
            "kernel pole meets the contour");
    }
    long hp = solve_hprime_mult4(h, k);
    Complex q = frame_q(h, k, z, ctx);
    Complex lhs = eval_R2_odd_w(q, w, ctx);

    Real pi = Real::pi(bits);
    Complex q1h = frame_q1_half(hp, k, z, ctx);
    Complex om2 = omega(2 * h, k, ctx);
    Complex invz = 1L / z;
    Complex zs = sqrt(z);
    Real rt2 = sqrt(Real(2L, bits));

    Complex decay = exp(invz * (pi / (24 * k)) - z * ((pi * 2L) / (3 * k)));
    Complex ph1 = exp_pi_i(Rat(h, 2 * k) + Rat(k + 1 + 3 * h * k, 2), ctx);
    Complex wfac = exp(times_i(w) * (pi * 2L) +
                       (w * w * invz) * ((pi * 3L * k) / 2L) -
                       (w * invz) * (pi / 2L));
    Complex term1 = -(om2 * decay * ph1 * wfac *
                      eval_h_odd_w(q1h, times_i(w) / z, ctx)) /
                    (zs * rt2);

    Complex ssum(0L, bits);
    for (long nu = 0; nu < k; ++nu) {
        for (int sg = 1; sg >= -1; sg -= 2) {
            Complex ph = exp_pi_i(
                Rat(hp * (nu - 3 * nu * nu) - 6 * sg * nu + sg, 2 * k), ctx);
            Complex val =
                ph * odd_theorem_kernel(k, Rat(sg * (6 * nu - 1), 3 * k), z, w, ctx);
            ssum += (sg > 0) ? val : -val;
        }
    }
    Complex ph2 = exp_pi_i(Rat(k * (3 * h + 1), 2) + Rat(h, 2 * k), ctx);
    Complex term2 = -(om2 * zs * ssum * ph2 * exp(-(times_i(w) * pi)) *
                      exp(-(z * ((pi * 2L) / (3 * k))))) /
                    (rt2 * k);

    return make_residual_report("odd-thm-k-odd",
                                frame_desc(h, k, hp, z) + " w=" + fmt_c(w), lhs,
                                term1 + term2, ctx);
}

ResidualReport odd_theorem_k_even(long h, long k, const Complex& z,
                                  const Complex& w, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.bits();
    long hp = solve_hprime(h, k, HprimeConvention::mod4K);
    Complex q = frame_q(h, k, z, ctx);
    Complex lhs = eval_R2_odd_w(q, w, ctx);

    Real pi = Real::pi(bits);
    Complex q1 = frame_q1(hp, k, z, ctx);
    Complex om = omega(h, k / 2, ctx);
    Complex invz = 1L / z;
    Complex zs = sqrt(z);

    Complex decay = exp(-(z * ((pi * 2L) / (3 * k))) - invz * ((pi * 10L) / (3 * k)));
    Complex ph1 = exp_pi_i(Rat(-hp, 2) + Rat(h + 7 * hp, 2 * k), ctx);
    Complex wfac = exp(times_i(w) * (pi * 2L) +
                       (w * w * invz) * ((pi * 3L * k) / 2L) -
                       (w * invz) * (pi * 2L));
    Complex term1 =
        ph1 * decay * wfac * om * eval_l_odd_w(q1, times_i(w) / z, ctx) / zs;

    Complex ssum(0L, bits);
    for (long nu = 0; nu < k / 2; ++nu) {
        for (int sg = 1; sg >= -1; sg -= 2) {
            Complex ph = exp_pi_i(
                Rat(hp * (-12 * nu - 12 * nu * nu + 4 * sg * nu + 2 * sg) -
                        12 * nu + 2 * sg,
                    2 * k),
                ctx);
            Complex val = ph * odd_theorem_kernel(
                                   k, Rat(12 * nu + 6 - 2 * sg, 3 * k), z, w, ctx);
            ssum += (nu % 2) ? -val : val;
        }
    }
    Complex ph2 =
        exp_pi_i(Rat(h - 3 * hp - 6, 2 * k) + Rat((hp + 1) / 2, 1), ctx);
    Complex term2 = om * zs * ssum * ph2 * exp(-(times_i(w) * pi)) *
                    exp(-(z * ((pi * 2L) / (3 * k)))) / k;

    return make_residual_report("odd-thm-k-even",
                                frame_desc(h, k, hp, z) + " w=" + fmt_c(w), lhs,
                                term1 + term2, ctx);
}

}  // namespace

ResidualReport verify_odd_laws(OddCase oc, long h, long k, const Complex& z,
                               const PrecisionContext& ctx) {
    if (oc == OddCase::kOdd) {
        if (k % 2 == 0) throw NoValidFrameError("odd-k-odd law needs k odd");
        return odd_corollary_k_odd(h, k, z, ctx);
    }
    if (k % 2 == 1) throw NoValidFrameError("odd-k-even law needs k even");
    if (h % 2 == 0) throw NoValidFrameError("odd-k-even law needs h odd");
    return odd_corollary_k_even(h, k, z, ctx);
}

ResidualReport verify_odd_laws(OddCase oc, long h, long k, const Complex& z,
                               const Complex& w, const PrecisionContext& ctx) {
    if (oc == OddCase::kOdd) {
        if (k % 2 == 0) throw NoValidFrameError("odd-thm-k-odd law needs k odd");
        return odd_theorem_k_odd(h, k, z, w, ctx);
    }
    if (k % 2 == 1) throw NoValidFrameError("odd-thm-k-even law needs k even");
    if (h % 2 == 0) throw NoValidFrameError("odd-thm-k-even law needs h odd");
    return odd_theorem_k_even(h, k, z, w, ctx);
}

}  // namespace partstat
