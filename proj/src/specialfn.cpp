#include "partstat/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "partstat/errors.hpp"

namespace partstat {

namespace {

std::mutex g_rule_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const QuadratureRule>> g_rule_cache;

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
void legendre_pair(long n, const Real& x, Real& pn, Real& pnm1) {
    Real prev(1L, x.prec());
    Real cur = x;
    for (long j = 2; j <= n; ++j) {
        Real next = (x * cur * (2 * j - 1) - prev * (j - 1)) / j;
        prev = std::move(cur);
        cur = std::move(next);
    }
    pn = std::move(cur);
    pnm1 = std::move(prev);
}

Real legendre_derivative(long n, const Real& x, const Real& pn, const Real& pnm1) {
    return (x * pn - pnm1) * n / (sqr(x) - 1L);
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_legendre_rule(long order, long bits) {
    if (order < 2) throw Error("gauss_legendre_rule: order must be at least 2");
    std::pair<long, long> key{order, bits};
    {
        std::lock_guard<std::mutex> lock(g_rule_mutex);
        auto it = g_rule_cache.find(key);
        if (it != g_rule_cache.end()) return it->second;
    }

    long work = bits + 64;
    auto rule = std::make_shared<QuadratureRule>();
    rule->order = order;
    rule->bits = bits;
    rule->nodes.reserve(order);
    rule->weights.reserve(order);
    Real eps = mul_2si(Real(1L, work), -(bits + 32));
    for (long i = order; i >= 1; --i) {
        // classical cosine guess, then Newton at full precision
        double guess = std::cos(M_PI * (static_cast<double>(i) - 0.25) /
                                (static_cast<double>(order) + 0.5));
        Real x(guess, work);
        Real pn(work), pnm1(work);
        bool converged = false;
        for (long iter = 0; iter < 80; ++iter) {
            legendre_pair(order, x, pn, pnm1);
            Real dx = pn / legendre_derivative(order, x, pn, pnm1);
            x -= dx;
            if (abs(dx) < eps) {
                converged = true;
                break;
            }
        }
        if (!converged) throw Error("gauss_legendre_rule: Newton refinement stalled");
        legendre_pair(order, x, pn, pnm1);
        Real dp = legendre_derivative(order, x, pn, pnm1);
        rule->nodes.push_back(round_prec(x, bits));
        rule->weights.push_back(round_prec(2L / ((1L - sqr(x)) * sqr(dp)), bits));
    }

    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto [it, inserted] = g_rule_cache.emplace(key, std::move(rule));
    (void)inserted;  // a racing builder may have won; either copy is fine
    return it->second;
}

Complex integrate_panels(const RealIntegrand& f, const std::vector<Real>& breaks,
                         long order, long bits) {
    if (breaks.size() < 2) throw Error("integrate_panels: need at least one panel");
    auto rule = gauss_legendre_rule(order, bits);
    Complex total(0L, bits);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const Real& a = breaks[p];
        const Real& b = breaks[p + 1];
        Real mid = (a + b) / 2L;
        Real half = (b - a) / 2L;
        Complex acc(0L, bits);
        for (long j = 0; j < order; ++j) {
            Real x = mid + half * rule->nodes[j];
            acc += f(x) * rule->weights[j];
        }
        total += acc * half;
    }
    return total;
}

Complex integrate_checked(const RealIntegrand& f, const std::vector<Real>& breaks,
                          const PrecisionContext& ctx) {
    long bits = ctx.bits();
    Complex lo = integrate_panels(f, breaks, 64, bits);
    Complex hi = integrate_panels(f, breaks, 96, bits);
    Real diff = abs(lo - hi);
    Real tol = Real::pow10(-(ctx.digits + 2), bits) * max(Real(1L, bits), abs(hi));
    if (!(diff <= tol)) {
        throw QuadratureDisagreementError(
            "integrate_checked: node densities 64/96 disagree by " +
            diff.to_string(3) + " (tolerance " + tol.to_string(3) + ")");
    }
    return hi;
}

std::vector<Real> gaussian_panel_breaks(const Real& center, const Real& radius,
                                        double dense_lo, double dense_hi,
                                        long bits, double dense_step) {
    double R = radius.to_double();
    if (!(R > 0)) throw Error("gaussian_panel_breaks: radius must be positive");
    if (!(dense_step > 0)) throw Error("gaussian_panel_breaks: step must be positive");
    double dl = std::max(dense_lo, -R);
    double dh = std::min(dense_hi, R);
    if (dl > dh) dl = dh = 0.0;

    std::vector<double> offs;
    {
        std::vector<double> left;
        double w = 0.5, t = dl;
        while (t > -R + 1e-9) {
            t = std::max(t - w, -R);
            left.push_back(t);
            w *= 2;
        }
        offs.assign(left.rbegin(), left.rend());
    }
    for (double t = dl; t < dh - 1e-9; t += dense_step) offs.push_back(t);
    offs.push_back(dh);
    {
        double w = 0.5, t = dh;
        while (t < R - 1e-9) {
            t = std::min(t + w, R);
            offs.push_back(t);
            w *= 2;
        }
    }

    std::vector<Real> breaks;
    breaks.reserve(offs.size());
    for (double o : offs) breaks.push_back(center + Real(o, bits));
    return breaks;
}

std::vector<Real> geometric_panel_breaks(double lo, double first_width, double hi,
                                         long bits) {
    if (!(first_width > 0) || !(hi > lo)) {
        throw Error("geometric_panel_breaks: need hi > lo and a positive width");
    }
    std::vector<Real> breaks;
    breaks.push_back(Real(lo, bits));
    double t = lo, w = first_width;
    while (t < hi - 1e-12) {
        t = std::min(hi, t + w);
        breaks.push_back(Real(t, bits));
        w *= 2;
    }
    return breaks;
}

Real gaussian_cutoff(const Real& re_c, const PrecisionContext& ctx) {
    if (!(re_c > 0L)) throw Error("gaussian_cutoff: decay coefficient must be positive");
    long bits = ctx.bits();
    Real need = Real(static_cast<double>(ctx.work_digits()), bits) *
                    Real::ln(10, bits) +
                40L;
    Real radius = sqrt(need / re_c) + 1L / sqrt(re_c);
    return radius * Real(ctx.quadrature_cutoff_sigma, bits);
}

Real bessel_I(const Real& s, const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0L)) throw Error("bessel_I: x must be positive");
    long bits = ctx.bits();
    long work = bits + 32;
    Real sw = round_prec(s, work);
    Real hx = round_prec(x, work) / 2L;
    Real x2 = sqr(hx);
    Real term = pow(hx, sw) / gamma(sw + 1L);
    Real sum = term;
    Real peak = abs(term);
    Real tol = Real::pow10(-(ctx.work_digits() + 5), work);
    double xd = x.to_double();
    long cap = 2000 + 40 * ctx.work_digits() + 10 * static_cast<long>(xd);
    for (long m = 0; m < cap; ++m) {
        term = term * x2 / (Real(m + 1, work) * (sw + (m + 1)));
        sum += term;
        Real at = abs(term);
        if (at > peak) peak = at;
        // stop only past the growth hump, with a geometric tail bound
        double ratio = x2.to_double() /
                       ((static_cast<double>(m) + 2.0) *
                        (static_cast<double>(m) + 2.0 + s.to_double()));
        if (ratio > 0 && ratio < 0.5 && at * 2L < tol * peak) {
            return round_prec(sum, bits);
        }
    }
    throw NonconvergentSeriesError("bessel_I: series did not meet its tail bound");
}

Real incomplete_gamma_upper_neg_half(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0L)) throw Error("incomplete_gamma_upper_neg_half: x must be positive");
    long bits = ctx.bits();
    Real fast = detail::gamma_neg_half_fast(x, bits);

    // independent path: t = x + u in the defining integral, the e^{-x} factored out
    Real xa = round_prec(x, bits);
    Real mexp = Real(Rat(-3, 2), bits);
    RealIntegrand f = [xa, mexp, bits](const Real& u) {
        return Complex(exp(-u) * pow(xa + u, mexp), Real(0L, bits));
    };
    double U = static_cast<double>(ctx.work_digits()) * 2.302585092994046 + 30.0;
    // the integrand's branch point sits at u = -x; keep early panels narrower
    // than that distance so both node densities resolve it
    double first = std::min(1.0, std::max(1e-9, x.to_double() / 2.0));
    auto breaks = geometric_panel_breaks(0.0, first, U, bits);
    Real quad = integrate_checked(f, breaks, ctx).re * exp(-xa);

    Real tol = Real::pow10(-(ctx.digits - 5), bits) * max(Real(1L, bits), abs(fast));
    if (!(abs(fast - quad) <= tol)) {
        throw QuadratureDisagreementError(
            "incomplete_gamma_upper_neg_half: erfc form " + fast.to_string(8) +
            " vs quadrature " + quad.to_string(8));
    }
    return fast;
}

Complex mordell_I(long k, long nu, const Complex& z, const PrecisionContext& ctx) {
    if (k < 1) throw Error("mordell_I: k must be positive");
    if (!(z.re > 0L)) throw Error("mordell_I: Re z must be positive");
    // 6 nu - 1 is odd while 6 k is even, so the sinh argument never vanishes
    // on the real path; the node guard below is purely defensive.
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    Complex c = z * (pi * 3L) / k;
    Complex slope = z * (pi / k);
    Real arg0 = pi * Real(Rat(6 * nu - 1, 6 * k), bits);
    Real floor_den = Real::pow10(-6, bits);

    RealIntegrand f = [=](const Real& x) {
        Complex th = Complex(Real(0L, bits), arg0) - slope * x;
        Complex sh = sinh(th);
        if (abs(sh) < floor_den) {
            throw SingularityOnPathError("mordell_I: sinh denominator collapsed");
        }
        return exp(-(c * x) * x) * cosh(th) / (sh * sh);
    };
    auto breaks = gaussian_panel_breaks(Real(0L, bits), gaussian_cutoff(c.re, ctx),
                                        -2.0, 2.0, bits);
    return integrate_checked(f, breaks, ctx);
}

Complex mordell_odd(OddMordellKind kind, long k, long nu, const Complex& z,
                    const PrecisionContext& ctx) {
    if (k < 1) throw Error("mordell_odd: k must be positive");
    if (!(z.re > 0L)) throw Error("mordell_odd: Re z must be positive");
    long bits = ctx.bits();
    bool is_i = (kind == OddMordellKind::IPlus || kind == OddMordellKind::IMinus);
    long sg = (kind == OddMordellKind::IPlus || kind == OddMordellKind::JPlus) ? 1 : -1;
    Real pi = Real::pi(bits);
    Complex c = z * (pi * 3L) / (2 * k);
    Complex b = z * (pi / k);
    // constant part of the sinh argument; numerator is never divisible by the
    // denominator (it is +-1 mod 3), so the path avoids all poles
    Rat r0 = is_i ? Rat(sg * (1 - 6 * nu), 6 * k) : Rat(sg - 6 * nu - 3, 3 * k);
    Real arg0 = pi * Real(r0, bits);
    Real floor_den = Real::pow10(-6, bits);

    RealIntegrand f = [=](const Real& x) {
        Complex th = Complex(Real(0L, bits), arg0) + b * x;
        Complex sh = sinh(th);
        if (abs(sh) < floor_den) {
            throw SingularityOnPathError("mordell_odd: sinh denominator collapsed");
        }
        return exp((b - c * x) * x) / (sh * sh * sh);
    };
    // the Gaussian weight is centered at x = b/(2c) = 1/3
    auto breaks = gaussian_panel_breaks(Real(Rat(1, 3), bits),
                                        gaussian_cutoff(c.re, ctx), -2.6, 2.6, bits);
    return integrate_checked(f, breaks, ctx);
}

Complex eval_eta(const Complex& tau, const PrecisionContext& ctx) {
    if (!(tau.im > 0L)) throw Error("eval_eta: argument must have positive imaginary part");
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    Complex cur(round_prec(tau.re, bits), round_prec(tau.im, bits));
    Complex acc(1L, bits);
    Real half(0.5, bits);
    bool reduced = false;
    for (long iter = 0; iter < 400; ++iter) {
        Int n = cur.re.round_to_int();
        if (!n.is_zero()) {
            long nm = mod_nonneg(n, Int(24L)).to_long();
            acc *= expi(pi * Real(Rat(nm, 12), bits));
            cur.re -= Real(n, bits);
        }
        if (!(cur.im < half)) {
            reduced = true;
            break;
        }
        // |cur| < 1 here, so inversion at least doubles the imaginary part
        Complex minus_i_cur(cur.im, -cur.re);
        acc /= sqrt(minus_i_cur);
        cur = Complex(-1L, bits) / cur;
    }
    if (!reduced) throw PrecisionLossError("eval_eta: reduction loop stalled");

    // pentagonal theta series at the reduced point
    Real bound = Real(static_cast<double>(ctx.work_digits()), bits) *
                     Real::ln(10, bits) +
                 15L;
    Complex ipi_tau_12 = times_i(cur) * (pi / 12L);
    Real decay = pi * cur.im / 12L;
    Complex sum(0L, bits);
    for (long j = 0;; ++j) {
        bool any = false;
        const long ms[2] = {6 * j + 1, 1 - 6 * j};
        const long mcount = (j == 0) ? 1 : 2;
        for (long mi = 0; mi < mcount; ++mi) {
            long m = ms[mi];
            if (!(decay * (m * m) < bound)) continue;
            any = true;
            Complex t = exp(ipi_tau_12 * (m * m));
            if (j % 2 != 0) t = -t;
            sum += t;
        }
        if (!any && j > 0) break;
    }
    return acc * sum;
}

Complex eval_E2(const Complex& tau, const PrecisionContext& ctx) {
    if (!(tau.im > 0L)) throw Error("eval_E2: argument must have positive imaginary part");
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    double need = static_cast<double>(ctx.work_digits()) * 2.302585092994046 + 15.0;
    double decay = 2.0 * 3.141592653589793 * tau.im.to_double();
    long N = static_cast<long>(need / decay) + 2;
    if (N > 200000) throw SlowConvergenceError("eval_E2: Im tau too small for the q-series");

    std::vector<long long> sigma1(static_cast<std::size_t>(N) + 1, 0);
    for (long d = 1; d <= N; ++d) {
        for (long m = d; m <= N; m += d) sigma1[m] += d;
    }
    Complex q = exp(times_i(tau) * (pi * 2L));
    Complex qn(1L, bits);
    Complex sum(0L, bits);
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        sum += qn * static_cast<long>(sigma1[n]);
    }
    return Complex(1L, bits) - sum * 24L;
}

Complex nonholo_integral(const Complex& z, const PrecisionContext& ctx) {
    if (!(z.im > 0L)) throw Error("nonholo_integral: Im z must be positive");
    long bits = ctx.bits();
    Real y = round_prec(z.im, bits);
    Real xr = round_prec(z.re, bits);
    Real mexp = Real(Rat(-3, 2), bits);
    RealIntegrand f = [=, &ctx](const Real& v) {
        Complex tau24 = Complex(-xr * 24L, (y + v) * 24L);
        return eval_eta(tau24, ctx) * pow(y * 2L + v, mexp);
    };
    double V = (static_cast<double>(ctx.work_digits()) * 2.302585092994046 + 30.0) /
               6.283185307179586;
    auto breaks = geometric_panel_breaks(0.0, 0.5, V, bits);
    Real pref = Real(-1L, bits) / (Real::pi(bits) * 4L * sqrt(Real(2L, bits)));
    return integrate_checked(f, breaks, ctx) * pref;
}

Complex nonholo_series(const Complex& z, const PrecisionContext& ctx) {
    if (!(z.im > 0L)) throw Error("nonholo_series: Im z must be positive");
    long bits = ctx.bits();
    Real pi = Real::pi(bits);
    Real y = round_prec(z.im, bits);
    double bound = static_cast<double>(ctx.work_digits()) * 2.302585092994046 + 15.0;
    double decay = 2.0 * 3.141592653589793 * z.im.to_double();
    Complex base = times_i(z) * (pi * (-2L));  // -2 pi i z
    Complex sum(0L, bits);
    for (long j = 0;; ++j) {
        bool any = false;
        const long ms[2] = {6 * j + 1, 1 - 6 * j};
        const long mcount = (j == 0) ? 1 : 2;
        for (long mi = 0; mi < mcount; ++mi) {
            long m = ms[mi];
            if (!(decay * static_cast<double>(m) * static_cast<double>(m) < bound)) continue;
            any = true;
            Real g = detail::gamma_neg_half_fast(pi * 4L * y * (m * m), bits);
            Complex t = exp(base * (m * m)) * (g * std::labs(m));
            if (j % 2 != 0) t = -t;
            sum += t;
        }
        if (!any && j > 0) break;
    }
    Real pref = Real(Rat(-1, 4), bits) / sqrt(pi);
    return sum * pref;
}

namespace detail {

Real bessel_half_closed(long twice_order, const Real& x, const PrecisionContext& ctx) {
    long bits = ctx.bits();
    Real xa = round_prec(x, bits);
    Real pref = sqrt(2L / (Real::pi(bits) * xa));
    switch (twice_order) {
        case 1:
            return pref * sinh(xa);
        case -1:
            return pref * cosh(xa);
        case 3:
            return pref * (cosh(xa) - sinh(xa) / xa);
        case -3:
            return pref * (sinh(xa) - cosh(xa) / xa);
        default:
            throw Error("bessel_half_closed: no closed form for this order");
    }
}

Real gamma_neg_half_fast(const Real& x, long bits) {
    if (!(x > 0L)) throw Error("gamma_neg_half_fast: x must be positive");
    // the two terms cancel to ~1/x of their size at large x; work at enough
    // extra bits to absorb that
    long extra = std::max(0L, static_cast<long>(mpfr_get_exp(x.raw()))) + 16;
    long work = bits + extra;
    Real xa = round_prec(x, work);
    Real rx = sqrt(xa);
    Real val = (exp(-xa) / rx - sqrt(Real::pi(work)) * erfc(rx)) * 2L;
    return round_prec(val, bits);
}

Complex integrate_tanh_sinh(const RealIntegrand& f, const std::vector<Real>& breaks,
                            long bits) {
    if (breaks.size() < 2) throw Error("integrate_tanh_sinh: need at least one panel");
    long den = 24;    // step 1/24 in the DE variable
    long jmax = 120;  // |t| <= 5, endpoint weights ~ 1e-100
    Real h = 1L / Real(den, bits);
    Real pi_half = Real::pi(bits) / 2L;
    Complex total(0L, bits);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        Real mid = (breaks[p] + breaks[p + 1]) / 2L;
        Real half = (breaks[p + 1] - breaks[p]) / 2L;
        Complex acc(0L, bits);
        for (long j = -jmax; j <= jmax; ++j) {
            Real t = h * j;
            Real u = pi_half * sinh(t);
            Real xoff = tanh(u);
            Real wgt = h * pi_half * cosh(t) / sqr(cosh(u));
            acc += f(mid + half * xoff) * wgt;
        }
        total += acc * half;
    }
    return total;
}

}  // namespace detail

}  // namespace partstat
