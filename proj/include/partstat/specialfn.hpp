#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "partstat/complexnum.hpp"
#include "partstat/precision.hpp"

namespace partstat {

// Nodes and weights of an n-point Gauss-Legendre rule on (-1, 1), stored at a
// fixed binary precision. Built once per (order, bits) and shared.
struct QuadratureRule {
    long order = 0;
    long bits = 0;
    std::vector<Real> nodes;    // ascending
    std::vector<Real> weights;  // positive, summing to 2
};

// Thread-safe cached construction (Newton refinement of the Legendre roots).
std::shared_ptr<const QuadratureRule> gauss_legendre_rule(long order, long bits);

using RealIntegrand = std::function<Complex(const Real&)>;

// One fixed-order pass over the consecutive panels [breaks[i], breaks[i+1]].
Complex integrate_panels(const RealIntegrand& f, const std::vector<Real>& breaks,
                         long order, long bits);

// Runs two node densities over the same panels and insists that they agree to
// slightly better than the context's claimed accuracy; returns the denser one.
Complex integrate_checked(const RealIntegrand& f, const std::vector<Real>& breaks,
                          const PrecisionContext& ctx);

// Panel breakpoints for integrands decaying like exp(-Re(c)(x-center)^2):
// fine fixed-width panels on [center+dense_lo, center+dense_hi] where the
// integrand has structure, then widths doubling outward to |x-center|=radius.
// The dense step shrinks below the default when a kernel pole sits close to
// the contour, keeping every panel's analyticity ellipse clear of it.
std::vector<Real> gaussian_panel_breaks(const Real& center, const Real& radius,
                                        double dense_lo, double dense_hi,
                                        long bits, double dense_step = 0.125);

// Breakpoints lo, lo+w, lo+3w, lo+7w, ... (widths doubling), clamped at hi.
std::vector<Real> geometric_panel_breaks(double lo, double first_width, double hi,
                                         long bits);

// Truncation radius making exp(-Re(c) radius^2) smaller than the working
// accuracy target, scaled by ctx.quadrature_cutoff_sigma, with one extra
// decay scale of headroom for shifted kernels.
Real gaussian_cutoff(const Real& re_c, const PrecisionContext& ctx);

// Modified Bessel function of the first kind, ascending series with a tail
// bound; valid for real order (half-integers are the orders used here).
Real bessel_I(const Real& s, const Real& x, const PrecisionContext& ctx);

// Upper incomplete Gamma function at parameter -1/2. The erfc closed form is
// cross-checked against direct quadrature of the defining integral on every
// call; disagreement raises QuadratureDisagreementError.
Real incomplete_gamma_upper_neg_half(const Real& x, const PrecisionContext& ctx);

// Integral of exp(-3 pi z x^2 / k) cosh(theta) / sinh(theta)^2 over the real
// line, with theta = pi i nu / k - pi i / (6k) - pi z x / k. Requires Re z > 0;
// the denominator is then uniformly bounded away from zero on the path.
Complex mordell_I(long k, long nu, const Complex& z, const PrecisionContext& ctx);

// The four Gaussian-times-1/sinh^3 integrals entering the odd-moment laws.
// All share the weight exp(-3 pi z x^2/(2k) + pi z x / k); the kinds differ in
// the constant part of the sinh argument:
//   IPlus/IMinus:  sinh(-sg pi i nu / k + pi z x / k + sg pi i/(6k)),
//   JPlus/JMinus:  sinh(-pi i (2 nu + 1)/k + pi z x / k + sg pi i/(3k)),
// with sg = +1 for the Plus kinds and -1 for the Minus kinds.
enum class OddMordellKind { IPlus, IMinus, JPlus, JMinus };

Complex mordell_odd(OddMordellKind kind, long k, long nu, const Complex& z,
                    const PrecisionContext& ctx);

// Dedekind eta via shift/inversion reduction to Im tau >= 1/2 and the
// pentagonal theta series; weight-2 Eisenstein series by its sigma_1 q-series.
Complex eval_eta(const Complex& tau, const PrecisionContext& ctx);
Complex eval_E2(const Complex& tau, const PrecisionContext& ctx);

// Period integral of eta(24 tau) against (2 Im z + v)^{-3/2} along the
// vertical ray from -conj(z), and its incomplete-Gamma series form. The two
// are independent evaluations of the same function and must agree.
Complex nonholo_integral(const Complex& z, const PrecisionContext& ctx);
Complex nonholo_series(const Complex& z, const PrecisionContext& ctx);

namespace detail {

// Closed elementary forms for order = twice_order/2, twice_order in
// {1, -1, 3, -3}; used as the independent oracle for the series evaluator.
Real bessel_half_closed(long twice_order, const Real& x, const PrecisionContext& ctx);

// erfc-based evaluation with guard bits covering the large-x cancellation;
// no quadrature cross-check, for use inside series loops.
Real gamma_neg_half_fast(const Real& x, long bits);

// Tanh-sinh rule over the same panels; independent of Gauss-Legendre in both
// node placement and weight derivation, as a second-rule oracle.
Complex integrate_tanh_sinh(const RealIntegrand& f, const std::vector<Real>& breaks,
                            long bits);

}  // namespace detail

}  // namespace partstat
