#pragma once

#include <complex>
#include <functional>
#include <string>

#include "partstat/complexnum.hpp"
#include "partstat/precision.hpp"

namespace partstat {

// Outcome of checking one transformation law at one sample point. Both sides
// are evaluated through independent code paths; the verdict compares their
// distance against the context's accuracy claim.
struct ResidualReport {
    std::string law;     // stable identifier, e.g. "cor-3.2" or "eta-inversion"
    std::string inputs;  // human-readable sample-point description
    Complex lhs;
    Complex rhs;
    Real residual;       // |lhs - rhs|
    Real scale;          // max(|lhs|, |rhs|)
    bool pass = false;   // residual < tol * max(1, scale)
};

// Pass threshold 10^-(digits-10); the ten-digit headroom absorbs quadrature
// and series truncation at the working precision.
Real residual_tolerance(const PrecisionContext& ctx);

ResidualReport make_residual_report(std::string law, std::string inputs,
                                    const Complex& lhs, const Complex& rhs,
                                    const PrecisionContext& ctx);

// JSON object with decimal-string numeric fields, for the CLI and the suite
// runner. Implemented alongside the series serializers.
std::string residual_report_to_json(const ResidualReport& r);

// --- direct q-series evaluators (bilateral numeric sums) ---

// (q;q)_inf by direct product. Requires |q| < 1.
Complex qpochhammer_value(const Complex& q, const PrecisionContext& ctx);

// Second symmetrized rank-moment generating function
//   R2(q) = (1/(q;q)_inf) sum_{n != 0} (-1)^(n+1) q^(3n(n+1)/2) / (1-q^n)^2.
// Throws SlowConvergenceError for |q| > 0.9.
Complex eval_R2(const Complex& q, const PrecisionContext& ctx);

// Rank-deformation kernel
//   R2(w;q) = -(1/(q;q)_inf) sum_{n != 0} (-1)^n q^(n(3n+1)/2) / (1 - e^(2 pi i w) q^n).
// Throws PoleProximityError when some denominator comes within 10^-6 of zero.
Complex eval_R2_w(const Complex& w, const Complex& q, const PrecisionContext& ctx);

// Odd-moment analogues:
//   R2o(q)   = (1/(q^2;q^2)_inf) sum_{n in Z} (-1)^n q^(3n^2+5n+2) / (1-q^(2n+1))^3,
//   R2o(q;w) = (1/(q^2;q^2)_inf) sum_{n in Z} (-1)^n q^(3n^2+n) / (1 - e^(2 pi i w) q^(2n+1)).
Complex eval_R2_odd(const Complex& q, const PrecisionContext& ctx);
Complex eval_R2_odd_w(const Complex& q, const Complex& w, const PrecisionContext& ctx);

// Auxiliary series appearing on the transformed side of the odd laws. All are
// bilateral sums over m with the stated kernels:
//   g(q)   = (1/(q;q)_inf)     sum (-1)^m q^((3m^2+m)/2) / (1+q^m)
//   h(q)   = (1/(q;q)_inf)     sum (-1)^m q^((3m^2+m)/2) (1-3q^m) / (1+q^m)^3
//   m(q)   = (1/(q^2;q^2)_inf) sum (-1)^m q^(3m^2+5m) / (1-q^(2m+1))
//   h(q;w) = (1/(q;q)_inf)     sum (-1)^m q^((3m^2+m)/2) / (1 + e^(pi i w) q^m)
//   l(q;w) = (1/(q^2;q^2)_inf) sum (-1)^m q^(3m^2+5m) / (1 - e^(2 pi i w) q^(2m+1))
Complex eval_g_odd(const Complex& q, const PrecisionContext& ctx);
Complex eval_h_odd(const Complex& q, const PrecisionContext& ctx);
Complex eval_m_odd(const Complex& q, const PrecisionContext& ctx);
Complex eval_h_odd_w(const Complex& q, const Complex& w, const PrecisionContext& ctx);
Complex eval_l_odd_w(const Complex& q, const Complex& w, const PrecisionContext& ctx);

// --- derivative extraction at w = 0 ---

using WEvaluator = std::function<Complex(const Complex&)>;

// L(g) = (1/(2 pi i)) g'(0) by the fourth-order central difference with one
// Richardson step; the step is 10^-(digits/4). The evaluator must carry
// enough internal precision that the difference quotient does not cancel;
// build it on ctx.with_min_digits(2 * ctx.work_digits()).
Complex l_operator(const WEvaluator& g, const PrecisionContext& ctx);

// Odd variant: L(g) = -(1/(8 pi^2)) (g''(0) - 2 pi i g'(0)), same scheme with
// the matching five-point second-difference stencil.
Complex l_operator_odd(const WEvaluator& g, const PrecisionContext& ctx);

// --- frame helpers ---

// q = e^(2 pi i (h + i z)/k) and q1 = e^(2 pi i (h' + i/z)/k). Re z > 0 is
// required so every half-integer power below stays on the principal branch.
Complex frame_q(long h, long k, const Complex& z, const PrecisionContext& ctx);
Complex frame_q1(long hprime, long k, const Complex& z, const PrecisionContext& ctx);

// --- transformation laws (law ids in quotes) ---

// "thm-3.1": the w-dependent transformation of R2(w;q) between the cusp frame
// (h,k,z) and its dual (h',1/z), including the two Gaussian kernel integrals.
ResidualReport verify_thm31(long h, long k, const Complex& z, const Complex& w,
                            const PrecisionContext& ctx);

// "cor-3.2": the w = 0 specialization for R2(q) with the Mordell correction
// integrals. The R2(q1) term carries a minus sign; the flipped sign fails by
// twice that term's size (measured in the unit tests).
ResidualReport verify_cor32(long h, long k, const Complex& z,
                            const PrecisionContext& ctx);

// "eta-inversion": eta(-1/z) = sqrt(-iz) eta(z).
// "e2-inversion":  E2(-1/z) = z^2 E2(z) + 6z/(pi i).
ResidualReport verify_eta_inversion(const Complex& z, const PrecisionContext& ctx);
ResidualReport verify_e2_inversion(const Complex& z, const PrecisionContext& ctx);

// "L-consistency": L applied to w -> R2(w;q) recovers R2(q).
// "L-odd-consistency": the odd operator applied to w -> R2o(q;w) recovers R2o(q).
ResidualReport verify_L_consistency(const Complex& q, const PrecisionContext& ctx);
ResidualReport verify_L_odd_consistency(const Complex& q, const PrecisionContext& ctx);

// --- the completed weight-3/2 object ---

// Holomorphic part R(z) = R2(e^(48 pi i z)) e^(-2 pi i z), Im z > 0.
Complex eval_holomorphic_part(const Complex& z, const PrecisionContext& ctx);

// M(z) = R(z) - N(z) - 1/(24 eta(24z)) + E2(24z)/(8 eta(24z)), with N the
// period integral of specialfn::nonholo_integral. The equivalent
// incomplete-Gamma series form of N is used here for speed; the two
// representations agreeing is itself a verified law ("n-series").
Complex eval_M(const Complex& z, const PrecisionContext& ctx);

// V(z): vertical period integral of eta(tau/24) from -conj(z); F(z): the same
// kernel along the positive imaginary axis. These are the two correction
// integrals of the inversion laws.
Complex eta_vertical_integral(const Complex& z, const PrecisionContext& ctx);
Complex eta_axis_integral(const Complex& z, const PrecisionContext& ctx);

// "cor-3.5": R(-1/z) = B(z) - ((-iz)^(3/2)/(48 sqrt6)) R(z/576)
//                           + ((-iz)^(3/2)/(16 sqrt3 pi)) F(z),
// where B collects the eta(z/24) quasimodular block.
ResidualReport verify_R_inversion(const Complex& z, const PrecisionContext& ctx);

// "lemma-nonholo": N(-1/z) = -(i (-iz)^(3/2)/(16 sqrt3 pi)) V(z)
//                            - ((-iz)^(3/2)/(16 sqrt3 pi)) F(z).
ResidualReport verify_N_inversion(const Complex& z, const PrecisionContext& ctx);

// "m-inversion": the combination (R+N)(-1/z) = B(z)
//                - ((-iz)^(3/2)/(48 sqrt6)) (R+N)(z/576), in which the two
// F(z) corrections cancel exactly.
ResidualReport verify_M_inversion(const Complex& z, const PrecisionContext& ctx);

// "m-periodicity": M(z+1) = M(z).
ResidualReport verify_M_periodicity(const Complex& z, const PrecisionContext& ctx);

// "n-series": period-integral form of N equals its incomplete-Gamma series.
ResidualReport verify_N_series(const Complex& z, const PrecisionContext& ctx);

// |Delta_{3/2} f| at z by the circular eight-point stencil (mean-value
// Laplacian plus rotational d/dzbar), second order in step.
Real laplacian_residual(const std::function<Complex(const Complex&)>& f,
                        const Complex& z, const Real& step,
                        const PrecisionContext& ctx);

// The same stencil applied to eval_M; law id "laplacian". Requires
// Im z > 4 * step.
Real laplacian_check(const Complex& z, const Real& step, const PrecisionContext& ctx);

// --- odd transformation laws ---

enum class OddCase { kOdd, kEven };

// Corollary-level laws for R2o(q): "odd-k-odd" needs k odd and picks the
// multiple-of-four h'; "odd-k-even" needs k even, h odd, h h' = -1 (mod 4k).
// Throws NoValidFrameError when the parity constraints cannot be met.
ResidualReport verify_odd_laws(OddCase oc, long h, long k, const Complex& z,
                               const PrecisionContext& ctx);

// Theorem-level (w-dependent) laws: "odd-thm-k-odd" / "odd-thm-k-even". The
// k-odd law lives on |Re w| < 1/(6k); outside, the kernel pole crosses the
// integration contour and PoleProximityError is raised.
ResidualReport verify_odd_laws(OddCase oc, long h, long k, const Complex& z,
                               const Complex& w, const PrecisionContext& ctx);

namespace detail {

// Minimum distance, in x units, from the real path of u(x) = u0 - slope*x to
// the pole lattice p0 + i*spacing*m. Used to refuse or refine quadrature whose
// kernel poles crowd the contour; double precision guards geometry only.
double pole_distance_x(std::complex<double> u0, std::complex<double> slope,
                       std::complex<double> p0, double spacing, double xmax);

}  // namespace detail

}  // namespace partstat
