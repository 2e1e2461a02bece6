#pragma once

#include "moebius/kernel.hpp"

#include <cstdint>

namespace moebius {

struct QuadStats {
    std::uint64_t intervals = 0;
    std::uint64_t evaluations = 0;
};

/// int_1^T |kernel(t)| / t^2 dt.
/// On each piece [n, n+1] the kernel is analytic, so every subinterval gets a
/// two-sided enclosure from the linear Taylor part (|.| of an affine map is
/// convex: midpoint below, trapezoid above) plus a second-derivative
/// remainder. Subintervals are bisected until the enclosure is narrow enough.
ApproxValue integrate_abs_kernel(const KernelSpec& spec, const Real& T, double target_radius,
                                 QuadStats* stats = nullptr);

/// int_1^T kernel(t) / t^2 dt by 10-point Gauss-Legendre per subinterval with
/// the remainder bounded from the 20th derivative; nodes and weights are balls.
ApproxValue integrate_signed_kernel(const KernelSpec& spec, const Real& T, double target_radius,
                                    QuadStats* stats = nullptr);

struct SupResult {
    double lower = 0, upper = 0; // sup |kernel| lies in [lower, upper]
    double argmax = 0;           // where the lower bound was attained
    bool left_limit = false;     // attained as a limit from the left at an integer
    std::uint64_t intervals = 0;
};

/// sup of |kernel(t)| over [a, b], 1 <= a < b, by branch and bound.
SupResult sup_abs_kernel(const KernelSpec& spec, const Real& a, const Real& b, double target_radius);

/// 1/(s-1) - zeta(s) + gamma, the signed integral of Q_s / t^2 over [1, inf).
ApproxValue exact_Q_l1_reference(const ComplexParam& s, double target_radius = 1e-30);

/// int_T^inf Q_s(t)/t^2 dt = 1/(s-1) + gamma + log T - H(T) - T^{s-1}(zeta(s) - P_T)
/// for an integer T >= 1.
ApproxValue exact_Q_tail(const ComplexParam& s, long long T, double target_radius = 1e-30);

/// sup/T: the tail int_T^inf |Q_s|/t^2 for a kernel bounded by sup on [T, inf).
double tail_bound_abs_Q(double T, double sup);

/// sup/T with the best available sup for |Q_s| on [T, inf) (best_sup_Q).
double tail_bound_abs_Q(const KernelSpec& spec, double T);

/// Bound on |Q_s(t)| for t >= T from the truncated-zeta estimate
/// |zeta(s) - sum_{n<=t} n^-s - t^{1-s}/(s-1)| <= (5/6) t^-sigma, valid for
/// 0 < sigma <= 1 and t >= |tau|: |Q_s(t)| <= (5/6)|s-1|. Throws
/// InapplicableError outside that range.
double hel_sup_Q(const ComplexParam& s, double T);

/// Best available sup over [T, inf): min of sup_Q and, when applicable, hel_sup_Q.
double best_sup_Q(const ComplexParam& s, double T);

/// Two-sided enclosure of int_T^inf |Q_s|/t^2 for an integer T >= 2, from
/// Q_s = (s-1)({t}-1/2) + R_s and the ibp_R bound on R_s.
struct Interval {
    double lo = 0, hi = 0;
};
Interval tail_enclosure_abs_Q(const ComplexParam& s, long long T);

} // namespace moebius
