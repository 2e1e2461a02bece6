#pragma once

#include "moebius/zeta.hpp"

#include <string>
#include <vector>

namespace moebius {

//   Q_s(t) = (s-1) zeta(s) t^s - (s-1) sum_{k<=t} (t/k)^s - t
//   R_s(t) = Q_s(t) - (s-1)({t} - 1/2)
//   q_s(t) = (s-1) Q_s(t)
enum class KernelVariant { Q, R, q };

KernelVariant parse_variant(const std::string& name);
const char* to_string(KernelVariant v);

struct KernelSpec {
    KernelVariant variant = KernelVariant::Q;
    ComplexParam s;
};

/// Holds zeta(s) once and the partial sums P_K = sum_{k<=K} k^-s, so that on
/// [K, K+1) the kernel is A_K t^s - t with A_K = (s-1)(zeta(s) - P_K).
class KernelEvaluator {
public:
    KernelEvaluator(const KernelSpec& spec, double zeta_radius);

    const KernelSpec& spec() const { return spec_; }
    const CBall& s() const { return s_; }
    const CBall& zeta() const { return zeta_; }

    /// A_K for K >= 0 (A_0 = (s-1) zeta(s)).
    const CBall& A(long long K);

    /// Kernel on the closure of [K, K+1) using the coefficient A_K.
    CBall on_piece(long long K, const Ball& t);

    /// Right-continuous value at t >= 1.
    ApproxValue eval(const Real& t);
    /// Limit from the left at an integer k >= 2.
    ApproxValue eval_left(long long k);

private:
    KernelSpec spec_;
    CBall s_, sm1_, zeta_;
    std::vector<CBall> A_;
    CBall partial_;
};

/// Definitional evaluation at t >= 1 with radius <= target_radius.
ApproxValue kernel_eval(const KernelSpec& spec, const Real& t, double target_radius);

/// Same kernel from (s-1)({t}-1/2) - t^s (s-1) s J(t), J(t) = int_t^inf ({u}-1/2) u^{-s-1} du.
/// J is integrated exactly piece by piece and closed with an Euler-Maclaurin
/// tail, so zeta(s) is never used. Requires sigma > -1.
ApproxValue kernel_eval_em(const KernelSpec& spec, const Real& t, double target_radius);

/// J(t) alone, as used by kernel_eval_em.
CBall fractional_tail_integral(const CBall& s, const Real& t, double target_radius);

enum class BoundForm { sup_Q, mid_Q, ibp_R, real_R };
BoundForm parse_bound_form(const std::string& name);
const char* to_string(BoundForm f);

/// Closed-form bounds:
///   sup_Q   |Q_s(t)| <= |s| |s-1| / sigma                    (sigma > 0)
///   mid_Q   |Q_s(t) - (s-1)({t}-1/2)| <= |s| |s-1| / (2 sigma) (sigma > 0)
///   ibp_R   |R_s(t)| <= |s+1|/(sigma+1) |s| |s-1| / (6 t)    (sigma > -1)
///   real_R  |R_sigma(t)| <= |sigma| |sigma-1| / (8 t)        (real s, sigma > -1)
/// Rounded upward.
double kernel_bound(const KernelSpec& spec, double t, BoundForm form);

/// The printed variants of mid_Q and ibp_R that carry |sigma-1| and |sigma|
/// in place of |s-1| and |s|. Reported next to the bounds above, not used.
double kernel_bound_literal(const KernelSpec& spec, double t, BoundForm form);

} // namespace moebius
