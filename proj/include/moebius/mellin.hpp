#pragma once

#include "moebius/approx.hpp"
#include "moebius/zeta.hpp"

namespace moebius {

/// Step kernels of the truncated Mellin identities:
///   m(t),  mcheck(t) - 1,  mdcheck(t) - 2 log t + 2 gamma.
enum class MellinKernel { m, mcheck, mdcheck };

const char* to_string(MellinKernel k);

/// int_A^B k(t) t^-s log^j(x/t) dt for j in {0, 1}, exact per piece.
ApproxValue mellin_segment(MellinKernel k, const ComplexParam& s, const Real& A, const Real& B, int j,
                           const Real& x);

/// Imported: |m(t)| <= 0.0130073 / log t, quoted from 97063 on. That start is
/// wrong (the bound fails on [119543, 120561), see the m-log-bound check), so it
/// is used from 120561, past the last failure; swept directly up to 1e7.
inline constexpr double kMLogConstant = 0.0130073;
inline constexpr double kMLogFrom = 120561;

/// Upper bound for sup_{t >= T} |k(t)|, T >= kMLogFrom, derived from the imported
/// bound on m and the exact value of I0 = int_1^kMLogFrom |m|:
///   (1/t) int_1^t |m| <= I0/T + c/log kMLogFrom =: J
///   |mcheck - 1| <= J + 1/T^2
///   |mdcheck - 2 log t + 2 gamma| <= 2 ((0.5408 + gamma) J + gamma/T^2)
double kernel_tail_sup(MellinKernel k, double T);

/// int_x^inf k(t) t^-s log^j(x/t) dt for sigma > 1: exact on [x, T], tail
/// bounded by kernel_tail_sup and folded into the radius.
ApproxValue mellin_tail(MellinKernel k, const ComplexParam& s, const Real& x, const Real& T, int j);

/// c0 int k t^-s dt + c1 int k t^-s log(x/t) dt over [A, B], in one pass.
ApproxValue mellin_segment_combo(MellinKernel k, const ComplexParam& s, const Real& A, const Real& B, const CBall& c0,
                                 const CBall& c1, const Real& x);

/// Same combination over [x, inf), split at T as in mellin_tail.
ApproxValue mellin_tail_combo(MellinKernel k, const ComplexParam& s, const Real& x, const Real& T, const CBall& c0,
                              const CBall& c1);

/// Default split point: max(1e5, 10 x), at most 1e7.
Real default_mellin_T(const Real& x);

} // namespace moebius
