#pragma once

#include "moebius/approx.hpp"
#include "moebius/compensated.hpp"
#include "moebius/sieve.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

namespace moebius {

/// Summatory quantities at one x, each with an error radius.
///   M = sum mu(n), m = sum mu(n)/n, m_check = sum mu(n)/n log(x/n),
///   m_dcheck = sum mu(n)/n log^2(x/n), m1 = m - M/x,
///   H = sum 1/n, H_check = sum 1/n log(x/n); all over n <= x.
struct SummatorySnapshot {
    Real x;
    long long M = 0;
    ApproxValue m, m_check, m_dcheck, m1, H, H_check;
};

/// Double-precision pass with compensated sums; segments run under OpenMP and
/// are reduced in segment order, so the result does not depend on the thread count.
SummatorySnapshot summatory(double x);
SummatorySnapshot summatory_serial(double x);

/// Ball arithmetic at the working precision.
SummatorySnapshot summatory_hp(const Real& x);

using Rational = boost::multiprecision::mpq_rational;
/// m(n) as an exact fraction.
Rational exact_m(std::uint64_t n);

struct AbsIntegrals {
    ApproxValue I0; // integral over [1, x] of |m(t)|
    ApproxValue I1; // integral over [1, x] of |m(t)| t
};

/// Exact step integration: m is constant on [n, n+1).
AbsIntegrals abs_m_integrals(const Real& x);

/// Running prefix sums over n <= N in double precision with error bounds:
///   m_n = sum mu(k)/k, s1_n = sum mu(k) log k / k, s2_n = sum mu(k) log^2 k / k,
///   M_n = sum mu(k).
struct PrefixState {
    std::uint64_t n = 0;
    int mu = 0;
    long long M = 0;
    double m = 0, s1 = 0, s2 = 0;
    double m_err = 0, s1_err = 0, s2_err = 0;
};

/// Calls f(const PrefixState&) for n = 1..N in order.
template <class F>
void stream_prefixes(std::uint64_t N, F&& f);

/// m-check(x) = m_N log x - s1_N and m-dcheck(x) = m_N log^2 x - 2 s1_N log x + s2_N
/// for x in [N, N+1), with error bounds.
struct CheckValues {
    double mc, mc_err, mcc, mcc_err;
};
CheckValues check_values(const PrefixState& p, double x);

/// Sum over n <= x of mu(n) n^-s, and of mu(n) n^-s log(x/n).
struct MuDirichlet {
    CBall sum;
    CBall log_sum;
};
MuDirichlet mu_dirichlet(const CBall& s, const Real& x);

/// m(n) for n = 1..N as balls (index 0 unused).
std::vector<Ball> m_table(std::uint64_t N);

} // namespace moebius

#include "moebius/summatory_impl.hpp"
