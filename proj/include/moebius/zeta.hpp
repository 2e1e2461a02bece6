#pragma once

#include "moebius/approx.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace moebius {

/// s = sigma + i tau, held exactly at the working precision.
struct ComplexParam {
    Real sigma, tau;

    ComplexParam() = default;
    ComplexParam(const Real& s, const Real& t) : sigma(s), tau(t) {}
    ComplexParam(double s, double t = 0.0) : sigma(s), tau(t) {}

    /// Accepts "2", "-0.5", "0.5+14.13i", "1-3i", "14.13i", "1e-4+2i".
    static ComplexParam parse(std::string_view text);

    CBall ball() const { return CBall(sigma, tau, 0.0); }
    bool is_real() const { return tau == 0; }
    bool is_one() const { return sigma == 1 && tau == 0; }
    std::string str(int digits = 17) const;
};

struct ZetaResult {
    ApproxValue zeta;
    ApproxValue zeta_prime;
    long long cutoff = 0; // N
    int order = 0;        // M, giving 2M Bernoulli terms
};

/// zeta(s) and zeta'(s) by Euler-Maclaurin summation with remainder bounds,
/// both radii <= target_radius. Requires sigma > -1 and s != 1.
ZetaResult zeta_em(const ComplexParam& s, double target_radius);

/// Memoised zeta_em keyed on (s, working precision, target). Thread safe.
ZetaResult zeta_cached(const ComplexParam& s, double target_radius);

/// Sum over k <= t of k^-s.
ApproxValue partial_power_sum(const CBall& s, const Real& t);

/// B_0, B_2, ..., B_{2n} as exact fractions.
const std::vector<boost::multiprecision::mpq_rational>& bernoulli_even(int n);

/// (s)_j = s (s+1) ... (s+j-1) for j = 0..n.
std::vector<CBall> rising_factorials(const CBall& s, int n);

} // namespace moebius
