#pragma once

#include "moebius/approx.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace moebius {

using Rational = boost::multiprecision::mpq_rational;

/// Complex exponent held as exact rationals, so sums and the test for zero are exact.
struct Exponent {
    Rational re, im;

    Exponent() = default;
    Exponent(long long r) : re(r), im(0) {}
    Exponent(const Rational& r, const Rational& i) : re(r), im(i) {}
    static Exponent from_reals(const Real& r, const Real& i);

    bool is_zero() const { return re == 0 && im == 0; }
    CBall ball() const; // at the working precision, radius covers the rounding
    std::string str() const;
};

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a);
Exponent operator-(const Exponent& a, const Exponent& b);
bool operator==(const Exponent& a, const Exponent& b);
bool operator<(const Exponent& a, const Exponent& b);

/// c t^p log^j t
struct PowerLogTerm {
    CBall c{1};
    Exponent p;
    int j = 0;
};

/// Finite sum of c t^p log^j t: the closed-form kernel family.
struct FunctionSpec {
    std::vector<PowerLogTerm> terms;

    static FunctionSpec constant(const CBall& c);
    static FunctionSpec power(const Exponent& p, const CBall& c = CBall(1));
    static FunctionSpec power_log(const Exponent& p, int j, const CBall& c = CBall(1));

    CBall operator()(const Ball& t) const;
    FunctionSpec operator*(const FunctionSpec& o) const;
    FunctionSpec operator+(const FunctionSpec& o) const;
    FunctionSpec scaled(const CBall& c) const;
    std::string str() const;
};

/// a(n) for n >= 1.
using SeqFn = std::function<Ball(std::uint64_t)>;

/// c t^e log^j t times, when seq >= 0, a prefix sum
///   sum_{n <= N} a_seq(n) n^-alpha log^r n,
/// with N = floor(x/t) in the outer factor and N = floor(t) in the inner one.
struct SumTerm {
    CBall c{1};
    Exponent e;
    int j = 0;
    int seq = -1;
    Exponent alpha;
    int r = 0;

    static SumTerm plain(const CBall& c, const Exponent& e, int j = 0) { return SumTerm{c, e, j, -1, Exponent(0), 0}; }
    static SumTerm sum(const CBall& c, const Exponent& e, int j, int seq, const Exponent& alpha, int r = 0) {
        return SumTerm{c, e, j, seq, alpha, r};
    }
};

/// int_A^B Outer(t) Inner(t) dt, with both factors sums of SumTerms.
/// Between breakpoints (integers for the inner factor, x/n for the outer) the
/// integrand is a finite sum of c t^e log^j t and is integrated in closed form.
struct ConvolutionIntegral {
    Real x{1};
    Real A{1}, B{1};
    std::vector<SumTerm> outer{SumTerm{}};
    std::vector<SumTerm> inner{SumTerm{}};
    std::vector<SeqFn> seqs;
};

struct PiecewiseStats {
    std::uint64_t pieces = 0;
    std::uint64_t groups = 0;
};

inline constexpr double kMaxPiecewiseX = 1e7;

/// Exact per-piece antiderivatives, compensated only by ball arithmetic.
/// Throws CapacityError for x or B beyond 1e7.
ApproxValue integrate(const ConvolutionIntegral& I, PiecewiseStats* stats = nullptr);

/// Antiderivative of t^e log^j t, evaluated at t (used by the engine and tests).
CBall power_log_antiderivative(const Exponent& e, int j, const Ball& t);

} // namespace moebius
