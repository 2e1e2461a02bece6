#pragma once

#include "moebius/ball.hpp"

#include <string>

namespace moebius {

enum class Rigor { rigorous, heuristic };

inline Rigor weaker(Rigor a, Rigor b) {
    return (a == Rigor::heuristic || b == Rigor::heuristic) ? Rigor::heuristic : Rigor::rigorous;
}

const char* to_string(Rigor r);

/// An estimate (real or complex) with a nonnegative error radius.
struct ApproxValue {
    CBall value;
    Rigor rigor = Rigor::rigorous;
    int precision_bits = 0;

    ApproxValue() = default;
    ApproxValue(const CBall& v, Rigor r = Rigor::rigorous, int bits = 0)
        : value(v), rigor(r), precision_bits(bits ? bits : precision_of(v.re)) {}
    ApproxValue(const Ball& v, Rigor r = Rigor::rigorous, int bits = 0) : ApproxValue(CBall(v), r, bits) {}

    /// Double-precision result with an analytic rounding radius.
    static ApproxValue from_double(double v, double radius, Rigor r = Rigor::rigorous);

    double radius() const { return value.rad; }
    bool is_real() const { return value.is_real(); }
    const Real& re() const { return value.re; }
    const Real& im() const { return value.im; }
    double re_double() const { return to_double(value.re); }
    double im_double() const { return to_double(value.im); }
};

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator-(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator/(const ApproxValue& a, const ApproxValue& b);

} // namespace moebius
