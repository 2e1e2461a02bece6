#pragma once

#include "moebius/precision.hpp"

namespace moebius {

/// Real ball: the exact value lies in [mid - rad, mid + rad].
struct Ball {
    Real mid;
    double rad = 0.0;

    Ball() = default;
    Ball(const Real& m, double r = 0.0) : mid(m), rad(r) {}
    Ball(long long v) : mid(v) {}
    Ball(int v) : mid(v) {}
    static Ball from_double(double v) { return Ball(Real(v)); } // exact
};

/// Complex disk: the exact value lies within rad of (re, im).
struct CBall {
    Real re, im;
    double rad = 0.0;

    CBall() = default;
    CBall(const Real& r, const Real& i, double radius = 0.0) : re(r), im(i), rad(radius) {}
    CBall(const Ball& b) : re(b.mid), im(0), rad(b.rad) {}
    CBall(long long v) : re(v), im(0) {}
    CBall(int v) : re(v), im(0) {}

    Ball real() const { return Ball(re, rad); }
    Ball imag() const { return Ball(im, rad); }
    bool is_real() const { return im == 0; }
};

// Bounds as doubles, always directed outward.
double upper_abs(const Ball& x);
double lower_abs(const Ball& x);
double upper_abs(const CBall& z);
double lower_abs(const CBall& z);
double mid_abs_upper(const CBall& z); // |mid|, rounded up
bool contains_zero(const Ball& x);
bool contains_zero(const CBall& z);
double upper(const Ball& x); // mid + rad rounded up
double lower(const Ball& x); // mid - rad rounded down

Ball operator-(const Ball& a);
Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);
Ball& operator+=(Ball& a, const Ball& b);
Ball& operator-=(Ball& a, const Ball& b);
Ball& operator*=(Ball& a, const Ball& b);

Ball abs(const Ball& x);
Ball sqrt(const Ball& x);
Ball log(const Ball& x);
Ball exp(const Ball& x);
Ball pow_pos(const Ball& t, const Ball& e); // t > 0
Ball pow_int(const Ball& x, int k);
Ball floor_exact(const Real& x); // exact integer part
Ball add_error(const Ball& x, double err);

CBall operator-(const CBall& a);
CBall operator+(const CBall& a, const CBall& b);
CBall operator-(const CBall& a, const CBall& b);
CBall operator*(const CBall& a, const CBall& b);
CBall operator/(const CBall& a, const CBall& b);
CBall& operator+=(CBall& a, const CBall& b);
CBall& operator-=(CBall& a, const CBall& b);
CBall& operator*=(CBall& a, const CBall& b);

CBall conj(const CBall& z);
Ball abs(const CBall& z);
CBall exp(const CBall& z);
/// t^s for an exact positive real t.
CBall pow_pos(const Real& t, const CBall& s);
/// t^s for a positive real ball t.
CBall pow_pos(const Ball& t, const CBall& s);
CBall add_error(const CBall& z, double err);

/// True when the two enclosures overlap.
bool overlaps(const CBall& a, const CBall& b);
bool overlaps(const Ball& a, const Ball& b);

} // namespace moebius
