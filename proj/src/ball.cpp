#include "moebius/ball.hpp"

#include "moebius/errors.hpp"

#include <cmath>

namespace moebius {

namespace {

// One correctly rounded MPFR result is within u|r| of the exact value.
double ulp_of(const Real& r) { return std::ldexp(1.0, -precision_of(r)); }

double add_up(double a, double b) { return up(a + b); }
double add_up(double a, double b, double c) { return up(up(a + b) + c); }
double mul_up(double a, double b) { return up(a * b); }

double expm1_up(double x) { return up(up(std::expm1(x)) * (1.0 + 0x1p-40)); }

} // namespace

double upper_abs(const Ball& x) { return add_up(mag(x.mid), x.rad); }

double lower_abs(const Ball& x) {
    double v = down(mag_lower(x.mid) - x.rad);
    return v > 0 ? v : 0.0;
}

double mid_abs_upper(const CBall& z) {
    double a = mag(z.re), b = mag(z.im);
    return up(std::sqrt(up(a * a + b * b)));
}

double upper_abs(const CBall& z) { return add_up(mid_abs_upper(z), z.rad); }

double lower_abs(const CBall& z) {
    double a = mag_lower(z.re), b = mag_lower(z.im);
    double m = down(std::sqrt(down(a * a + b * b)));
    double v = down(m - z.rad);
    return v > 0 ? v : 0.0;
}

bool contains_zero(const Ball& x) { return lower_abs(x) == 0.0; }
bool contains_zero(const CBall& z) { return lower_abs(z) == 0.0; }

double upper(const Ball& x) {
    double m = mpfr_get_d(x.mid.backend().data(), MPFR_RNDU);
    return m + x.rad >= 0 ? up(m + x.rad) : down(m + x.rad);
}

double lower(const Ball& x) {
    double m = mpfr_get_d(x.mid.backend().data(), MPFR_RNDD);
    return m - x.rad >= 0 ? down(m - x.rad) : up(m - x.rad);
}

Ball operator-(const Ball& a) { return Ball(-a.mid, a.rad); }

Ball operator+(const Ball& a, const Ball& b) {
    Real m = a.mid + b.mid;
    return Ball(m, add_up(a.rad, b.rad, mul_up(ulp_of(m), mag(m))));
}

Ball operator-(const Ball& a, const Ball& b) {
    Real m = a.mid - b.mid;
    return Ball(m, add_up(a.rad, b.rad, mul_up(ulp_of(m), mag(m))));
}

Ball operator*(const Ball& a, const Ball& b) {
    Real m = a.mid * b.mid;
    double r = 0.0;
    if (a.rad != 0 || b.rad != 0) {
        double ma = mag(a.mid), mb = mag(b.mid);
        r = add_up(mul_up(ma, b.rad), mul_up(mb, a.rad), mul_up(a.rad, b.rad));
    }
    return Ball(m, add_up(r, mul_up(ulp_of(m), mag(m))));
}

Ball operator/(const Ball& a, const Ball& b) {
    double lb = lower_abs(b);
    if (lb == 0.0) throw DomainError("division by a ball containing zero");
    Real m = a.mid / b.mid;
    double r = mul_up(ulp_of(m), mag(m));
    if (a.rad != 0 || b.rad != 0) {
        double q = mag(m);
        r = add_up(r, up(add_up(a.rad, mul_up(q, b.rad)) / lb));
    }
    return Ball(m, r);
}

Ball& operator+=(Ball& a, const Ball& b) { return a = a + b; }
Ball& operator-=(Ball& a, const Ball& b) { return a = a - b; }
Ball& operator*=(Ball& a, const Ball& b) { return a = a * b; }

Ball abs(const Ball& x) { return Ball(boost::multiprecision::abs(x.mid), x.rad); }

Ball sqrt(const Ball& x) {
    if (x.mid < 0) throw DomainError("square root of a negative ball");
    Real m = boost::multiprecision::sqrt(x.mid);
    double r = mul_up(ulp_of(m), mag(m));
    if (x.rad != 0) {
        double lo = lower(x);
        double prop = lo > 0 ? up(x.rad / down(std::sqrt(lo))) : up(std::sqrt(up(2 * x.rad)));
        r = add_up(r, prop);
    }
    return Ball(m, r);
}

Ball log(const Ball& x) {
    double lo = lower(x);
    if (!(lo > 0)) throw DomainError("logarithm of a ball that is not positive");
    Real m = boost::multiprecision::log(x.mid);
    double r = mul_up(ulp_of(m), mag(m));
    if (x.rad != 0) r = add_up(r, up(x.rad / lo));
    return Ball(m, r);
}

Ball exp(const Ball& x) {
    Real m = boost::multiprecision::exp(x.mid);
    double em = mag(m);
    double r = mul_up(ulp_of(m), em);
    if (x.rad != 0) r = add_up(r, mul_up(em, expm1_up(x.rad)));
    return Ball(m, r);
}

Ball pow_pos(const Ball& t, const Ball& e) { return pow_pos(t, CBall(e)).real(); }

Ball pow_int(const Ball& x, int k) {
    if (k < 0) return Ball(1) / pow_int(x, -k);
    Ball r(1), b = x;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Ball floor_exact(const Real& x) { return Ball(boost::multiprecision::floor(x)); }

Ball add_error(const Ball& x, double err) { return Ball(x.mid, add_up(x.rad, err)); }

CBall operator-(const CBall& a) { return CBall(-a.re, -a.im, a.rad); }

CBall operator+(const CBall& a, const CBall& b) {
    Real r = a.re + b.re, i = a.im + b.im;
    double u = ulp_of(r);
    return CBall(r, i, add_up(a.rad, b.rad, mul_up(u, add_up(mag(r), mag(i)))));
}

CBall operator-(const CBall& a, const CBall& b) {
    Real r = a.re - b.re, i = a.im - b.im;
    double u = ulp_of(r);
    return CBall(r, i, add_up(a.rad, b.rad, mul_up(u, add_up(mag(r), mag(i)))));
}

CBall operator*(const CBall& a, const CBall& b) {
    if (a.im == 0 && b.im == 0) {
        Real r = a.re * b.re;
        double rad = mul_up(ulp_of(r), mag(r));
        if (a.rad != 0 || b.rad != 0)
            rad = add_up(rad, add_up(mul_up(mag(a.re), b.rad), mul_up(mag(b.re), a.rad),
                                     mul_up(a.rad, b.rad)));
        return CBall(r, Real(0), rad);
    }
    Real rr = a.re * b.re - a.im * b.im;
    Real ii = a.re * b.im + a.im * b.re;
    double u = ulp_of(rr);
    double ar = mag(a.re), ai = mag(a.im), br = mag(b.re), bi = mag(b.im);
    // Each component: two rounded products and one rounded sum.
    double er = mul_up(u, add_up(mul_up(ar, br), mul_up(ai, bi), mag(rr)));
    double ei = mul_up(u, add_up(mul_up(ar, bi), mul_up(ai, br), mag(ii)));
    double rad = add_up(er, ei);
    if (a.rad != 0 || b.rad != 0) {
        double ma = mid_abs_upper(a), mb = mid_abs_upper(b);
        rad = add_up(rad, add_up(mul_up(ma, b.rad), mul_up(mb, a.rad), mul_up(a.rad, b.rad)));
    }
    return CBall(rr, ii, rad);
}

CBall operator/(const CBall& a, const CBall& b) {
    double lb = lower_abs(b);
    if (lb == 0.0) throw DomainError("division by a disk containing zero");
    Real qr, qi;
    double rad;
    if (b.im == 0) {
        qr = a.re / b.re;
        qi = a.im / b.re;
        rad = mul_up(ulp_of(qr), add_up(mag(qr), mag(qi)));
    } else {
        Real d = b.re * b.re + b.im * b.im;
        qr = (a.re * b.re + a.im * b.im) / d;
        qi = (a.im * b.re - a.re * b.im) / d;
        double bl = down(std::sqrt(down(mag_lower(b.re) * mag_lower(b.re) +
                                        mag_lower(b.im) * mag_lower(b.im))));
        rad = up(mul_up(12.0 * ulp_of(qr), mid_abs_upper(a)) / bl);
    }
    if (a.rad != 0 || b.rad != 0) {
        double q = up(std::sqrt(up(mag(qr) * mag(qr) + mag(qi) * mag(qi))));
        rad = add_up(rad, up(add_up(a.rad, mul_up(q, b.rad)) / lb));
    }
    return CBall(qr, qi, rad);
}

CBall& operator+=(CBall& a, const CBall& b) { return a = a + b; }
CBall& operator-=(CBall& a, const CBall& b) { return a = a - b; }
CBall& operator*=(CBall& a, const CBall& b) { return a = a * b; }

CBall conj(const CBall& z) { return CBall(z.re, -z.im, z.rad); }

Ball abs(const CBall& z) {
    Real h;
    mpfr_hypot(h.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return Ball(h, add_up(z.rad, mul_up(ulp_of(h), mag(h))));
}

CBall exp(const CBall& z) {
    Real ex = boost::multiprecision::exp(z.re);
    Real re, im;
    if (z.im == 0) {
        re = ex;
        im = 0;
    } else {
        re = ex * boost::multiprecision::cos(z.im);
        im = ex * boost::multiprecision::sin(z.im);
    }
    double u = ulp_of(re);
    double rad = mul_up(4.0 * u, add_up(mag(re), mag(im)));
    if (z.rad != 0) {
        double w = mul_up(mag(ex), 1.0 + 8.0 * u);
        rad = add_up(rad, mul_up(w, expm1_up(z.rad)));
    }
    return CBall(re, im, rad);
}

CBall pow_pos(const Real& t, const CBall& s) {
    if (!(t > 0)) throw DomainError("power of a non-positive base");
    if (t == 1) return CBall(1);
    Real L = boost::multiprecision::log(t);
    Real zr = s.re * L;
    Real zi = s.im * L;
    double u = ulp_of(L);
    double ml = mag(L);
    double sabs = add_up(mag(s.re), mag(s.im));
    // Rounding of log t, of the two products, and the input radius of s.
    double dz = add_up(mul_up(u, add_up(mag(zr), mag(zi))), mul_up(sabs, mul_up(u, ml)),
                       mul_up(s.rad, mul_up(ml, 1.0 + 2 * u)));
    CBall w = exp(CBall(zr, zi, 0.0));
    if (dz != 0) w.rad = add_up(w.rad, mul_up(upper_abs(w), expm1_up(dz)));
    return w;
}

CBall pow_pos(const Ball& t, const CBall& s) {
    if (t.rad == 0) return pow_pos(t.mid, s);
    double lo = lower(t);
    if (!(lo > 0)) throw DomainError("power of a ball that is not positive");
    double eta = up(t.rad / lo);
    if (eta >= 0.5) throw DomainError("power of a ball that is too wide");
    CBall w = pow_pos(t.mid, s);
    double eps = mul_up(upper_abs(s), up(eta / down(1.0 - eta)));
    w.rad = add_up(w.rad, mul_up(upper_abs(w), expm1_up(eps)));
    return w;
}

CBall add_error(const CBall& z, double err) { return CBall(z.re, z.im, add_up(z.rad, err)); }

bool overlaps(const CBall& a, const CBall& b) {
    CBall d = a - b;
    return lower_abs(CBall(d.re, d.im, 0.0)) <= add_up(d.rad, 0.0);
}

bool overlaps(const Ball& a, const Ball& b) { return overlaps(CBall(a), CBall(b)); }

} // namespace moebius
