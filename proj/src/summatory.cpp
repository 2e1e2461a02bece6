#include "moebius/summatory.hpp"

#include "moebius/errors.hpp"

#include <cmath>

namespace moebius {

namespace {

constexpr double u = 0x1p-53;

struct Partial {
    long long M = 0;
    CompensatedSum m, mc, mcc, H, Hc;
};

// Term error bounds (see the README for the model): 1/n carries one rounding,
// log(x/n) carries the rounding of x/n plus one ulp from libm, and each product
// one more rounding.
void accumulate(Partial& p, double x, std::uint64_t a, std::uint64_t b, const std::int8_t* mu) {
    for (std::uint64_t n = a; n <= b; ++n) {
        double dn = static_cast<double>(n);
        double inv = 1.0 / dn;
        double l = std::log(x / dn);
        double al = std::fabs(l);
        double e1 = u * inv * (2.0 + 5.0 * al);
        p.H.add(inv, u * inv);
        p.Hc.add(inv * l, e1);
        int v = mu[n - a];
        if (v == 0) continue;
        double sg = v;
        p.M += v;
        p.m.add(sg * inv, u * inv);
        p.mc.add(sg * inv * l, e1);
        p.mcc.add(sg * inv * l * l, u * inv * (3.0 * al + 8.0 * l * l));
    }
}

SummatorySnapshot finish(double x, const Partial& p) {
    SummatorySnapshot s;
    s.x = Real(x);
    s.M = p.M;
    s.m = ApproxValue::from_double(p.m.value(), p.m.error_bound());
    s.m_check = ApproxValue::from_double(p.mc.value(), p.mc.error_bound());
    s.m_dcheck = ApproxValue::from_double(p.mcc.value(), p.mcc.error_bound());
    s.H = ApproxValue::from_double(p.H.value(), p.H.error_bound());
    s.H_check = ApproxValue::from_double(p.Hc.value(), p.Hc.error_bound());
    double Mx = static_cast<double>(p.M) / x;
    double m1 = p.m.value() - Mx;
    double err = p.m.error_bound() + u * std::fabs(Mx) + u * std::fabs(m1);
    s.m1 = ApproxValue::from_double(m1, err * (1.0 + 0x1p-40));
    return s;
}

void check_x(double x) {
    if (!(x >= 1.0)) throw DomainError("summatory requires x >= 1");
    if (x > 9.0e15) throw CapacityError("x beyond 9e15 is not supported");
}

} // namespace

SummatorySnapshot summatory(double x) {
    check_x(x);
    const auto N = static_cast<std::uint64_t>(std::floor(x));
    const SieveConfig cfg;
    const std::uint64_t seg = cfg.segment_size;
    const auto nseg = static_cast<std::int64_t>((N - 1) / seg + 1);
    const auto primes = primes_upto(isqrt(N));
    std::vector<Partial> parts(static_cast<std::size_t>(nseg));
#pragma omp parallel
    {
        std::vector<std::int8_t> mu(seg);
        std::vector<std::uint64_t> scratch(seg);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < nseg; ++k) {
            std::uint64_t a = 1 + static_cast<std::uint64_t>(k) * seg;
            std::uint64_t b = std::min(N, a + seg - 1);
            sieve_segment(a, b, primes, mu.data(), scratch.data());
            accumulate(parts[static_cast<std::size_t>(k)], x, a, b, mu.data());
        }
    }
    Partial total;
    for (const auto& p : parts) {
        total.M += p.M;
        total.m.merge(p.m);
        total.mc.merge(p.mc);
        total.mcc.merge(p.mcc);
        total.H.merge(p.H);
        total.Hc.merge(p.Hc);
    }
    return finish(x, total);
}

SummatorySnapshot summatory_serial(double x) {
    check_x(x);
    const auto N = static_cast<std::uint64_t>(std::floor(x));
    Partial total;
    for_each_segment(1, N, [&](std::uint64_t a, std::uint64_t b, const std::int8_t* mu) {
        Partial p;
        accumulate(p, x, a, b, mu);
        total.M += p.M;
        total.m.merge(p.m);
        total.mc.merge(p.mc);
        total.mcc.merge(p.mcc);
        total.H.merge(p.H);
        total.Hc.merge(p.Hc);
    });
    return finish(x, total);
}

SummatorySnapshot summatory_hp(const Real& x) {
    if (!(x >= 1)) throw DomainError("summatory requires x >= 1");
    if (x > 1e8) throw CapacityError("high-precision summatory is limited to x <= 1e8");
    const auto N = static_cast<std::uint64_t>(boost::multiprecision::floor(x).convert_to<long long>());
    auto table = mobius_upto(N);
    Ball lx = log(Ball(x));
    Ball m(0), mc(0), mcc(0), H(0), Hc(0);
    long long M = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        Ball inv = Ball(1) / Ball(static_cast<long long>(n));
        Ball l = lx - log(Ball(static_cast<long long>(n)));
        Ball t = inv * l;
        H += inv;
        Hc += t;
        int v = (*table)(n);
        if (v == 0) continue;
        M += v;
        if (v > 0) {
            m += inv;
            mc += t;
            mcc += t * l;
        } else {
            m -= inv;
            mc -= t;
            mcc -= t * l;
        }
    }
    SummatorySnapshot s;
    s.x = x;
    s.M = M;
    s.m = ApproxValue(m);
    s.m_check = ApproxValue(mc);
    s.m_dcheck = ApproxValue(mcc);
    s.H = ApproxValue(H);
    s.H_check = ApproxValue(Hc);
    s.m1 = ApproxValue(m - Ball(M) / Ball(x));
    return s;
}

Rational exact_m(std::uint64_t n) {
    auto table = mobius_upto(std::max<std::uint64_t>(n, 1));
    Rational r = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        int v = (*table)(k);
        if (v != 0) r += Rational(v, static_cast<long long>(k));
    }
    return r;
}

std::vector<Ball> m_table(std::uint64_t N) {
    auto table = mobius_upto(std::max<std::uint64_t>(N, 1));
    std::vector<Ball> out(N + 1);
    Ball m(0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        int v = (*table)(n);
        if (v > 0) m += Ball(1) / Ball(static_cast<long long>(n));
        if (v < 0) m -= Ball(1) / Ball(static_cast<long long>(n));
        out[n] = m;
    }
    return out;
}

AbsIntegrals abs_m_integrals(const Real& x) {
    if (!(x >= 1)) throw DomainError("abs_m_integrals requires x >= 1");
    const auto N = static_cast<std::uint64_t>(boost::multiprecision::floor(x).convert_to<long long>());
    auto table = mobius_upto(N);
    Ball m(0), I0(0), I1(0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        int v = (*table)(n);
        if (v > 0) m += Ball(1) / Ball(static_cast<long long>(n));
        if (v < 0) m -= Ball(1) / Ball(static_cast<long long>(n));
        Ball a(static_cast<long long>(n));
        Ball b = n < N ? Ball(static_cast<long long>(n + 1)) : Ball(x);
        Ball am = abs(m);
        I0 += am * (b - a);
        I1 += am * (b * b - a * a) / Ball(2);
    }
    return {ApproxValue(I0), ApproxValue(I1)};
}

CheckValues check_values(const PrefixState& p, double x) {
    double L = std::log(x);
    double eL = 2 * u * L + 1e-300;
    double mc = p.m * L - p.s1;
    double mc_err = std::fabs(p.m) * eL + p.m_err * L + p.s1_err + u * (std::fabs(p.m * L) + std::fabs(mc)) * 2;
    double mcc = p.m * L * L - 2 * p.s1 * L + p.s2;
    double mcc_err = std::fabs(p.m) * 2 * L * eL + p.m_err * L * L + 2 * p.s1_err * L +
                     2 * std::fabs(p.s1) * eL + p.s2_err +
                     4 * u * (std::fabs(p.m) * L * L + 2 * std::fabs(p.s1) * L + std::fabs(p.s2));
    return {mc, mc_err * (1 + 1e-12), mcc, mcc_err * (1 + 1e-12)};
}

MuDirichlet mu_dirichlet(const CBall& s, const Real& x) {
    if (!(x >= 1)) throw DomainError("mu_dirichlet requires x >= 1");
    const auto N = static_cast<std::uint64_t>(boost::multiprecision::floor(x).convert_to<long long>());
    auto table = mobius_upto(N);
    Ball lx = log(Ball(x));
    CBall sum(0), lsum(0);
    CBall ms = -s;
    for (std::uint64_t n = 1; n <= N; ++n) {
        int v = (*table)(n);
        if (v == 0) continue;
        Real rn(static_cast<long long>(n));
        CBall t = pow_pos(rn, ms);
        CBall tl = t * CBall(lx - log(Ball(rn)));
        if (v > 0) {
            sum += t;
            lsum += tl;
        } else {
            sum -= t;
            lsum -= tl;
        }
    }
    return {sum, lsum};
}

} // namespace moebius
