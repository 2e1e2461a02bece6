#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/summatory.hpp"
#include "oracles/oracle.hpp"
#include "oracles/values.hpp"

#include <random>

using namespace moebius;

namespace {
bool within(const ApproxValue& v, long double ref, double slack = 0) {
    return std::fabs((long double)v.re_double() - ref) <= v.radius() + slack;
}
} // namespace

TEST_CASE("snapshot at x = 1") {
    auto s = summatory(1.0);
    CHECK(s.M == 1);
    CHECK(s.m.re_double() == 1.0);
    CHECK(s.m_check.re_double() == 0.0);
    CHECK(s.m_dcheck.re_double() == 0.0);
    CHECK(s.m1.re_double() == 0.0);
    CHECK(s.H.re_double() == 1.0);
}

TEST_CASE("snapshot at x = 10 against direct sums") {
    auto s = summatory(10.0);
    CHECK(s.M == -1);
    CHECK(exact_m(10) == Rational(19, 210));
    CHECK(within(s.m, 19.0L / 210.0L, 1e-18));
    CHECK(within(s.m_check, oracle::mcheck_naive(10), 1e-17));
    CHECK(within(s.m_dcheck, oracle::mdcheck_naive(10), 1e-17));
    auto h = summatory_hp(Real(10));
    CHECK(h.M == -1);
    Real d = h.m.re() - Real(19) / Real(210);
    CHECK(boost::multiprecision::abs(d) <= Real(h.m.radius()));
}

TEST_CASE("double and ball paths agree within radii") {
    for (double x : {2.5, 97.0, 1000.0, 12345.6, 99999.0}) {
        auto a = summatory(x);
        auto b = summatory_hp(Real(x));
        CHECK(a.M == b.M);
        auto close = [](const ApproxValue& p, const ApproxValue& q) {
            return std::fabs(p.re_double() - q.re_double()) <= p.radius() + q.radius() + 1e-300;
        };
        CHECK(close(a.m, b.m));
        CHECK(close(a.m_check, b.m_check));
        CHECK(close(a.m_dcheck, b.m_dcheck));
        CHECK(close(a.m1, b.m1));
        CHECK(close(a.H, b.H));
        CHECK(close(a.H_check, b.H_check));
    }
}

TEST_CASE("parallel and serial summatory are bit identical") {
    auto a = summatory(3.0e6 + 0.5);
    auto b = summatory_serial(3.0e6 + 0.5);
    CHECK(a.M == b.M);
    CHECK(a.m.re_double() == b.m.re_double());
    CHECK(a.m_check.re_double() == b.m_check.re_double());
    CHECK(a.H_check.re_double() == b.H_check.re_double());
}

TEST_CASE("snapshot invariants on random x") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(1.0, 20000.0);
    for (int i = 0; i < 40; ++i) {
        double x = xs(rng);
        auto s = summatory(x);
        CHECK(std::llabs(s.M) <= static_cast<long long>(x));
        CHECK(std::fabs(s.m.re_double()) <= 1 + s.m.radius());
        CHECK(std::fabs(s.m_check.re_double() - 1) <= 2 + s.m_check.radius());
    }
}

TEST_CASE("M(10^6) and the first admissible point of the imported bound") {
    CHECK(summatory(1e6).M == oracle_values::mertens_1e6);
    auto s = summatory(97067.0);
    CHECK(std::fabs((double)s.M) <= 0.013 * 97067.0 / std::log(97067.0));
}

TEST_CASE("prefix stream reproduces the snapshot") {
    double x = 5000.5;
    PrefixState last;
    stream_prefixes(5000, [&](const PrefixState& p) { last = p; });
    auto cv = check_values(last, x);
    auto s = summatory(x);
    CHECK(std::fabs(cv.mc - s.m_check.re_double()) <= cv.mc_err + s.m_check.radius());
    CHECK(std::fabs(cv.mcc - s.m_dcheck.re_double()) <= cv.mcc_err + s.m_dcheck.radius());
    CHECK(last.M == s.M);
}

TEST_CASE("absolute integrals of m") {
    CHECK(abs_m_integrals(Real(2)).I0.re_double() == doctest::Approx(1.0));
    CHECK(abs_m_integrals(Real(3)).I0.re_double() == doctest::Approx(1.5));
    auto r = abs_m_integrals(Real(10000));
    CHECK(std::fabs(r.I0.re_double() - (double)oracle::abs_m_integral_naive(10000)) < 1e-12);
    CHECK(r.I0.re_double() >= 0.002493 * (100.0 - 1e-4));
    CHECK_THROWS_AS(summatory(0.5), DomainError);
}

TEST_CASE("Dirichlet sums with s = 0 count Mertens") {
    auto d = mu_dirichlet(CBall(0), Real(100));
    CHECK(d.sum.re == Real(summatory(100.0).M));
}
