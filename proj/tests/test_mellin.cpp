#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/mellin.hpp"
#include "moebius/summatory.hpp"

#include <chrono>
#include <cmath>

using namespace moebius;

TEST_CASE("segment against the Abel form on [1, x]") {
    // (s-1) int_1^x m(t) t^-s dt = sum mu(n) n^-s - m(x) x^{1-s}
    for (const char* ss : {"2", "0.5+3i", "-0.5"})
        for (const char* xs : {"10", "1000", "97.5"}) {
            auto s = ComplexParam::parse(ss);
            Real x(xs);
            CBall sm1 = s.ball() - CBall(1);
            auto seg = mellin_segment(MellinKernel::m, s, Real(1), x, 0, x);
            auto md = mu_dirichlet(s.ball(), x);
            auto snap = summatory_hp(x);
            CBall rhs = md.sum - snap.m.value * pow_pos(x, CBall(1) - s.ball());
            CAPTURE(std::string(ss));
            CAPTURE(std::string(xs));
            CHECK(overlaps(sm1 * seg.value, rhs));
        }
}

TEST_CASE("log weight splits into two segments") {
    auto s = ComplexParam::parse("2+5i");
    Real x(50), B(400);
    for (auto k : {MellinKernel::m, MellinKernel::mcheck, MellinKernel::mdcheck}) {
        auto a = mellin_segment(k, s, x, B, 1, x);
        // log(x/t) = log(x/B) + log(B/t)
        auto b = mellin_segment(k, s, x, B, 1, B);
        auto c = mellin_segment(k, s, x, B, 0, x);
        CHECK(overlaps(a.value, b.value + CBall(log(Ball(x) / Ball(B))) * c.value));
    }
}

TEST_CASE("mcheck kernel integrates the definition") {
    // int_1^x (mcheck(t) - 1) t^-1 dt with s = 1 is the step-wise sum of
    // int_n^{n+1} (m(n) log t - s1(n) - 1)/t dt; compare with the j = 0 m-kernel route
    auto s = ComplexParam::parse("1");
    Real x(30);
    auto v = mellin_segment(MellinKernel::mcheck, s, Real(1), x, 0, x);
    // mcheck(t) = int_1^t m(u)/u du, so int_1^x mcheck(t)/t dt = mdcheck(x)/2
    auto snap = summatory_hp(x);
    CBall ref = snap.m_dcheck.value * CBall(Ball(Real("0.5"))) - CBall(log(Ball(x)));
    CHECK(overlaps(v.value, ref));
}

TEST_CASE("truncated Mellin tail") {
    auto s = ComplexParam::parse("2");
    Real x(10);
    auto t0 = std::chrono::steady_clock::now();
    auto tail = mellin_tail(MellinKernel::m, s, x, default_mellin_T(x), 0);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("tail over [10, 1.25e5]: " << secs << " s");
    // (s-1) int_x^inf m t^-s = 1/zeta(s) - sum mu(n) n^-s + m(x)/x^{s-1}
    CBall z = zeta_cached(s, 1e-30).zeta.value;
    auto md = mu_dirichlet(s.ball(), x);
    auto snap = summatory_hp(x);
    CBall rhs = CBall(1) / z - md.sum + snap.m.value / CBall(Ball(x));
    CHECK(overlaps(tail.value, rhs));
    CHECK(tail.radius() < 1e-6);
    CHECK(kernel_tail_sup(MellinKernel::m, 2e5) == doctest::Approx(0.0130073 / std::log(2e5)).epsilon(1e-10));
    CHECK(kernel_tail_sup(MellinKernel::mcheck, 2e5) > kernel_tail_sup(MellinKernel::m, 2e5));
    // the quoted start 97063 is not used: the bound fails just below 120561
    CHECK_THROWS_AS(kernel_tail_sup(MellinKernel::m, 1e5), InapplicableError);
    CHECK_THROWS_AS(mellin_tail(MellinKernel::m, ComplexParam::parse("1"), x, Real(2e5), 0), DomainError);
}
