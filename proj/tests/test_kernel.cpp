#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/kernel.hpp"
#include "oracles/values.hpp"

#include <cmath>
#include <random>

using namespace moebius;

namespace {
KernelSpec spec(const char* s, KernelVariant v = KernelVariant::Q) {
    return KernelSpec{v, ComplexParam::parse(s)};
}
bool agree(const ApproxValue& a, const ApproxValue& b) { return overlaps(a.value, b.value); }
} // namespace

TEST_CASE("Q at s = 2, t = 1 is zeta(2) - 2") {
    auto v = kernel_eval(spec("2"), Real(1), 1e-25);
    Real ref = Real(oracle_values::zeta_points[0].re) - 2;
    CHECK(to_double(boost::multiprecision::abs(v.re() - ref)) <= v.radius() + 1e-38);
    CHECK(v.re_double() == doctest::Approx(-0.3550659331));
}

TEST_CASE("variants are tied together") {
    auto s = ComplexParam::parse("0.5+3i");
    KernelEvaluator q(KernelSpec{KernelVariant::Q, s}, 1e-30);
    KernelEvaluator r(KernelSpec{KernelVariant::R, s}, 1e-30);
    KernelEvaluator qq(KernelSpec{KernelVariant::q, s}, 1e-30);
    for (const char* t : {"1", "1.5", "2.999", "7.25", "40"}) {
        Real tt(t);
        auto vq = q.eval(tt), vr = r.eval(tt), vqq = qq.eval(tt);
        Real frac = tt - boost::multiprecision::floor(tt);
        CBall sm1 = s.ball() - CBall(1);
        CHECK(overlaps(vqq.value, sm1 * vq.value));
        CHECK(overlaps(vr.value, vq.value - sm1 * CBall(Ball(frac) - Ball(Real("0.5")))));
    }
}

TEST_CASE("Q jumps by -(s-1) at integers and R is continuous") {
    for (const char* sv : {"2", "0.5+14.13i", "-0.5+5i", "1.5"}) {
        auto s = ComplexParam::parse(sv);
        KernelEvaluator q(KernelSpec{KernelVariant::Q, s}, 1e-30);
        KernelEvaluator r(KernelSpec{KernelVariant::R, s}, 1e-30);
        CBall sm1 = s.ball() - CBall(1);
        for (long long k = 2; k <= 60; ++k) {
            auto jump = q.eval(Real(k)).value - q.eval_left(k).value;
            CHECK(overlaps(jump, -sm1));
            CHECK(overlaps(r.eval(Real(k)).value, r.eval_left(k).value));
        }
    }
}

TEST_CASE("definitional and Euler-Maclaurin forms agree on the grid") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ts(1.0, 100.0);
    for (const char* sig : {"-0.5", "0.5", "1.5", "2", "3"}) {
        for (const char* tau : {"0", "5", "14.13"}) {
            ComplexParam s{Real(sig), Real(tau)};
            KernelEvaluator ev(KernelSpec{KernelVariant::Q, s}, 1e-28);
            std::vector<Real> grid{Real(1), Real("1.5"), Real(2), Real("14.13"), Real(100)};
            for (int i = 0; i < 6; ++i) grid.push_back(Real(ts(rng)));
            for (const auto& t : grid) {
                auto a = ev.eval(t);
                auto b = kernel_eval_em(KernelSpec{KernelVariant::Q, s}, t, 1e-20);
                CHECK(a.radius() < 1e-15);
                CHECK(agree(a, b));
            }
        }
    }
}

TEST_CASE("bound formulas") {
    CHECK(kernel_bound(spec("2"), 1, BoundForm::sup_Q) == doctest::Approx(1.0));
    CHECK(kernel_bound(spec("0.5+14.13i"), 1, BoundForm::sup_Q) == doctest::Approx(399.8).epsilon(1e-3));
    CHECK(kernel_bound(spec("2"), 10, BoundForm::ibp_R) == doctest::Approx(1.0 / 30));
    CHECK(kernel_bound(spec("2"), 10, BoundForm::real_R) == doctest::Approx(2.0 / 80));
    CHECK_THROWS_AS(kernel_bound(spec("-0.5"), 1, BoundForm::sup_Q), DomainError);
    CHECK_THROWS_AS(kernel_bound(spec("0.5+1i"), 2, BoundForm::real_R), DomainError);
    CHECK_THROWS_AS(kernel_bound(spec("-1.5"), 2, BoundForm::ibp_R), DomainError);
}

TEST_CASE("kernel values respect their bounds") {
    for (const char* sv : {"2", "0.5+14.13i", "0.25+3i", "3"}) {
        auto s = ComplexParam::parse(sv);
        KernelEvaluator q(KernelSpec{KernelVariant::Q, s}, 1e-25);
        KernelEvaluator r(KernelSpec{KernelVariant::R, s}, 1e-25);
        double sup = kernel_bound(KernelSpec{KernelVariant::Q, s}, 1, BoundForm::sup_Q);
        double mid = kernel_bound(KernelSpec{KernelVariant::Q, s}, 1, BoundForm::mid_Q);
        for (int i = 0; i < 400; ++i) {
            Real t = Real(1) + Real(i) / 8;
            double tq = upper_abs(q.eval(t).value);
            double tr = upper_abs(r.eval(t).value);
            CHECK(tq <= sup);
            CHECK(tr <= mid);
            CHECK(tr <= kernel_bound(KernelSpec{KernelVariant::R, s}, to_double(t), BoundForm::ibp_R));
        }
    }
    KernelEvaluator r(KernelSpec{KernelVariant::R, ComplexParam(Real("-0.5"), Real(0))}, 1e-25);
    for (int i = 0; i < 200; ++i) {
        Real t = Real(1) + Real(i) / 7;
        CHECK(upper_abs(r.eval(t).value) <=
              kernel_bound(spec("-0.5", KernelVariant::R), to_double(t), BoundForm::real_R));
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(kernel_eval(spec("1"), Real(2), 1e-10), PoleError);
    CHECK_THROWS_AS(kernel_eval(spec("2"), Real("0.5"), 1e-10), DomainError);
    CHECK_THROWS_AS(kernel_eval_em(spec("-1.5"), Real(2), 1e-10), DomainError);
    CHECK_THROWS_AS(parse_variant("Z"), DomainError);
}
