#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/zeta.hpp"
#include "oracles/values.hpp"

using namespace moebius;

namespace {
bool contains(const ApproxValue& v, const char* re, const char* im) {
    Real dr = v.re() - Real(re), di = v.im() - Real(im);
    return to_double(boost::multiprecision::sqrt(dr * dr + di * di)) <= v.radius() * (1 + 1e-12) + 1e-40;
}
} // namespace

TEST_CASE("parameter parsing") {
    auto a = ComplexParam::parse("0.5+14.13i");
    CHECK(a.sigma == Real("0.5"));
    CHECK(a.tau == Real("14.13"));
    auto b = ComplexParam::parse("1-3i");
    CHECK(b.tau == -3);
    CHECK(ComplexParam::parse("14.13i").sigma == 0);
    CHECK(ComplexParam::parse("-0.5").sigma == Real("-0.5"));
    CHECK(ComplexParam::parse("1e-4+2i").sigma == Real("1e-4"));
    CHECK(ComplexParam::parse(" 2 - i ").tau == -1);
    CHECK_THROWS_AS(ComplexParam::parse("2+x"), DomainError);
    CHECK_THROWS_AS(ComplexParam::parse(""), DomainError);
}

TEST_CASE("Bernoulli numbers") {
    auto& B = bernoulli_even(6);
    using Q = boost::multiprecision::mpq_rational;
    CHECK(B[1] == Q(1, 6));
    CHECK(B[2] == Q(-1, 30));
    CHECK(B[3] == Q(1, 42));
    CHECK(B[6] == Q(-691, 2730));
}

TEST_CASE("zeta and zeta' against mpmath values") {
    for (const auto& p : oracle_values::zeta_points) {
        std::string name = p.s;
        CAPTURE(name);
        auto r = zeta_em(ComplexParam::parse(p.s), 1e-25);
        CHECK(r.zeta.radius() <= 1e-25);
        CHECK(contains(r.zeta, p.re, p.im));
        CHECK(contains(r.zeta_prime, p.dre, p.dim));
        CHECK(r.zeta.rigor == Rigor::rigorous);
    }
}

TEST_CASE("zeta(0) and zeta(2)") {
    auto z0 = zeta_em(ComplexParam(0.0), 1e-30);
    CHECK(contains(z0.zeta, "-0.5", "0"));
    auto z2 = zeta_em(ComplexParam(2.0), 1e-30);
    Real pi = pi_value();
    Real d = z2.zeta.re() - pi * pi / 6;
    CHECK(to_double(boost::multiprecision::abs(d)) <= z2.zeta.radius());
}

TEST_CASE("behaviour near the pole") {
    ComplexParam s(Real(1) + Real("1e-6"), Real(0));
    auto r = zeta_em(s, 1e-20);
    Real prod = (s.sigma - 1) * r.zeta.re();
    CHECK(to_double(boost::multiprecision::abs(prod - Real(oracle_values::pole_product))) <= 1e-5);
    CHECK_THROWS_AS(zeta_em(ComplexParam(1.0), 1e-10), PoleError);
    CHECK_THROWS_AS(zeta_em(ComplexParam(-1.5), 1e-10), DomainError);
}

TEST_CASE("unreachable targets raise PrecisionError") {
    PrecisionScope p(64);
    CHECK_THROWS_AS(zeta_em(ComplexParam(0.5, 14.13), 1e-40), PrecisionError);
}

TEST_CASE("cache returns identical values") {
    auto s = ComplexParam::parse("0.5+10i");
    auto a = zeta_cached(s, 1e-20);
    auto b = zeta_cached(s, 1e-20);
    CHECK(a.zeta.re() == b.zeta.re());
    CHECK(a.cutoff == b.cutoff);
}

TEST_CASE("partial power sums") {
    CHECK(partial_power_sum(CBall(2), Real("2.5")).re_double() == doctest::Approx(1.25));
    CHECK(partial_power_sum(CBall(0), Real(7)).re_double() == 7.0);
    CHECK_THROWS_AS(partial_power_sum(CBall(2), Real("0.5")), DomainError);
}
