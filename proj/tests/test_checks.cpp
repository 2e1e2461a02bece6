#include <doctest.h>

#include "moebius/checks.hpp"
#include "moebius/errors.hpp"
#include "moebius/report.hpp"
#include "moebius/summatory.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

using namespace moebius;

namespace {

BoundReport run(const std::string& name, const std::string& grid, int threads = 1) {
    return run_check(name, Grid::parse(grid), RunOptions{threads});
}

std::string detail(const Cell& c, const std::string& key) {
    for (auto& [k, v] : c.detail)
        if (k == key) return v;
    return "";
}

// mu by trial division, independent of the sieve
int naive_mu(long long n) {
    int r = 1;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    return n > 1 ? -r : r;
}

} // namespace

TEST_CASE("grid text round trip and errors") {
    auto g = Grid::parse("s=2,0.5+3i;x=10");
    CHECK(g.str() == "s=2,0.5+3i;x=10");
    CHECK(g.find("s")->size() == 2);
    CHECK(g.merged(Grid::parse("x=1,2;T=5")).str() == "s=2,0.5+3i;x=1,2;T=5");
    CHECK_THROWS_AS(Grid::parse("s"), DomainError);
    CHECK_THROWS_AS(Grid::parse("s="), DomainError);
    CHECK_THROWS_AS(run_check("no-such-check"), DomainError);
    CHECK_THROWS_AS(run("prop1-a", "s=0.5;x=10;factor=10"), DomainError);
    CHECK_THROWS_AS(run("hel-truncation", "s=2"), InapplicableError);
}

TEST_CASE("registry covers the listed checks") {
    for (const char* name :
         {"abel", "int-check", "mtronq", "mtronqch", "mtronqchch", "derivK1", "derivK2", "derivK3", "mieux-1", "mieux-2",
          "poids", "k1", "double-check-borne", "formule-m", "exact-Q-l1", "prop1-a", "prop1-b", "prop1-c", "prop2-a",
          "prop2-b", "prop2-c", "parm", "parchm", "poids-bound", "balcheck", "balazard-m", "harmonic", "q-bounds",
          "alpha", "m-to-mcheck", "landau-lower", "hel-truncation"})
        CHECK_NOTHROW(find_check(name));
}

TEST_CASE("identity checks on reduced grids") {
    struct Case {
        const char* name;
        const char* grid;
    };
    for (Case c : {Case{"terre", "x=10,97.5"}, Case{"abel", "s=2,0.5+3i;x=1000"}, Case{"m1-def", "x=10,97.5"},
                   Case{"int-check", "s=2,-0.5;x=1000"}, Case{"mtronq", "s=2;x=10"}, Case{"mtronqch", "s=3;x=10"},
                   Case{"mtronqchch", "s=2+5i;x=10"}, Case{"derivK1", "s=2;x=10"}, Case{"derivK3", "s=3;x=10"},
                   Case{"mieux-1", ""}, Case{"mieux-2", ""}, Case{"poids", ""}, Case{"frac-bracket", ""}, Case{"k1", ""},
                   Case{"double-check-borne", ""}, Case{"formule-m", ""}, Case{"exact-Q-l1", "s=1.5,2"},
                   Case{"har", "s=2,0.5+3i;t=10"}, Case{"ent", ""}}) {
        CAPTURE(std::string(c.name));
        auto r = run(c.name, c.grid);
        CHECK(r.pass);
        CHECK(r.rigor == Rigor::rigorous);
        CHECK(!r.cells.empty());
        for (auto& cell : r.cells) CHECK(cell.pass);
    }
}

TEST_CASE("mieux-2 reports which gamma signs close") {
    auto r = run("mieux-2", "s=2;x=100");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].first == "zero-residual combination");
    CHECK(r.notes[0].second == "printed(+g,-g)");
}

TEST_CASE("printed variants are reported as failing where the corrected forms hold") {
    auto ent = run("ent", "s=2;t=1.5");
    CHECK(ent.pass);
    CHECK(detail(ent.cells[0], "printed -1/2 residual").find("fails") != std::string::npos);
    auto fb = run("frac-bracket", "s=2;x=10");
    CHECK(fb.pass);
    CHECK(detail(fb.cells[0], "printed (s-1)(mcheck-1)-m1/2+1/x").find("fails") != std::string::npos);
}

TEST_CASE("calibration value at s = 2") {
    // 1/(s-1) - zeta(2) + gamma with pi^2/6 and gamma in long double
    const long double ref = 1.0L - 3.14159265358979323846L * 3.14159265358979323846L / 6 + 0.57721566490153286061L;
    auto r = run("exact-Q-l1", "s=2");
    CHECK(r.pass);
    CHECK(ref == doctest::Approx(-0.0677185).epsilon(1e-6));
}

TEST_CASE("prop inequalities with the empirical sup") {
    for (const char* name : {"prop1-a", "prop1-b", "prop1-c", "prop2-a", "prop2-b", "prop2-c"}) {
        CAPTURE(std::string(name));
        auto r = run(name, "s=1.5,2;x=10,1000");
        CHECK(r.pass);
    }
    // sup over [x, x] alone is not enough: the failure is only heuristic
    auto r = run("prop1-a", "s=2;x=90;factor=1");
    CHECK(!r.pass);
    CHECK(r.rigor == Rigor::heuristic);
}

TEST_CASE("mieux and poids bounds") {
    CHECK(run("parm", "s=2,0.5+3i;x=10,1000").pass);
    auto ch = run("parchm", "s=2;x=10,1000");
    CHECK(ch.pass);
    CHECK(!detail(ch.cells[0], "margin_minus_gamma").empty());
    CHECK(run("poids-bound", "s=-0.5,0.5,2;x=10,1000").pass);
}

TEST_CASE("balcheck against a brute-force oracle") {
    auto r = run("balcheck", "xmax=3000;samples=200");
    CHECK(r.pass);
    CHECK(r.rigor == Rigor::rigorous);
    // the same inequality with trial-division mu and long double sums at a few x
    for (long double x : {2.5L, 17.0L, 123.4L, 999.0L, 2718.28L}) {
        long double mc = 0, m = 0, I0 = 0;
        for (long long n = 1; n <= static_cast<long long>(x); ++n) {
            int mu = naive_mu(n);
            mc += mu / (long double)n * std::log(x / n);
            m += mu / (long double)n;
            I0 += std::fabs(m) * (std::min<long double>(n + 1, x) - n);
        }
        CAPTURE(x);
        CHECK(std::fabs(mc - 1) <= I0 / x + 1 / (x * x));
    }
}

TEST_CASE("balazard-m, m-to-mcheck, smoothed bounds") {
    CHECK(run("balazard-m", "xmax=20000").pass);
    CHECK(run("m-to-mcheck", "xmax=5000").pass);
    auto sb = run("smoothed-bounds", "xmax=20000");
    CHECK(sb.pass);
    // the printed normalization log t - gamma grows past 4 gamma + 2 once log t > 4.9
    CHECK(detail(sb.cells[1], "printed_normalization_first_exceeds") != "never");
}

TEST_CASE("harmonic sandwich and its extremal point") {
    auto r = run("harmonic", "xmax=10000");
    CHECK(r.pass);
    // the lower side is tightest as x -> 2-: 2 (1 - log 2 - gamma) = -0.5407...
    const double low = 2 * (1 - std::log(2.0) - 0.5772156649015329);
    auto& lower = r.cells[1];
    CHECK(lower.value == doctest::Approx(low + 0.5408).epsilon(1e-9));
    CHECK(detail(lower, "at") == "1.5");
}

TEST_CASE("alpha against exact sums") {
    CHECK(run("alpha", "tmax=2000;density=16").pass);
    // direct sum of 2k in long double at t = p/7
    for (long long p = 7; p <= 700; ++p) {
        long double t = p / 7.0L, S = 0;
        for (long long k = 1; k <= p / 7; ++k) S += 2 * k;
        CHECK(std::fabs(S / (t * t) - 1) <= 1 / t + 1e-15L);
    }
}

TEST_CASE("imported m/log bound fails just above 119500") {
    auto r = run("m-log-bound", "form=m;xmax=200000");
    CHECK(!r.pass);
    CHECK(r.rigor == Rigor::rigorous);
    CHECK(detail(r.cells[0], "failing_pieces") == "13");
    // independent: m(119601) by trial-division mu in long double
    long double m = 0;
    for (long long n = 1; n <= 119601; ++n)
        if (int mu = naive_mu(n)) m += mu / (long double)n;
    CHECK(std::fabs(m) > 0.0130073 / std::log(119602.0L));
    CHECK(run("m-log-bound", "form=M;xmax=200000").pass);
}

TEST_CASE("truncated zeta estimate") {
    auto r = run("hel-truncation", "points=25");
    CHECK(r.pass);
    CHECK(r.cells.size() == 25);
    CHECK_THROWS_AS(run("hel-truncation", "tmin=5"), InapplicableError); // t < |tau|
}

TEST_CASE("kernel bound forms") {
    auto r = run("q-bounds", "s=2,0.5+3i;tmax=4");
    CHECK(r.pass);
}

TEST_CASE("Landau constants") {
    auto oracle = [](double sig, double tau) {
        std::complex<double> rho(sig, tau);
        return 1 / (1 + std::abs(rho - 1.0) * std::abs(rho) / sig);
    };
    auto k = landau_constant(ComplexParam::parse(std::string("0.5+") + kFirstZeroOrdinate + "i"));
    CHECK(to_double(k.mid) == doctest::Approx(oracle(0.5, 14.134725141734693790)).epsilon(1e-12));
    CHECK(to_double(k.mid) == doctest::Approx(0.0024933).epsilon(1e-4));
    CHECK(to_double(landau_constant(ComplexParam::parse("0.5+14.13i")).mid) == doctest::Approx(0.0024949).epsilon(1e-4));
    CHECK(to_double(landau_constant(ComplexParam::parse("1")).mid) == doctest::Approx(1.0));
    CHECK_THROWS_AS(landau_constant(ComplexParam::parse("1.5")), DomainError);

    auto rho = ComplexParam::parse("0.5+14.13i");
    CHECK(improved_landau(rho, 20.512, 9.4, 14.13) == doctest::Approx(1 / 21.512));
    CHECK(improved_landau(rho, 20.512, 9.4, 14.13) == doctest::Approx(0.047).epsilon(0.02));
    CHECK(improved_landau(rho, 399.9, 399.9, 14.13) == doctest::Approx(0.0025).epsilon(0.01));
    CHECK(improved_landau(rho, 0, 0, 14.13) == doctest::Approx(1));
    CHECK_THROWS_AS(improved_landau(rho, 20, 9, 10), InapplicableError);
}

TEST_CASE("landau lower bound sweep") {
    auto r = landau_lower_check(4, 0.0025);
    CHECK(r.pass);
    // at x = 4 the left side is the step integral 1 + 1/2 + 1/6
    CHECK(to_double(abs_m_integrals(Real(4)).I0.re()) == doctest::Approx(5.0 / 3));
    CHECK(0.0025 * (2 - 0.25) == doctest::Approx(0.004375));
    auto big = landau_lower_check(1e5, 0.0024933);
    CHECK(big.pass);
    CHECK(std::stod(detail(big.cells[0], "min_ratio")) > 0.0025);
}

TEST_CASE("headline composition") {
    CHECK(compose_headline(4, 8.55e-6, kHeadlineT0) == doctest::Approx(3.42e-5));
    CHECK(compose_headline(4, 8.55e-6, kHeadlineT0) <= 3.5e-5);
    CHECK(compose_headline(4, 0, kHeadlineT0) == 0);
    CHECK(compose_headline(2, 8.55e-6, kHeadlineT0) == doctest::Approx(1.71e-5));
    CHECK_THROWS_AS(compose_headline(4, 8.55e-6, 1e6), InapplicableError);
    CHECK_THROWS_AS(compose_headline(0, 8.55e-6, kHeadlineT0), DomainError);
    CHECK(run("headline", "").pass);
}

TEST_CASE("reports on the first zero") {
    auto q = run("q-sup", "");
    REQUIRE(q.cells.size() == 1);
    CHECK(q.cells[0].radius <= 1e-3);
    CHECK(q.cells[0].value == doctest::Approx(20.859).epsilon(1e-4));
    CHECK(detail(q.cells[0], "verdict").find("exceeds") != std::string::npos);
    auto lc = run("landau-constant", "");
    CHECK(lc.cells.size() == 2);
    CHECK(lc.pass);
}

TEST_CASE("cells merge in grid order whatever the thread count") {
    ReportOptions ro;
    auto a = reports_to_json({run("terre", "x=10;kernel=1|1,t|2/t", 1)}, ro);
    auto b = reports_to_json({run("terre", "x=10;kernel=1|1,t|2/t", 4)}, ro);
    CHECK(a == b);
    auto c = reports_to_csv({run("balcheck", "xmax=2000", 3)});
    CHECK(c == reports_to_csv({run("balcheck", "xmax=2000", 1)}));
}

TEST_CASE("number rendering follows the radius") {
    CHECK(justified_digits(20.8593, 4.8e-4) == 6);
    CHECK(format_value(20.85934975, 4.8e-4) == "20.8593");
    CHECK(format_value(0.1, 0) == "0.10000000000000001");
    CHECK(format_value(1234.5, 100) == "1.2e+03");
    CHECK(format_radius(4.71e-4) == "4.8e-04");
    CHECK(format_radius(4.7e-4) == "4.7e-04");
    CHECK(format_radius(0) == "0");
}

TEST_CASE("report serialization") {
    auto r = run("formule-m", "x=2,10");
    auto j = reports_to_json({r});
    // fixed field order, elapsed_ms null without timing
    auto pos = [&](const char* k) { return j.find(std::string("\"") + k + "\""); };
    CHECK(pos("check") < pos("kind"));
    CHECK(pos("kind") < pos("grid"));
    CHECK(pos("grid") < pos("worst"));
    CHECK(pos("worst") < pos("location"));
    CHECK(pos("location") < pos("pass"));
    CHECK(pos("pass") < pos("rigor"));
    CHECK(pos("rigor") < pos("elapsed_ms"));
    CHECK(j.find("\"elapsed_ms\": null") != std::string::npos);
    ReportOptions timed;
    timed.timing = true;
    CHECK(reports_to_json({r}, timed).find("\"elapsed_ms\": null") == std::string::npos);
    auto csv = reports_to_csv({r});
    CHECK(csv.rfind("check,params,value,radius,pass,rigor,note\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
