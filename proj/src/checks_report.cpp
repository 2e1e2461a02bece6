#include "checks_internal.hpp"

#include "moebius/errors.hpp"
#include "moebius/kernel.hpp"
#include "moebius/quad.hpp"

#include <algorithm>
#include <cmath>

namespace moebius {

Ball landau_constant(const ComplexParam& rho) {
    if (!(rho.sigma > 0 && rho.sigma <= 1)) throw DomainError("landau constant needs 0 < Re rho <= 1");
    CBall r = rho.ball();
    Ball k = abs(r - CBall(1)) * abs(r) / Ball(rho.sigma);
    return Ball(1) / (Ball(1) + k);
}

double improved_landau(const ComplexParam& rho, double supQ_near, double supQ_far, double T_split) {
    if (!(rho.sigma > 0 && rho.sigma <= 1)) throw DomainError("improved landau needs 0 < Re rho <= 1");
    if (!(supQ_near >= 0) || !(supQ_far >= 0)) throw DomainError("sup bounds must be >= 0");
    if (T_split < std::fabs(to_double(rho.tau))) throw InapplicableError("T_split below |Im rho|: the far bound does not apply");
    // the corollary uses |Q_rho| <= |rho||rho-1|/sigma; any sharper sup enters the same way
    return down(1.0 / up(1.0 + std::max(supQ_near, supQ_far)));
}

double compose_headline(double C, double c, double x0, double t0) {
    if (!(C > 0)) throw DomainError("C must be > 0");
    if (!(c >= 0)) throw DomainError("input bound must be >= 0");
    if (t0 > x0) throw InapplicableError("input bound holds from t0 = " + detail::fmt(t0) + " only, above x0");
    return C * c;
}

BoundReport landau_lower_check(double x_max, double c) {
    Grid g;
    g.set("c", {detail::fmt(c, 17)});
    g.set("xmax", {detail::fmt(x_max, 17)});
    return run_check("landau-lower", g);
}

namespace detail {

namespace {

std::string verdict(double lower, double upper, double claim) {
    if (lower > claim) return "rigorous value exceeds " + fmt(claim);
    if (upper <= claim) return "consistent with " + fmt(claim);
    return "undecided against " + fmt(claim);
}

Cell report_cell(const Params& p, double lo, double hi, double target) {
    Cell c;
    c.params = p;
    c.value = 0.5 * (lo + hi);
    c.radius = up(0.5 * (hi - lo));
    c.pass = c.radius <= target;
    return c;
}

} // namespace

void add_report_checks(std::vector<CheckImpl>& out) {
    out.push_back({{"q-sup", CheckKind::report, "rigorous sup of |Q_s| over [a, b] against a heuristic value",
                    grid_of({{"s", {"0.5+14.13i"}}, {"trange", {"1:14.13"}}, {"target", {"1e-3"}}, {"heuristic", {"20.512"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       const std::string& tr = a.str("trange");
                       auto colon = tr.find(':');
                       if (colon == std::string::npos) throw DomainError("trange is a:b");
                       Real lo = parse_real(tr.substr(0, colon)), hi = parse_real(tr.substr(colon + 1));
                       if (!(lo >= 1 && hi > lo)) throw DomainError("trange needs 1 <= a < b");
                       auto r = sup_abs_kernel({KernelVariant::Q, s}, lo, hi, a.num("target"));
                       Cell c = report_cell(a.all(), r.lower, r.upper, a.num("target"));
                       c.detail = {{"lower", fmt(r.lower, 10)},
                                   {"upper", fmt(r.upper, 10)},
                                   {"argmax", fmt(r.argmax, 12)},
                                   {"left_limit", r.left_limit ? "true" : "false"},
                                   {"verdict", verdict(r.lower, r.upper, a.num("heuristic"))}};
                       return one(c);
                   }});

    out.push_back({{"q-l1", CheckKind::report,
                    "int_1^inf |Q_s(t)| t^-2 dt: quadrature on [1, T] plus a two-sided tail enclosure",
                    grid_of({{"s", {"0.5+14.13i"}}, {"T", {"1000"}}, {"target", {"1e-2"}}, {"heuristic", {"11"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       const long long T = a.integer("T");
                       if (T < 20) throw DomainError("T must be an integer >= 20");
                       const double target = a.num("target");
                       KernelSpec spec{KernelVariant::Q, s};
                       auto I = integrate_abs_kernel(spec, Real(T), target / 2);
                       auto tail = tail_enclosure_abs_Q(s, T);
                       double lo = down(lower(I.value.real()) + tail.lo), hi = up(upper(I.value.real()) + tail.hi);
                       // the split at 20 with the far sup over [20, inf)
                       auto I20 = integrate_abs_kernel(spec, Real(20), target / 2);
                       double split_hi = up(upper(I20.value.real()) + tail_bound_abs_Q(spec, 20));
                       Cell c = report_cell(a.all(), lo, hi, target);
                       c.detail = {{"lower", fmt(lo, 10)},
                                   {"upper", fmt(hi, 10)},
                                   {"int_1_20", fmt(to_double(I20.value.re), 10)},
                                   {"split_20_upper", fmt(split_hi, 10)},
                                   {"verdict", verdict(lo, hi, a.num("heuristic"))}};
                       return one(c);
                   }});

    out.push_back({{"improved-landau", CheckKind::report,
                    "Landau constant from a rigorous sup of |Q_rho| on [1, T_split] and the far bound beyond",
                    grid_of({{"rho", {std::string("0.5+") + kFirstZeroOrdinate + "i"}}, {"T_split", {"auto"}}, {"target", {"1e-3"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto rho = a.s("rho");
                       double atau = std::fabs(to_double(rho.tau));
                       double T = a.str("T_split") == "auto" ? atau : a.num("T_split");
                       if (!(T > 1)) throw DomainError("T_split must be > 1");
                       double far = hel_sup_Q(rho, T);
                       auto r = sup_abs_kernel({KernelVariant::Q, rho}, Real(1), Real(T), a.num("target"));
                       double k = improved_landau(rho, r.upper, far, T);
                       double k_lo = improved_landau(rho, r.lower, far, T);
                       Cell c = report_cell(a.all(), k, std::max(k, k_lo), 1e-2);
                       c.detail = {{"supQ_near_upper", fmt(r.upper, 10)},
                                   {"supQ_far", fmt(far, 10)},
                                   {"constant", fmt(k, 8)},
                                   {"corollary_constant", fmt(to_double(landau_constant(rho).mid), 8)},
                                   {"heuristic_recomposition", fmt(improved_landau(rho, 20.512, 9.4, T), 8)},
                                   {"generic_recomposition", fmt(improved_landau(rho, 399.9, 399.9, T), 8)}};
                       return one(c);
                   }});

    out.push_back({{"headline", CheckKind::inequality, "C * c from the uniform inequality against 3.5e-5",
                    grid_of({{"C", {"4"}}, {"c", {"8.55e-6"}}, {"x0", {"2.5e11"}}, {"claim", {"3.5e-5"}}})},
                   [](const Args& a, const RunOptions&) {
                       double v = compose_headline(a.num("C"), a.num("c"), a.num("x0"));
                       double claim = a.num("claim");
                       Cell c = margin_cell(a.all(), claim - v, 4 * 0x1p-53 * claim);
                       c.detail = {{"composed", fmt(v, 10)}};
                       return one(c);
                   }});

    out.push_back({{"landau-constant", CheckKind::report, "(1 + |rho - 1||rho|/Re rho)^-1",
                    grid_of({{"rho", {std::string("0.5+") + kFirstZeroOrdinate + "i", "0.5+14.13i"}}})},
                   [](const Args& a, const RunOptions&) {
                       Ball k = landau_constant(a.s("rho"));
                       Cell c = report_cell(a.all(), lower(k), upper(k), 1e-12);
                       c.detail = {{"below_0.0025", upper(k) < 0.0025 ? "true" : "false"}};
                       return one(c);
                   }});
}

} // namespace detail
} // namespace moebius
