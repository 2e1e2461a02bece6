#include "checks_internal.hpp"

#include "moebius/errors.hpp"
#include "moebius/kernel.hpp"
#include "moebius/quad.hpp"
#include "moebius/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

namespace moebius::detail {

namespace {

constexpr double u = 0x1p-53;

void need_real(const ComplexParam& s) {
    if (s.tau != 0) throw DomainError("s must be real here");
}

std::uint64_t sweep_limit(const Args& a, const char* key, double cap) {
    double v = a.num(key);
    if (!(v >= 2) || v > cap) throw DomainError(std::string(key) + " must lie in [2, " + fmt(cap) + "]");
    return static_cast<std::uint64_t>(std::floor(v));
}

// Smallest margin seen along a sweep, tracked by its guaranteed lower end.
struct Worst {
    double lo = INFINITY, margin = 0, err = 0, at = 0;
    std::uint64_t points = 0;

    void see(double m, double e, double t) {
        ++points;
        if (m - e < lo) {
            lo = m - e;
            margin = m;
            err = e;
            at = t;
        }
    }
    Cell cell(const Params& p, Rigor fail = Rigor::rigorous) const {
        Cell c = margin_cell(p, margin, up(err), fail);
        c.detail = {{"at", fmt(at, 12)}, {"points", std::to_string(points)}};
        return c;
    }
};

// Lower bounds for the sups of |m|, |mcheck - 1| and |mdcheck - 2 log t + 2 gamma| over [x, X].
// Each piece [n, n+1) is exact: mcheck is linear in log t and the other is a parabola.
struct Sups {
    double m = 0, f1 = 0, f2 = 0;
};

Sups empirical_sups(double x, double X) {
    static std::mutex lock;
    static std::map<std::pair<double, double>, Sups> cache;
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find({x, X}); it != cache.end()) return it->second;

    Sups r;
    const auto n0 = static_cast<std::uint64_t>(std::floor(x));
    const auto N = static_cast<std::uint64_t>(std::floor(X));
    stream_prefixes(N, [&](const PrefixState& p) {
        if (p.n < n0) return;
        r.m = std::max(r.m, std::fabs(p.m) - p.m_err);
        const double lo = std::max(double(p.n), x), hi = std::min(double(p.n + 1), X);
        auto at = [&](double t) {
            auto cv = check_values(p, t);
            double L = std::log(t);
            double v1 = cv.mc - 1;
            r.f1 = std::max(r.f1, std::fabs(v1) - cv.mc_err - 2 * u * std::fabs(v1));
            double v2 = cv.mcc - 2 * L + 2 * kGamma;
            r.f2 = std::max(r.f2, std::fabs(v2) - cv.mcc_err - 8 * u * (std::fabs(cv.mcc) + 2 * L + 2) - 2 * kGammaErr);
        };
        at(lo);
        if (hi > lo) at(hi);
        if (p.m != 0) {
            double t = std::exp((p.s1 + 1) / p.m);
            if (t > lo && t < hi) at(t);
        }
    });
    cache[{x, X}] = r;
    return r;
}

struct PropDef {
    const char* name;
    int family;
    char part;
};

void add_props(std::vector<CheckImpl>& out) {
    for (PropDef d : {PropDef{"prop1-a", 1, 'a'}, PropDef{"prop1-b", 1, 'b'}, PropDef{"prop1-c", 1, 'c'},
                      PropDef{"prop2-a", 2, 'a'}, PropDef{"prop2-b", 2, 'b'}, PropDef{"prop2-c", 2, 'c'}}) {
        const char* summary = d.family == 1
                                  ? "|1/zeta(sigma) - sum mu(n) n^-sigma + ...| against C x^{1-sigma} sup_{[x, factor x]}"
                                  : "|log x/zeta - zeta'/zeta^2 - sum mu(n) n^-sigma log(x/n) + ...| against "
                                    "C x^{1-sigma} sup_{[x, factor x]}";
        out.push_back(
            {{d.name, CheckKind::inequality, summary,
              grid_of({{"s", {"1.04", "1.5", "2", "3"}}, {"x", {"10", "100", "1000", "10000"}}, {"factor", {"1000"}}})},
             [d](const Args& a, const RunOptions&) {
                 auto s = a.s();
                 need_real(s);
                 if (!(s.sigma > 1)) throw DomainError("sigma must be > 1");
                 Real xr = a.real("x");
                 need_x(xr);
                 double x = to_double(xr), X = x * a.num("factor");
                 if (!(X >= x) || X > 1e9) throw DomainError("factor must be >= 1 with x * factor <= 1e9");

                 Ball sig(s.sigma), sm1 = sig - Ball(1);
                 auto z = zeta_at(s);
                 Ball zeta = z.zeta.value.real(), zp = z.zeta_prime.value.real();
                 Ball xs = pow_pos(Ball(xr), Ball(1) - sig);
                 auto md = mu_dirichlet(s.ball(), xr);
                 auto snap = summatory_hp(xr);
                 Ball m = snap.m.value.real(), f1 = snap.m_check.value.real() - Ball(1);

                 Ball E, C;
                 if (d.family == 1) {
                     E = Ball(1) / zeta - md.sum.real();
                     if (d.part != 'a') E += m * xs;
                     if (d.part == 'c') E += sm1 * f1 * xs;
                     C = d.part == 'a' ? Ball(2) : d.part == 'b' ? Ball(2) * sm1 : sm1 * sm1;
                 } else {
                     E = log(Ball(xr)) / zeta - zp / (zeta * zeta) - md.log_sum.real();
                     if (d.part == 'c') E += f1 * xs;
                     C = d.part == 'a' ? Ball(2) / sm1 : d.part == 'b' ? Ball(4) : Ball(3) * sm1;
                 }
                 Sups sp = empirical_sups(x, X);
                 double sup = d.part == 'a' ? sp.m : d.part == 'b' ? sp.f1 : sp.f2;
                 Ball q = abs(E);
                 Cell c = margin_cell(a.all(), C * xs * Ball::from_double(std::max(sup, 0.0)), q, Rigor::heuristic);
                 c.detail = {{"sup_lower", fmt(sup, 10)}, {"quantity", fmt(to_double(q.mid), 10)}};
                 return one(c);
             }});
    }
}

// int_1^x |mcheck(t) - 1| dt, exact per piece: on [n, n+1) the integrand is a log t - b
// with antiderivative a (t log t - t) - b t; a sign change is split at e^{b/a}.
Ball abs_f1_integral(const Real& x) {
    need_x(x);
    const auto N = floor_u64(x);
    auto tab = mobius_upto(N);
    Ball m(0), s1(0), acc(0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        int v = (*tab)(n);
        Ball bn(Real(static_cast<long long>(n)));
        if (v != 0) {
            m += Ball(v) / bn;
            s1 += Ball(v) * log(bn) / bn;
        }
        Real hi_r = n + 1 <= x ? Real(static_cast<long long>(n + 1)) : x;
        if (!(hi_r > bn.mid)) continue;
        Ball hi(hi_r);
        Ball b = s1 + Ball(1);
        auto F = [&](const Ball& t) { return m * (t * log(t) - t) - b * t; };
        auto g = [&](const Ball& t) { return m * log(t) - b; };
        Ball glo = g(bn), ghi = g(hi);
        if ((lower(glo) > 0 && lower(ghi) > 0) || (upper(glo) < 0 && upper(ghi) < 0)) {
            acc += abs(F(hi) - F(bn));
        } else {
            if (contains_zero(m)) throw PrecisionError("sign change of mcheck - 1 not resolved");
            Ball t0 = exp(b / m);
            acc += abs(F(t0) - F(bn)) + abs(F(hi) - F(t0));
        }
    }
    return acc;
}

void add_mieux_bounds(std::vector<CheckImpl>& out) {
    for (bool check : {false, true}) {
        out.push_back(
            {{check ? "parchm" : "parm", CheckKind::inequality,
              check ? "|sum mu(n) n^-s - m(x) x^{1-s} - (s-1)(mcheck(x)-1) x^{1-s} - 1/zeta(s)| against the "
                      "Q_s kernel bound with int_1^x |mcheck - 1|"
                    : "|sum mu(n) n^-s - m(x) x^{1-s} - 1/zeta(s)| against the Q_s kernel bound with int_1^x |m|",
              grid_of({{"s", {"2", "0.5+3i"}}, {"x", {"10", "1000", "100000"}}})},
             [check](const Args& a, const RunOptions&) {
                 auto s = a.s();
                 if (!(s.sigma > 0)) throw DomainError("Re s must be > 0");
                 Real xr = a.real("x");
                 need_x(xr);
                 auto z = zeta_at(s);
                 Ball az = abs(z.zeta.value);
                 if (!(lower(az) > 0)) throw DomainError("zeta(s) is not separated from 0");
                 CBall sb = s.ball(), sm1 = sb - CBall(1);
                 Ball as = abs(sb), asm1 = abs(sm1), sig(s.sigma), X(xr);
                 CBall xs = pow_pos(xr, CBall(1) - sb);
                 Ball axs = abs(xs);
                 auto md = mu_dirichlet(sb, xr);
                 auto snap = summatory_hp(xr);
                 CBall f1 = snap.m_check.value - CBall(1);
                 CBall inv = CBall(1) / z.zeta.value;
                 if (!check) {
                     Ball q = abs(md.sum - snap.m.value * xs - inv);
                     Ball I0 = abs_m_integrals(xr).I0.value.real();
                     Ball bound = as / sig * asm1 / az * axs * I0 / X + abs(f1) * axs / az;
                     return one(margin_cell(a.all(), bound, q));
                 }
                 Ball q = abs(md.sum - snap.m.value * xs - sm1 * f1 * xs - inv);
                 Ball J = abs_f1_integral(xr);
                 Ball common = as / sig * asm1 * asm1 / az * axs * J / X +
                               Ball(Real("0.55")) * asm1 * asm1 / (az * sig * pow_pos(X, sig));
                 Ball hd = snap.m_dcheck.value.real() * half() - log(X);
                 Ball plus = common + asm1 / az * axs * abs(hd + gamma_ball());
                 Ball minus = common + asm1 / az * axs * abs(hd - gamma_ball());
                 Cell c = margin_cell(a.all(), plus, q);
                 c.detail = {{"margin_minus_gamma", fmt(to_double((minus - q).mid), 10)},
                             {"int_abs_mcheck_minus_1", fmt(to_double(J.mid), 12)}};
                 return one(c);
             }});
    }
}

void add_poids_bound(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"poids-bound", CheckKind::inequality,
          "real sigma > -1: |sum mu(n) n^-sigma - 1/zeta - m(x) x^{1-sigma}| against the R_sigma kernel bound "
          "with int_1^x |m(t)| t dt",
          grid_of({{"s", {"-0.5", "0.5", "1.5", "2", "3"}}, {"x", {"10", "1000", "100000"}}})},
         [](const Args& a, const RunOptions&) {
             auto s = a.s();
             need_real(s);
             if (!(s.sigma > -1) || s.sigma == 1) throw DomainError("sigma must be > -1 and != 1");
             Real xr = a.real("x");
             need_x(xr);
             Ball sig(s.sigma), X(xr);
             Ball zeta = zeta_at(s).zeta.value.real();
             Ball az = abs(zeta);
             if (!(lower(az) > 0)) throw DomainError("zeta(sigma) is not separated from 0");
             Ball xs = pow_pos(X, Ball(1) - sig);
             auto md = mu_dirichlet(s.ball(), xr);
             auto snap = summatory_hp(xr);
             Ball q = abs(md.sum.real() - Ball(1) / zeta - snap.m.value.real() * xs);
             Ball I1 = abs_m_integrals(xr).I1.value.real();
             Ball as = abs(sig), asm1 = abs(sig - Ball(1));
             Ball bound = as * asm1 / (Ball(8) * az) * xs * I1 / (X * X) +
                          xs / az *
                              (asm1 * half() * abs(snap.m1.value.real()) +
                               as * abs(snap.m_check.value.real() - Ball(1)) + asm1 / X);
             return one(margin_cell(a.all(), bound, q));
         }});
}

void add_balcheck(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"balcheck", CheckKind::inequality,
          "|mcheck(x) - 1| <= (1/x) int_1^x |m| + 1/x^2 at every integer and at random real x",
          grid_of({{"mode", {"integers", "random"}}, {"xmax", {"100000"}}, {"samples", {"1000"}}, {"seed", {"20240601"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e9);
             const double xmax = a.num("xmax");
             const bool random = a.str("mode") == "random";
             if (!random && a.str("mode") != "integers") throw DomainError("mode is integers or random");
             std::vector<double> pts;
             if (random) {
                 std::mt19937_64 gen(static_cast<std::uint64_t>(a.integer("seed")));
                 std::uniform_real_distribution<double> dist(1.0, xmax);
                 pts.resize(static_cast<std::size_t>(a.integer("samples")));
                 for (auto& p : pts) p = dist(gen);
                 std::sort(pts.begin(), pts.end());
             }
             std::size_t next = 0;
             CompensatedSum I0; // int_1^n |m|
             Worst w;
             auto test = [&](const PrefixState& p, double x) {
                 if (x == 1) return w.see(0, 0, 1); // equality: mcheck(1) = 0
                 auto cv = check_values(p, x);
                 double lhs = std::fabs(cv.mc - 1);
                 double lhs_err = cv.mc_err + 2 * u * lhs;
                 double frac = x - double(p.n);
                 double I = I0.value() + std::fabs(p.m) * frac;
                 double I_err = I0.error_bound() + p.m_err * frac + 2 * u * I;
                 double rhs = I / x + 1 / (x * x);
                 double margin = rhs - lhs;
                 w.see(margin, lhs_err + I_err / x + 4 * u * rhs + 2 * u * std::fabs(margin), x);
             };
             stream_prefixes(N, [&](const PrefixState& p) {
                 if (!random) test(p, double(p.n));
                 while (next < pts.size() && std::floor(pts[next]) == double(p.n)) test(p, pts[next++]);
                 I0.add(std::fabs(p.m), p.m_err);
             });
             return one(w.cell(a.all()));
         }});
}

void add_balazard_m(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"balazard-m", CheckKind::inequality,
          "|m(x)| <= |M(x)|/x + (1/x^2) int_1^x |M| + (8/3)/x, checked at the smallest point of each piece",
          grid_of({{"xmax", {"1000000"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e9);
             long long A = 0; // int_1^n |M|, exact
             Worst w;
             stream_prefixes(N, [&](const PrefixState& p) {
                 // the right side decreases across [n, n+1): its infimum is the left limit at n+1
                 const bool last = p.n == N;
                 double x = last ? double(p.n) : double(p.n + 1);
                 double area = double(A) + (last ? 0.0 : double(std::llabs(p.M)));
                 double rhs = double(std::llabs(p.M)) / x + area / (x * x) + 8.0 / (3.0 * x);
                 double lhs = std::fabs(p.m);
                 double margin = rhs - lhs;
                 w.see(margin, p.m_err + 6 * u * rhs + 2 * u * std::fabs(margin), last ? x : x - 0.5);
                 A += std::llabs(p.M);
             });
             Cell c = w.cell(a.all());
             c.detail.emplace_back("note", "'at' n + 0.5 stands for the left limit at n + 1");
             return one(c);
         }});
}

void add_harmonic(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"harmonic", CheckKind::inequality,
          "-0.5408 <= x (H(x) - log x - gamma) <= 0.5 at integers (upper) and integers plus left limits (lower)",
          grid_of({{"side", {"upper", "lower"}}, {"xmax", {"1000000"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e10);
             const bool upper_side = a.str("side") == "upper";
             if (!upper_side && a.str("side") != "lower") throw DomainError("side is upper or lower");
             const double low = -0.5408, high = 0.5;
             CompensatedSum H;
             Worst w;
             auto value = [&](double x) {
                 double h = H.value(), L = std::log(x);
                 double v = x * (h - L - kGamma);
                 double e = x * (H.error_bound() + 2 * u * (h + L + kGamma) + kGammaErr) + 2 * u * std::fabs(v);
                 return std::pair{v, e};
             };
             for (std::uint64_t n = 1; n <= N; ++n) {
                 double x = double(n);
                 H.add(1.0 / x, u / x);
                 auto [v, e] = value(x);
                 if (upper_side) {
                     w.see(high - v, e, x);
                 } else {
                     w.see(v - low, e + u, x);
                     if (n < N) {
                         auto [vl, el] = value(x + 1);
                         w.see(vl - low, el + u, x + 0.5);
                     }
                 }
             }
             Cell c = w.cell(a.all());
             if (!upper_side) c.detail.emplace_back("note", "'at' n + 0.5 stands for the left limit at n + 1");
             return one(c);
         }});
}

void add_q_bounds(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"q-bounds", CheckKind::inequality,
          "closed-form bounds on Q_s and R_s against a branch-and-bound sup over [1, tmax]",
          grid_of({{"s", {"2", "1.5", "0.5+3i", "-0.5"}},
                   {"form", {"sup_Q", "mid_Q", "ibp_R", "real_R"}},
                   {"tmax", {"10"}},
                   {"sub", {"2"}}})},
         [](const Args& a, const RunOptions&) -> std::vector<Cell> {
             auto s = a.s();
             const BoundForm form = parse_bound_form(a.str("form"));
             const double tmax = a.num("tmax");
             const long long sub = a.integer("sub");
             if (!(tmax > 1) || tmax > 1e4 || sub < 1) throw DomainError("need 1 < tmax <= 1e4 and sub >= 1");
             const double sig = to_double(s.sigma);
             // forms outside their range of validity produce no cell
             if ((form == BoundForm::sup_Q || form == BoundForm::mid_Q) && !(sig > 0)) return {};
             if (!(sig > -1)) return {};
             if (form == BoundForm::real_R && s.tau != 0) return {};

             const double target = 1e-6;
             if (form == BoundForm::sup_Q || form == BoundForm::mid_Q) {
                 KernelSpec spec{form == BoundForm::sup_Q ? KernelVariant::Q : KernelVariant::R, s};
                 auto r = sup_abs_kernel(spec, Real(1), Real(tmax), target);
                 double bound = kernel_bound({KernelVariant::Q, s}, 1, form);
                 double mid = 0.5 * (r.lower + r.upper), rad = up(0.5 * (r.upper - r.lower));
                 Cell c = margin_cell(a.all(), bound - mid, rad + 2 * u * bound);
                 c.detail = {{"sup_lower", fmt(r.lower, 10)}, {"sup_upper", fmt(r.upper, 10)},
                             {"argmax", fmt(r.argmax, 10)}, {"bound", fmt(bound, 10)}};
                 if (form == BoundForm::mid_Q)
                     c.detail.emplace_back("printed_bound", fmt(kernel_bound_literal({KernelVariant::Q, s}, 1, form), 10));
                 return one(c);
             }
             // C/t forms: each subinterval [lo, hi] is compared with the bound at hi
             KernelSpec spec{KernelVariant::R, s};
             Worst w;
             double printed_worst = INFINITY;
             const double h = 1.0 / double(sub);
             for (double lo = 1; lo < tmax; lo += h) {
                 double hi = std::min(lo + h, tmax);
                 auto r = sup_abs_kernel(spec, Real(lo), Real(hi), target);
                 double bound = kernel_bound(spec, hi, form);
                 double mid = 0.5 * (r.lower + r.upper);
                 w.see(bound - mid, up(0.5 * (r.upper - r.lower)) + 2 * u * bound, r.argmax);
                 if (form == BoundForm::ibp_R)
                     printed_worst = std::min(printed_worst, kernel_bound_literal(spec, hi, form) - r.upper);
             }
             Cell c = w.cell(a.all(), Rigor::heuristic);
             if (form == BoundForm::ibp_R) c.detail.emplace_back("printed_margin", fmt(printed_worst, 10));
             return one(c);
         }});
}

void add_alpha(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"alpha", CheckKind::inequality,
          "|alpha(t)| <= 1/t for (1/t^2) sum_{k<=t} 2k = 1 + alpha(t), exact arithmetic on t = p/density",
          grid_of({{"tmax", {"10000"}}, {"density", {"8"}}})},
         [](const Args& a, const RunOptions&) {
             const long long tmax = a.integer("tmax"), d = a.integer("density");
             if (tmax < 1 || tmax > 1000000 || d < 1 || d > 1024) throw DomainError("tmax in [1, 1e6], density in [1, 1024]");
             using i128 = __int128;
             Worst w;
             auto see = [&](long long p, long long n) {
                 // alpha = (n(n+1) d^2 - p^2) / p^2, 1/t = d p / p^2
                 i128 num = i128(n) * (n + 1) * d * d - i128(p) * p;
                 i128 slack = i128(d) * p - (num < 0 ? -num : num);
                 double margin = double(slack) / (double(p) * double(p));
                 w.see(margin, 4 * u * std::fabs(margin), double(p) / double(d));
             };
             for (long long p = d; p <= tmax * d; ++p) {
                 see(p, p / d);
                 if (p % d == 0 && p > d) see(p, p / d - 1); // left limit at an integer
             }
             Cell c = w.cell(a.all());
             // on [n, n+1): alpha - 1/t = (n(n+1) - t(t+1))/t^2 <= 0 and alpha + 1/t = (n(n+1) - t(t-1))/t^2 >= 0
             c.detail.emplace_back("note", "equality at integers and left limits; holds for every real t by the piecewise algebra");
             return one(c);
         }});
}

void add_m_to_mcheck(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"m-to-mcheck", CheckKind::inequality,
          "|mcheck - 1| <= I1/x^2 + 1.1/x, |m1| <= I0/x + 1/x, |m1| <= I1/x^2 + 2/x with I0 = int |m|, I1 = int |m| t",
          grid_of({{"form", {"mcheck-I1", "m1-I0", "m1-I1"}}, {"xmax", {"100000"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e9);
             const std::string form = a.str("form");
             if (form != "mcheck-I1" && form != "m1-I0" && form != "m1-I1") throw DomainError("unknown form " + form);
             CompensatedSum I0, I1;
             Worst w;
             stream_prefixes(N, [&](const PrefixState& p) {
                 const double n = double(p.n), am = std::fabs(p.m);
                 auto test = [&](double x) {
                     double I0x = I0.value() + am * (x - n);
                     double I0e = I0.error_bound() + p.m_err * (x - n) + 2 * u * I0x;
                     double I1x = I1.value() + am * (x * x - n * n) / 2;
                     double I1e = I1.error_bound() + p.m_err * (x * x - n * n) / 2 + 4 * u * I1x;
                     double lhs, lhs_e, rhs, rhs_e;
                     if (form == "mcheck-I1") {
                         auto cv = check_values(p, x);
                         lhs = std::fabs(cv.mc - 1);
                         lhs_e = cv.mc_err + 2 * u * lhs;
                     } else {
                         double m1 = p.m - double(p.M) / x;
                         lhs = std::fabs(m1);
                         lhs_e = p.m_err + 4 * u * (am + std::fabs(double(p.M) / x));
                     }
                     if (form == "m1-I0") {
                         rhs = I0x / x + 1 / x;
                         rhs_e = I0e / x;
                     } else {
                         rhs = I1x / (x * x) + (form == "m1-I1" ? 2.0 : 1.1) / x;
                         rhs_e = I1e / (x * x);
                     }
                     double margin = rhs - lhs;
                     w.see(margin, lhs_e + rhs_e + 6 * u * rhs + 2 * u * std::fabs(margin), x);
                 };
                 test(n);
                 if (p.n < N) {
                     test(n + 0.5);
                     test(n + 1); // left limit: the values above still use the prefix at n
                 }
                 I0.add(am, p.m_err);
                 I1.add(am * (2 * n + 1) / 2, p.m_err * (2 * n + 1) / 2 + u * am * (2 * n + 1));
             });
             return one(w.cell(a.all()));
         }});
}

void add_m_log_bound(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"m-log-bound", CheckKind::inequality,
          "|m(x)| <= 0.0130073/log x for x >= 97063 and |M(x)| <= 0.013 x/log x for x >= 97067, up to xmax",
          grid_of({{"form", {"m", "M"}}, {"xmax", {"1000000"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e10);
             const bool small_m = a.str("form") == "m";
             if (!small_m && a.str("form") != "M") throw DomainError("form is m or M");
             const std::uint64_t from = small_m ? 97063 : 97067;
             if (N < from) throw DomainError("xmax must be >= " + std::to_string(from));
             Worst w;
             std::uint64_t failing = 0, first = 0, last = 0;
             auto see = [&](double margin, double err, double t) {
                 w.see(margin, err, t);
                 if (margin + err < 0) {
                     ++failing;
                     last = static_cast<std::uint64_t>(t);
                     if (!first) first = last;
                 }
             };
             stream_prefixes(N, [&](const PrefixState& p) {
                 if (p.n < from) return;
                 double n = double(p.n);
                 if (small_m) {
                     // c/log t decreases on the piece: compare at its right end
                     double t = p.n < N ? n + 1 : n;
                     double b = 0.0130073 / std::log(t);
                     double margin = b - std::fabs(p.m);
                     see(margin, p.m_err + 4 * u * b + 2 * u * std::fabs(margin), t);
                 } else {
                     // t/log t increases: compare at the left end
                     double b = 0.013 * n / std::log(n);
                     double margin = b - double(std::llabs(p.M));
                     see(margin, 6 * u * b, n);
                 }
             });
             Cell c = w.cell(a.all());
             c.detail.emplace_back("failing_pieces", std::to_string(failing));
             if (failing) c.detail.emplace_back("failing_right_ends", std::to_string(first) + ".." + std::to_string(last));
             return one(c);
         }});
}

// Per-piece check of int_1^x |m| >= c (sqrt x - 1/x).
std::vector<Cell> landau_lower_cells(const Args& a) {
    const auto N = sweep_limit(a, "xmax", 1e10);
    const double c = a.num("c");
    if (!(c > 0)) throw DomainError("c must be > 0");
    auto rhs = [c](double x) { return c * (std::sqrt(x) - 1 / x); };
    CompensatedSum I0;
    Worst w;
    std::uint64_t certified = 0, direct = 0;
    double min_ratio = INFINITY, ratio_at = 0;
    stream_prefixes(N, [&](const PrefixState& p) {
        const double n = double(p.n), I = I0.value(), Ie = I0.error_bound();
        const double am = std::fabs(p.m);
        if (p.n >= 2) {
            double r = rhs(n);
            w.see(I - r, Ie + 4 * u * (I + c * std::sqrt(n) + c / n), n);
            double ratio = I / (std::sqrt(n) - 1 / n);
            if (ratio < min_ratio) min_ratio = ratio, ratio_at = n;
        }
        if (p.n < N) {
            if (I - Ie - rhs(n + 1) * (1 + 4 * u) >= 0) {
                ++certified;
            } else if (p.n >= 2 || am > 0) {
                // g(x) = I + |m|(x - n) - c (sqrt x - 1/x) is convex on the piece
                ++direct;
                auto dg = [&](double x) { return am - c * (0.5 / std::sqrt(x) + 1 / (x * x)); };
                double lo = n, hi = n + 1, xs;
                if (dg(lo) >= 0) xs = lo;
                else if (dg(hi) <= 0) xs = hi;
                else {
                    for (int i = 0; i < 80 && hi - lo > 4 * u * hi; ++i) (dg(0.5 * (lo + hi)) < 0 ? lo : hi) = 0.5 * (lo + hi);
                    xs = 0.5 * (lo + hi);
                }
                double g = I + am * (xs - n) - rhs(xs);
                double e = Ie + p.m_err * (xs - n) + std::fabs(dg(xs)) * (hi - lo) + 6 * u * (I + am + c * std::sqrt(xs) + c);
                if (xs > 1) w.see(g, e, xs);
            }
        }
        I0.add(am, p.m_err);
    });
    Cell cell = w.cell(a.all());
    cell.detail.emplace_back("min_ratio", fmt(min_ratio, 10));
    cell.detail.emplace_back("min_ratio_at", fmt(ratio_at, 12));
    cell.detail.emplace_back("certified_pieces", std::to_string(certified));
    cell.detail.emplace_back("direct_pieces", std::to_string(direct));
    return one(cell);
}

void add_landau_lower(std::vector<CheckImpl>& out) {
    out.push_back({{"landau-lower", CheckKind::inequality,
                    "int_1^x |m| >= c (sqrt x - 1/x) for every x <= xmax, piece by piece",
                    grid_of({{"c", {"0.0024933", "0.0025"}}, {"xmax", {"1000000"}}})},
                   [](const Args& a, const RunOptions&) { return landau_lower_cells(a); }});
}

void add_hel_truncation(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"hel-truncation", CheckKind::inequality,
          "|zeta(s) - sum_{n<=t} n^-s - t^{1-s}/(s-1)| <= (5/6) t^-sigma for t >= |tau|, 0 < sigma <= 1",
          grid_of({{"s", {"0.5+10i"}}, {"tmin", {"10"}}, {"tmax", {"10000"}}, {"points", {"200"}}})},
         [](const Args& a, const RunOptions&) {
             auto s = a.s();
             if (!(s.sigma > 0 && s.sigma <= 1) || (s.sigma == 1 && s.tau == 0))
                 throw InapplicableError("requires 0 < sigma <= 1, s != 1");
             const double tmin = a.num("tmin"), tmax = a.num("tmax");
             const int points = static_cast<int>(a.integer("points"));
             double atau = std::fabs(to_double(s.tau));
             if (!(tmin >= std::max(1.0, atau)) || !(tmax >= tmin) || tmax > 1e7 || points < 1)
                 throw InapplicableError("requires max(1, |tau|) <= tmin <= tmax <= 1e7");
             auto z = zeta_at(s);
             if (z.zeta.radius() > 1e-12) throw PrecisionError("zeta(s) radius above 1e-12");
             CBall sb = s.ball(), sm1 = sb - CBall(1), ms = -sb;
             Ball sig(s.sigma);
             CBall P(0);
             std::uint64_t k = 0;
             std::vector<Cell> cells;
             int printed_ok = 0;
             for (auto& ts : log_spaced(tmin, tmax, points)) {
                 Real t = parse_real(ts);
                 for (auto K = floor_u64(t); k < K;) {
                     ++k;
                     P += pow_pos(Real(static_cast<long long>(k)), ms);
                 }
                 Ball bound = Ball(5) / Ball(6) / pow_pos(Ball(t), sig);
                 Ball q = abs(z.zeta.value - P - pow_pos(t, CBall(1) - sb) / sm1);
                 Ball qp = abs(z.zeta.value - P - pow_pos(t, sm1) / sm1);
                 Params p = a.all();
                 p.emplace_back("t", ts);
                 Cell c = margin_cell(p, bound, q);
                 double mp = to_double((bound - qp).mid);
                 if (mp >= 0) ++printed_ok;
                 c.detail = {{"printed_exponent_margin", fmt(mp, 6)}, {"zeta_radius", fmt(z.zeta.radius(), 3)}};
                 cells.push_back(std::move(c));
             }
             for (auto& c : cells) c.detail.emplace_back("printed_exponent_holds", std::to_string(printed_ok) + "/" + std::to_string(points));
             return cells;
         }});
}

void add_smoothed_bounds(std::vector<CheckImpl>& out) {
    out.push_back(
        {{"smoothed-bounds", CheckKind::inequality,
          "|mcheck(t) - 1| <= 2 and |mdcheck(t) - 2 log t + 2 gamma| <= 4 gamma + 2 for 1 <= t <= xmax",
          grid_of({{"form", {"mcheck", "mdcheck"}}, {"xmax", {"1000000"}}})},
         [](const Args& a, const RunOptions&) {
             const auto N = sweep_limit(a, "xmax", 1e10);
             const bool first = a.str("form") == "mcheck";
             if (!first && a.str("form") != "mdcheck") throw DomainError("form is mcheck or mdcheck");
             const double B = first ? 2.0 : 4 * kGamma + 2;
             Worst w;
             double printed_first_fail = 0; // |mdcheck - log t + gamma| <= 4 gamma + 2
             stream_prefixes(N, [&](const PrefixState& p) {
                 const double lo = double(p.n), hi = p.n < N ? lo + 1 : lo;
                 auto at = [&](double t) {
                     auto cv = check_values(p, t);
                     double L = std::log(t);
                     if (first) {
                         double v = std::fabs(cv.mc - 1);
                         w.see(B - v, cv.mc_err + 2 * u * (v + B), t);
                     } else {
                         double v = std::fabs(cv.mcc - 2 * L + 2 * kGamma);
                         w.see(B - v, cv.mcc_err + 8 * u * (std::fabs(cv.mcc) + 2 * L + 2 + B) + 4 * kGammaErr, t);
                         double vp = std::fabs(cv.mcc - L + kGamma);
                         if (printed_first_fail == 0 && vp > B) printed_first_fail = t;
                     }
                 };
                 at(lo);
                 if (hi > lo) at(hi);
                 if (!first && p.m != 0) {
                     // vertex of m L^2 - 2 (s1 + 1) L + ...
                     double t = std::exp((p.s1 + 1) / p.m);
                     if (t > lo && t < hi) at(t);
                 }
             });
             Cell c = w.cell(a.all());
             if (!first)
                 c.detail.emplace_back("printed_normalization_first_exceeds",
                                       printed_first_fail == 0 ? "never" : fmt(printed_first_fail, 10));
             return one(c);
         }});
}

} // namespace

void add_inequality_checks(std::vector<CheckImpl>& out) {
    add_props(out);
    add_mieux_bounds(out);
    add_poids_bound(out);
    add_balcheck(out);
    add_balazard_m(out);
    add_harmonic(out);
    add_q_bounds(out);
    add_alpha(out);
    add_m_to_mcheck(out);
    add_m_log_bound(out);
    add_landau_lower(out);
    add_hel_truncation(out);
    add_smoothed_bounds(out);
}

} // namespace moebius::detail
