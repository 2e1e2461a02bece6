#include "checks_internal.hpp"

#include "moebius/convolution.hpp"
#include "moebius/errors.hpp"
#include "moebius/kernel.hpp"
#include "moebius/mellin.hpp"
#include "moebius/piecewise.hpp"
#include "moebius/quad.hpp"
#include "moebius/summatory.hpp"

#include <cmath>

namespace moebius::detail {

namespace {

Real mellin_T(const Args& a, const Real& x) {
    if (!a.has("T") || a.str("T") == "auto") return default_mellin_T(x);
    Real T = a.real("T");
    if (T < x) throw DomainError("T must be >= x");
    return T;
}

// sum_{n<=N} a(n) n^-s
CBall dirichlet_sum(const SeqFn& a, const CBall& s, std::uint64_t N) {
    CBall acc(0);
    const CBall ms = -s;
    for (std::uint64_t n = 1; n <= N; ++n) {
        Ball an = a(n);
        if (an.mid == 0 && an.rad == 0) continue;
        acc += CBall(an) * pow_pos(Real(static_cast<long long>(n)), ms);
    }
    return acc;
}

// (1/zeta, x^{1-s}) and the truncated-Mellin right-hand sides
struct MellinRhs {
    CBall inv_zeta, zeta_prime_over_zeta2, xs; // xs = x^{1-s}
    MuDirichlet mu;
    SummatorySnapshot snap;
    CBall f1, f2; // mcheck - 1, mdcheck - 2 log x + 2 gamma
    CBall logx;
};

MellinRhs mellin_rhs(const ComplexParam& s, const Real& x) {
    MellinRhs r;
    auto z = zeta_at(s);
    r.inv_zeta = CBall(1) / z.zeta.value;
    r.zeta_prime_over_zeta2 = z.zeta_prime.value * r.inv_zeta * r.inv_zeta;
    r.xs = pow_pos(x, CBall(1) - s.ball());
    r.mu = mu_dirichlet(s.ball(), x);
    r.snap = summatory_hp(x);
    r.logx = CBall(log(Ball(x)));
    r.f1 = r.snap.m_check.value - CBall(1);
    r.f2 = r.snap.m_dcheck.value - CBall(2) * r.logx + CBall(Ball(2) * gamma_ball());
    return r;
}

// (omega, phi) pairs of the convolution harness
std::pair<FunctionSpec, FunctionSpec> kernel_pair(const std::string& name) {
    auto pw = [](long long p, int j = 0, long long c = 1) { return FunctionSpec::power_log(Exponent(p), j, CBall(c)); };
    if (name == "1|1") return {pw(0), pw(0)};
    if (name == "t|2/t") return {pw(1), pw(-1, 0, 2)};
    if (name == "log|t") return {pw(0, 1), pw(1)};
    if (name == "tlog|t^2") return {pw(1, 1), pw(2)};
    if (name == "t^(1/2+3i)|1") return {FunctionSpec::power(Exponent(Rational(1, 2), Rational(3))), pw(0)};
    if (name == "1/t|log^2") return {pw(-1), pw(0, 2)};
    throw UnsupportedKernelError("unknown kernel pair '" + name + "'");
}

// F(s) of the K-th truncated Mellin formula
CBall mtronq_rhs(const MellinRhs& r, const CBall& sm1, int K) {
    CBall F = r.inv_zeta - r.mu.sum + r.snap.m.value * r.xs;
    if (K >= 2) F += sm1 * r.f1 * r.xs;
    if (K >= 3) F += sm1 * sm1 * CBall(half()) * r.f2 * r.xs;
    return F;
}

MellinKernel kernel_for(int K) {
    return K == 1 ? MellinKernel::m : K == 2 ? MellinKernel::mcheck : MellinKernel::mdcheck;
}

void add_mtronq(std::vector<CheckImpl>& out, const char* name, int K) {
    out.push_back({{name, CheckKind::identity,
                    "(s-1)^K int_x^inf k(t) t^-s dt against 1/zeta(s) - sum mu(n) n^-s + Taylor terms",
                    grid_of({{"s", {"1.04", "1.5", "2", "3", "2+5i"}}, {"x", {"10", "1000"}}, {"T", {"auto"}}})},
                   [K](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       CBall sm1 = s.ball() - CBall(1);
                       auto tail = mellin_tail(kernel_for(K), s, x, mellin_T(a, x), 0);
                       CBall c = K == 1 ? sm1 : K == 2 ? sm1 * sm1 : sm1 * sm1 * sm1 * CBall(half());
                       auto r = mellin_rhs(s, x);
                       return one(identity_cell(a.all(), c * tail.value, mtronq_rhs(r, sm1, K)));
                   }});
}

void add_derivK(std::vector<CheckImpl>& out, const char* name, int K) {
    out.push_back({{name, CheckKind::identity,
                    "s-derivative of the truncated Mellin formula: log-weighted tails against "
                    "log x/zeta - zeta'/zeta^2 - sum mu(n) n^-s log(x/n) + Taylor terms",
                    grid_of({{"s", {"1.04", "2", "2+5i"}}, {"x", {"10", "1000"}}, {"T", {"auto"}}})},
                   [K](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       CBall sm1 = s.ball() - CBall(1);
                       CBall h = K == 3 ? CBall(half()) : CBall(1);
                       CBall pk1(1);
                       for (int i = 1; i < K; ++i) pk1 = pk1 * sm1;
                       CBall c0 = CBall(K) * pk1 * h, c1 = pk1 * sm1 * h;
                       auto lhs = mellin_tail_combo(kernel_for(K), s, x, mellin_T(a, x), c0, c1);
                       auto r = mellin_rhs(s, x);
                       CBall rhs = r.logx * r.inv_zeta - r.zeta_prime_over_zeta2 - r.mu.log_sum;
                       if (K >= 2) rhs += r.f1 * r.xs;
                       if (K >= 3) rhs += sm1 * r.f2 * r.xs;
                       return one(identity_cell(a.all(), lhs.value, rhs));
                   }});
}

// int_x^inf (log t - H(t) + eps gamma) t^-s dt through the harmonic tail formula
CBall harmonic_tail(const ComplexParam& s, const Real& x, const SummatorySnapshot& snap, int eps) {
    CBall sb = s.ball(), sm1 = sb - CBall(1);
    CBall z = zeta_at(s).zeta.value;
    CBall P = partial_power_sum(sb, x).value;
    CBall xs = pow_pos(x, CBall(1) - sb);
    CBall g = CBall(gamma_ball());
    CBall hx = snap.H.value - CBall(log(Ball(x))) - g;
    // (s-1) int_x^inf (H - log - gamma) u^-s = zeta - P - x^{1-s}/(s-1) + (H - log x - gamma) x^{1-s}
    CBall T = -(z - P - xs / sm1 + hx * xs) / sm1;
    if (eps > 0) T += CBall(2) * g * xs / sm1;
    return T;
}

} // namespace

void add_identity_checks(std::vector<CheckImpl>& out) {
    out.push_back({{"terre", CheckKind::identity,
                    "int_1^x S_a omega(x/t) S_b phi(t) dt/t = int_1^x S_{a*b} omega(x/t) phi(t) dt/t",
                    grid_of({{"a", {"mobius", "one", "alternating"}},
                             {"b", {"mobius", "one", "alternating"}},
                             {"kernel", {"1|1", "t|2/t", "log|t", "tlog|t^2", "t^(1/2+3i)|1", "1/t|log^2"}},
                             {"x", {"2", "10", "97.5", "1000"}}})},
                   [](const Args& a, const RunOptions&) {
                       Real x = a.real("x");
                       need_x(x);
                       auto [om, ph] = kernel_pair(a.str("kernel"));
                       auto sd = terre_sides(SequenceSpec::named(a.str("a")), SequenceSpec::named(a.str("b")), om, ph, x);
                       return one(identity_cell(a.all(), sd.lhs.value, sd.rhs.value));
                   }});

    out.push_back({{"abel", CheckKind::identity,
                    "(s-1) int_1^x L(t) t^-s dt = sum a(n) n^-s - L(x) x^{1-s}, L(t) = sum_{n<=t} a(n)/n",
                    grid_of({{"seq", {"mobius", "one", "alternating"}},
                             {"s", {"2", "0.5+3i", "1.04", "1"}},
                             {"x", {"10", "1000", "100000"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       auto seq = SequenceSpec::named(a.str("seq"));
                       const std::uint64_t N = floor_u64(x);
                       ConvolutionIntegral I;
                       I.x = x;
                       I.A = Real(1);
                       I.B = x;
                       I.seqs = {seq.fn(N)};
                       CBall sm1 = s.ball() - CBall(1);
                       I.inner = {SumTerm::sum(sm1, -Exponent::from_reals(s.sigma, s.tau), 0, 0, Exponent(1))};
                       auto lhs = integrate(I);
                       auto an = seq.fn(N);
                       Ball L(0);
                       for (std::uint64_t n = 1; n <= N; ++n) L += an(n) / Ball(static_cast<long long>(n));
                       CBall rhs = dirichlet_sum(an, s.ball(), N) - CBall(L) * pow_pos(x, CBall(1) - s.ball());
                       return one(identity_cell(a.all(), lhs.value, rhs));
                   }});

    out.push_back({{"m1-def", CheckKind::identity, "m(x) - M(x)/x = (1/x) int_1^x m(t) dt",
                    grid_of({{"x", {"10", "97.5", "1000", "100000"}}})},
                   [](const Args& a, const RunOptions&) {
                       Real x = a.real("x");
                       need_x(x);
                       ConvolutionIntegral I;
                       I.x = x;
                       I.A = Real(1);
                       I.B = x;
                       I.seqs = {SequenceSpec::named("mobius").fn(floor_u64(x))};
                       I.inner = {SumTerm::sum(CBall(1), Exponent(0), 0, 0, Exponent(1))};
                       auto integral = integrate(I);
                       auto snap = summatory_hp(x);
                       return one(identity_cell(a.all(), snap.m1.value, integral.value / CBall(Ball(x))));
                   }});

    out.push_back({{"int-check", CheckKind::identity,
                    "(s-1) int_1^x mcheck(t) t^-s dt = int_1^x m(t) t^-s dt - x^{1-s} mcheck(x)",
                    grid_of({{"s", {"2", "0.5+3i", "1", "-0.5"}}, {"x", {"10", "1000", "10000"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       CBall sb = s.ball(), sm1 = sb - CBall(1);
                       CBall xs = pow_pos(x, CBall(1) - sb);
                       // int_1^x t^-s dt
                       CBall pw = s.is_one() ? CBall(log(Ball(x))) : (xs - CBall(1)) / (CBall(1) - sb);
                       auto chk = mellin_segment(MellinKernel::mcheck, s, Real(1), x, 0, x);
                       auto m = mellin_segment(MellinKernel::m, s, Real(1), x, 0, x);
                       auto snap = summatory_hp(x);
                       CBall lhs = sm1 * (chk.value + pw);
                       CBall rhs = m.value - xs * snap.m_check.value;
                       return one(identity_cell(a.all(), lhs, rhs));
                   }});

    add_mtronq(out, "mtronq", 1);
    add_mtronq(out, "mtronqch", 2);
    add_mtronq(out, "mtronqchch", 3);
    add_derivK(out, "derivK1", 1);
    add_derivK(out, "derivK2", 2);
    add_derivK(out, "derivK3", 3);

    out.push_back({{"mieux-1", CheckKind::identity,
                    "zeta(s)(sum mu(n) n^-s - m(x)/x^{s-1}) - 1 = (mcheck(x)-1)/x^{s-1} + x^{1-s} int_1^x m(x/t) Q_s(t) dt/t^2",
                    grid_of({{"s", {"2", "0.5+3i", "0.5+14.13i", "1.5", "-0.5"}}, {"x", {"10", "100", "1000"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       if (s.is_one()) throw PoleError("mieux-1 needs s != 1");
                       auto r = mellin_rhs(s, x);
                       CBall z = CBall(1) / r.inv_zeta;
                       CBall lhs = z * (r.mu.sum - r.snap.m.value * r.xs) - CBall(1);
                       auto I = integrate_m_kernel(x, MKernel::parse("Q", s));
                       CBall rhs = r.f1 * r.xs + r.xs * I.value;
                       return one(identity_cell(a.all(), lhs, rhs));
                   }});

    out.push_back(
        {{"mieux-2", CheckKind::identity,
          "second mcheck-weighted identity; both gamma signs (bracket, harmonic tail) are evaluated and the "
          "combination with zero residual is reported",
          grid_of({{"s", {"2", "1.5", "0.5+3i", "3+2i"}}, {"x", {"10", "100", "1000"}}})},
         [](const Args& a, const RunOptions&) {
             auto s = a.s();
             Real x = a.real("x");
             need_x(x);
             if (!(s.sigma > 0) || s.is_one()) throw DomainError("mieux-2 needs Re(s) > 0, s != 1");
             CBall sm1 = s.ball() - CBall(1);
             auto r = mellin_rhs(s, x);
             CBall z = CBall(1) / r.inv_zeta;
             CBall lhs = z * (r.mu.sum - r.snap.m.value * r.xs - sm1 * r.f1 * r.xs) - CBall(1);
             auto W = integrate_m_kernel(x, MKernel::parse("Q", s), MWeight::mcheck_minus_one);
             CBall g = CBall(gamma_ball());
             CBall bracket0 = r.snap.m_dcheck.value * CBall(half()) - r.logx;
             // combinations (bracket sign, tail sign)
             struct Combo {
                 const char* label;
                 int e1, e2;
             };
             const Combo combos[] = {{"printed(+g,-g)", 1, -1},
                                     {"derived(-g,-g)", -1, -1},
                                     {"(+g,+g)", 1, 1},
                                     {"(-g,+g)", -1, 1}};
             const bool plus_tail_ok = s.sigma > 1;
             Cell best;
             bool have = false;
             Params detail;
             for (auto& c : combos) {
                 if (c.e2 > 0 && !plus_tail_ok) {
                     detail.emplace_back(c.label, "tail diverges for Re(s) <= 1");
                     continue;
                 }
                 CBall rhs = sm1 * r.xs * (bracket0 + CBall(c.e1) * g) + sm1 * r.xs * W.value -
                             sm1 * sm1 * harmonic_tail(s, x, r.snap, c.e2);
                 Cell cell = identity_cell(a.all(), lhs, rhs);
                 detail.emplace_back(c.label, fmt(cell.value, 3) + (cell.pass ? " (zero within radii)" : " (nonzero)"));
                 if (!have || (cell.pass && !best.pass) || (cell.pass == best.pass && cell.value < best.value)) {
                     best = cell;
                     best.detail = {{"holds", c.label}};
                     have = true;
                 }
             }
             for (auto& d : detail) best.detail.push_back(d);
             return one(best);
         },
         [](BoundReport& r) {
             std::string holds;
             bool same = true;
             for (auto& c : r.cells) {
                 const std::string& h = c.detail.front().second;
                 if (holds.empty()) holds = h;
                 else if (h != holds) same = false;
             }
             r.notes.emplace_back("zero-residual combination", same ? holds : "varies by cell");
         }});

    out.push_back({{"poids", CheckKind::identity,
                    "zeta(s)(sum mu(n) n^-s - m/x^{s-1}) - 1 = s(mcheck-1)/x^{s-1} - (s-1)m1/(2x^{s-1}) + (s-1)/x^s "
                    "+ x^{1-s} int_1^x m(x/t) R_s(t) dt/t^2",
                    grid_of({{"s", {"2", "0.5+3i", "-0.5", "1.5", "-0.5+2i"}}, {"x", {"10", "100", "1000"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real x = a.real("x");
                       need_x(x);
                       if (s.is_one()) throw PoleError("poids needs s != 1");
                       CBall sb = s.ball(), sm1 = sb - CBall(1);
                       auto r = mellin_rhs(s, x);
                       CBall z = CBall(1) / r.inv_zeta;
                       CBall lhs = z * (r.mu.sum - r.snap.m.value * r.xs) - CBall(1);
                       auto I = integrate_m_kernel(x, MKernel::parse("R", s));
                       CBall rhs = sb * r.f1 * r.xs - sm1 * r.snap.m1.value * CBall(half()) * r.xs +
                                   sm1 * r.xs / CBall(Ball(x)) + r.xs * I.value;
                       return one(identity_cell(a.all(), lhs, rhs));
                   }});

    out.push_back(
        {{"frac-bracket", CheckKind::identity,
          "int_1^x m(x/t)(s-1)(1/2-{t}) dt/t^2 against (s-1)(-(mcheck-1) + m1/2 - 1/x); the printed "
          "bracketings are reported",
          grid_of({{"s", {"2", "0.5+3i"}}, {"x", {"1.5", "10", "100", "1000"}}})},
         [](const Args& a, const RunOptions&) {
             auto s = a.s();
             Real x = a.real("x");
             need_x(x);
             CBall sm1 = s.ball() - CBall(1);
             auto I = integrate_m_kernel(x, MKernel::parse("half_minus_frac"));
             auto snap = summatory_hp(x);
             CBall f1 = snap.m_check.value - CBall(1), m1h = snap.m1.value * CBall(half());
             CBall ix = CBall(1) / CBall(Ball(x));
             CBall lhs = sm1 * I.value;
             Cell c = identity_cell(a.all(), lhs, sm1 * (-f1 + m1h - ix));
             // printed: (s-1)(mcheck-1) - m1/2 + 1/x, or (s-1)((mcheck-1) - m1/2 + 1/x)
             Cell pa = identity_cell(a.all(), lhs, sm1 * f1 - m1h + ix);
             Cell pb = identity_cell(a.all(), lhs, sm1 * (f1 - m1h + ix));
             c.detail = {{"printed (s-1)(mcheck-1)-m1/2+1/x", fmt(pa.value, 6) + (pa.pass ? " holds" : " fails")},
                         {"printed (s-1)((mcheck-1)-m1/2+1/x)", fmt(pb.value, 6) + (pb.pass ? " holds" : " fails")}};
             return one(c);
         }});

    out.push_back({{"k1", CheckKind::identity,
                    "x^{1-s} int_1^x (mcheck(x/t)-1) sum_{j<=t}(t/j)^s dt/t^2 = int_1^x (log t - H(t)) t^-s dt",
                    grid_of({{"s", {"2", "0.5+3i", "-0.5"}}, {"x", {"10", "200", "1000"}}})},
                   [](const Args& a, const RunOptions&) {
                       Real x = a.real("x");
                       need_x(x);
                       auto sd = kgen1_sides(a.s(), x);
                       return one(identity_cell(a.all(), sd.lhs.value, sd.rhs.value));
                   }});

    out.push_back({{"double-check-borne", CheckKind::identity,
                    "int_1^x m(x/t) t(H(t) - log t - gamma) dt/t^2 = -(mdcheck - 2 log x + 2 gamma)/2 - gamma(mcheck - 1)",
                    grid_of({{"x", {"10", "100", "1000", "12345.6"}}})},
                   [](const Args& a, const RunOptions&) {
                       Real x = a.real("x");
                       need_x(x);
                       auto I = integrate_m_kernel(x, MKernel::parse("harmonic"));
                       auto snap = summatory_hp(x);
                       CBall g = CBall(gamma_ball());
                       CBall f2 = snap.m_dcheck.value - CBall(2) * CBall(log(Ball(x))) + CBall(2) * g;
                       CBall rhs = -CBall(half()) * f2 - g * (snap.m_check.value - CBall(1));
                       return one(identity_cell(a.all(), I.value, rhs));
                   }});

    out.push_back({{"formule-m", CheckKind::identity,
                    "int_1^x m(x/t) (t^-2 sum_{k<=t} 2k) dt/t = 1 - 1/x^2",
                    grid_of({{"x", {"1", "2", "10", "1000", "12345.6"}}})},
                   [](const Args& a, const RunOptions&) {
                       Real x = a.real("x");
                       need_x(x);
                       const std::uint64_t N = floor_u64(x);
                       ConvolutionIntegral I;
                       I.x = x;
                       I.A = Real(1);
                       I.B = x;
                       I.seqs = {SequenceSpec::named("mobius").fn(N), SequenceSpec::named("one").fn(N)};
                       // m(x/t) = sum_{n <= x/t} mu(n)/n ; inner 2 t^-3 sum_{k<=t} k
                       I.outer = {SumTerm::sum(CBall(1), Exponent(0), 0, 0, Exponent(1))};
                       I.inner = {SumTerm::sum(CBall(2), Exponent(-3), 0, 1, Exponent(-1))};
                       auto v = integrate(I);
                       Ball xb(x);
                       CBall rhs = CBall(Ball(1) - Ball(1) / (xb * xb));
                       Cell c = identity_cell(a.all(), v.value, rhs);
                       c.detail = {{"value", to_string(v.value.re, 20)}};
                       return one(c);
                   }});

    out.push_back({{"exact-Q-l1", CheckKind::identity,
                    "signed int_1^T Q_s(t) dt/t^2 + exact tail = 1/(s-1) - zeta(s) + gamma",
                    grid_of({{"s", {"1.5", "2", "3", "0.5+3i"}}, {"T", {"1000"}}})},
                   [](const Args& a, const RunOptions& opt) {
                       auto s = a.s();
                       long long T = a.integer("T");
                       if (T < 1) throw DomainError("T must be >= 1");
                       KernelSpec spec{KernelVariant::Q, s};
                       auto body = integrate_signed_kernel(spec, Real(T), opt.target_radius);
                       auto tail = exact_Q_tail(s, T, opt.target_radius);
                       auto ref = exact_Q_l1_reference(s, opt.target_radius);
                       Cell c = identity_cell(a.all(), body.value + tail.value, ref.value);
                       c.detail = {{"reference", to_string(ref.value.re, 12) +
                                                     (s.is_real() ? "" : " + " + to_string(ref.value.im, 12) + "i")}};
                       return one(c);
                   }});

    out.push_back(
        {{"har", CheckKind::identity,
          "(s-1) int_t^inf (H(u) - log u - gamma) u^-s du = zeta(s) - sum_{n<=t} n^-s - t^{1-s}/(s-1) + (H(t) - log t - gamma) t^{1-s}",
          grid_of({{"s", {"2", "1.5", "0.5+3i", "0.5"}}, {"t", {"10", "1000"}}, {"T", {"auto"}}})},
         [](const Args& a, const RunOptions&) {
             auto s = a.s();
             Real t = a.real("t");
             need_x(t);
             if (!(s.sigma > 0) || s.is_one()) throw DomainError("har needs Re(s) > 0, s != 1");
             Real T = (!a.has("T") || a.str("T") == "auto") ? std::max(Real(10000), Real(100) * t) : a.real("T");
             if (T < t) throw DomainError("T must be >= t");
             if (T > kMaxPiecewiseX) throw CapacityError("har: T beyond 1e7");
             CBall sb = s.ball(), sm1 = sb - CBall(1);
             const Exponent e = -Exponent::from_reals(s.sigma, s.tau);
             ConvolutionIntegral I;
             I.x = T;
             I.A = t;
             I.B = T;
             I.seqs = {SequenceSpec::named("one").fn(floor_u64(T))};
             I.inner = {SumTerm::sum(CBall(1), e, 0, 0, Exponent(1)), SumTerm::plain(CBall(-1), e, 1),
                        SumTerm::plain(-CBall(gamma_ball()), e, 0)};
             auto body = integrate(I);
             // |H(u) - log u - gamma| <= 0.5408/u, so the tail is at most 0.5408 T^-sigma / sigma
             const double sig = down(to_double(s.sigma));
             const double tail = up(0.5408 * up(std::exp(-sig * std::log(to_double(T))) * (1 + 1e-12)) / sig);
             CBall lhs = sm1 * add_error(body.value, tail);
             auto snap = summatory_hp(t);
             CBall xs = pow_pos(t, CBall(1) - sb);
             CBall rhs = zeta_at(s).zeta.value - partial_power_sum(sb, t).value - xs / sm1 +
                         (snap.H.value - CBall(log(Ball(t))) - CBall(gamma_ball())) * xs;
             return one(identity_cell(a.all(), lhs, rhs));
         }});

    out.push_back({{"ent", CheckKind::identity,
                    "s int_t^inf (floor(u) - u + 1/2) u^{-s-1} du = zeta(s) - sum_{n<=t} n^-s - t^{1-s}/(s-1) + "
                    "(floor(t) - t + 1/2)/t^s; the printed -1/2 integrand is reported",
                    grid_of({{"s", {"2", "0.5+3i", "-0.5", "0.5+14.13i"}}, {"t", {"1.5", "10", "1000.25"}}})},
                   [](const Args& a, const RunOptions&) {
                       auto s = a.s();
                       Real t = a.real("t");
                       need_x(t);
                       if (s.is_one()) throw PoleError("ent needs s != 1");
                       CBall sb = s.ball(), sm1 = sb - CBall(1);
                       double target = std::ldexp(1.0, -(working_precision() - 24));
                       CBall J = fractional_tail_integral(sb, t, target);
                       CBall lhs = -(sb * J);
                       CBall ts = pow_pos(t, -sb);
                       Ball frac = Ball(t) - floor_exact(t);
                       CBall rhs = zeta_at(s).zeta.value - partial_power_sum(sb, t).value -
                                   pow_pos(t, CBall(1) - sb) / sm1 + CBall(half() - frac) * ts;
                       Cell c = identity_cell(a.all(), lhs, rhs);
                       // floor(u) - u - 1/2 adds -s int_t^inf u^{-s-1} = -t^-s
                       Cell p = identity_cell(a.all(), lhs - ts, rhs);
                       c.detail = {{"printed -1/2 residual", fmt(p.value, 6) + (p.pass ? " holds" : " fails")}};
                       return one(c);
                   }});
}

} // namespace moebius::detail
