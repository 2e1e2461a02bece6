#include "moebius/quad.hpp"

#include "moebius/compensated.hpp"
#include "moebius/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace moebius {

namespace {

// On [n, n+1] the kernel is C1 t^s + C2 t + C3.
struct PieceCoef {
    long long n;
    CBall C1, C2, C3;
};

PieceCoef piece_coef(KernelEvaluator& ev, long long n) {
    const CBall& s = ev.s();
    const CBall sm1 = s - CBall(1);
    PieceCoef p{n, ev.A(n), CBall(-1), CBall(0)};
    switch (ev.spec().variant) {
    case KernelVariant::Q: break;
    case KernelVariant::R:
        p.C2 = -s;
        p.C3 = sm1 * CBall(Ball(n) + Ball(Real("0.5")));
        break;
    case KernelVariant::q:
        p.C1 = sm1 * p.C1;
        p.C2 = -sm1;
        break;
    }
    return p;
}

// sup over [a, b] of |d^k/dt^k (kernel(t) t^-shift)|, as a double upper bound
double deriv_bound(const PieceCoef& p, const CBall& s, int shift, int k, double a, double b) {
    struct T {
        double C, pr, pi;
    };
    double sr = to_double(s.re), si = to_double(s.im);
    T terms[3] = {{upper_abs(p.C1), sr - shift, si}, {upper_abs(p.C2), 1.0 - shift, 0}, {upper_abs(p.C3), -1.0 * shift, 0}};
    double total = 0;
    for (const auto& t : terms) {
        if (t.C == 0) continue;
        double f = t.C;
        for (int i = 0; i < k; ++i) f = up(f * std::hypot(t.pr - i, t.pi));
        if (f == 0) continue;
        double e = t.pr - k;
        f = up(f * std::max(std::pow(a, e), std::pow(b, e)) * (1 + 1e-12));
        total = up(total + f);
    }
    return total;
}

struct ValDeriv {
    CBall v, d;
};

// kernel(t) t^-shift and its derivative at a ball t, shift in {0, 2}
ValDeriv eval_piece(const PieceCoef& p, const CBall& s, int shift, const Ball& t) {
    CBall ts = pow_pos(t, s);
    CBall ct(t);
    if (shift == 0) return {p.C1 * ts + p.C2 * ct + p.C3, p.C1 * s * ts / ct + p.C2};
    CBall t2 = ct * ct, t3 = t2 * ct;
    CBall v = p.C1 * ts / t2 + p.C2 / ct + p.C3 / t2;
    CBall d = p.C1 * (s - CBall(2)) * ts / t3 - p.C2 / t2 - CBall(2) * p.C3 / t3;
    return {v, d};
}

double zeta_radius_for(const KernelSpec& spec, double T, double target) {
    double sig = to_double(spec.s.sigma), tau = to_double(spec.s.tau);
    double sm1 = std::hypot(sig - 1, tau);
    double scale = sm1 * std::max(1.0, std::pow(T, sig)) * (spec.variant == KernelVariant::q ? sm1 : 1.0);
    return std::max(target, 1e-300) / (64 * std::max(scale, 1e-300) * std::max(1.0, T));
}

void check_range(const KernelSpec& spec, const Real& T) {
    if (!(T >= 1)) throw DomainError("integration needs T >= 1");
    if (T > 1e7) throw CapacityError("integration range beyond 1e7");
    if (!(spec.s.sigma > -1)) throw DomainError("kernel integration needs Re(s) > -1");
}

struct Sub {
    Real a, b;
    int depth;
};

} // namespace

ApproxValue integrate_abs_kernel(const KernelSpec& spec, const Real& T, double target, QuadStats* stats) {
    check_range(spec, T);
    if (!(target > 0)) throw DomainError("target radius must be positive");
    if (T == 1) return ApproxValue(CBall(0));
    KernelEvaluator ev(spec, zeta_radius_for(spec, to_double(T), target));
    const CBall s = ev.s();
    const double len = to_double(T) - 1;
    const double density = target / len; // allowed width per unit length
    const long long last = boost::multiprecision::ceil(T).convert_to<long long>() - 1;

    CompensatedSum lo, hi;
    std::uint64_t nint = 0, nev = 0;
    for (long long n = 1; n <= last; ++n) {
        PieceCoef pc = piece_coef(ev, n);
        Real b = std::min(Real(n + 1), T);
        std::vector<Sub> stack{{Real(n), b, 0}};
        while (!stack.empty()) {
            Sub sb = stack.back();
            stack.pop_back();
            Real wr = sb.b - sb.a;
            Real c = (sb.a + sb.b) / 2;
            double h_up = up(mag(wr)), h_dn = down(mag_lower(wr));
            double ad = to_double(sb.a), bd = to_double(sb.b);
            ValDeriv vd = eval_piece(pc, s, 2, Ball(c));
            ++nev;
            CBall half_step = vd.d * CBall(Ball(wr / 2, up(mag(wr) * unit_roundoff())));
            double E = up(deriv_bound(pc, s, 2, 2, down(ad), up(bd)) * h_up * h_up * h_up / 24);
            double low = std::max(0.0, down(h_dn * lower_abs(vd.v)) - E);
            double high = up(up(h_up * up(upper_abs(vd.v - half_step) + upper_abs(vd.v + half_step))) / 2) + E;
            if (high - low <= density * h_dn || sb.depth >= 60) {
                lo.add(low);
                hi.add(high);
                ++nint;
            } else {
                stack.push_back({c, sb.b, sb.depth + 1});
                stack.push_back({sb.a, c, sb.depth + 1});
            }
        }
    }
    double L = lo.value() - lo.error_bound(), H = hi.value() + hi.error_bound();
    double mid = (L + H) / 2;
    double rad = up(std::max(H - mid, mid - L) * (1 + 1e-15) + 1e-300);
    if (stats) stats->intervals = nint, stats->evaluations = nev;
    ApproxValue r(CBall(Real(mid), Real(0), rad));
    if (rad > target) throw PrecisionError("integrate_abs_kernel: target radius not reached");
    return r;
}

namespace {

struct GLRule {
    std::vector<Ball> x, w;
};

Ball legendre_value(int m, const Ball& x, Ball* prev) {
    Ball p0(1), p1 = x;
    for (int k = 1; k < m; ++k) {
        Ball p2 = (Ball(2 * k + 1) * x * p1 - Ball(k) * p0) / Ball(k + 1);
        p0 = p1;
        p1 = p2;
    }
    if (prev) *prev = p0;
    return p1;
}

const GLRule& gl_rule(int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, GLRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, working_precision());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    GLRule rule;
    for (int i = 1; i <= m; ++i) {
        Real x = std::cos(M_PI * (i - 0.25) / (m + 0.5));
        for (int it2 = 0; it2 < 200; ++it2) {
            Ball prev;
            Ball p = legendre_value(m, Ball(x), &prev);
            Ball d = Ball(m) * (Ball(x) * p - prev) / (Ball(x) * Ball(x) - Ball(1));
            Real dx = p.mid / d.mid;
            x -= dx;
            if (mag(dx) <= mag(x) * unit_roundoff() * 4) break;
        }
        // a root lies within m |P/P'| of x
        Ball prev;
        Ball p = legendre_value(m, Ball(x), &prev);
        Ball d = Ball(m) * (Ball(x) * p - prev) / (Ball(x) * Ball(x) - Ball(1));
        double delta = up(up(m * upper_abs(p)) / lower_abs(d)) + mag(x) * unit_roundoff();
        Ball xb(x, delta);
        Ball pv;
        Ball pb = legendre_value(m, xb, &pv);
        Ball db = Ball(m) * (xb * pb - pv) / (xb * xb - Ball(1));
        Ball w = Ball(2) / ((Ball(1) - xb * xb) * db * db);
        rule.x.push_back(xb);
        rule.w.push_back(w);
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

} // namespace

ApproxValue integrate_signed_kernel(const KernelSpec& spec, const Real& T, double target, QuadStats* stats) {
    check_range(spec, T);
    if (!(target > 0)) throw DomainError("target radius must be positive");
    if (T == 1) return ApproxValue(CBall(0));
    constexpr int m = 10;
    const GLRule& rule = gl_rule(m);
    // (m!)^4 / ((2m+1) ((2m)!)^3), times sqrt 2 for complex integrands
    const double cm = std::exp(4 * std::lgamma(m + 1.0) - std::log(2.0 * m + 1) - 3 * std::lgamma(2.0 * m + 1)) * 1.5;
    KernelEvaluator ev(spec, zeta_radius_for(spec, to_double(T), target));
    const CBall s = ev.s();
    const double density = target / (2 * (to_double(T) - 1));
    const long long last = boost::multiprecision::ceil(T).convert_to<long long>() - 1;

    CBall total(0);
    std::uint64_t nint = 0, nev = 0;
    for (long long n = 1; n <= last; ++n) {
        PieceCoef pc = piece_coef(ev, n);
        Real b = std::min(Real(n + 1), T);
        std::vector<Sub> stack{{Real(n), b, 0}};
        while (!stack.empty()) {
            Sub sb = stack.back();
            stack.pop_back();
            Real wr = sb.b - sb.a;
            double h_up = up(mag(wr));
            double E = up(cm * std::pow(h_up, 2 * m + 1) * 1.0000001 *
                          deriv_bound(pc, s, 2, 2 * m, down(to_double(sb.a)), up(to_double(sb.b))));
            if (E > density * down(mag_lower(wr)) && sb.depth < 40) {
                Real c = (sb.a + sb.b) / 2;
                stack.push_back({c, sb.b, sb.depth + 1});
                stack.push_back({sb.a, c, sb.depth + 1});
                continue;
            }
            Ball half(wr / 2, up(mag(wr) * unit_roundoff()));
            Ball mid((sb.a + sb.b) / 2, up(mag(sb.a + sb.b) * unit_roundoff()));
            CBall acc(0);
            for (int i = 0; i < m; ++i) {
                Ball t = mid + half * rule.x[i];
                acc += CBall(rule.w[i]) * eval_piece(pc, s, 2, t).v;
                ++nev;
            }
            total += add_error(CBall(half) * acc, E);
            ++nint;
        }
    }
    if (stats) stats->intervals = nint, stats->evaluations = nev;
    if (total.rad > target) throw PrecisionError("integrate_signed_kernel: target radius not reached");
    return ApproxValue(total);
}

SupResult sup_abs_kernel(const KernelSpec& spec, const Real& a, const Real& b, double target) {
    if (!(a >= 1) || !(b > a)) throw DomainError("sup_abs_kernel needs 1 <= a < b");
    if (b > 1e6) throw CapacityError("sup_abs_kernel range too long");
    if (!(spec.s.sigma > -1)) throw DomainError("sup_abs_kernel needs Re(s) > -1");
    KernelEvaluator ev(spec, zeta_radius_for(spec, to_double(b), target) / 16);
    const CBall s = ev.s();

    struct Node {
        double upper;
        Real a, b;
        long long n;
        bool operator<(const Node& o) const { return upper < o.upper; }
    };
    std::priority_queue<Node> pq;
    std::map<long long, PieceCoef> coefs;
    SupResult res;
    auto consider = [&](double v, const Real& where, bool left) {
        if (v > res.lower) {
            res.lower = v;
            res.argmax = to_double(where);
            res.left_limit = left;
        }
    };
    auto push = [&](const PieceCoef& pc, const Real& l, const Real& r) {
        Real wr = r - l;
        Real c = (l + r) / 2;
        ValDeriv vd = eval_piece(pc, s, 0, Ball(c));
        consider(lower_abs(vd.v), c, false);
        CBall half_step = vd.d * CBall(Ball(wr / 2, up(mag(wr) * unit_roundoff())));
        double h_up = up(mag(wr));
        double E = up(deriv_bound(pc, s, 0, 2, down(to_double(l)), up(to_double(r))) * h_up * h_up / 8);
        double u = up(std::max(upper_abs(vd.v - half_step), upper_abs(vd.v + half_step)) + E);
        pq.push(Node{u, l, r, pc.n});
        ++res.intervals;
    };

    const long long n0 = boost::multiprecision::floor(a).convert_to<long long>();
    const long long n1 = boost::multiprecision::ceil(b).convert_to<long long>() - 1;
    for (long long n = n0; n <= n1; ++n) {
        PieceCoef pc = piece_coef(ev, n);
        coefs.emplace(n, pc);
        Real l = std::max(Real(n), a), r = std::min(Real(n + 1), b);
        consider(lower_abs(eval_piece(pc, s, 0, Ball(l)).v), l, false);
        bool at_int = (r == Real(n + 1));
        consider(lower_abs(eval_piece(pc, s, 0, Ball(r)).v), r, at_int);
        push(pc, l, r);
    }
    for (;;) {
        Node top = pq.top();
        res.upper = top.upper;
        if (top.upper - res.lower <= 2 * target) break;
        if (res.intervals > 20000000) throw PrecisionError("sup_abs_kernel: no convergence");
        pq.pop();
        Real c = (top.a + top.b) / 2;
        const PieceCoef& pc = coefs.at(top.n);
        push(pc, top.a, c);
        push(pc, c, top.b);
    }
    return res;
}

namespace {

// zeta near its pole carries about |s-1|^-1 times the working rounding.
double zeta_target_near_pole(const ComplexParam& s, double target) {
    double d = std::hypot(to_double(s.sigma) - 1, to_double(s.tau));
    return std::max(target, std::ldexp(1.0, -(working_precision() - 30)) / std::min(1.0, d));
}

} // namespace

ApproxValue exact_Q_l1_reference(const ComplexParam& s, double target) {
    if (!(s.sigma > 0)) throw DomainError("exact_Q_l1_reference needs Re(s) > 0");
    if (s.is_one()) throw PoleError("exact_Q_l1_reference: s = 1");
    ApproxValue z = zeta_cached(s, zeta_target_near_pole(s, target / 4)).zeta;
    CBall sb = s.ball();
    CBall v = CBall(1) / (sb - CBall(1)) - z.value + CBall(Ball(euler_gamma(), up(unit_roundoff() * 0.6)));
    return ApproxValue(v);
}

ApproxValue exact_Q_tail(const ComplexParam& s, long long T, double target) {
    if (T < 1) throw DomainError("exact_Q_tail needs T >= 1");
    if (!(s.sigma > -1)) throw DomainError("exact_Q_tail needs Re(s) > -1");
    if (s.is_one()) throw PoleError("exact_Q_tail: s = 1");
    CBall sb = s.ball();
    double scale = std::max(1.0, std::pow((double)T, to_double(s.sigma) - 1));
    CBall z = zeta_cached(s, zeta_target_near_pole(s, target / (4 * scale))).zeta.value;
    Ball H(0);
    CBall P(0);
    for (long long k = 1; k <= T; ++k) {
        H += Ball(1) / Ball(k);
        P += pow_pos(Real(k), -sb);
    }
    CBall v = CBall(1) / (sb - CBall(1)) + CBall(Ball(euler_gamma(), up(unit_roundoff() * 0.6))) +
              CBall(log(Ball(T)) - H) - pow_pos(Real(T), sb - CBall(1)) * (z - P);
    return ApproxValue(v);
}

double tail_bound_abs_Q(double T, double sup) {
    if (!(T >= 1)) throw DomainError("tail bound needs T >= 1");
    return up(sup / down(T));
}

double hel_sup_Q(const ComplexParam& s, double T) {
    double sig = to_double(s.sigma), tau = to_double(s.tau);
    if (!(sig > 0 && sig <= 1) || s.is_one())
        throw InapplicableError("truncated-zeta bound needs 0 < Re(s) <= 1, s != 1");
    if (T < std::fabs(tau)) throw InapplicableError("truncated-zeta bound needs T >= |Im(s)|");
    return up(5.0 / 6.0 * up(std::hypot(sig - 1, tau)));
}

double best_sup_Q(const ComplexParam& s, double T) {
    double b = kernel_bound(KernelSpec{KernelVariant::Q, s}, T, BoundForm::sup_Q);
    try {
        b = std::min(b, hel_sup_Q(s, T));
    } catch (const InapplicableError&) {
    }
    return b;
}

double tail_bound_abs_Q(const KernelSpec& spec, double T) {
    if (spec.variant != KernelVariant::Q) throw DomainError("tail_bound_abs_Q is for the Q kernel");
    return tail_bound_abs_Q(T, best_sup_Q(spec.s, T));
}

Interval tail_enclosure_abs_Q(const ComplexParam& s, long long T) {
    if (T < 2) throw DomainError("tail enclosure needs an integer T >= 2");
    double sig = to_double(s.sigma), tau = to_double(s.tau);
    if (!(sig > -1)) throw DomainError("tail enclosure needs Re(s) > -1");
    double sm1_hi = up(std::hypot(sig - 1, tau)), sm1_lo = down(std::hypot(sig - 1, tau));
    // int_T^inf C/t^3 dt with |R_s(t)| <= C/t
    double C = kernel_bound(KernelSpec{KernelVariant::R, s}, 1.0, BoundForm::ibp_R);
    double Rb = up(C / down(2.0 * T * T));
    Interval r;
    r.lo = std::max(0.0, down(sm1_lo / up(4.0 * (T + 1))) - Rb);
    r.hi = up(up(sm1_hi / down(4.0 * (T - 1))) + Rb);
    return r;
}

} // namespace moebius
