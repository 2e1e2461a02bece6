#include "moebius/piecewise.hpp"

#include "moebius/errors.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace moebius {

Exponent Exponent::from_reals(const Real& r, const Real& i) {
    Exponent e;
    mpfr_get_q(e.re.backend().data(), r.backend().data());
    mpfr_get_q(e.im.backend().data(), i.backend().data());
    return e;
}

namespace {

Ball rational_to_ball(const Rational& q) {
    Real r;
    int inexact = mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return Ball(r, inexact ? up(mag(r) * unit_roundoff()) : 0.0);
}

// sign of a*n - x, computed exactly
int cmp_prod(const Real& a, std::uint64_t n, const Real& x) {
    mpfr_t p;
    mpfr_init2(p, mpfr_get_prec(a.backend().data()) + 64);
    mpfr_mul_ui(p, a.backend().data(), n, MPFR_RNDN);
    int c = mpfr_cmp(p, x.backend().data());
    mpfr_clear(p);
    return c;
}

} // namespace

CBall Exponent::ball() const {
    Ball r = rational_to_ball(re), i = rational_to_ball(im);
    return CBall(r.mid, i.mid, up(r.rad + i.rad));
}

std::string Exponent::str() const {
    std::ostringstream os;
    os << re.convert_to<double>();
    if (im != 0) os << (im > 0 ? "+" : "") << im.convert_to<double>() << "i";
    return os.str();
}

Exponent operator+(const Exponent& a, const Exponent& b) { return Exponent(a.re + b.re, a.im + b.im); }
Exponent operator-(const Exponent& a) { return Exponent(-a.re, -a.im); }
Exponent operator-(const Exponent& a, const Exponent& b) { return Exponent(a.re - b.re, a.im - b.im); }
bool operator==(const Exponent& a, const Exponent& b) { return a.re == b.re && a.im == b.im; }
bool operator<(const Exponent& a, const Exponent& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

FunctionSpec FunctionSpec::constant(const CBall& c) { return FunctionSpec{{PowerLogTerm{c, Exponent(0), 0}}}; }
FunctionSpec FunctionSpec::power(const Exponent& p, const CBall& c) { return FunctionSpec{{PowerLogTerm{c, p, 0}}}; }
FunctionSpec FunctionSpec::power_log(const Exponent& p, int j, const CBall& c) {
    return FunctionSpec{{PowerLogTerm{c, p, j}}};
}

CBall FunctionSpec::operator()(const Ball& t) const {
    CBall sum(0);
    Ball L = log(t);
    for (const auto& term : terms) {
        CBall v = term.c;
        if (!term.p.is_zero()) v = v * pow_pos(t, term.p.ball());
        if (term.j) v = v * CBall(pow_int(L, term.j));
        sum += v;
    }
    return sum;
}

FunctionSpec FunctionSpec::operator*(const FunctionSpec& o) const {
    FunctionSpec r;
    for (const auto& a : terms)
        for (const auto& b : o.terms) r.terms.push_back(PowerLogTerm{a.c * b.c, a.p + b.p, a.j + b.j});
    return r;
}

FunctionSpec FunctionSpec::operator+(const FunctionSpec& o) const {
    FunctionSpec r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

FunctionSpec FunctionSpec::scaled(const CBall& c) const {
    FunctionSpec r = *this;
    for (auto& t : r.terms) t.c = t.c * c;
    return r;
}

std::string FunctionSpec::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (k) os << " + ";
        os << to_double(t.c.re);
        if (t.c.im != 0) os << (t.c.im > 0 ? "+" : "") << to_double(t.c.im) << "i";
        if (!t.p.is_zero()) os << " t^(" << t.p.str() << ")";
        if (t.j) os << " log^" << t.j << " t";
    }
    return os.str();
}

CBall power_log_antiderivative(const Exponent& e, int j, const Ball& t) {
    const Exponent v = e + Exponent(1);
    const Ball L = log(t);
    if (v.is_zero()) return CBall(pow_int(L, j + 1) / Ball(j + 1));
    const CBall vb = v.ball();
    const CBall inv = CBall(1) / vb;
    // t^v sum_i (-1)^i j!/(j-i)! log^{j-i} t / v^{i+1}
    CBall acc(0), ip = inv;
    Ball fall(1);
    for (int i = 0; i <= j; ++i) {
        CBall term = CBall(fall * pow_int(L, j - i)) * ip;
        if (i % 2) acc -= term;
        else acc += term;
        fall = fall * Ball(j - i);
        ip = ip * inv;
    }
    return pow_pos(t, vb) * acc;
}

namespace {

struct Group {
    Exponent v; // exponent of the antiderivative, e + 1
    bool log_case = false;
    CBall vb;
    std::vector<CBall> inv_pow; // v^-(i+1)
    int jmax = 0;
};

struct EndVals {
    Ball t;
    std::vector<Ball> Lpow;    // log^k t, k = 0..jmax+1
    std::vector<CBall> tv;     // t^v per group
};

// Prefix sums sum_{n<=N} a(n) n^-alpha log^r n for one factor.
struct FactorSums {
    const std::vector<SumTerm>* terms;
    const std::vector<SeqFn>* seqs;
    std::vector<Exponent> alphas;
    std::vector<CBall> alpha_balls;
    std::vector<int> alpha_of;
    std::vector<CBall> vals;
    bool any_seq = false;
    int rmax = 0;

    FactorSums(const std::vector<SumTerm>& t, const std::vector<SeqFn>& s) : terms(&t), seqs(&s) {
        vals.assign(t.size(), CBall(0));
        alpha_of.assign(t.size(), -1);
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k].seq < 0) {
                vals[k] = CBall(1);
                continue;
            }
            if (t[k].seq >= static_cast<int>(s.size())) throw DomainError("sum term refers to a missing sequence");
            any_seq = true;
            rmax = std::max(rmax, t[k].r);
            int idx = -1;
            for (std::size_t a = 0; a < alphas.size(); ++a)
                if (alphas[a] == t[k].alpha) idx = static_cast<int>(a);
            if (idx < 0) {
                idx = static_cast<int>(alphas.size());
                alphas.push_back(t[k].alpha);
                alpha_balls.push_back(-t[k].alpha.ball());
            }
            alpha_of[k] = idx;
        }
    }

    // add sign * term(n) to every sequence-backed sum
    void step(std::uint64_t n, int sign) {
        if (!any_seq) return;
        const Real rn(n);
        std::vector<CBall> npow(alphas.size());
        std::vector<bool> have(alphas.size(), false);
        Ball L;
        std::vector<Ball> Lp;
        for (std::size_t k = 0; k < terms->size(); ++k) {
            const SumTerm& t = (*terms)[k];
            if (t.seq < 0) continue;
            Ball a = (*seqs)[t.seq](n);
            if (a.mid == 0 && a.rad == 0) continue;
            int ai = alpha_of[k];
            if (!have[ai]) {
                const Exponent& al = alphas[ai];
                if (al.is_zero()) npow[ai] = CBall(1);
                else if (al.im == 0 && al.re == 1) npow[ai] = CBall(Ball(1) / Ball(rn));
                else if (al.im == 0 && al.re == -1) npow[ai] = CBall(Ball(rn));
                else npow[ai] = pow_pos(rn, alpha_balls[ai]);
                have[ai] = true;
            }
            CBall v = CBall(a) * npow[ai];
            if (t.r) {
                if (Lp.empty()) {
                    L = log(Ball(rn));
                    Lp.assign(rmax + 1, Ball(1));
                    for (int q = 1; q <= rmax; ++q) Lp[q] = Lp[q - 1] * L;
                }
                v = v * CBall(Lp[t.r]);
            }
            if (sign > 0) vals[k] += v;
            else vals[k] -= v;
        }
    }
};

} // namespace

ApproxValue integrate(const ConvolutionIntegral& I, PiecewiseStats* stats) {
    if (!(I.x >= 1)) throw DomainError("integrate: x must be >= 1");
    if (!(I.A >= 1) || !(I.B >= I.A)) throw DomainError("integrate: need 1 <= A <= B");
    if (I.x > kMaxPiecewiseX || I.B > kMaxPiecewiseX)
        throw CapacityError("integrate: x beyond the exact-partition limit of 1e7");
    if (I.A == I.B) return ApproxValue(CBall(0));

    FactorSums outer(I.outer, I.seqs), inner(I.inner, I.seqs);

    // Group (outer, inner) pairs by the exponent of their product.
    std::vector<Group> groups;
    std::map<Exponent, int> gidx;
    struct Pair {
        int o, i, g, j;
    };
    std::vector<Pair> pairs;
    int jmax_all = 0;
    for (std::size_t o = 0; o < I.outer.size(); ++o) {
        for (std::size_t i = 0; i < I.inner.size(); ++i) {
            Exponent e = I.outer[o].e + I.inner[i].e;
            auto it = gidx.find(e);
            int g;
            if (it == gidx.end()) {
                g = static_cast<int>(groups.size());
                gidx.emplace(e, g);
                Group G;
                G.v = e + Exponent(1);
                G.log_case = G.v.is_zero();
                if (!G.log_case) G.vb = G.v.ball();
                groups.push_back(G);
            } else {
                g = it->second;
            }
            int j = I.outer[o].j + I.inner[i].j;
            groups[g].jmax = std::max(groups[g].jmax, j);
            jmax_all = std::max(jmax_all, j);
            pairs.push_back(Pair{static_cast<int>(o), static_cast<int>(i), g, j});
        }
    }
    for (auto& G : groups) {
        if (G.log_case) continue;
        CBall inv = CBall(1) / G.vb, p = inv;
        for (int i = 0; i <= G.jmax; ++i) G.inv_pow.push_back(p), p = p * inv;
    }

    auto endpoint = [&](const Ball& t) {
        EndVals ev;
        ev.t = t;
        Ball L = log(t);
        ev.Lpow.assign(jmax_all + 2, Ball(1));
        for (int k = 1; k <= jmax_all + 1; ++k) ev.Lpow[k] = ev.Lpow[k - 1] * L;
        ev.tv.resize(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (!groups[g].log_case) ev.tv[g] = pow_pos(t, groups[g].vb);
        return ev;
    };
    // antiderivative of t^e log^j t for group g
    auto anti = [&](const EndVals& ev, int g, int j) {
        const Group& G = groups[g];
        if (G.log_case) return CBall(ev.Lpow[j + 1] / Ball(j + 1));
        CBall acc(0);
        Ball fall(1);
        for (int i = 0; i <= j; ++i) {
            CBall term = CBall(fall * ev.Lpow[j - i]) * G.inv_pow[i];
            if (i % 2) acc -= term;
            else acc += term;
            fall = fall * Ball(j - i);
        }
        return ev.tv[g] * acc;
    };

    // Starting state at t = A.
    std::uint64_t K = boost::multiprecision::floor(I.A).convert_to<std::uint64_t>();
    std::uint64_t N = 0;
    if (outer.any_seq) {
        Real q = boost::multiprecision::floor(I.x / I.A);
        N = q.convert_to<std::uint64_t>();
        while (cmp_prod(I.A, N + 1, I.x) <= 0) ++N;
        while (N > 0 && cmp_prod(I.A, N, I.x) > 0) --N;
        for (std::uint64_t n = 1; n <= N; ++n) outer.step(n, +1);
        // at t = x/N exactly, floor(x/t) drops just to the right
        if (N > 0 && cmp_prod(I.A, N, I.x) == 0) outer.step(N, -1), --N;
    }
    if (inner.any_seq)
        for (std::uint64_t k = 1; k <= K; ++k) inner.step(k, +1);

    std::vector<std::vector<CBall>> coef(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) coef[g].assign(groups[g].jmax + 1, CBall(0));

    CBall total(0);
    EndVals left = endpoint(Ball(I.A));
    std::uint64_t pieces = 0;
    for (;;) {
        // next breakpoint: min of B, K+1 (inner sums), x/N (outer sums)
        bool hitB = true, hitK = false, hitN = false;
        Ball right(I.B);
        if (inner.any_seq) {
            Real k1(K + 1);
            if (k1 < I.B) hitB = false, hitK = true, right = Ball(k1);
            else if (k1 == I.B) hitK = true;
        }
        if (outer.any_seq && N > 0) {
            // compare x/N with the current candidate
            int c;
            if (hitK) c = cmp_prod(Real(K + 1), N, I.x); // (K+1) N - x
            else c = cmp_prod(I.B, N, I.x);
            if (c > 0) {
                hitB = false, hitK = false, hitN = true;
                Real q = I.x / Real(N);
                right = Ball(q, up(mag(q) * unit_roundoff()));
            } else if (c == 0) {
                hitN = true;
            }
        }

        EndVals rv = endpoint(right);
        for (auto& row : coef)
            for (auto& c : row) c = CBall(0);
        for (const auto& p : pairs)
            coef[p.g][p.j] += I.outer[p.o].c * I.inner[p.i].c * outer.vals[p.o] * inner.vals[p.i];
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int j = 0; j <= groups[g].jmax; ++j) {
                const CBall& c = coef[g][j];
                if (c.re == 0 && c.im == 0 && c.rad == 0) continue;
                total += c * (anti(rv, g, j) - anti(left, g, j));
            }
        ++pieces;
        if (hitB) break;
        if (hitK) ++K, inner.step(K, +1);
        if (hitN) outer.step(N, -1), --N;
        left = std::move(rv);
    }
    if (stats) {
        stats->pieces = pieces;
        stats->groups = groups.size();
    }
    return ApproxValue(total);
}

} // namespace moebius
