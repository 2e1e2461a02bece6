#include "moebius/convolution.hpp"

#include "moebius/errors.hpp"
#include "moebius/sieve.hpp"

#include <cmath>

namespace moebius {

namespace {

std::uint64_t floor_u64(const Real& x) {
    if (x < 1) return 0;
    return boost::multiprecision::floor(x).convert_to<std::uint64_t>();
}

Ball binomial(int n, int k) {
    Ball b(1);
    for (int i = 1; i <= k; ++i) b = b * Ball(n - k + i) / Ball(i);
    return b;
}

// Radius target for zeta(s) well under the working precision's rounding.
double zeta_target() { return std::ldexp(1.0, -(working_precision() - 24)); }

// omega(x/(t n)) summed over n <= x/t against a(n): for c u^p log^j u,
//   c x^p t^-p n^-p (log x - log t - log n)^j, expanded.
void push_outer(std::vector<SumTerm>& out, const FunctionSpec& omega, int seq, const Real& x) {
    const Ball L = log(Ball(x));
    for (const auto& term : omega.terms) {
        CBall xp = pow_pos(x, term.p.ball());
        for (int i1 = 0; i1 <= term.j; ++i1)
            for (int i2 = 0; i1 + i2 <= term.j; ++i2) {
                int i3 = term.j - i1 - i2;
                Ball coef = binomial(term.j, i1) * binomial(term.j - i1, i2) * pow_int(L, i1);
                if ((i2 + i3) % 2) coef = -coef;
                out.push_back(SumTerm::sum(term.c * xp * CBall(coef), -term.p, i2, seq, term.p, i3));
            }
    }
}

// phi(t/k) summed over k <= t against b(k), times t^shift:
//   c t^p k^-p (log t - log k)^j, expanded.
void push_inner(std::vector<SumTerm>& out, const FunctionSpec& phi, int seq, int shift) {
    for (const auto& term : phi.terms)
        for (int i1 = 0; i1 <= term.j; ++i1) {
            int i2 = term.j - i1;
            Ball coef = binomial(term.j, i1);
            if (i2 % 2) coef = -coef;
            out.push_back(SumTerm::sum(term.c * CBall(coef), term.p + Exponent(shift), i1, seq, term.p, i2));
        }
}

void push_plain(std::vector<SumTerm>& out, const FunctionSpec& f, int shift) {
    for (const auto& term : f.terms) out.push_back(SumTerm::plain(term.c, term.p + Exponent(shift), term.j));
}

} // namespace

SequenceSpec SequenceSpec::named(const std::string& name) {
    SequenceSpec s;
    s.label = name;
    if (name == "mobius" || name == "mu") s.kind = Kind::mobius;
    else if (name == "one" || name == "1") s.kind = Kind::one;
    else if (name == "alternating") s.kind = Kind::alternating;
    else if (name == "harmonic") s.kind = Kind::harmonic;
    else if (name == "delta") s.kind = Kind::delta;
    else throw DomainError("unknown sequence '" + name + "'");
    return s;
}

SequenceSpec SequenceSpec::delta() { return named("delta"); }

SequenceSpec SequenceSpec::table(std::vector<Ball> values, std::string label) {
    SequenceSpec s;
    s.kind = Kind::table;
    s.values = std::move(values);
    s.label = std::move(label);
    return s;
}

std::string SequenceSpec::name() const {
    switch (kind) {
    case Kind::mobius: return "mobius";
    case Kind::one: return "one";
    case Kind::alternating: return "alternating";
    case Kind::harmonic: return "harmonic";
    case Kind::delta: return "delta";
    case Kind::table: return label;
    }
    return label;
}

Ball SequenceSpec::at(std::uint64_t n) const {
    if (n == 0) throw DomainError("sequences start at n = 1");
    switch (kind) {
    case Kind::mobius: return Ball(mobius_upto(n)->operator()(n));
    case Kind::one: return Ball(1);
    case Kind::alternating: return Ball(n % 2 ? 1 : -1);
    case Kind::harmonic: return Ball(1) / Ball(static_cast<long long>(n));
    case Kind::delta: return Ball(n == 1 ? 1 : 0);
    case Kind::table:
        if (n > values.size()) throw CoverageError("sequence table '" + label + "' too short");
        return values[n - 1];
    }
    return Ball(0);
}

SeqFn SequenceSpec::fn(std::uint64_t upto) const {
    switch (kind) {
    case Kind::mobius: {
        auto tab = mobius_upto(std::max<std::uint64_t>(upto, 1));
        return [tab](std::uint64_t n) { return Ball((*tab)(n)); };
    }
    case Kind::one: return [](std::uint64_t) { return Ball(1); };
    case Kind::alternating: return [](std::uint64_t n) { return Ball(n % 2 ? 1 : -1); };
    case Kind::harmonic: return [](std::uint64_t n) { return Ball(1) / Ball(static_cast<long long>(n)); };
    case Kind::delta: return [](std::uint64_t n) { return Ball(n == 1 ? 1 : 0); };
    case Kind::table:
        if (upto > values.size()) throw CoverageError("sequence table '" + label + "' too short");
        return [v = values](std::uint64_t n) { return v[n - 1]; };
    }
    return {};
}

ApproxValue S_op(const SequenceSpec& a, const FunctionSpec& phi, const Real& x) {
    if (!(x >= 1)) throw DomainError("S_a phi needs x >= 1");
    const std::uint64_t N = floor_u64(x);
    if (N > static_cast<std::uint64_t>(kMaxPiecewiseX)) throw CapacityError("S_a phi: x beyond 1e7");
    SeqFn f = a.fn(N);
    CBall acc(0);
    const Ball bx(x);
    for (std::uint64_t n = 1; n <= N; ++n) {
        Ball an = f(n);
        if (an.mid == 0 && an.rad == 0) continue;
        acc += CBall(an) * phi(bx / Ball(static_cast<long long>(n)));
    }
    return ApproxValue(acc);
}

SequenceSpec dirichlet_convolve(const SequenceSpec& a, const SequenceSpec& b, std::uint64_t N) {
    SeqFn fa = a.fn(N), fb = b.fn(N);
    std::vector<Ball> A(N), B(N), C(N, Ball(0));
    for (std::uint64_t n = 1; n <= N; ++n) A[n - 1] = fa(n), B[n - 1] = fb(n);
    for (std::uint64_t d = 1; d <= N; ++d) {
        if (A[d - 1].mid == 0 && A[d - 1].rad == 0) continue;
        for (std::uint64_t k = 1; d * k <= N; ++k) C[d * k - 1] += A[d - 1] * B[k - 1];
    }
    return SequenceSpec::table(std::move(C), a.name() + "*" + b.name());
}

double Sides::residual() const {
    CBall d = lhs.value - rhs.value;
    return mid_abs_upper(d);
}

double Sides::radii() const { return up(lhs.radius() + rhs.radius()); }

ApproxValue convolution_lhs(const SequenceSpec& a, const FunctionSpec& omega, const SequenceSpec& b,
                            const FunctionSpec& phi, const Real& x) {
    if (!(x >= 1)) throw DomainError("convolution integrals need x >= 1");
    if (x > kMaxPiecewiseX) throw CapacityError("convolution integral: x beyond 1e7");
    const std::uint64_t N = floor_u64(x);
    ConvolutionIntegral I;
    I.x = x;
    I.A = Real(1);
    I.B = x;
    I.seqs = {a.fn(N), b.fn(N)};
    I.outer.clear();
    I.inner.clear();
    push_outer(I.outer, omega, 0, x);
    push_inner(I.inner, phi, 1, -1);
    return integrate(I);
}

Sides terre_sides(const SequenceSpec& a, const SequenceSpec& b, const FunctionSpec& omega, const FunctionSpec& phi,
                  const Real& x) {
    Sides r;
    r.lhs = convolution_lhs(a, omega, b, phi, x);
    const std::uint64_t N = std::max<std::uint64_t>(floor_u64(x), 1);
    SequenceSpec ab = dirichlet_convolve(a, b, N);
    ConvolutionIntegral I;
    I.x = x;
    I.A = Real(1);
    I.B = x;
    I.seqs = {ab.fn(N)};
    I.outer.clear();
    I.inner.clear();
    push_outer(I.outer, omega, 0, x);
    push_plain(I.inner, phi, -1);
    r.rhs = integrate(I);
    return r;
}

Sides voyage_sides(const FunctionSpec& omega, const FunctionSpec& phi, const Real& x) {
    const SequenceSpec delta = SequenceSpec::delta(), one = SequenceSpec::named("one");
    return Sides{convolution_lhs(delta, omega, one, phi, x), convolution_lhs(delta, phi, one, omega, x)};
}

namespace {

void push_weight(std::vector<SumTerm>& out, MWeight w, const Real& x) {
    // m(x/t) = sum_{n <= x/t} mu(n)/n
    if (w == MWeight::m) {
        out.push_back(SumTerm::sum(CBall(1), Exponent(0), 0, 0, Exponent(1)));
        return;
    }
    // mcheck(x/t) - 1 = sum mu(n)/n (log x - log t - log n) - 1
    const Ball L = log(Ball(x));
    out.push_back(SumTerm::sum(CBall(L), Exponent(0), 0, 0, Exponent(1)));
    out.push_back(SumTerm::sum(CBall(-1), Exponent(0), 1, 0, Exponent(1)));
    out.push_back(SumTerm::sum(CBall(-1), Exponent(0), 0, 0, Exponent(1), 1));
    out.push_back(SumTerm::plain(CBall(-1), Exponent(0)));
}

Exponent exponent_of(const ComplexParam& s) { return Exponent::from_reals(s.sigma, s.tau); }

} // namespace

Sides kgen1_sides(const ComplexParam& s, const Real& x) {
    if (!(x >= 1)) throw DomainError("kgen1 needs x >= 1");
    if (x > kMaxPiecewiseX) throw CapacityError("kgen1: x beyond 1e7");
    const std::uint64_t N = std::max<std::uint64_t>(floor_u64(x), 1);
    const Exponent es = exponent_of(s);
    const CBall sb = s.ball();

    ConvolutionIntegral I;
    I.x = x;
    I.A = Real(1);
    I.B = x;
    I.seqs = {SequenceSpec::named("mobius").fn(N), SequenceSpec::named("one").fn(N)};
    I.outer.clear();
    push_weight(I.outer, MWeight::mcheck_minus_one, x);
    I.inner = {SumTerm::sum(CBall(1), es - Exponent(2), 0, 1, es)};
    ApproxValue lhs = integrate(I);
    lhs.value = lhs.value * pow_pos(x, CBall(1) - sb);

    ConvolutionIntegral J;
    J.x = x;
    J.A = Real(1);
    J.B = x;
    J.seqs = {SequenceSpec::named("one").fn(N)};
    J.inner = {SumTerm::plain(CBall(1), -es, 1), SumTerm::sum(CBall(-1), -es, 0, 0, Exponent(1))};
    return Sides{lhs, integrate(J)};
}

MKernel MKernel::parse(const std::string& name, const ComplexParam& s) {
    MKernel k;
    k.s = s;
    if (name == "Q") k.kind = Kind::Q;
    else if (name == "R") k.kind = Kind::R;
    else if (name == "q") k.kind = Kind::q;
    else if (name == "t") k.kind = Kind::t;
    else if (name == "harmonic") k.kind = Kind::harmonic;
    else if (name == "power_sum") k.kind = Kind::power_sum;
    else if (name == "half_minus_frac") k.kind = Kind::half_minus_frac;
    else throw UnsupportedKernelError("kernel '" + name + "' is outside the closed-form family");
    return k;
}

MKernel MKernel::function(const FunctionSpec& f) {
    MKernel k;
    k.kind = Kind::function;
    k.f = f;
    return k;
}

std::string MKernel::name() const {
    switch (kind) {
    case Kind::Q: return "Q";
    case Kind::R: return "R";
    case Kind::q: return "q";
    case Kind::t: return "t";
    case Kind::harmonic: return "harmonic";
    case Kind::power_sum: return "power_sum";
    case Kind::half_minus_frac: return "half_minus_frac";
    case Kind::function: return f.str();
    }
    return "?";
}

ApproxValue integrate_m_kernel(const Real& x, const MKernel& g, MWeight w, PiecewiseStats* stats) {
    if (!(x >= 1)) throw DomainError("integrate_m_kernel needs x >= 1");
    if (x > kMaxPiecewiseX) throw CapacityError("integrate_m_kernel: x beyond 1e7");
    const std::uint64_t N = std::max<std::uint64_t>(floor_u64(x), 1);
    ConvolutionIntegral I;
    I.x = x;
    I.A = Real(1);
    I.B = x;
    I.seqs = {SequenceSpec::named("mobius").fn(N), SequenceSpec::named("one").fn(N)};
    I.outer.clear();
    push_weight(I.outer, w, x);

    const Exponent es = exponent_of(g.s);
    const CBall sb = g.s.ball();
    const CBall sm1 = sb - CBall(1);
    const Exponent m2(-2), m1(-1), zero(0);
    auto& in = I.inner;
    in.clear();
    // everything below is g(t) / t^2
    auto push_Q = [&](const CBall& scale) {
        CBall z = zeta_cached(g.s, zeta_target()).zeta.value;
        in.push_back(SumTerm::plain(scale * sm1 * z, es + m2));
        in.push_back(SumTerm::sum(-(scale * sm1), es + m2, 0, 1, es));
        in.push_back(SumTerm::plain(-scale, m1));
    };
    switch (g.kind) {
    case MKernel::Kind::Q: push_Q(CBall(1)); break;
    case MKernel::Kind::q: push_Q(sm1); break;
    case MKernel::Kind::R:
        // Q - (s-1)({t} - 1/2) with {t} = t - sum_{k<=t} 1
        push_Q(CBall(1));
        in.push_back(SumTerm::plain(-sm1, m1));
        in.push_back(SumTerm::sum(sm1, m2, 0, 1, zero));
        in.push_back(SumTerm::plain(sm1 * CBall(Ball(Real("0.5"))), m2));
        break;
    case MKernel::Kind::t: in.push_back(SumTerm::plain(CBall(1), m1)); break;
    case MKernel::Kind::harmonic:
        in.push_back(SumTerm::sum(CBall(1), m1, 0, 1, Exponent(1)));
        in.push_back(SumTerm::plain(CBall(-1), m1, 1));
        in.push_back(SumTerm::plain(CBall(-Ball(euler_gamma(), up(unit_roundoff()))), m1));
        break;
    case MKernel::Kind::power_sum: in.push_back(SumTerm::sum(CBall(1), es + m2, 0, 1, es)); break;
    case MKernel::Kind::half_minus_frac:
        in.push_back(SumTerm::plain(CBall(Ball(Real("0.5"))), m2));
        in.push_back(SumTerm::plain(CBall(-1), m1));
        in.push_back(SumTerm::sum(CBall(1), m2, 0, 1, zero));
        break;
    case MKernel::Kind::function: push_plain(in, g.f, -2); break;
    }
    return integrate(I, stats);
}

} // namespace moebius
