#include "moebius/mellin.hpp"

#include "moebius/errors.hpp"
#include "moebius/piecewise.hpp"
#include "moebius/sieve.hpp"
#include "moebius/summatory.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace moebius {

const char* to_string(MellinKernel k) {
    switch (k) {
    case MellinKernel::m: return "m";
    case MellinKernel::mcheck: return "mcheck-1";
    case MellinKernel::mdcheck: return "mdcheck-2log+2gamma";
    }
    return "?";
}

namespace {

// k(t) t^e log^j t as SumTerms over mu(n)/n prefix sums (sequence 0)
void push_kernel(std::vector<SumTerm>& out, MellinKernel k, const Exponent& e, int j, const CBall& c) {
    if (c.re == 0 && c.im == 0 && c.rad == 0) return;
    const Exponent one(1);
    switch (k) {
    case MellinKernel::m: out.push_back(SumTerm::sum(c, e, j, 0, one)); break;
    case MellinKernel::mcheck:
        // sum mu(n)/n (log t - log n) - 1
        out.push_back(SumTerm::sum(c, e, j + 1, 0, one));
        out.push_back(SumTerm::sum(-c, e, j, 0, one, 1));
        out.push_back(SumTerm::plain(-c, e, j));
        break;
    case MellinKernel::mdcheck: {
        // sum mu(n)/n (log t - log n)^2 - 2 log t + 2 gamma
        out.push_back(SumTerm::sum(c, e, j + 2, 0, one));
        out.push_back(SumTerm::sum(CBall(-2) * c, e, j + 1, 0, one, 1));
        out.push_back(SumTerm::sum(c, e, j, 0, one, 2));
        out.push_back(SumTerm::plain(CBall(-2) * c, e, j + 1));
        Ball g(euler_gamma(), up(unit_roundoff()));
        out.push_back(SumTerm::plain(CBall(Ball(2) * g) * c, e, j));
        break;
    }
    }
}

double I0_at_split() {
    static std::once_flag once;
    static double v = 0;
    std::call_once(once, [] {
        auto a = abs_m_integrals(Real(kMLogFrom));
        v = up(to_double(a.I0.re()) + a.I0.radius() + 1e-300);
    });
    return v;
}

} // namespace

ApproxValue mellin_segment_combo(MellinKernel k, const ComplexParam& s, const Real& A, const Real& B, const CBall& c0,
                                 const CBall& c1, const Real& x) {
    if (!(A >= 1) || !(B >= A)) throw DomainError("mellin_segment needs 1 <= A <= B");
    if (B > kMaxPiecewiseX) throw CapacityError("mellin_segment: range beyond 1e7");
    const std::uint64_t N = boost::multiprecision::floor(B).convert_to<std::uint64_t>();
    ConvolutionIntegral I;
    I.x = B;
    I.A = A;
    I.B = B;
    auto tab = mobius_upto(std::max<std::uint64_t>(N, 1));
    I.seqs = {[tab](std::uint64_t n) { return Ball((*tab)(n)) / Ball(static_cast<long long>(n)); }};
    const Exponent e = -Exponent::from_reals(s.sigma, s.tau);
    std::vector<SumTerm> terms;
    // log(x/t) = log x - log t
    push_kernel(terms, k, e, 0, c0 + c1 * CBall(log(Ball(x))));
    push_kernel(terms, k, e, 1, -c1);
    // mu(n)/n is folded in the sequence, so alpha must be 0
    for (auto& t : terms)
        if (t.seq >= 0) t.alpha = Exponent(0);
    I.inner = std::move(terms);
    return integrate(I);
}

ApproxValue mellin_segment(MellinKernel k, const ComplexParam& s, const Real& A, const Real& B, int j,
                           const Real& x) {
    if (j < 0 || j > 1) throw DomainError("mellin_segment supports log^0 and log^1 weights");
    return j == 0 ? mellin_segment_combo(k, s, A, B, CBall(1), CBall(0), x)
                  : mellin_segment_combo(k, s, A, B, CBall(0), CBall(1), x);
}

double kernel_tail_sup(MellinKernel k, double T) {
    if (T < kMLogFrom) throw InapplicableError("tail sup bounds need T >= " + std::to_string(static_cast<long>(kMLogFrom)));
    const double c_over_log = up(kMLogConstant / down(std::log(T)));
    if (k == MellinKernel::m) return c_over_log;
    const double J = up(up(I0_at_split() / down(T)) + up(kMLogConstant / down(std::log(kMLogFrom))));
    const double invT2 = up(1.0 / down(T * T));
    if (k == MellinKernel::mcheck) return up(J + invT2);
    const double g = 0.57721566490153287; // rounded up
    return up(2 * up(up((0.5408 + g) * J) + up(g * invT2)));
}

Real default_mellin_T(const Real& x) {
    Real T = std::max(Real(125000), Real(10) * boost::multiprecision::ceil(x));
    return std::min(T, Real(kMaxPiecewiseX));
}

ApproxValue mellin_tail_combo(MellinKernel k, const ComplexParam& s, const Real& x, const Real& T, const CBall& c0,
                              const CBall& c1) {
    const double sig = to_double(s.sigma);
    if (!(sig > 1)) throw DomainError("truncated Mellin tails need Re(s) > 1");
    if (!(T >= x)) throw DomainError("mellin_tail needs T >= x");
    ApproxValue seg = mellin_segment_combo(k, s, x, T, c0, c1, x);
    const double Td = to_double(T), a = down(sig - 1);
    const double sup = kernel_tail_sup(k, Td);
    // int_T^inf t^-sigma = T^{1-sigma}/(sigma-1); with log(t/x): T^{1-sigma}(log(T/x)/(sigma-1) + 1/(sigma-1)^2)
    const double Tp = up(std::exp(-a * std::log(Td)) * (1 + 1e-12));
    const double w0 = up(Tp / a);
    const double w1 = up(Tp * up(up(std::log(Td / to_double(x)) * (1 + 1e-12)) / a + up(1.0 / (a * a))));
    const double w = up(up(upper_abs(c0) * w0) + up(upper_abs(c1) * w1));
    seg.value = add_error(seg.value, up(sup * w));
    return seg;
}

ApproxValue mellin_tail(MellinKernel k, const ComplexParam& s, const Real& x, const Real& T, int j) {
    if (j < 0 || j > 1) throw DomainError("mellin_tail supports log^0 and log^1 weights");
    return j == 0 ? mellin_tail_combo(k, s, x, T, CBall(1), CBall(0)) : mellin_tail_combo(k, s, x, T, CBall(0), CBall(1));
}

} // namespace moebius
