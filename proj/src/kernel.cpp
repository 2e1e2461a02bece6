#include "moebius/kernel.hpp"

#include "moebius/errors.hpp"

#include <cmath>

namespace moebius {

KernelVariant parse_variant(const std::string& name) {
    if (name == "Q") return KernelVariant::Q;
    if (name == "R") return KernelVariant::R;
    if (name == "q") return KernelVariant::q;
    throw DomainError("unknown kernel variant '" + name + "'");
}

const char* to_string(KernelVariant v) {
    switch (v) {
    case KernelVariant::Q: return "Q";
    case KernelVariant::R: return "R";
    case KernelVariant::q: return "q";
    }
    return "?";
}

BoundForm parse_bound_form(const std::string& name) {
    if (name == "sup_Q") return BoundForm::sup_Q;
    if (name == "mid_Q") return BoundForm::mid_Q;
    if (name == "ibp_R") return BoundForm::ibp_R;
    if (name == "real_R") return BoundForm::real_R;
    throw DomainError("unknown bound form '" + name + "'");
}

const char* to_string(BoundForm f) {
    switch (f) {
    case BoundForm::sup_Q: return "sup_Q";
    case BoundForm::mid_Q: return "mid_Q";
    case BoundForm::ibp_R: return "ibp_R";
    case BoundForm::real_R: return "real_R";
    }
    return "?";
}

KernelEvaluator::KernelEvaluator(const KernelSpec& spec, double zeta_radius)
    : spec_(spec), s_(spec.s.ball()), sm1_(spec.s.ball() - CBall(1)), partial_(0) {
    zeta_ = zeta_cached(spec.s, zeta_radius).zeta.value;
    A_.push_back(sm1_ * zeta_);
}

const CBall& KernelEvaluator::A(long long K) {
    if (K < 0) throw DomainError("A_K needs K >= 0");
    const CBall ms = -s_;
    while (static_cast<long long>(A_.size()) <= K) {
        long long k = static_cast<long long>(A_.size());
        partial_ += pow_pos(Real(k), ms);
        A_.push_back(sm1_ * (zeta_ - partial_));
    }
    return A_[K];
}

CBall KernelEvaluator::on_piece(long long K, const Ball& t) {
    CBall q = A(K) * pow_pos(t, s_) - CBall(t);
    switch (spec_.variant) {
    case KernelVariant::Q: return q;
    case KernelVariant::R: return q - sm1_ * CBall(t - Ball(K) - Ball(Real("0.5")));
    case KernelVariant::q: return sm1_ * q;
    }
    return q;
}

ApproxValue KernelEvaluator::eval(const Real& t) {
    if (!(t >= 1)) throw DomainError("kernel needs t >= 1");
    long long K = boost::multiprecision::floor(t).convert_to<long long>();
    return ApproxValue(on_piece(K, Ball(t)));
}

ApproxValue KernelEvaluator::eval_left(long long k) {
    if (k < 2) throw DomainError("left limit needs an integer k >= 2");
    return ApproxValue(on_piece(k - 1, Ball(k)));
}

namespace {

double kernel_scale(const KernelSpec& spec, double t) {
    double sig = to_double(spec.s.sigma), tau = to_double(spec.s.tau);
    double sm1 = std::hypot(sig - 1, tau);
    double scale = sm1 * std::max(1.0, std::pow(t, sig));
    if (spec.variant == KernelVariant::q) scale *= sm1;
    return std::max(scale, 1e-300);
}

} // namespace

ApproxValue kernel_eval(const KernelSpec& spec, const Real& t, double target) {
    if (!(target > 0)) throw DomainError("target radius must be positive");
    if (!(spec.s.sigma > -1)) throw DomainError("kernel_eval needs Re(s) > -1");
    double zr = target / (8 * kernel_scale(spec, to_double(t)));
    KernelEvaluator ev(spec, zr);
    ApproxValue v = ev.eval(t);
    if (v.radius() > target) throw PrecisionError("kernel_eval: target radius not reachable");
    return v;
}

CBall fractional_tail_integral(const CBall& s, const Real& t, double target) {
    if (!(t >= 1)) throw DomainError("J(t) needs t >= 1");
    const double sig = to_double(s.re), tau = to_double(s.im);
    if (!(sig > -1)) throw DomainError("J(t) needs Re(s) > -1");
    const long long K = boost::multiprecision::floor(t).convert_to<long long>();
    const CBall ms = -s;
    const CBall one_minus_s = CBall(1) - s;
    const Ball half(Real("0.5"));

    // On [a, b] inside [n, n+1]: int (u - n - 1/2) u^{-s-1} du
    //   = [u^{1-s}/(1-s) + (n + 1/2) u^{-s}/s]_a^b
    auto G = [&](const Ball& u, long long n, const CBall& u_ms) {
        return CBall(u) * u_ms / one_minus_s + CBall(Ball(n) + half) * u_ms / s;
    };

    long long N = std::max<long long>({K + 1, 20, static_cast<long long>(std::ceil(2 * std::fabs(tau))) + 10});
    int M = 0;
    double rem = 0;
    for (;; N *= 2) {
        if (N > (1LL << 22)) throw PrecisionError("J(t): no admissible cutoff");
        double prod = 1.0; // |(s+1)_{2m-1}|
        int have = 0;
        for (int m = 1; m <= 30; ++m) {
            while (have < 2 * m - 1) prod = up(prod * std::hypot(sig + 1 + have, tau)), ++have;
            double a = sig + 2 * m - 1;
            if (a <= 0) continue;
            double r = up(4.0 * prod * std::exp(-2.0 * m * std::log(2 * M_PI) - a * std::log((double)N)) / a);
            if (r <= target / 4) {
                M = m;
                rem = r * 1.0000001;
                break;
            }
        }
        if (M) break;
    }

    CBall J(0);
    CBall prev = pow_pos(Real(K + 1), ms);
    J += G(Ball(K + 1), K, prev) - G(Ball(t), K, pow_pos(t, ms));
    for (long long n = K + 1; n < N; ++n) {
        CBall next = pow_pos(Real(n + 1), ms);
        J += G(Ball(n + 1), n, next) - G(Ball(n), n, prev);
        prev = next;
    }
    // Euler-Maclaurin tail at N.
    const auto& B = bernoulli_even(M);
    const Real rN(N);
    const CBall NmS = prev; // N^-s
    CBall P(1);             // (s+1)_{2k-2}
    int have = 0;
    Ball fact(1);
    Ball Npow = Ball(1) / Ball(rN); // N^{1-2k}
    const Ball invN2 = Ball(1) / Ball(rN * rN);
    for (int k = 1; k <= M; ++k) {
        while (have < 2 * k - 2) P = P * (s + CBall(1 + have)), ++have;
        fact = fact * Ball(2 * k - 1) * Ball(2 * k);
        if (k > 1) Npow = Npow * invN2;
        J -= CBall(Ball(Real(numerator(B[k]).str())) / Ball(Real(denominator(B[k]).str())) / fact * Npow) * P * NmS;
    }
    return add_error(J, rem);
}

ApproxValue kernel_eval_em(const KernelSpec& spec, const Real& t, double target) {
    if (!(target > 0)) throw DomainError("target radius must be positive");
    if (!(spec.s.sigma > -1)) throw DomainError("kernel_eval_em needs Re(s) > -1");
    if (!(t >= 1)) throw DomainError("kernel needs t >= 1");
    const CBall s = spec.s.ball();
    const CBall sm1 = s - CBall(1);
    const Real frac = t - boost::multiprecision::floor(t);
    const CBall main = sm1 * CBall(Ball(frac) - Ball(Real("0.5")));

    CBall R(0); // R_s(t) = -t^s (s-1) s J(t)
    if (!(spec.s.sigma == 0 && spec.s.tau == 0)) {
        const CBall ts = pow_pos(t, s);
        double scale = upper_abs(ts) * upper_abs(s) * upper_abs(sm1);
        if (spec.variant == KernelVariant::q) scale *= upper_abs(sm1);
        CBall J = fractional_tail_integral(s, t, target / (4 * std::max(scale, 1e-300)));
        R = -(ts * sm1 * s * J);
    }
    CBall v;
    switch (spec.variant) {
    case KernelVariant::Q: v = main + R; break;
    case KernelVariant::R: v = R; break;
    case KernelVariant::q: v = sm1 * (main + R); break;
    }
    if (v.rad > target) throw PrecisionError("kernel_eval_em: target radius not reachable");
    return ApproxValue(v);
}

namespace {

struct Parts {
    double sig, tau, abs_s, abs_sm1, abs_sp1;
};

Parts parts(const KernelSpec& spec) {
    Parts p;
    p.sig = to_double(spec.s.sigma);
    p.tau = to_double(spec.s.tau);
    p.abs_s = up(std::hypot(p.sig, p.tau));
    p.abs_sm1 = up(std::hypot(p.sig - 1, p.tau));
    p.abs_sp1 = up(std::hypot(p.sig + 1, p.tau));
    return p;
}

} // namespace

double kernel_bound(const KernelSpec& spec, double t, BoundForm form) {
    Parts p = parts(spec);
    switch (form) {
    case BoundForm::sup_Q:
        if (!(p.sig > 0)) throw DomainError("sup_Q needs Re(s) > 0");
        return up(up(p.abs_s * p.abs_sm1) / down(p.sig));
    case BoundForm::mid_Q:
        if (!(p.sig > 0)) throw DomainError("mid_Q needs Re(s) > 0");
        return up(up(p.abs_s * p.abs_sm1) / down(2 * p.sig));
    case BoundForm::ibp_R:
        if (!(p.sig > -1)) throw DomainError("ibp_R needs Re(s) > -1");
        if (!(t >= 1)) throw DomainError("ibp_R needs t >= 1");
        return up(up(up(p.abs_sp1 / down(p.sig + 1)) * up(p.abs_s * p.abs_sm1)) / down(6 * t));
    case BoundForm::real_R:
        if (!spec.s.is_real()) throw DomainError("real_R needs real s");
        if (!(p.sig > -1)) throw DomainError("real_R needs sigma > -1");
        if (!(t >= 1)) throw DomainError("real_R needs t >= 1");
        return up(up(std::fabs(p.sig) * std::fabs(p.sig - 1)) / down(8 * t));
    }
    return 0;
}

double kernel_bound_literal(const KernelSpec& spec, double t, BoundForm form) {
    Parts p = parts(spec);
    double a = std::fabs(p.sig), b = std::fabs(p.sig - 1);
    switch (form) {
    case BoundForm::mid_Q:
        if (!(p.sig > 0)) throw DomainError("mid_Q needs Re(s) > 0");
        return up(p.abs_s / p.sig * b / 2);
    case BoundForm::ibp_R:
        if (!(p.sig > -1)) throw DomainError("ibp_R needs Re(s) > -1");
        return up(p.abs_sp1 / (p.sig + 1) * a * b / 6 / t);
    default: return kernel_bound(spec, t, form);
    }
}

} // namespace moebius
