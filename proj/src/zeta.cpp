#include "moebius/zeta.hpp"

#include "moebius/errors.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

namespace moebius {

using Rational = boost::multiprecision::mpq_rational;

ComplexParam ComplexParam::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    static const std::string num = R"(([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))";
    static const std::regex both("^([+-]?)" + num + "([+-])" + num + "?i$");
    static const std::regex real("^([+-]?)" + num + "$");
    static const std::regex imag("^([+-]?)" + num + "?i$");
    std::smatch m;
    auto sgn = [](const std::string& s) { return s == "-" ? std::string("-") : std::string(); };
    if (std::regex_match(t, m, both)) {
        std::string im = m[4].matched ? m[4].str() : "1";
        return ComplexParam(Real(sgn(m[1]) + m[2].str()), Real(sgn(m[3]) + im));
    }
    if (std::regex_match(t, m, real)) return ComplexParam(Real(sgn(m[1]) + m[2].str()), Real(0));
    if (std::regex_match(t, m, imag)) {
        std::string im = m[2].matched ? m[2].str() : "1";
        return ComplexParam(Real(0), Real(sgn(m[1]) + im));
    }
    throw DomainError("cannot parse complex parameter '" + std::string(text) + "'");
}

std::string ComplexParam::str(int digits) const {
    std::ostringstream os;
    os << std::setprecision(digits) << sigma;
    if (tau != 0) os << (tau > 0 ? "+" : "-") << std::setprecision(digits) << boost::multiprecision::abs(tau) << "i";
    return os.str();
}

const std::vector<Rational>& bernoulli_even(int n) {
    static std::mutex mu;
    static std::vector<Rational> all{Rational(1)}; // B_0, B_1, B_2, ...
    static std::vector<Rational> even{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(even.size()) <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        int m = static_cast<int>(all.size());
        Rational s = 0;
        boost::multiprecision::mpz_int c = 1; // C(m+1, 0)
        for (int k = 0; k < m; ++k) {
            s += Rational(c) * all[k];
            c = c * (m + 1 - k) / (k + 1);
        }
        all.push_back(-s / Rational(m + 1));
        if (m % 2 == 0) even.push_back(all.back());
    }
    return even;
}

std::vector<CBall> rising_factorials(const CBall& s, int n) {
    std::vector<CBall> r(n + 1);
    r[0] = CBall(1);
    for (int j = 1; j <= n; ++j) r[j] = r[j - 1] * (s + CBall(j - 1));
    return r;
}

namespace {

Ball rational_ball(const Rational& q) {
    return Ball(Real(numerator(q).str())) / Ball(Real(denominator(q).str()));
}

struct Bounds {
    double zeta, prime;
};

// Remainder after M Bernoulli terms at cutoff N, for zeta and zeta'.
Bounds remainder_bounds(double sigma, double tau, long long N, int M) {
    double a = sigma + 2 * M;
    if (!(a > 1.0)) return {INFINITY, INFINITY};
    double prod = 1.0, dprod = 0.0; // |(s)_{2M}| and a bound on |(s)'_{2M}|
    for (int i = 0; i < 2 * M; ++i) {
        double f = up(std::hypot(sigma + i, tau));
        dprod = up(dprod * f + prod);
        prod = up(prod * f);
    }
    double lN = std::log(static_cast<double>(N));
    double scale = 4.0 * std::exp(-2.0 * M * std::log(2 * M_PI) + (1 - a) * lN);
    double am1 = a - 1;
    double rz = up(scale * prod / am1);
    double rp = up(scale * (dprod / am1 + prod * (lN / am1 + 1 / (am1 * am1))));
    return {rz * 1.0000001, rp * 1.0000001};
}

} // namespace

ZetaResult zeta_em(const ComplexParam& sp, double target) {
    if (sp.is_one()) throw PoleError("zeta has a pole at s = 1");
    if (!(sp.sigma > -1)) throw DomainError("zeta_em requires Re(s) > -1");
    if (!(target > 0)) throw DomainError("target radius must be positive");
    const double sigma = to_double(sp.sigma), tau = to_double(sp.tau);

    long long N = std::max<long long>(10, static_cast<long long>(std::ceil(2 * std::fabs(tau))));
    int M = 0;
    Bounds rb{};
    for (;; N *= 2) {
        if (N > (1LL << 22)) throw PrecisionError("zeta_em: no admissible cutoff for target radius");
        for (int m = 1; m <= 30; ++m) {
            rb = remainder_bounds(sigma, tau, N, m);
            if (rb.zeta <= target / 4 && rb.prime <= target / 4) {
                M = m;
                break;
            }
        }
        if (M) break;
    }

    const CBall s = sp.ball();
    const CBall ms = -s;
    CBall z(0), zp(0);
    for (long long n = 1; n < N; ++n) {
        Real rn(n);
        CBall t = pow_pos(rn, ms);
        z += t;
        if (n > 1) zp -= t * CBall(log(Ball(rn)));
    }
    const Real rN(N);
    const Ball lN = log(Ball(rN));
    const CBall NmS = pow_pos(rN, ms);          // N^-s
    const CBall N1mS = NmS * CBall(Ball(rN));   // N^{1-s}
    const CBall sm1 = s - CBall(1);
    const CBall inv = CBall(1) / sm1;
    z += N1mS * inv + NmS * CBall(Ball(Real("0.5")));
    zp -= CBall(lN) * N1mS * inv + N1mS * inv * inv + CBall(lN) * NmS * CBall(Ball(Real("0.5")));

    const auto& B = bernoulli_even(M);
    // (s)_j and its derivative by the product rule.
    CBall P(1), dP(0);
    Ball fact(1);  // (2k)!
    Ball Npow(1);  // N^{1-2k}
    Ball invN2 = Ball(1) / Ball(rN * rN);
    Ball invN = Ball(1) / Ball(rN);
    int j = 0;
    for (int k = 1; k <= M; ++k) {
        while (j < 2 * k - 1) {
            CBall f = s + CBall(j);
            dP = dP * f + P;
            P = P * f;
            ++j;
        }
        fact = fact * Ball(2 * k - 1) * Ball(2 * k);
        Npow = k == 1 ? invN : Npow * invN2;
        CBall c = CBall(rational_ball(B[k]) / fact * Npow) * NmS;
        z += c * P;
        zp += c * (dP - CBall(lN) * P);
    }
    z = add_error(z, rb.zeta);
    zp = add_error(zp, rb.prime);
    if (z.rad > target || zp.rad > target)
        throw PrecisionError("zeta_em: target radius " + std::to_string(target) +
                             " not reachable at " + std::to_string(working_precision()) + " bits");
    ZetaResult r;
    r.zeta = ApproxValue(z);
    r.zeta_prime = ApproxValue(zp);
    r.cutoff = N;
    r.order = M;
    return r;
}

ZetaResult zeta_cached(const ComplexParam& s, double target) {
    static std::mutex mu;
    static std::map<std::string, ZetaResult> cache;
    std::ostringstream key;
    key << std::setprecision(60) << s.sigma << ',' << s.tau << ',' << working_precision() << ',' << target;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key.str());
        if (it != cache.end()) return it->second;
    }
    ZetaResult r = zeta_em(s, target);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key.str(), r);
    return r;
}

ApproxValue partial_power_sum(const CBall& s, const Real& t) {
    if (!(t >= 1)) throw DomainError("partial_power_sum requires t >= 1");
    const long long K = boost::multiprecision::floor(t).convert_to<long long>();
    CBall ms = -s, sum(0);
    for (long long k = 1; k <= K; ++k) sum += pow_pos(Real(k), ms);
    return ApproxValue(sum);
}

} // namespace moebius
