#pragma once
// Independent reference computations used only by the tests: trial-division
// factorisation, direct long-double sums, and divisor loops.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline int mu_naive(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline long long mertens_naive(std::uint64_t N) {
    long long M = 0;
    for (std::uint64_t n = 1; n <= N; ++n) M += mu_naive(n);
    return M;
}

inline long double m_naive(double x) {
    long double s = 0;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n) s += mu_naive(n) / (long double)n;
    return s;
}

inline long double mcheck_naive(double x) {
    long double s = 0;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n)
        s += mu_naive(n) / (long double)n * std::log((long double)x / n);
    return s;
}

inline long double mdcheck_naive(double x) {
    long double s = 0;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n) {
        long double l = std::log((long double)x / n);
        s += mu_naive(n) / (long double)n * l * l;
    }
    return s;
}

inline long double harmonic_naive(double x) {
    long double s = 0;
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n) s += 1.0L / n;
    return s;
}

/// Dirichlet convolution by looping over all divisors.
template <class A, class B>
double convolve_naive(A a, B b, std::uint64_t n) {
    double s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += a(d) * b(n / d);
    return s;
}

/// Integral over [1, x] of |m(t)| by summing m over unit steps in long double.
inline long double abs_m_integral_naive(double x) {
    long double m = 0, I = 0;
    auto N = static_cast<std::uint64_t>(x);
    for (std::uint64_t n = 1; n <= N; ++n) {
        m += mu_naive(n) / (long double)n;
        long double len = n < N ? 1.0L : (long double)x - n;
        I += std::fabs(m) * len;
    }
    return I;
}

} // namespace oracle
