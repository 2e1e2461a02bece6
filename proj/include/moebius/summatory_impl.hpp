#pragma once

#include <cmath>

namespace moebius {

template <class F>
void stream_prefixes(std::uint64_t N, F&& f) {
    constexpr double u = 0x1p-53;
    PrefixState st;
    CompensatedSum m, s1, s2;
    for_each_segment(1, N, [&](std::uint64_t a, std::uint64_t b, const std::int8_t* mu) {
        for (std::uint64_t n = a; n <= b; ++n) {
            int v = mu[n - a];
            st.n = n;
            st.mu = v;
            if (v != 0) {
                double dn = static_cast<double>(n);
                double inv = 1.0 / dn;
                double L = std::log(dn);
                double sg = static_cast<double>(v);
                m.add(sg * inv, u * inv);
                s1.add(sg * L * inv, 4.1 * u * L * inv);
                s2.add(sg * L * L * inv, 8.0 * u * L * L * inv);
                st.M += v;
                st.m = m.value();
                st.s1 = s1.value();
                st.s2 = s2.value();
                st.m_err = m.error_bound();
                st.s1_err = s1.error_bound();
                st.s2_err = s2.error_bound();
            }
            f(static_cast<const PrefixState&>(st));
        }
    });
}

} // namespace moebius
