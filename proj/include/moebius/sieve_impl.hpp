#pragma once

#include <algorithm>
#include <cmath>

namespace moebius {

std::uint64_t isqrt(std::uint64_t n);

template <class F>
void for_each_segment(std::uint64_t lo, std::uint64_t hi, F&& f, const SieveConfig& cfg) {
    if (hi < lo) return;
    auto primes = primes_upto(isqrt(hi));
    std::vector<std::int8_t> mu(cfg.segment_size);
    std::vector<std::uint64_t> scratch(cfg.segment_size);
    for (std::uint64_t a = lo; a <= hi;) {
        std::uint64_t b = std::min(hi, a + cfg.segment_size - 1);
        sieve_segment(a, b, primes, mu.data(), scratch.data());
        f(a, b, static_cast<const std::int8_t*>(mu.data()));
        if (b == hi) break;
        a = b + 1;
    }
}

} // namespace moebius
