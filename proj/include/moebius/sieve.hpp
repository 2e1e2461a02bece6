#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace moebius {

/// mu(n) for n in [lo, hi].
struct MobiusTable {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    std::vector<std::int8_t> values;

    std::size_t size() const { return values.size(); }
    int operator()(std::uint64_t n) const { return values[n - lo]; }
    bool covers(std::uint64_t n) const { return n >= lo && n <= hi; }
};

struct SieveConfig {
    std::uint64_t segment_size = std::uint64_t(1) << 20;
    std::uint64_t max_values = std::uint64_t(1) << 31; // memory budget, one byte per value
};

/// Primes p <= limit, by a plain sieve of Eratosthenes.
std::vector<std::uint32_t> primes_upto(std::uint64_t limit);

/// mu on one segment [lo, hi] given every prime up to sqrt(hi).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                   std::int8_t* out, std::uint64_t* scratch);

/// Segmented sieve, segments distributed over OpenMP threads.
MobiusTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg = {});

/// Same segmentation, one segment after another on the calling thread.
MobiusTable sieve_range_serial(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg = {});

/// Visit [lo, hi] segment by segment in increasing order without keeping the
/// whole table. The callback receives (segment_lo, segment_hi, mu values).
template <class F>
void for_each_segment(std::uint64_t lo, std::uint64_t hi, F&& f, const SieveConfig& cfg = {});

// Cache file: "MOBS", u32 version, u64 lo, u64 hi, then mu packed four per
// byte, least significant bits first (00 -> 0, 01 -> +1, 11 -> -1).
inline constexpr std::uint32_t kCacheVersion = 1;

void write_cache(const std::filesystem::path& file, const MobiusTable& table);
MobiusTable read_cache(const std::filesystem::path& file);
std::vector<std::uint8_t> pack_mu(const std::vector<std::int8_t>& values);
std::vector<std::int8_t> unpack_mu(const std::vector<std::uint8_t>& bytes, std::size_t count);

/// MOEBIUS_CACHE_DIR if set, else empty (caching disabled).
std::filesystem::path default_cache_dir();
std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint64_t lo, std::uint64_t hi);

/// Read [lo, hi] from the cache directory when present, sieve and store otherwise.
/// An empty dir disables caching.
MobiusTable load_or_sieve(std::uint64_t lo, std::uint64_t hi, const std::filesystem::path& dir,
                          const SieveConfig& cfg = {});

/// Shared read-only table [1, n], grown on demand. Thread safe.
std::shared_ptr<const MobiusTable> mobius_upto(std::uint64_t n);

} // namespace moebius

#include "moebius/sieve_impl.hpp"
