#include "moebius/sieve.hpp"

#include "moebius/errors.hpp"

#include <omp.h>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>

namespace moebius {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

// Every n in the segment starts with mu = 1 and a cofactor product of 1. Each
// prime p <= sqrt(hi) flips the sign of its multiples and multiplies p into
// the product; multiples of p^2 are zeroed. A product short of n leaves
// exactly one prime factor above sqrt(hi), which flips the sign once more.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                   std::int8_t* out, std::uint64_t* prod) {
    const std::uint64_t len = hi - lo + 1;
    std::fill(out, out + len, std::int8_t(1));
    std::fill(prod, prod + len, std::uint64_t(1));
    for (std::uint32_t p32 : primes) {
        std::uint64_t p = p32;
        if (p * p > hi) break;
        std::uint64_t first = (lo + p - 1) / p * p;
        for (std::uint64_t n = first; n <= hi; n += p) {
            out[n - lo] = static_cast<std::int8_t>(-out[n - lo]);
            prod[n - lo] *= p;
        }
        std::uint64_t p2 = p * p;
        for (std::uint64_t n = (lo + p2 - 1) / p2 * p2; n <= hi; n += p2) out[n - lo] = 0;
    }
    for (std::uint64_t i = 0; i < len; ++i)
        if (out[i] != 0 && prod[i] != lo + i) out[i] = static_cast<std::int8_t>(-out[i]);
}

namespace {

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    if (lo < 1 || hi < lo) throw DomainError("sieve range must satisfy 1 <= lo <= hi");
    if (hi - lo + 1 > cfg.max_values)
        throw CapacityError("sieve range of " + std::to_string(hi - lo + 1) +
                            " values exceeds the memory budget of " + std::to_string(cfg.max_values));
    if (cfg.segment_size == 0) throw DomainError("segment size must be positive");
}

} // namespace

MobiusTable sieve_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    check_range(lo, hi, cfg);
    MobiusTable t;
    t.lo = lo;
    t.hi = hi;
    t.values.resize(hi - lo + 1);
    const auto primes = primes_upto(isqrt(hi));
    const std::uint64_t seg = cfg.segment_size;
    const auto nseg = static_cast<std::int64_t>((hi - lo) / seg + 1);
#pragma omp parallel
    {
        std::vector<std::uint64_t> scratch(seg);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t k = 0; k < nseg; ++k) {
            std::uint64_t a = lo + static_cast<std::uint64_t>(k) * seg;
            std::uint64_t b = std::min(hi, a + seg - 1);
            sieve_segment(a, b, primes, t.values.data() + (a - lo), scratch.data());
        }
    }
    return t;
}

MobiusTable sieve_range_serial(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    check_range(lo, hi, cfg);
    MobiusTable t;
    t.lo = lo;
    t.hi = hi;
    t.values.resize(hi - lo + 1);
    for_each_segment(
        lo, hi,
        [&](std::uint64_t a, std::uint64_t b, const std::int8_t* mu) {
            std::memcpy(t.values.data() + (a - lo), mu, b - a + 1);
        },
        cfg);
    return t;
}

std::vector<std::uint8_t> pack_mu(const std::vector<std::int8_t>& values) {
    std::vector<std::uint8_t> bytes((values.size() + 3) / 4, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint8_t code = values[i] == 0 ? 0u : values[i] == 1 ? 1u : 3u;
        bytes[i / 4] |= static_cast<std::uint8_t>(code << (2 * (i % 4)));
    }
    return bytes;
}

std::vector<std::int8_t> unpack_mu(const std::vector<std::uint8_t>& bytes, std::size_t count) {
    if (bytes.size() < (count + 3) / 4) throw IoError("cache payload is truncated");
    std::vector<std::int8_t> v(count);
    for (std::size_t i = 0; i < count; ++i) {
        unsigned code = (bytes[i / 4] >> (2 * (i % 4))) & 3u;
        switch (code) {
        case 0: v[i] = 0; break;
        case 1: v[i] = 1; break;
        case 3: v[i] = -1; break;
        default: throw IoError("invalid mu code 10 in cache payload");
        }
    }
    return v;
}

namespace {

template <class T>
void put_le(std::ostream& os, T v) {
    unsigned char b[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
    unsigned char b[sizeof(T)];
    if (!is.read(reinterpret_cast<char*>(b), sizeof(T))) throw IoError("cache header is truncated");
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(b[i]) << (8 * i);
    return v;
}

} // namespace

void write_cache(const std::filesystem::path& file, const MobiusTable& table) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
        os.write("MOBS", 4);
        put_le<std::uint32_t>(os, kCacheVersion);
        put_le<std::uint64_t>(os, table.lo);
        put_le<std::uint64_t>(os, table.hi);
        auto bytes = pack_mu(table.values);
        os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!os) throw IoError("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, file);
}

MobiusTable read_cache(const std::filesystem::path& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw IoError("cannot open " + file.string());
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "MOBS", 4) != 0) throw IoError("bad magic in " + file.string());
    auto version = get_le<std::uint32_t>(is);
    if (version != kCacheVersion) throw IoError("unsupported cache version " + std::to_string(version));
    MobiusTable t;
    t.lo = get_le<std::uint64_t>(is);
    t.hi = get_le<std::uint64_t>(is);
    if (t.lo < 1 || t.hi < t.lo) throw IoError("bad range in cache header");
    std::size_t count = t.hi - t.lo + 1;
    std::vector<std::uint8_t> bytes((count + 3) / 4);
    if (!is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())))
        throw IoError("cache payload is truncated");
    t.values = unpack_mu(bytes, count);
    return t;
}

std::filesystem::path default_cache_dir() {
    const char* env = std::getenv("MOEBIUS_CACHE_DIR");
    return env ? std::filesystem::path(env) : std::filesystem::path();
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint64_t lo, std::uint64_t hi) {
    return dir / ("mobius_" + std::to_string(lo) + "_" + std::to_string(hi) + ".mobs");
}

MobiusTable load_or_sieve(std::uint64_t lo, std::uint64_t hi, const std::filesystem::path& dir,
                          const SieveConfig& cfg) {
    if (!dir.empty()) {
        auto f = cache_file(dir, lo, hi);
        if (std::filesystem::exists(f)) {
            auto t = read_cache(f);
            if (t.lo == lo && t.hi == hi) return t;
        }
    }
    auto t = sieve_range(lo, hi, cfg);
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        write_cache(cache_file(dir, lo, hi), t);
    }
    return t;
}

std::shared_ptr<const MobiusTable> mobius_upto(std::uint64_t n) {
    static std::mutex mu;
    static std::shared_ptr<const MobiusTable> table;
    std::lock_guard<std::mutex> lock(mu);
    if (!table || table->hi < n) {
        std::uint64_t target = std::max<std::uint64_t>(n, table ? 2 * table->hi : 1u << 16);
        table = std::make_shared<const MobiusTable>(load_or_sieve(1, target, default_cache_dir()));
    }
    return table;
}

} // namespace moebius
