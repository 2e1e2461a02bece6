#include <doctest.h>

#include "moebius/errors.hpp"
#include "moebius/sieve.hpp"
#include "oracles/oracle.hpp"
#include "oracles/values.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace moebius;

TEST_CASE("first twelve values") {
    auto t = sieve_range(1, 12);
    std::vector<std::int8_t> expect{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    CHECK(t.values == expect);
    CHECK(sieve_range(6, 6).values == std::vector<std::int8_t>{1});
}

TEST_CASE("segmented sieve matches trial division") {
    SieveConfig cfg;
    cfg.segment_size = 97; // force many ragged segments
    auto t = sieve_range(1, 20000, cfg);
    for (std::uint64_t n = 1; n <= 20000; ++n) REQUIRE(t(n) == oracle::mu_naive(n));
    auto far = sieve_range(1000000000000ULL, 1000000000000ULL + 5000, cfg);
    for (std::uint64_t n = far.lo; n <= far.hi; ++n) REQUIRE(far(n) == oracle::mu_naive(n));
}

TEST_CASE("parallel and serial sieves agree") {
    SieveConfig cfg;
    cfg.segment_size = 4096;
    auto a = sieve_range(123456, 523456, cfg);
    auto b = sieve_range_serial(123456, 523456, cfg);
    CHECK(a.values == b.values);
}

TEST_CASE("Dirichlet inverse property up to 10^4") {
    auto t = sieve_range(1, 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        int s = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            s += t(d);
            if (d * d != n) s += t(n / d);
        }
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("prime values and square factors") {
    auto t = sieve_range(1, 5000);
    for (auto p : primes_upto(5000)) CHECK(t(p) == -1);
    for (std::uint64_t q = 2; q * q <= 5000; ++q)
        for (std::uint64_t n = q * q; n <= 5000; n += q * q) CHECK(t(n) == 0);
}

TEST_CASE("Mertens at 10^6 matches the frozen oracle") {
    auto t = sieve_range(1, 1000000);
    long long M = 0;
    for (auto v : t.values) M += v;
    CHECK(M == oracle_values::mertens_1e6);
}

TEST_CASE("capacity and domain errors") {
    SieveConfig cfg;
    cfg.max_values = 1000;
    CHECK_THROWS_AS(sieve_range(1, 5000, cfg), CapacityError);
    CHECK_THROWS_AS(sieve_range(0, 5), DomainError);
    CHECK_THROWS_AS(sieve_range(10, 5), DomainError);
}

TEST_CASE("cache round trip and corruption detection") {
    auto dir = std::filesystem::temp_directory_path() / "moebius_cache_test";
    std::filesystem::remove_all(dir);
    auto t = load_or_sieve(100, 1234, dir);
    auto f = cache_file(dir, 100, 1234);
    REQUIRE(std::filesystem::exists(f));
    CHECK(std::filesystem::file_size(f) == 4 + 4 + 8 + 8 + (1135 + 3) / 4);
    auto r = read_cache(f);
    CHECK(r.lo == 100);
    CHECK(r.hi == 1234);
    CHECK(r.values == t.values);
    CHECK(load_or_sieve(100, 1234, dir).values == t.values);

    {
        std::fstream fs(f, std::ios::in | std::ios::out | std::ios::binary);
        fs.seekp(0);
        fs.write("XOBS", 4);
    }
    CHECK_THROWS_AS(read_cache(f), IoError);
    std::filesystem::resize_file(f, 10);
    CHECK_THROWS_AS(read_cache(f), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("packing layout") {
    std::vector<std::int8_t> v{0, 1, -1, 1, -1};
    auto b = pack_mu(v);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == (0u | (1u << 2) | (3u << 4) | (1u << 6)));
    CHECK(b[1] == 3u);
    CHECK(unpack_mu(b, 5) == v);
    CHECK_THROWS_AS(unpack_mu(std::vector<std::uint8_t>{2u}, 1), IoError);
}
