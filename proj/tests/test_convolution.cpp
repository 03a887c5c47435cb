#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "dirichlet/convolution.hpp"
#include "dirichlet/functions.hpp"

using namespace dirichlet;

namespace {

IntFunctionTable random_table(const char* name, uint64_t N, uint32_t seed, int64_t lo, int64_t hi) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int64_t> dist(lo, hi);
    std::vector<int64_t> v(N);
    for (auto& x : v) x = dist(rng);
    return {name, std::move(v)};
}

}  // namespace

TEST_CASE("mismatched limits are rejected") {
    REQUIRE_THROWS_AS(dirichlet_convolve(sieve_unit(10), sieve_unit(11)), std::invalid_argument);
}

TEST_CASE("epsilon is the convolution identity") {
    const auto f = random_table("f", 500, 17, -50, 50);
    const auto eps = epsilon_table(500);
    const auto conv = dirichlet_convolve(f, eps);
    for (uint64_t n = 1; n <= 500; ++n) {
        REQUIRE(conv(n) == f(n));
        REQUIRE(convolve_naive(f, eps, n) == f(n));
    }
}

TEST_CASE("unit*unit counts divisors") {
    const auto one = sieve_unit(100);
    REQUIRE(convolve_naive(one, one, 6) == 4);
    REQUIRE(convolve_naive(one, one, 12) == 6);  // sigma_0(12)
    const auto conv = dirichlet_convolve(one, one);
    REQUIRE(conv(12) == 6);
}

TEST_CASE("Mobius inversion: 1*mu = epsilon") {
    const auto one = sieve_unit(200);
    const auto mu = sieve_mobius(200);
    for (uint64_t n = 1; n <= 200; ++n)
        REQUIRE(convolve_naive(one, mu, n) == (n == 1 ? 1 : 0));
}

TEST_CASE("Id*mu reproduces phi") {
    const uint64_t N = 100'000;
    const auto conv = dirichlet_convolve(sieve_id_pow(1, N), sieve_mobius(N));
    const auto phi = sieve_phi(N);
    REQUIRE(convolve_naive(sieve_id_pow(1, 100), sieve_mobius(100), 12) == 4);
    for (uint64_t n = 1; n <= N; ++n) REQUIRE(conv(n) == phi(n));
}

TEST_CASE("Id_k*1 reproduces sigma_k") {
    const uint64_t N = 100'000;
    const auto one = sieve_unit(N);
    for (uint32_t k : {0u, 1u, 2u}) {
        const auto conv = dirichlet_convolve(sieve_id_pow(k, N), one);
        const auto sig = sieve_sigma_k(k, N);
        for (uint64_t n = 1; n <= N; ++n) REQUIRE(conv(n) == sig(n));
    }
}

TEST_CASE("sieved convolution agrees with the naive oracle") {
    const uint64_t N = 1000;
    const auto f = random_table("f", N, 1, -9, 9);
    const auto g = random_table("g", N, 2, -9, 9);
    const auto conv = dirichlet_convolve(f, g);
    for (uint64_t n = 1; n <= N; ++n) REQUIRE(conv(n) == convolve_naive(f, g, n));
}

TEST_CASE("commutativity, exact") {
    const uint64_t N = 1000;
    const auto f = random_table("f", N, 3, -20, 20);
    const auto g = random_table("g", N, 4, -20, 20);
    const auto fg = dirichlet_convolve(f, g);
    const auto gf = dirichlet_convolve(g, f);
    for (uint64_t n = 1; n <= N; ++n) REQUIRE(fg(n) == gf(n));
}

TEST_CASE("associativity on small tables") {
    const uint64_t N = 1000;
    const auto f = random_table("f", N, 5, -5, 5);
    const auto g = random_table("g", N, 6, -5, 5);
    const auto h = random_table("h", N, 7, -5, 5);
    const auto left = dirichlet_convolve(dirichlet_convolve(f, g), h);
    const auto right = dirichlet_convolve(f, dirichlet_convolve(g, h));
    for (uint64_t n = 1; n <= N; ++n) REQUIRE(left(n) == right(n));
}

TEST_CASE("real path: phi/Id = 1 * mu/Id") {
    const uint64_t N = 100'000;
    const auto lhs = scale_by_power(sieve_phi(N), 1.0);
    const auto rhs = dirichlet_convolve(sieve_unit(N), scale_by_power(sieve_mobius(N), 1.0));
    for (uint64_t n = 1; n <= N; ++n)
        REQUIRE(rhs(n) == Catch::Approx(lhs(n)).epsilon(1e-12));
}

TEST_CASE("mixed int/real operands take the real path") {
    const uint64_t N = 300;
    const auto one = sieve_unit(N);
    const auto muid = scale_by_power(sieve_mobius(N), 1.0);
    const auto a = dirichlet_convolve(one, muid);
    const auto b = dirichlet_convolve(muid, one);
    for (uint64_t n = 1; n <= N; ++n) {
        REQUIRE(a(n) == Catch::Approx(b(n)).margin(1e-15));
        REQUIRE(a(n) == Catch::Approx(convolve_naive_real(one, muid, n)).margin(1e-12));
    }
}

TEST_CASE("integer overflow is detected, not wrapped") {
    std::vector<int64_t> big(4, int64_t(1) << 62);
    const IntFunctionTable t("big", std::move(big));
    REQUIRE_THROWS_AS(dirichlet_convolve(t, t), std::overflow_error);
    REQUIRE_THROWS_AS(convolve_naive(t, t, 4), std::overflow_error);
}

TEST_CASE("convolve_naive rejects out-of-range n") {
    const auto one = sieve_unit(10);
    REQUIRE_THROWS_AS(convolve_naive(one, one, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(convolve_naive(one, one, 11), std::invalid_argument);
}
