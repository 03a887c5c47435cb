#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Exact tables of classical arithmetic functions f(1..N), sieved in O(N) or
// O(N log N), plus single-point brute-force oracles (independent of the
// sieves, for cross-checking), plus power scaling f(n) -> f(n)/n^s into
// floating-point tables.

namespace dirichlet {

namespace detail {

struct KahanSum {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

[[noreturn]] inline void throw_overflow(std::string_view op, uint64_t n) {
    throw std::overflow_error(std::string(op) + ": 64-bit overflow at n = " +
                              std::to_string(n));
}

inline int64_t checked_add(int64_t a, int64_t b, std::string_view op, uint64_t n) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow(op, n);
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b, std::string_view op, uint64_t n) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow(op, n);
    return r;
}

// base^e by repeated squaring, overflow-checked
inline int64_t checked_pow(uint64_t base, uint32_t e, std::string_view op, uint64_t n) {
    if (base > uint64_t(INT64_MAX)) throw_overflow(op, n);
    int64_t result = 1;
    int64_t b = int64_t(base);
    while (e > 0) {
        if (e & 1) result = checked_mul(result, b, op, n);
        e >>= 1;
        if (e > 0) b = checked_mul(b, b, op, n);
    }
    return result;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Function tables, indexed 1..N (values()[0] is f(1)).
// ---------------------------------------------------------------------------

class IntFunctionTable {
public:
    IntFunctionTable(std::string name, std::vector<int64_t> values)
        : name_(std::move(name)), values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("IntFunctionTable: limit N must be >= 1");
    }

    const std::string& name() const noexcept { return name_; }
    uint64_t limit() const noexcept { return values_.size(); }

    int64_t operator()(uint64_t n) const {
        if (n < 1 || n > values_.size())
            throw std::out_of_range("IntFunctionTable " + name_ + ": index " +
                                    std::to_string(n) + " outside 1.." +
                                    std::to_string(values_.size()));
        return values_[n - 1];
    }

    std::span<const int64_t> values() const noexcept { return values_; }

private:
    std::string name_;
    std::vector<int64_t> values_;
};

class RealFunctionTable {
public:
    RealFunctionTable(std::string name, std::vector<double> values)
        : name_(std::move(name)), values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("RealFunctionTable: limit N must be >= 1");
        for (size_t i = 0; i < values_.size(); ++i)
            if (!std::isfinite(values_[i]))
                throw std::invalid_argument("RealFunctionTable " + name_ +
                                            ": non-finite value at n = " +
                                            std::to_string(i + 1));
    }

    const std::string& name() const noexcept { return name_; }
    uint64_t limit() const noexcept { return values_.size(); }

    double operator()(uint64_t n) const {
        if (n < 1 || n > values_.size())
            throw std::out_of_range("RealFunctionTable " + name_ + ": index " +
                                    std::to_string(n) + " outside 1.." +
                                    std::to_string(values_.size()));
        return values_[n - 1];
    }

    std::span<const double> values() const noexcept { return values_; }

private:
    std::string name_;
    std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// Sieves
// ---------------------------------------------------------------------------

// 1(n) = 1 for all n
inline IntFunctionTable sieve_unit(uint64_t N) {
    if (N == 0) throw std::invalid_argument("sieve_unit: N must be >= 1");
    return {"1", std::vector<int64_t>(N, 1)};
}

// Id_s(n) = n^s
inline IntFunctionTable sieve_id_pow(uint32_t s, uint64_t N) {
    if (N == 0) throw std::invalid_argument("sieve_id_pow: N must be >= 1");
    std::vector<int64_t> v(N);
    for (uint64_t n = 1; n <= N; ++n)
        v[n - 1] = detail::checked_pow(n, s, "sieve_id_pow", n);
    std::string name = (s == 0) ? "Id^0" : (s == 1) ? "Id" : "Id^" + std::to_string(s);
    return {std::move(name), std::move(v)};
}

// epsilon(1) = 1, epsilon(n) = 0 otherwise: the Dirichlet convolution identity
inline IntFunctionTable epsilon_table(uint64_t N) {
    if (N == 0) throw std::invalid_argument("epsilon_table: N must be >= 1");
    std::vector<int64_t> v(N, 0);
    v[0] = 1;
    return {"eps", std::move(v)};
}

// mu(n): linear (smallest-prime-factor) sieve; mu(n) in {-1, 0, 1}
inline IntFunctionTable sieve_mobius(uint64_t N) {
    if (N == 0) throw std::invalid_argument("sieve_mobius: N must be >= 1");
    std::vector<int64_t> mu(N + 1, 0);
    std::vector<uint8_t> composite(N + 1, 0);
    std::vector<uint64_t> primes;
    mu[1] = 1;
    for (uint64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (uint64_t p : primes) {
            if (p > N / i) break;
            composite[i * p] = 1;
            if (i % p == 0) {
                mu[i * p] = 0;  // p^2 | i*p
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    mu.erase(mu.begin());  // shift to 1-based storage
    return {"mu", std::move(mu)};
}

// phi(n): linear sieve via phi(ip) = phi(i)*p when p | i, phi(i)*(p-1) otherwise
inline IntFunctionTable sieve_phi(uint64_t N) {
    if (N == 0) throw std::invalid_argument("sieve_phi: N must be >= 1");
    std::vector<int64_t> phi(N + 1, 0);
    std::vector<uint8_t> composite(N + 1, 0);
    std::vector<uint64_t> primes;
    phi[1] = 1;
    for (uint64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            phi[i] = int64_t(i) - 1;
        }
        for (uint64_t p : primes) {
            if (p > N / i) break;
            composite[i * p] = 1;
            if (i % p == 0) {
                phi[i * p] = phi[i] * int64_t(p);
                break;
            }
            phi[i * p] = phi[i] * int64_t(p - 1);
        }
    }
    phi.erase(phi.begin());
    return {"phi", std::move(phi)};
}

// sigma_k(n) = sum_{d|n} d^k by the divisor sweep: for each d, add d^k to all
// multiples of d.  O(N log N) additions, overflow-checked.
inline IntFunctionTable sieve_sigma_k(uint32_t k, uint64_t N) {
    if (N == 0) throw std::invalid_argument("sieve_sigma_k: N must be >= 1");
    std::vector<int64_t> sig(N, 0);
    for (uint64_t d = 1; d <= N; ++d) {
        const int64_t dk = detail::checked_pow(d, k, "sieve_sigma_k", d);
        for (uint64_t m = d; m <= N; m += d)
            sig[m - 1] = detail::checked_add(sig[m - 1], dk, "sieve_sigma_k", m);
    }
    return {"sigma_" + std::to_string(k), std::move(sig)};
}

// ---------------------------------------------------------------------------
// Power scaling: t(n) -> t(n)/n^s in double precision
// ---------------------------------------------------------------------------

namespace detail {

inline std::string scaled_name(const std::string& base, double s) {
    if (s == 0.0) return base;
    char buf[64];
    if (s == 1.0)
        std::snprintf(buf, sizeof buf, "%s/Id", base.c_str());
    else
        std::snprintf(buf, sizeof buf, "%s/Id^%g", base.c_str(), s);
    return buf;
}

template <class Span>
std::vector<double> scale_values(Span v, double s) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = double(v[i]) / std::pow(double(i + 1), s);
    return out;
}

}  // namespace detail

inline RealFunctionTable scale_by_power(const IntFunctionTable& t, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("scale_by_power: s must be finite");
    return {detail::scaled_name(t.name(), s), detail::scale_values(t.values(), s)};
}

inline RealFunctionTable scale_by_power(const RealFunctionTable& t, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("scale_by_power: s must be finite");
    return {detail::scaled_name(t.name(), s), detail::scale_values(t.values(), s)};
}

// ---------------------------------------------------------------------------
// Brute-force single-point oracles.  Deliberately definition-level and
// independent of the sieves above.
// ---------------------------------------------------------------------------

// phi(n) = #{ m <= n : gcd(m, n) = 1 }
inline int64_t oracle_phi(uint64_t n) {
    if (n == 0) throw std::invalid_argument("oracle_phi: n must be >= 1");
    int64_t count = 0;
    for (uint64_t m = 1; m <= n; ++m)
        if (std::gcd(m, n) == 1) ++count;
    return count;
}

// mu(n) by trial factorization: 0 on a squared factor, else (-1)^(#primes)
inline int64_t oracle_mobius(uint64_t n) {
    if (n == 0) throw std::invalid_argument("oracle_mobius: n must be >= 1");
    int prime_factors = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++prime_factors;
    }
    if (n > 1) ++prime_factors;
    return (prime_factors % 2 == 0) ? 1 : -1;
}

// sigma_k(n) = sum of d^k over divisors d of n, by divisor enumeration
inline int64_t oracle_sigma_k(uint32_t k, uint64_t n) {
    if (n == 0) throw std::invalid_argument("oracle_sigma_k: n must be >= 1");
    int64_t total = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total = detail::checked_add(total, detail::checked_pow(d, k, "oracle_sigma_k", n),
                                    "oracle_sigma_k", n);
        const uint64_t q = n / d;
        if (q != d)
            total = detail::checked_add(total, detail::checked_pow(q, k, "oracle_sigma_k", n),
                                        "oracle_sigma_k", n);
    }
    return total;
}

// Dispatch by function id ("phi", "mu"/"mobius", "sigma"); k only used by sigma.
inline int64_t oracle_value(std::string_view id, uint32_t k, uint64_t n) {
    if (id == "phi") return oracle_phi(n);
    if (id == "mu" || id == "mobius") return oracle_mobius(n);
    if (id == "sigma") return oracle_sigma_k(k, n);
    throw std::invalid_argument("oracle_value: unknown function id '" + std::string(id) + "'");
}

}  // namespace dirichlet
