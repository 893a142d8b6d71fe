#pragma once

/**
 * @file numtheory.hpp
 * @brief Elementary number theory on machine integers.
 *
 * Everything here works on 64-bit values with 128-bit intermediates.
 * Factorization is plain trial division; the tools built on top target
 * n up to about 10^6, where that is instantaneous.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radgon {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> pairs;

    std::uint64_t value() const;
    /// Exponent of `prime`, 0 when absent.
    unsigned exponent_of(std::uint64_t prime) const;
    /// "2^2 * 3 * 5"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct BezoutResult {
    std::int64_t gcd;
    std::int64_t x;
    std::int64_t y;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);

bool is_power_of_two(std::uint64_t n);

/// True iff p is prime and p - 1 is a power of two.
bool is_fermat_prime(std::uint64_t p);

/// base^exp mod modulus. A negative exponent inverts base first and throws
/// NotInvertible when gcd(base, modulus) != 1.
std::uint64_t mod_pow(std::int64_t base, std::int64_t exp, std::uint64_t modulus);

/// Inverse of a modulo m via extended_gcd.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

/// g = gcd(m, n) > 0 with m*x + n*y = g. Requires (m, n) != (0, 0).
BezoutResult extended_gcd(std::int64_t m, std::int64_t n);

/// True iff g^1, ..., g^(p-1) are pairwise distinct mod p. Exhaustive.
bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Smallest g >= 2 that passes is_primitive_root. Requires p prime, p >= 3.
std::uint64_t find_primitive_root(std::uint64_t p);

/// Euler's totient from the factorization.
std::uint64_t euler_phi(const Factorization& f);

}  // namespace radgon
