#pragma once

/**
 * @file irreducibility.hpp
 * @brief Eisenstein checks and non-constructibility certificates.
 *
 * A certificate names a divisor d of n for which cos(2 pi / d) is already
 * not constructible: an odd prime q that is not a Fermat prime, or the square
 * of an odd prime. The witness polynomial is the cyclotomic polynomial of d;
 * after x -> x + 1 it is Eisenstein at the prime, hence irreducible, and its
 * degree is not a power of two.
 */

#include <cstdint>
#include <string>

#include "radgon/exact.hpp"

namespace radgon {

/// Leading coefficient not divisible by q, every other coefficient divisible
/// by q, constant term not divisible by q^2. Requires deg P >= 1 and q prime.
bool eisenstein_check(const IntPolynomial& poly, std::uint64_t q);

/// x^(p-1) + ... + x + 1
IntPolynomial cyclotomic_poly_prime(std::uint64_t p);

/// x^(p(p-1)) + x^(p(p-2)) + ... + x^p + 1
IntPolynomial cyclotomic_poly_prime_square(std::uint64_t p);

struct NonConstructibilityCertificate {
    std::uint64_t n = 0;
    /// Divisor of n the certificate is about (q or p^2).
    std::uint64_t witness = 0;
    IntPolynomial witness_poly;
    std::uint64_t eisenstein_prime = 0;
    bool shifted_ok = false;
    std::uint64_t degree = 0;
    bool degree_power_of_two = false;

    bool valid() const { return shifted_ok && !degree_power_of_two; }
    /// JSON object; coefficients as decimal strings, constant term first.
    std::string to_json() const;
    /// One-line human summary for diagnostics.
    std::string summary() const;
};

/// Certificate for the smallest witness divisor of n; throws
/// std::invalid_argument if n is constructible.
NonConstructibilityCertificate certify_nonconstructible(std::uint64_t n);

/// Euler's totient.
std::uint64_t phi_oracle(std::uint64_t n);

}  // namespace radgon
