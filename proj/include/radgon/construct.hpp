#pragma once

/**
 * @file construct.hpp
 * @brief Decide whether cos(2 pi / n) is a real radical over Q by square roots
 * only, and build an explicit expression when it is.
 *
 * Fermat primes go through the Gaussian-period descent: at each level every
 * period is split into its two children, which are the roots of
 * t^2 - S t + P with S the parent period and P read off the exact group-ring
 * product of the children. Composite n are assembled from their prime parts
 * by angle addition (via Bezout coefficients) and then halved.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radgon/numtheory.hpp"
#include "radgon/periods.hpp"
#include "radgon/radicals.hpp"

namespace radgon {

enum class VerdictReason {
    ok,
    bad_prime_factor,    // (*) an odd prime factor that is not a Fermat prime
    repeated_odd_prime,  // (**) the square of an odd prime divides n
};

struct ConstructibilityVerdict {
    std::uint64_t n = 0;
    bool constructible = false;
    Factorization factorization;
    VerdictReason reason = VerdictReason::ok;
    /// Prime at fault; 0 when constructible.
    std::uint64_t offending_prime = 0;
    /// Smallest divisor of n exhibiting the fault: the prime itself for (*),
    /// its square for (**). 0 when constructible.
    std::uint64_t witness = 0;

    /// "constructible 60 = 2^2 * 3 * 5", "not constructible 9 = 3^2 reason (**) prime 3"
    std::string summary() const;
};

std::string to_string(VerdictReason r);

class NotConstructible : public std::runtime_error {
public:
    explicit NotConstructible(ConstructibilityVerdict v);
    const ConstructibilityVerdict& verdict() const { return verdict_; }

private:
    ConstructibilityVerdict verdict_;
};

/// Certified numerics could not settle a choice (root matching, final check).
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// cos(2 pi / n) is constructible iff n = 2^a p_1 ... p_l with distinct
/// Fermat primes p_i. Among several faults the smallest witness divisor wins.
ConstructibilityVerdict decide(std::uint64_t n);

/// One split of the descent: the children of `parent` are the roots of
/// t^2 - sum * t + product.
struct DescentStep {
    PeriodIndex parent;
    RadicalExpr sum;
    RadicalExpr product;
    RadicalExpr child0;
    RadicalExpr child1;
    /// True when child0 took the "+ sqrt" root.
    bool child0_is_larger = false;
};

struct DescentTrace {
    std::uint64_t p = 0;
    std::uint64_t root = 0;
    std::vector<DescentStep> steps;
};

/// Expression for cos(2 pi / p), p a Fermat prime. For p = 2^m + 1 >= 5 the
/// descent stops at level m - 2, where the all-zero period is 2 cos(2 pi / p).
/// `root` selects the primitive root (0 = smallest); `trace` receives every split.
RadicalExpr construct_fermat_prime(std::uint64_t p, std::uint64_t root = 0, DescentTrace* trace = nullptr);

/// T_k(c) by T_{j+1} = 2 c T_j - T_{j-1}; maps cos(t) to cos(k t). k >= 1.
RadicalExpr chebyshev_apply(std::uint64_t k, const RadicalExpr& c);

/// cos(pi / n) from c = cos(2 pi / n), n >= 2, as sqrt((1 + c) / 2).
RadicalExpr half_angle(const RadicalExpr& c, std::uint64_t n);

/// sin(2 pi k / n) from c = cos(2 pi k / n); the sign comes from the angle.
RadicalExpr sin_from_cos(const RadicalExpr& c, std::int64_t k, std::uint64_t n);

/// cos(2 pi / (m n)) from cm = cos(2 pi / m), cn = cos(2 pi / n), gcd(m, n) = 1.
RadicalExpr combine_coprime(std::uint64_t m, std::uint64_t n, const RadicalExpr& cm, const RadicalExpr& cn);

/// Full assembly for any constructible n >= 1; throws NotConstructible.
/// The result is checked against reference_cos(n) at `certify_digits`.
RadicalExpr construct(std::uint64_t n, unsigned certify_digits = 30);

}  // namespace radgon
