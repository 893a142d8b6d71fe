#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic carriers: big rationals, integer polynomials and
 * the (unreduced) group ring of Z/p.
 *
 * Big integers are GMP's mpz_class. BigRational wraps mpq_class so the
 * canonical form (reduced, positive denominator) is an invariant of the type
 * rather than something callers must remember.
 */

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace radgon {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& v) : q_(v) {}
    /// num/den reduced to lowest terms; throws std::domain_error if den == 0.
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "a" or "a/b" in base 10.
    static BigRational parse(const std::string& text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p" or "p/q".
    std::string to_string() const { return q_.get_str(10); }

    /// Exact square root if this is the square of a rational.
    bool exact_sqrt(BigRational& out) const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    /// Throws std::domain_error on division by zero.
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

BigRational abs(const BigRational& r);

/// Dense integer polynomial, constant term first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const BigInt> coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero past the degree.
    BigInt coefficient(std::size_t i) const;
    const BigInt& leading() const;

    BigInt evaluate(const BigInt& x) const;

    /// "x^2 + 2*x + 2"
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Q(x) = P(x + shift), exact. Uses repeated synthetic division, O(deg^2)
/// additions and no multiplications when shift = 1.
IntPolynomial poly_shift(const IntPolynomial& p, long shift = 1);

/// Formal sum of eps^0 .. eps^(p-1) with nonnegative integer counts.
/// Never reduced by 1 + eps + ... + eps^(p-1) = 0, so every element has one
/// representation and coefficients can be compared directly.
class GroupRingVector {
public:
    explicit GroupRingVector(std::uint64_t modulus);
    GroupRingVector(std::uint64_t modulus, std::vector<BigInt> coeffs);

    /// eps^exponent (exponent reduced mod p).
    static GroupRingVector monomial(std::uint64_t modulus, std::uint64_t exponent);

    std::uint64_t modulus() const { return p_; }
    const BigInt& operator[](std::uint64_t residue) const { return coeffs_.at(residue); }
    void add_term(std::uint64_t residue, const BigInt& count = 1);
    std::span<const BigInt> coefficients() const { return coeffs_; }

    /// Sum of all counts.
    BigInt mass() const;

    friend bool operator==(const GroupRingVector&, const GroupRingVector&) = default;

private:
    std::uint64_t p_;
    std::vector<BigInt> coeffs_;
};

class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// w[t] = sum over a + b = t (mod p) of u[a] * v[b]. Schoolbook O(p^2).
GroupRingVector group_ring_multiply(const GroupRingVector& u, const GroupRingVector& v);

}  // namespace radgon
