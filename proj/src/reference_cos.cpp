// Independent cosine oracle: exact rational series with explicit tail bounds.
// Nothing here touches the interval evaluator.

#include <cmath>

#include "radgon/radicals.hpp"

namespace radgon {

namespace {

struct Ball {
    BigRational center;
    BigRational radius;
};

BigRational two_pow_neg(unsigned bits) {
    BigInt d = 1;
    d <<= bits;
    return BigRational(BigInt(1), d);
}

// atan(1/k) = sum_j (-1)^j / ((2j+1) k^(2j+1)); alternating with decreasing
// terms, so the tail is bounded by the first omitted term.
Ball atan_inverse(long k, unsigned bits) {
    const BigRational eps = two_pow_neg(bits);
    const BigInt k2 = BigInt(k) * k;
    BigInt power = k;  // k^(2j+1)
    BigRational sum = 0;
    for (long j = 0;; ++j) {
        BigRational term(BigInt(1), power * (2 * j + 1));
        if (term < eps) return {sum, term};
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
        power *= k2;
    }
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
Ball pi_ball(unsigned bits) {
    auto a = atan_inverse(5, bits + 6);
    auto b = atan_inverse(239, bits + 6);
    return {BigRational(16) * a.center - BigRational(4) * b.center,
            BigRational(16) * a.radius + BigRational(4) * b.radius};
}

// Rounds x down to a multiple of 2^-bits, widening the radius accordingly.
Ball to_dyadic(const Ball& x, unsigned bits) {
    BigInt scale = 1;
    scale <<= bits;
    const BigRational scaled = x.center * BigRational(scale);
    BigInt n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
    BigRational center(n, scale);
    return {center, x.radius + (x.center - center)};
}

// cos x = sum_j (-1)^j x^(2j) / (2j)!. For 0 <= x <= 3.2 the terms decrease
// from j = 1 on, so the tail is bounded by the first omitted term once past it.
Ball cos_series(const BigRational& x, unsigned bits) {
    const BigRational eps = two_pow_neg(bits);
    const BigRational x2 = x * x;
    BigRational term = 1;
    BigRational sum = 0;
    for (long j = 0;; ++j) {
        if (j >= 2 && term < eps) return {sum, term};
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
        term *= x2 / BigRational((2 * j + 1) * (2 * j + 2));
    }
}

}  // namespace

CertifiedDecimal reference_cos_fraction(std::int64_t k, std::uint64_t n, unsigned digits) {
    if (n == 0) throw std::invalid_argument("reference_cos: n must be >= 1");
    const auto nn = static_cast<std::int64_t>(n);
    std::int64_t r = k % nn;
    if (r < 0) r += nn;
    // cos is even and 2 pi periodic: fold the angle into [0, pi]
    if (2 * r > nn) r = nn - r;
    const unsigned scale = digits + 8;
    if (r == 0) return CertifiedDecimal::exact(1, scale);
    if (2 * r == nn) return CertifiedDecimal::exact(-1, scale);
    if (4 * r == nn) return CertifiedDecimal::exact(0, scale);

    const unsigned bits = static_cast<unsigned>(std::ceil((digits + 10) * 3.3219280948873626)) + 16;
    const Ball pi = pi_ball(bits + 4);
    const BigRational factor(BigInt(2 * r), BigInt(nn));
    Ball angle = to_dyadic({factor * pi.center, factor * pi.radius}, bits + 4);
    // |cos a - cos b| <= |a - b|
    Ball c = cos_series(angle.center, bits);
    return CertifiedDecimal::from_ball(c.center, c.radius + angle.radius, scale);
}

CertifiedDecimal reference_cos(std::uint64_t n, unsigned digits) { return reference_cos_fraction(1, n, digits); }

}  // namespace radgon
