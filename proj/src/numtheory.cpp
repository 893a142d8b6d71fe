#include "radgon/numtheory.hpp"

#include <sstream>

namespace radgon {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
    if (a >= 0) return static_cast<std::uint64_t>(a) % m;
    // -(a+1) avoids overflow at INT64_MIN
    std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;
    return (m - 1 - r) % m;
}

}  // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (const auto& [p, e] : pairs)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

unsigned Factorization::exponent_of(std::uint64_t prime) const {
    for (const auto& pp : pairs)
        if (pp.prime == prime) return pp.exponent;
    return 0;
}

std::string Factorization::to_string() const {
    if (pairs.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << " * ";
        os << pairs[i].prime;
        if (pairs[i].exponent > 1) os << '^' << pairs[i].exponent;
    }
    return os.str();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    auto strip = [&](std::uint64_t d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) f.pairs.push_back({d, e});
    };
    strip(2);
    for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
    if (n > 1) f.pairs.push_back({n, 1});
    return f;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool is_fermat_prime(std::uint64_t p) { return p >= 3 && is_power_of_two(p - 1) && is_prime(p); }

BezoutResult extended_gcd(std::int64_t m, std::int64_t n) {
    if (m == 0 && n == 0) throw std::invalid_argument("extended_gcd: both arguments zero");
    std::int64_t old_r = m, r = n;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    auto r = reduce(a, m);
    auto [g, x, y] = extended_gcd(static_cast<std::int64_t>(r), static_cast<std::int64_t>(m));
    (void)y;
    if (g != 1)
        throw NotInvertible("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
    return reduce(x, m);
}

std::uint64_t mod_pow(std::int64_t base, std::int64_t exp, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    std::uint64_t b = reduce(base, modulus);
    std::uint64_t e;
    if (exp < 0) {
        b = mod_inverse(static_cast<std::int64_t>(b), modulus);
        e = static_cast<std::uint64_t>(-(exp + 1)) + 1;
    } else {
        e = static_cast<std::uint64_t>(exp);
    }
    std::uint64_t result = 1 % modulus;
    while (e) {
        if (e & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        e >>= 1;
    }
    return result;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
    if (p < 2 || g % p == 0) return false;
    std::vector<bool> seen(p, false);
    std::uint64_t x = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
        x = mul_mod(x, g % p, p);
        if (seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("find_primitive_root: " + std::to_string(p) + " is not an odd prime");
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) return g;
    throw std::logic_error("find_primitive_root: no primitive root found for " + std::to_string(p));
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : f.pairs) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

}  // namespace radgon
