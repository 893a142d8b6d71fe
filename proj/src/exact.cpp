#include "radgon/exact.hpp"

#include <ostream>
#include <sstream>

namespace radgon {

// ---------------------------------------------------------------- BigRational

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    auto slash = text.find('/');
    BigInt num, den = 1;
    auto read = [&](const std::string& s, BigInt& out) {
        if (s.empty() || out.set_str(s, 10) != 0)
            throw std::invalid_argument("BigRational: cannot parse '" + text + "'");
    };
    if (slash == std::string::npos) {
        read(text, num);
    } else {
        read(text.substr(0, slash), num);
        read(text.substr(slash + 1), den);
    }
    return BigRational(num, den);
}

bool BigRational::exact_sqrt(BigRational& out) const {
    if (sign() < 0) return false;
    BigInt n = q_.get_num(), d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    BigInt rn = sqrt(n), rd = sqrt(d);
    out = BigRational(rn, rd);
    return true;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

// -------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("IntPolynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = ::abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || k == 0) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << '*';
            os << 'x';
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

IntPolynomial poly_shift(const IntPolynomial& p, long shift) {
    std::vector<BigInt> a(p.coefficients().begin(), p.coefficients().end());
    const std::size_t n = a.size();
    // Taylor shift by repeated synthetic division by (x - shift).
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            if (shift == 1)
                a[j] += a[j + 1];
            else
                a[j] += a[j + 1] * shift;
        }
    }
    return IntPolynomial(std::move(a));
}

// ------------------------------------------------------------ GroupRingVector

GroupRingVector::GroupRingVector(std::uint64_t modulus) : p_(modulus), coeffs_(modulus, BigInt(0)) {
    if (modulus < 2) throw std::invalid_argument("GroupRingVector: modulus must be >= 2");
}

GroupRingVector::GroupRingVector(std::uint64_t modulus, std::vector<BigInt> coeffs)
    : p_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus < 2) throw std::invalid_argument("GroupRingVector: modulus must be >= 2");
    if (coeffs_.size() != modulus)
        throw std::invalid_argument("GroupRingVector: expected " + std::to_string(modulus) + " coefficients");
    for (const auto& c : coeffs_)
        if (c < 0) throw std::invalid_argument("GroupRingVector: negative count");
}

GroupRingVector GroupRingVector::monomial(std::uint64_t modulus, std::uint64_t exponent) {
    GroupRingVector v(modulus);
    v.add_term(exponent % modulus);
    return v;
}

void GroupRingVector::add_term(std::uint64_t residue, const BigInt& count) {
    if (count < 0) throw std::invalid_argument("GroupRingVector: negative count");
    coeffs_.at(residue % p_) += count;
}

BigInt GroupRingVector::mass() const {
    BigInt total = 0;
    for (const auto& c : coeffs_) total += c;
    return total;
}

GroupRingVector group_ring_multiply(const GroupRingVector& u, const GroupRingVector& v) {
    if (u.modulus() != v.modulus())
        throw ModulusMismatch("group_ring_multiply: moduli " + std::to_string(u.modulus()) + " and " +
                              std::to_string(v.modulus()) + " differ");
    const std::uint64_t p = u.modulus();
    std::vector<BigInt> w(p, BigInt(0));
    for (std::uint64_t a = 0; a < p; ++a) {
        if (u[a] == 0) continue;
        for (std::uint64_t b = 0; b < p; ++b) {
            if (v[b] == 0) continue;
            std::uint64_t t = a + b;
            if (t >= p) t -= p;
            w[t] += u[a] * v[b];
        }
    }
    return GroupRingVector(p, std::move(w));
}

}  // namespace radgon
