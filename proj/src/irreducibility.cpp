#include "radgon/irreducibility.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <sstream>

#include "radgon/construct.hpp"
#include "radgon/numtheory.hpp"

namespace radgon {

bool eisenstein_check(const IntPolynomial& poly, std::uint64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("eisenstein_check: " + std::to_string(q) + " is not prime");
    if (poly.degree() < 1) throw std::invalid_argument("eisenstein_check: polynomial must have degree >= 1");
    const BigInt prime(static_cast<unsigned long>(q));
    auto divisible = [](const BigInt& a, const BigInt& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; };
    const auto coeffs = poly.coefficients();
    if (divisible(coeffs.back(), prime)) return false;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        if (!divisible(coeffs[i], prime)) return false;
    return !divisible(coeffs.front(), prime * prime);
}

IntPolynomial cyclotomic_poly_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic_poly_prime: " + std::to_string(p) + " is not prime");
    return IntPolynomial(std::vector<BigInt>(p, BigInt(1)));
}

IntPolynomial cyclotomic_poly_prime_square(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic_poly_prime_square: " + std::to_string(p) + " is not prime");
    std::vector<BigInt> c(p * (p - 1) + 1, BigInt(0));
    for (std::uint64_t k = 0; k < p; ++k) c[k * p] = 1;
    return IntPolynomial(std::move(c));
}

std::string NonConstructibilityCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["witness"] = witness;
    j["case"] = witness == eisenstein_prime ? "(*)" : "(**)";
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : witness_poly.coefficients()) coeffs.push_back(c.get_str());
    j["witness_poly"] = std::move(coeffs);
    j["eisenstein_prime"] = eisenstein_prime;
    j["shifted_ok"] = shifted_ok;
    j["degree"] = degree;
    j["degree_power_of_two"] = degree_power_of_two;
    j["valid"] = valid();
    return j.dump();
}

std::string NonConstructibilityCertificate::summary() const {
    std::ostringstream os;
    os << "cos(2 pi / " << n << ") is not constructible: divisor " << witness << ", cyclotomic polynomial of degree "
       << degree << (degree_power_of_two ? " (a power of two!)" : " (not a power of two)")
       << ", Eisenstein at " << eisenstein_prime << " after x -> x + 1: " << (shifted_ok ? "yes" : "NO");
    return os.str();
}

namespace {

NonConstructibilityCertificate certificate_for_witness(std::uint64_t witness, std::uint64_t prime) {
    static std::mutex mutex;
    static std::map<std::uint64_t, NonConstructibilityCertificate> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(witness); it != cache.end()) return it->second;
    }
    NonConstructibilityCertificate cert;
    cert.witness = witness;
    cert.eisenstein_prime = prime;
    cert.witness_poly = witness == prime ? cyclotomic_poly_prime(prime) : cyclotomic_poly_prime_square(prime);
    cert.shifted_ok = eisenstein_check(poly_shift(cert.witness_poly), prime);
    cert.degree = static_cast<std::uint64_t>(cert.witness_poly.degree());
    cert.degree_power_of_two = is_power_of_two(cert.degree);
    std::lock_guard lock(mutex);
    cache.emplace(witness, cert);
    return cert;
}

}  // namespace

NonConstructibilityCertificate certify_nonconstructible(std::uint64_t n) {
    const auto verdict = decide(n);
    if (verdict.constructible)
        throw std::invalid_argument("certify_nonconstructible: cos(2 pi / " + std::to_string(n) + ") is constructible");
    auto cert = certificate_for_witness(verdict.witness, verdict.offending_prime);
    cert.n = n;
    return cert;
}

std::uint64_t phi_oracle(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi_oracle: n must be >= 1");
    return euler_phi(factorize(n));
}

}  // namespace radgon
