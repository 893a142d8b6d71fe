#include "radgon/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace radgon {

// ------------------------------------------------------------------- decide

std::string to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::ok:
            return "ok";
        case VerdictReason::bad_prime_factor:
            return "(*)";
        case VerdictReason::repeated_odd_prime:
            return "(**)";
    }
    return "?";
}

std::string ConstructibilityVerdict::summary() const {
    std::ostringstream os;
    os << (constructible ? "constructible " : "not constructible ") << n << " = " << factorization.to_string();
    if (!constructible) {
        os << " reason " << to_string(reason) << " prime " << offending_prime;
        if (reason == VerdictReason::bad_prime_factor)
            os << " (not a Fermat prime)";
        else
            os << " (squared)";
    }
    return os.str();
}

NotConstructible::NotConstructible(ConstructibilityVerdict v)
    : std::runtime_error(v.summary()), verdict_(std::move(v)) {}

ConstructibilityVerdict decide(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("decide: n must be >= 1");
    ConstructibilityVerdict v;
    v.n = n;
    v.factorization = factorize(n);
    for (const auto& [p, e] : v.factorization.pairs) {
        if (p == 2) continue;
        std::uint64_t witness = 0;
        VerdictReason reason = VerdictReason::ok;
        if (!is_fermat_prime(p)) {
            witness = p;
            reason = VerdictReason::bad_prime_factor;
        } else if (e >= 2) {
            witness = p * p;
            reason = VerdictReason::repeated_odd_prime;
        }
        if (witness != 0 && (v.witness == 0 || witness < v.witness)) {
            v.witness = witness;
            v.reason = reason;
            v.offending_prime = p;
        }
    }
    v.constructible = v.witness == 0;
    return v;
}

// ---------------------------------------------------------- Fermat descent

namespace {

/// cos(2 pi a / p) for every residue, at a fixed precision.
class ReferenceCosines {
public:
    ReferenceCosines(std::uint64_t p, unsigned digits) : values_(p) {
        for (std::uint64_t a = 1; a <= p / 2; ++a) {
            values_[a] = reference_cos_fraction(static_cast<std::int64_t>(a), p, digits);
            values_[p - a] = values_[a];
        }
    }

    /// Value of the period with this support (a real number: the supports used
    /// here are closed under a -> p - a).
    CertifiedDecimal period_value(const std::vector<std::uint64_t>& support) const {
        CertifiedDecimal total = CertifiedDecimal::exact(0, values_[support.front()].scale());
        for (auto a : support) total = total + values_[a];
        return total;
    }

private:
    std::vector<CertifiedDecimal> values_;
};

constexpr unsigned kMatchStartDigits = 20;
constexpr unsigned kMatchMaxDigits = 2560;

// Replaces alpha * A_{j0} + alpha * A_{j1} by alpha * A_j, bottom up, and drops
// zero counts. Everything left is a genuinely distinct combination.
std::map<PeriodIndex, BigInt> merge_siblings(std::map<PeriodIndex, BigInt> terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    int deepest = -1;
    for (const auto& [j, alpha] : terms) deepest = std::max(deepest, j.level());
    for (int lvl = deepest; lvl >= 0; --lvl) {
        std::vector<PeriodIndex> at_level;
        for (const auto& [j, alpha] : terms)
            if (j.level() == lvl && j.bits().back() == 0) at_level.push_back(j);
        for (const auto& j0 : at_level) {
            auto bits = j0.bits();
            bits.back() = 1;
            const PeriodIndex j1(bits);
            auto it0 = terms.find(j0), it1 = terms.find(j1);
            if (it1 == terms.end() || it0->second != it1->second) continue;
            bits.pop_back();
            const BigInt alpha = it0->second;
            terms.erase(it0);
            terms.erase(it1);
            terms[PeriodIndex(bits)] += alpha;
        }
    }
    return terms;
}

bool strictly_above(const CertifiedDecimal& a, const CertifiedDecimal& b) { return a.lower() > b.upper(); }

}  // namespace

RadicalExpr construct_fermat_prime(std::uint64_t p, std::uint64_t root, DescentTrace* trace) {
    if (!is_fermat_prime(p)) throw std::invalid_argument("construct_fermat_prime: " + std::to_string(p) + " is not a Fermat prime");
    if (p == 3) return RadicalExpr(BigRational(-1, 2));

    const PeriodSystem sys(p, root);
    const int last_level = static_cast<int>(sys.m()) - 2;
    if (trace) {
        trace->p = p;
        trace->root = sys.g();
        trace->steps.clear();
    }

    std::map<unsigned, ReferenceCosines> cosines;
    auto cosines_at = [&](unsigned digits) -> const ReferenceCosines& {
        auto it = cosines.find(digits);
        if (it == cosines.end()) it = cosines.emplace(digits, ReferenceCosines(p, digits)).first;
        return it->second;
    };

    // Level -1: the sum of all primitive p-th roots of unity.
    std::map<PeriodIndex, RadicalExpr> level{{PeriodIndex(), RadicalExpr(-1)}};
    // Every period built so far; merged product terms may refer to any level.
    std::map<PeriodIndex, RadicalExpr> known = level;
    // Numerators S +- sqrt(D) of the most recent level, kept so the final answer
    // can be written as (S + sqrt(D)) / 4 instead of ((S + sqrt(D)) / 2) / 2.
    std::map<PeriodIndex, RadicalExpr> numerators;

    for (int x = -1; x < last_level; ++x) {
        std::map<PeriodIndex, RadicalExpr> next;
        numerators.clear();
        for (const auto& [idx, sum] : level) {
            const auto decomposition = decompose_product(sys, idx);
            auto terms = merge_siblings(decomposition.parent_level_terms());
            BigRational constant(decomposition.alpha0);
            if (auto it = terms.find(PeriodIndex()); it != terms.end()) {
                constant -= BigRational(it->second);  // A_empty = -1
                terms.erase(it);
            }
            RadicalExpr product(constant);
            bool first = constant.is_zero();
            for (const auto& [j, alpha] : terms) {
                RadicalExpr term = alpha == 1 ? known.at(j) : RadicalExpr(BigRational(alpha)) * known.at(j);
                product = first ? term : product + term;
                first = false;
            }

            const RadicalExpr four_p = RadicalExpr(4) * product;
            const RadicalExpr disc = rsqrt(four_p.is_const() && four_p.value().sign() < 0
                                               ? sum * sum + RadicalExpr(-four_p.value())
                                               : sum * sum - four_p);
            RadicalExpr plus, minus;
            if (sum.is_const() && sum.value().sign() < 0) {
                plus = disc - RadicalExpr(-sum.value());
                minus = sum - disc;
            } else if (sum.is_const() && sum.value().is_zero()) {
                plus = disc;
                minus = -disc;
            } else {
                plus = sum + disc;
                minus = sum - disc;
            }
            const RadicalExpr larger = plus / RadicalExpr(2);
            const RadicalExpr smaller = minus / RadicalExpr(2);

            // Which root is which child: compare certified values of both
            // children (from the reference cosines) with both roots.
            const auto& supp0 = sys.support(idx.child(0));
            const auto& supp1 = sys.support(idx.child(1));
            bool decided = false, child0_larger = false;
            for (unsigned digits = kMatchStartDigits; digits <= kMatchMaxDigits && !decided; digits *= 2) {
                const auto& ref = cosines_at(digits);
                const auto v0 = ref.period_value(supp0);
                const auto v1 = ref.period_value(supp1);
                const auto hi = evaluate(larger, digits);
                const auto lo = evaluate(smaller, digits);
                if (v0.overlaps(v1) || hi.overlaps(lo)) continue;
                child0_larger = strictly_above(v0, v1);
                const auto& v_hi = child0_larger ? v0 : v1;
                const auto& v_lo = child0_larger ? v1 : v0;
                if (!hi.overlaps(v_hi) || !lo.overlaps(v_lo)) {
                    std::ostringstream os;
                    os << "construct_fermat_prime(" << p << "): roots of the quadratic for period " << idx.to_string()
                       << " do not match the children (" << hi.to_string() << " vs " << v_hi.to_string() << ")";
                    throw CertificationError(os.str());
                }
                decided = true;
            }
            if (!decided)
                throw CertificationError("construct_fermat_prime(" + std::to_string(p) +
                                         "): could not separate the children of period " + idx.to_string());

            const RadicalExpr& c0 = child0_larger ? larger : smaller;
            const RadicalExpr& c1 = child0_larger ? smaller : larger;
            next.emplace(idx.child(0), c0);
            next.emplace(idx.child(1), c1);
            numerators.emplace(idx.child(0), child0_larger ? plus : minus);
            numerators.emplace(idx.child(1), child0_larger ? minus : plus);
            if (trace) trace->steps.push_back({idx, sum, product, c0, c1, child0_larger});
        }
        known.insert(next.begin(), next.end());
        level = std::move(next);
    }

    // The all-zero index at the last level is eps + eps^-1 = 2 cos(2 pi / p).
    const auto zero = PeriodIndex::from_value(last_level, 0);
    return numerators.at(zero) / RadicalExpr(4);
}

// ------------------------------------------------------------- composition

RadicalExpr chebyshev_apply(std::uint64_t k, const RadicalExpr& c) {
    if (k == 0) throw std::invalid_argument("chebyshev_apply: k must be >= 1");
    const RadicalExpr two_c = RadicalExpr(2) * c;
    RadicalExpr prev(1), cur = c;
    for (std::uint64_t j = 1; j < k; ++j) {
        RadicalExpr next = two_c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RadicalExpr half_angle(const RadicalExpr& c, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("half_angle: n must be >= 2");
    const RadicalExpr radicand = (RadicalExpr(1) + c) / RadicalExpr(2);
    if (!radicand.is_const() && certified_sign(radicand) < 0)
        throw std::domain_error("half_angle: (1 + c) / 2 is negative; c is not cos(2 pi / " + std::to_string(n) + ")");
    if (radicand.is_const() && radicand.value().sign() < 0)
        throw std::domain_error("half_angle: (1 + c) / 2 is negative");
    return rsqrt(radicand);
}

RadicalExpr sin_from_cos(const RadicalExpr& c, std::int64_t k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sin_from_cos: n must be >= 1");
    const auto nn = static_cast<std::int64_t>(n);
    std::int64_t r = k % nn;
    if (r < 0) r += nn;
    if (r == 0 || 2 * r == nn) return RadicalExpr(0);
    const RadicalExpr radicand = RadicalExpr(1) - c * c;
    const int sign = radicand.is_const() ? radicand.value().sign() : certified_sign(radicand);
    if (sign < 0) throw std::domain_error("sin_from_cos: |c| > 1");
    const RadicalExpr s = rsqrt(radicand);
    return 2 * r < nn ? s : -s;
}

RadicalExpr combine_coprime(std::uint64_t m, std::uint64_t n, const RadicalExpr& cm, const RadicalExpr& cn) {
    const auto [g, x, y] = extended_gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
    if (g != 1)
        throw std::invalid_argument("combine_coprime: gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
    // 2 pi / (m n) = 2 pi x / n + 2 pi y / m
    auto multiple = [](std::int64_t k, std::uint64_t modulus, const RadicalExpr& c) {
        const auto mm = static_cast<std::int64_t>(modulus);
        std::int64_t r = k % mm;
        if (r < 0) r += mm;
        const std::int64_t folded = std::min(r, mm - r);  // cos is even
        RadicalExpr cos_k = folded == 0 ? RadicalExpr(1) : chebyshev_apply(static_cast<std::uint64_t>(folded), c);
        RadicalExpr sin_k = sin_from_cos(cos_k, r, modulus);
        return std::pair{cos_k, sin_k};
    };
    const auto [cos_a, sin_a] = multiple(x, n, cn);
    const auto [cos_b, sin_b] = multiple(y, m, cm);
    return cos_a * cos_b - sin_a * sin_b;
}

RadicalExpr construct(std::uint64_t n, unsigned certify_digits) {
    auto verdict = decide(n);
    if (!verdict.constructible) throw NotConstructible(std::move(verdict));

    unsigned twos = 0;
    RadicalExpr c(1);
    std::uint64_t built = 1;
    for (const auto& [p, e] : verdict.factorization.pairs) {
        if (p == 2) {
            twos = e;
            continue;
        }
        RadicalExpr cp = construct_fermat_prime(p);
        c = built == 1 ? cp : combine_coprime(built, p, c, cp);
        built *= p;
    }
    for (unsigned i = 0; i < twos; ++i) {
        if (built == 1) {
            c = RadicalExpr(-1);  // cos(2 pi / 2)
        } else if (built == 2) {
            c = RadicalExpr(0);  // cos(2 pi / 4)
        } else {
            c = half_angle(c, built);
        }
        built *= 2;
    }

    const auto value = evaluate(c, certify_digits);
    const auto reference = reference_cos(n, certify_digits);
    if (!value.overlaps(reference))
        throw CertificationError("construct(" + std::to_string(n) + "): result " + value.to_string() +
                                 " disagrees with cos(2 pi / n) = " + reference.to_string());
    return c;
}

}  // namespace radgon
