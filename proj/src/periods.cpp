#include "radgon/periods.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "radgon/numtheory.hpp"

namespace radgon {

// ---------------------------------------------------------------- PeriodIndex

PeriodIndex::PeriodIndex(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw PeriodError("PeriodIndex: digits must be 0 or 1");
}

PeriodIndex PeriodIndex::from_value(int level, std::uint64_t value) {
    if (level < -1) throw PeriodError("PeriodIndex: level must be >= -1");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(level + 1));
    for (auto& b : bits) {
        b = value & 1;
        value >>= 1;
    }
    if (value != 0) throw PeriodError("PeriodIndex: value does not fit the level");
    return PeriodIndex(std::move(bits));
}

std::uint64_t PeriodIndex::value() const {
    std::uint64_t v = 0;
    for (std::size_t i = bits_.size(); i-- > 0;) v = (v << 1) | bits_[i];
    return v;
}

PeriodIndex PeriodIndex::child(std::uint8_t bit) const {
    auto bits = bits_;
    bits.push_back(bit);
    return PeriodIndex(std::move(bits));
}

std::string PeriodIndex::to_string() const {
    if (bits_.empty()) return "-";
    std::string s;
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
}

// --------------------------------------------------------------- PeriodSystem

struct PeriodSystem::Cache {
    std::mutex mutex;
    // levels[x + 1][value] = sorted support
    std::vector<std::unique_ptr<std::vector<std::vector<std::uint64_t>>>> levels;
};

PeriodSystem::PeriodSystem(std::uint64_t p, std::uint64_t root) : p_(p), cache_(std::make_shared<Cache>()) {
    if (p < 5 || !is_fermat_prime(p))
        throw PeriodError("PeriodSystem: " + std::to_string(p) + " is not a Fermat prime >= 5");
    m_ = 0;
    while ((std::uint64_t{1} << m_) < p - 1) ++m_;
    if (root == 0) {
        g_ = find_primitive_root(p);
    } else {
        if (!is_primitive_root(root, p))
            throw PeriodError("PeriodSystem: " + std::to_string(root) + " is not a primitive root mod " +
                              std::to_string(p));
        g_ = root % p;
    }
    powers_.resize(p - 1);
    std::uint64_t x = 1;
    for (auto& pw : powers_) {
        pw = x;
        x = x * g_ % p;
    }
    cache_->levels.resize(m_ + 1);
}

std::uint64_t PeriodSystem::power(std::int64_t e) const {
    const auto order = static_cast<std::int64_t>(p_ - 1);
    std::int64_t r = e % order;
    if (r < 0) r += order;
    return powers_[static_cast<std::size_t>(r)];
}

const std::vector<std::vector<std::uint64_t>>& PeriodSystem::level_table(int level) const {
    if (level < -1 || level > static_cast<int>(m_) - 1)
        throw PeriodError("PeriodSystem: level " + std::to_string(level) + " outside [-1, " +
                          std::to_string(static_cast<int>(m_) - 1) + "]");
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->levels[static_cast<std::size_t>(level + 1)];
    if (!slot) {
        const std::uint64_t count = std::uint64_t{1} << (level + 1);
        const std::int64_t step = std::int64_t{1} << (level + 1);
        const std::uint64_t terms = std::uint64_t{1} << (m_ - static_cast<unsigned>(level + 1));
        auto table = std::make_unique<std::vector<std::vector<std::uint64_t>>>(count);
        for (std::uint64_t v = 0; v < count; ++v) {
            auto& supp = (*table)[v];
            supp.reserve(terms);
            for (std::uint64_t s = 0; s < terms; ++s)
                supp.push_back(power(static_cast<std::int64_t>(s) * step - static_cast<std::int64_t>(v)));
            std::sort(supp.begin(), supp.end());
        }
        slot = std::move(table);
    }
    return *slot;
}

const std::vector<std::uint64_t>& PeriodSystem::support(const PeriodIndex& idx) const {
    if (idx.length() > m_)
        throw PeriodError("period index " + idx.to_string() + " longer than m = " + std::to_string(m_));
    return level_table(idx.level())[idx.value()];
}

std::vector<PeriodIndex> PeriodSystem::indices_at(int level) const {
    if (level < -1 || level > static_cast<int>(m_) - 1)
        throw PeriodError("PeriodSystem: no periods at level " + std::to_string(level));
    std::vector<PeriodIndex> out;
    const std::uint64_t count = std::uint64_t{1} << (level + 1);
    out.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) out.push_back(PeriodIndex::from_value(level, v));
    return out;
}

// ----------------------------------------------------------------- operations

std::vector<std::uint64_t> period_support(const PeriodSystem& sys, const PeriodIndex& idx) {
    return sys.support(idx);
}

GroupRingVector period_vector(const PeriodSystem& sys, const PeriodIndex& idx) {
    GroupRingVector v(sys.p());
    for (auto a : sys.support(idx)) v.add_term(a);
    return v;
}

std::uint64_t alpha_count(const PeriodSystem& sys, const PeriodIndex& idx, std::uint64_t s) {
    if (idx.length() + 1 > sys.m())
        throw PeriodError("alpha_count: index " + idx.to_string() + " has no children");
    const auto p = sys.p();
    const auto x = static_cast<unsigned>(idx.length());
    const auto v = static_cast<std::int64_t>(idx.value());
    const std::int64_t step = std::int64_t{1} << (x + 1);
    const std::int64_t offset = std::int64_t{1} << x;
    const std::int64_t terms = std::int64_t{1} << (sys.m() - x - 1);
    const auto g = static_cast<std::int64_t>(sys.g());
    s %= p;
    std::uint64_t count = 0;
    for (std::int64_t k = 0; k < terms; ++k) {
        const auto a = mod_pow(g, k * step - v, p);
        for (std::int64_t l = 0; l < terms; ++l) {
            const auto b = mod_pow(g, l * step + offset - v, p);
            if ((a + b) % p == s) ++count;
        }
    }
    return count;
}

std::map<PeriodIndex, BigInt> ProductDecomposition::parent_level_terms() const {
    std::map<PeriodIndex, BigInt> out;
    for (const auto& [idx, alpha] : terms) {
        auto bits = idx.bits();
        bits.pop_back();
        PeriodIndex parent(std::move(bits));
        auto [it, inserted] = out.emplace(parent, alpha);
        if (!inserted && it->second != alpha)
            throw PeriodIdentityViolation("sibling counts differ under parent " + parent.to_string());
    }
    return out;
}

ProductDecomposition decompose_product(const PeriodSystem& sys, const PeriodIndex& idx) {
    if (idx.length() + 1 > sys.m())
        throw PeriodError("decompose_product: index " + idx.to_string() + " has no children");
    const auto product = group_ring_multiply(period_vector(sys, idx.child(0)), period_vector(sys, idx.child(1)));

    ProductDecomposition d;
    d.level = static_cast<int>(idx.length());
    d.alpha0 = product[0];
    if (d.alpha0 != alpha_count(sys, idx, 0))
        throw PeriodIdentityViolation("decompose_product: alpha(0) disagrees with congruence count");

    BigInt accounted = d.alpha0;
    for (const auto& j : sys.indices_at(d.level)) {
        const auto& supp = sys.support(j);
        const BigInt& alpha = product[supp.front()];
        for (auto a : supp) {
            if (product[a] != alpha) {
                std::ostringstream os;
                os << "decompose_product(p=" << sys.p() << ", idx=" << idx.to_string()
                   << "): coefficient not constant on period " << j.to_string() << " (" << alpha.get_str()
                   << " at " << supp.front() << ", " << product[a].get_str() << " at " << a << ")";
                throw PeriodIdentityViolation(os.str());
            }
        }
        if (alpha != alpha_count(sys, idx, supp.front()))
            throw PeriodIdentityViolation("decompose_product: convolution and congruence count disagree on period " +
                                          j.to_string());
        accounted += alpha * static_cast<unsigned long>(supp.size());
        d.terms.emplace(j, alpha);
    }
    if (accounted != product.mass())
        throw PeriodIdentityViolation("decompose_product: decomposition does not account for every term");
    return d;
}

std::string format_period_row(const PeriodSystem& sys, const PeriodIndex& idx) {
    const auto& supp = sys.support(idx);
    std::ostringstream os;
    os << "bits=" << idx.to_string() << " level=" << idx.level() << " support={";
    for (std::size_t i = 0; i < supp.size(); ++i) os << (i ? "," : "") << supp[i];
    os << "} terms=" << supp.size();
    return os.str();
}

}  // namespace radgon
