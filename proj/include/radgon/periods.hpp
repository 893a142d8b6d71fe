#pragma once

/**
 * @file periods.hpp
 * @brief The binary tree of Gaussian periods for a Fermat prime p = 2^m + 1.
 *
 * With g a primitive root mod p and eps a primitive p-th root of unity, the
 * period with binary index (i_0 ... i_x) is
 *
 *     A_{i_0..i_x} = sum_{s = 0}^{2^(m-x-1) - 1} eps^(g^(s * 2^(x+1) - v)),
 *     v = i_0 + 2 i_1 + ... + 2^x i_x,
 *
 * exponents of g taken mod p - 1. The empty index is A = eps + ... + eps^(p-1).
 * A period is represented here by its support: the set of residues a with
 * eps^a in the sum. Level x holds the 2^(x+1) periods with x + 1 bits;
 * the empty index sits at level -1.
 *
 * Everything in this module is combinatorial. Products are taken in the
 * unreduced group ring, so counts are exact nonnegative integers.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "radgon/exact.hpp"

namespace radgon {

/// Binary digits (i_0, ..., i_x); empty for the root of the tree.
class PeriodIndex {
public:
    PeriodIndex() = default;
    explicit PeriodIndex(std::vector<std::uint8_t> bits);
    /// The level-`level` index whose digit value is `value`.
    static PeriodIndex from_value(int level, std::uint64_t value);

    int level() const { return static_cast<int>(bits_.size()) - 1; }
    std::size_t length() const { return bits_.size(); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    /// i_0 * 2^0 + ... + i_x * 2^x
    std::uint64_t value() const;
    PeriodIndex child(std::uint8_t bit) const;
    /// "0110", or "-" for the empty index.
    std::string to_string() const;

    friend auto operator<=>(const PeriodIndex&, const PeriodIndex&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

class PeriodError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a period product is not constant on a period support.
class PeriodIdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Product of the two children of one period, grouped by period.
struct ProductDecomposition {
    /// Level of the children (= length of the parent index).
    int level = 0;
    /// Coefficient of eps^0.
    BigInt alpha0;
    /// Count attached to each period at `level`.
    std::map<PeriodIndex, BigInt> terms;

    /// Sibling counts merged into the parent level (level - 1), checked equal.
    std::map<PeriodIndex, BigInt> parent_level_terms() const;
};

class PeriodSystem {
public:
    /// p must be a Fermat prime >= 5. Without a root the smallest primitive
    /// root is used; a supplied root is checked exhaustively.
    explicit PeriodSystem(std::uint64_t p, std::uint64_t root = 0);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t g() const { return g_; }

    /// g^e mod p with e reduced mod p - 1 (e may be negative).
    std::uint64_t power(std::int64_t e) const;

    /// Sorted support of A_idx; size 2^(m - length(idx)).
    const std::vector<std::uint64_t>& support(const PeriodIndex& idx) const;
    /// Every index at `level`, ordered by digit value.
    std::vector<PeriodIndex> indices_at(int level) const;

private:
    struct Cache;
    const std::vector<std::vector<std::uint64_t>>& level_table(int level) const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t g_;
    std::vector<std::uint64_t> powers_;
    std::shared_ptr<Cache> cache_;
};

std::vector<std::uint64_t> period_support(const PeriodSystem& sys, const PeriodIndex& idx);

/// Indicator vector of the support.
GroupRingVector period_vector(const PeriodSystem& sys, const PeriodIndex& idx);

/// Number of pairs (k, l) with
///   g^(k 2^(x+1) - v) + g^(l 2^(x+1) + 2^x - v) = s (mod p),
/// x = length(idx), v = idx.value(), k and l ranging over the child periods'
/// terms. Brute-force enumeration, independent of the convolution path.
std::uint64_t alpha_count(const PeriodSystem& sys, const PeriodIndex& idx, std::uint64_t s);

/// Multiplies the two children of idx in the group ring and splits the result
/// into eps^0 plus a combination of the children-level periods. Requires
/// length(idx) <= m - 1. Throws PeriodIdentityViolation if a coefficient is
/// not constant across some period support, or disagrees with alpha_count.
ProductDecomposition decompose_product(const PeriodSystem& sys, const PeriodIndex& idx);

/// One dump line: bits, level, sorted support, term count.
std::string format_period_row(const PeriodSystem& sys, const PeriodIndex& idx);

}  // namespace radgon
