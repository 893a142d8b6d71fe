#pragma once

/**
 * @file radicals.hpp
 * @brief Real radical expressions over Q with certified evaluation.
 *
 * A RadicalExpr is a handle to an immutable node: a rational constant, one of
 * the four field operations, or a principal square root. Nodes may be shared,
 * so an expression is really a DAG; every traversal here memoizes on node
 * identity and stays linear in the number of distinct nodes.
 *
 * Two ways to build nodes:
 *   - the operators and rsqrt() fold rational subtrees exactly
 *     (Const op Const becomes a Const, sqrt of a rational square becomes a Const);
 *   - RadicalExpr::make() builds exactly the node asked for (used by the parser).
 * Both check the node invariants: no division by the constant zero, and every
 * square root argument is certified strictly positive.
 */

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "radgon/exact.hpp"

namespace radgon {

class EvaluationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ExpressionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A real number known to lie in [mid - radius, mid + radius], both stored as
/// integers scaled by 10^-scale.
class CertifiedDecimal {
public:
    CertifiedDecimal() = default;
    CertifiedDecimal(BigInt mid_scaled, BigInt radius_scaled, unsigned scale);

    /// Smallest decimal ball at `scale` containing [center - radius, center + radius].
    static CertifiedDecimal from_ball(const BigRational& center, const BigRational& radius, unsigned scale);
    static CertifiedDecimal exact(const BigRational& value, unsigned scale);

    unsigned scale() const { return scale_; }
    const BigInt& mid_scaled() const { return mid_; }
    const BigInt& radius_scaled() const { return rad_; }

    BigRational midpoint() const;
    BigRational radius() const;
    BigRational lower() const { return midpoint() - radius(); }
    BigRational upper() const { return midpoint() + radius(); }

    bool contains(const BigRational& x) const;
    bool overlaps(const CertifiedDecimal& o) const;
    /// Upper bound on |x - y| for any x in this ball and y in o.
    BigRational distance_bound(const CertifiedDecimal& o) const;
    /// Upper bound on |x| for any x in this ball.
    BigRational magnitude_bound() const;
    /// +1 / -1 when the ball excludes zero, 0 when it straddles or touches it.
    int certified_sign() const;
    /// True iff the radius is at most 10^-digits.
    bool radius_within(unsigned digits) const;

    /// Re-centered at `digits` decimals; the radius absorbs the rounding.
    CertifiedDecimal rounded(unsigned digits) const;

    /// Exact sum of the two balls (rescaled to the finer scale).
    friend CertifiedDecimal operator+(const CertifiedDecimal& a, const CertifiedDecimal& b);

    /// Midpoint in plain positional notation with all `scale` decimals.
    std::string mid_string() const;
    /// Radius as a short upward-rounded scientific bound, e.g. "3e-41"; "0" if exact.
    std::string radius_string() const;
    /// "<mid> +/- <radius>"
    std::string to_string() const;

private:
    BigInt mid_;
    BigInt rad_;
    unsigned scale_ = 0;
};

/// Upward-rounded scientific rendering of a nonnegative rational ("2.1e-50").
std::string format_bound(const BigRational& value);

class RadicalExpr {
public:
    enum class Op { Const, Add, Sub, Mul, Div, Sqrt };
    struct Node;

    RadicalExpr();  // the constant 0
    RadicalExpr(long v);  // NOLINT(google-explicit-constructor)
    RadicalExpr(BigRational v);  // NOLINT(google-explicit-constructor)

    /// Exact node construction without folding. Arity must match the op.
    static RadicalExpr make(Op op, RadicalExpr left, RadicalExpr right);
    static RadicalExpr make_sqrt(RadicalExpr arg);

    Op op() const;
    bool is_const() const { return op() == Op::Const; }
    /// Value of a Const node; throws otherwise.
    const BigRational& value() const;
    /// Left operand of a binary node, argument of a Sqrt.
    const RadicalExpr& left() const;
    const RadicalExpr& right() const;
    const RadicalExpr& arg() const { return left(); }

    const Node* id() const { return node_.get(); }

    friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
    friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
    RadicalExpr operator-() const;

private:
    explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Principal square root; folds rational squares, rejects nonpositive arguments
/// (a Const 0 argument folds to 0).
RadicalExpr rsqrt(const RadicalExpr& a);

/// Same tree shape and constants.
bool structurally_equal(const RadicalExpr& a, const RadicalExpr& b);

/// Certified enclosure with radius <= 10^-digits. Working precision starts at
/// max(64, 2 * digits) decimal digits and doubles until the radius bound is
/// met, division and square root are decidable, or max_digits is exceeded.
CertifiedDecimal evaluate(const RadicalExpr& expr, unsigned digits, unsigned max_digits = 1u << 20);

/// Sign of the value, certified with escalating precision; throws
/// EvaluationError when it cannot be settled within max_digits (e.g. the
/// value is exactly zero but not written as a constant).
int certified_sign(const RadicalExpr& expr, unsigned max_digits = 4096);

/// cos(2 pi / n) by a Maclaurin series with pi from Machin's formula, in
/// exact rational arithmetic with explicit tail bounds. Shares no code with
/// evaluate(). Radius <= 10^-digits.
CertifiedDecimal reference_cos(std::uint64_t n, unsigned digits);
/// cos(2 pi k / n), same method.
CertifiedDecimal reference_cos_fraction(std::int64_t k, std::uint64_t n, unsigned digits);

enum class RenderFormat { Text, Latex, Json };

/// Writes the fully expanded tree; shared subtrees are repeated.
void render(const RadicalExpr& expr, RenderFormat format, std::ostream& os);
std::string render(const RadicalExpr& expr, RenderFormat format);

/// Parses the JSON schema written by render(..., Json). Throws ExpressionError
/// on schema violations.
RadicalExpr parse_json(const std::string& text);

/// Maximum number of Sqrt nodes on a root-to-leaf path.
unsigned sqrt_depth(const RadicalExpr& expr);

struct ExpressionMetrics {
    std::uint64_t distinct_nodes = 0;
    std::uint64_t sqrt_nodes = 0;
    /// Node count of the expanded tree (what render writes).
    BigInt tree_size;
};

ExpressionMetrics measure(const RadicalExpr& expr);

/// Radicands a_1, ..., a_r with Q_{k+1} = Q_k[sqrt(a_k)]; a_k only uses square
/// roots of earlier radicands.
struct ExtensionTower {
    std::vector<RadicalExpr> radicands;
    std::size_t size() const { return radicands.size(); }
};

/// Distinct Sqrt radicands, innermost first, deduplicated structurally.
ExtensionTower extract_tower(const RadicalExpr& expr);

}  // namespace radgon
