#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "radgon/radicals.hpp"
#include "radical_internal.hpp"

namespace radgon {

namespace {

const std::shared_ptr<const RadicalExpr::Node>& zero_node() {
    static const auto node = std::make_shared<const RadicalExpr::Node>(RadicalExpr::Node{RadicalExpr::Op::Const, 0, {}});
    return node;
}

bool is_binary(RadicalExpr::Op op) { return op != RadicalExpr::Op::Const && op != RadicalExpr::Op::Sqrt; }

}  // namespace

RadicalExpr::RadicalExpr() : node_(zero_node()) {}

RadicalExpr::RadicalExpr(long v) : RadicalExpr(BigRational(v)) {}

RadicalExpr::RadicalExpr(BigRational v)
    : node_(v.is_zero() ? zero_node() : std::make_shared<const Node>(Node{Op::Const, std::move(v), {}})) {}

RadicalExpr RadicalExpr::make(Op op, RadicalExpr left, RadicalExpr right) {
    if (!is_binary(op)) throw ExpressionError("RadicalExpr::make: op is not binary");
    if (op == Op::Div && right.is_const() && right.value().is_zero())
        throw ExpressionError("RadicalExpr: division by the constant zero");
    return RadicalExpr(std::make_shared<const Node>(Node{op, 0, {std::move(left), std::move(right)}}));
}

RadicalExpr RadicalExpr::make_sqrt(RadicalExpr arg) {
    if (arg.is_const()) {
        if (arg.value().sign() <= 0)
            throw ExpressionError("RadicalExpr: sqrt of nonpositive constant " + arg.value().to_string());
    } else if (certified_sign(arg) <= 0) {
        throw ExpressionError("RadicalExpr: sqrt argument is not positive");
    }
    return RadicalExpr(std::make_shared<const Node>(Node{Op::Sqrt, 0, {std::move(arg)}}));
}

RadicalExpr::Op RadicalExpr::op() const { return node_->op; }

const BigRational& RadicalExpr::value() const {
    if (node_->op != Op::Const) throw ExpressionError("RadicalExpr::value: not a constant");
    return node_->value;
}

const RadicalExpr& RadicalExpr::left() const {
    if (node_->kids.empty()) throw ExpressionError("RadicalExpr::left: constant has no operands");
    return node_->kids[0];
}

const RadicalExpr& RadicalExpr::right() const {
    if (node_->kids.size() < 2) throw ExpressionError("RadicalExpr::right: not a binary node");
    return node_->kids[1];
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) {
    if (a.is_const() && b.is_const()) return RadicalExpr(a.value() + b.value());
    return RadicalExpr::make(RadicalExpr::Op::Add, a, b);
}

RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) {
    if (a.is_const() && b.is_const()) return RadicalExpr(a.value() - b.value());
    return RadicalExpr::make(RadicalExpr::Op::Sub, a, b);
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
    if (a.is_const() && b.is_const()) return RadicalExpr(a.value() * b.value());
    return RadicalExpr::make(RadicalExpr::Op::Mul, a, b);
}

RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
    if (b.is_const() && b.value().is_zero()) throw ExpressionError("RadicalExpr: division by the constant zero");
    if (a.is_const() && b.is_const()) return RadicalExpr(a.value() / b.value());
    return RadicalExpr::make(RadicalExpr::Op::Div, a, b);
}

RadicalExpr RadicalExpr::operator-() const {
    if (is_const()) return RadicalExpr(-value());
    return make(Op::Sub, RadicalExpr(), *this);
}

RadicalExpr rsqrt(const RadicalExpr& a) {
    if (a.is_const()) {
        if (a.value().sign() < 0) throw ExpressionError("rsqrt: negative constant " + a.value().to_string());
        BigRational root;
        if (a.value().exact_sqrt(root)) return RadicalExpr(root);
    }
    return RadicalExpr::make_sqrt(a);
}

// ------------------------------------------------------------------ structure

std::size_t StructuralInterner::id_of(const RadicalExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Key key{static_cast<int>(e.op()), 0, 0, {}};
    if (e.is_const()) {
        key.text = e.value().to_string();
    } else {
        key.left = id_of(e.left());
        if (e.op() != RadicalExpr::Op::Sqrt) key.right = id_of(e.right());
    }
    auto [it, inserted] = table_.emplace(std::move(key), table_.size() + 1);
    memo_.emplace(e.id(), it->second);
    return it->second;
}

bool structurally_equal(const RadicalExpr& a, const RadicalExpr& b) {
    if (a.id() == b.id()) return true;
    StructuralInterner interner;
    return interner.id_of(a) == interner.id_of(b);
}

unsigned sqrt_depth(const RadicalExpr& expr) {
    std::unordered_map<const RadicalExpr::Node*, unsigned> memo;
    auto visit = [&](auto&& self, const RadicalExpr& e) -> unsigned {
        if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
        unsigned d = 0;
        switch (e.op()) {
            case RadicalExpr::Op::Const:
                break;
            case RadicalExpr::Op::Sqrt:
                d = 1 + self(self, e.arg());
                break;
            default:
                d = std::max(self(self, e.left()), self(self, e.right()));
        }
        memo.emplace(e.id(), d);
        return d;
    };
    return visit(visit, expr);
}

ExpressionMetrics measure(const RadicalExpr& expr) {
    ExpressionMetrics out;
    std::unordered_map<const RadicalExpr::Node*, BigInt> sizes;
    auto visit = [&](auto&& self, const RadicalExpr& e) -> const BigInt& {
        if (auto it = sizes.find(e.id()); it != sizes.end()) return it->second;
        BigInt size = 1;
        if (e.op() == RadicalExpr::Op::Sqrt) {
            ++out.sqrt_nodes;
            size += self(self, e.arg());
        } else if (!e.is_const()) {
            size += self(self, e.left());
            size += self(self, e.right());
        }
        ++out.distinct_nodes;
        return sizes.emplace(e.id(), std::move(size)).first->second;
    };
    out.tree_size = visit(visit, expr);
    return out;
}

ExtensionTower extract_tower(const RadicalExpr& expr) {
    ExtensionTower tower;
    StructuralInterner interner;
    std::unordered_map<const RadicalExpr::Node*, bool> visited;
    std::unordered_map<std::size_t, bool> seen_radicands;
    auto visit = [&](auto&& self, const RadicalExpr& e) -> void {
        if (!visited.emplace(e.id(), true).second) return;
        if (e.is_const()) return;
        self(self, e.left());
        if (e.op() == RadicalExpr::Op::Sqrt) {
            if (seen_radicands.emplace(interner.id_of(e.arg()), true).second) tower.radicands.push_back(e.arg());
        } else {
            self(self, e.right());
        }
    };
    visit(visit, expr);
    return tower;
}

}  // namespace radgon
