#pragma once

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "radgon/radicals.hpp"

namespace radgon {

struct RadicalExpr::Node {
    Op op;
    BigRational value;
    // empty for Const, one entry for Sqrt, two for binary ops
    std::vector<RadicalExpr> kids;
};

/// Hash-consing table: structurally equal subtrees get the same id.
class StructuralInterner {
public:
    std::size_t id_of(const RadicalExpr& e);

private:
    struct Key {
        int op;
        std::size_t left;
        std::size_t right;
        std::string text;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    std::map<Key, std::size_t> table_;
    std::unordered_map<const RadicalExpr::Node*, std::size_t> memo_;
};

}  // namespace radgon
