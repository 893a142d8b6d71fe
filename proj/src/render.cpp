#include <json.hpp>

#include <ostream>
#include <sstream>

#include "radgon/radicals.hpp"

namespace radgon {

namespace {

using Op = RadicalExpr::Op;

// Binding strength used to decide parenthesization. Atoms bind tightest.
constexpr int kSum = 1, kProduct = 2, kAtom = 3;

bool is_negation(const RadicalExpr& e) {
    return e.op() == Op::Sub && e.left().is_const() && e.left().value().is_zero();
}

class TextWriter {
public:
    TextWriter(std::ostream& os, bool latex) : os_(os), latex_(latex) {}

    void write(const RadicalExpr& e) {
        if (is_negation(e)) {
            os_ << '-';
            child(e.right(), kProduct);
            return;
        }
        switch (e.op()) {
            case Op::Const:
                constant(e.value());
                break;
            case Op::Add:
                child(e.left(), 0);
                os_ << (latex_ ? "+" : " + ");
                child(e.right(), kProduct);
                break;
            case Op::Sub:
                child(e.left(), 0);
                os_ << (latex_ ? "-" : " - ");
                child(e.right(), kProduct);
                break;
            case Op::Mul:
                child(e.left(), kProduct);
                os_ << (latex_ ? " \\cdot " : " * ");
                child(e.right(), kAtom);
                break;
            case Op::Div:
                if (latex_) {
                    os_ << "\\frac{";
                    write(e.left());
                    os_ << "}{";
                    write(e.right());
                    os_ << '}';
                } else {
                    child(e.left(), kProduct);
                    os_ << " / ";
                    child(e.right(), kAtom);
                }
                break;
            case Op::Sqrt:
                os_ << (latex_ ? "\\sqrt{" : "sqrt(");
                write(e.arg());
                os_ << (latex_ ? "}" : ")");
                break;
        }
    }

private:
    int strength(const RadicalExpr& e) const {
        if (is_negation(e)) return kSum;
        switch (e.op()) {
            case Op::Const:
                // "-3" and "1/2" are not atoms in infix text
                if (e.value().sign() < 0) return 0;
                return e.value().is_integer() || latex_ ? kAtom : kProduct;
            case Op::Add:
            case Op::Sub:
                return kSum;
            case Op::Mul:
                return kProduct;
            case Op::Div:
                return latex_ ? kAtom : kProduct;
            case Op::Sqrt:
                return kAtom;
        }
        return 0;
    }

    void child(const RadicalExpr& e, int needed) {
        if (strength(e) >= needed) {
            write(e);
            return;
        }
        os_ << (latex_ ? "\\left(" : "(");
        write(e);
        os_ << (latex_ ? "\\right)" : ")");
    }

    void constant(const BigRational& q) {
        if (!latex_ || q.is_integer()) {
            os_ << q.to_string();
            return;
        }
        if (q.sign() < 0) os_ << '-';
        os_ << "\\frac{" << BigInt(::abs(q.numerator())).get_str() << "}{" << q.denominator().get_str() << '}';
    }

    std::ostream& os_;
    bool latex_;
};

void write_json(const RadicalExpr& e, std::ostream& os) {
    switch (e.op()) {
        case Op::Const:
            os << R"({"op":"const","num":")" << e.value().numerator().get_str() << R"(","den":")"
               << e.value().denominator().get_str() << "\"}";
            return;
        case Op::Sqrt:
            os << R"({"op":"sqrt","arg":)";
            write_json(e.arg(), os);
            os << '}';
            return;
        default:
            break;
    }
    const char* name = e.op() == Op::Add ? "add" : e.op() == Op::Sub ? "sub" : e.op() == Op::Mul ? "mul" : "div";
    os << R"({"op":")" << name << R"(","args":[)";
    write_json(e.left(), os);
    os << ',';
    write_json(e.right(), os);
    os << "]}";
}

BigInt parse_integer(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw ExpressionError(std::string("const node needs string field \"") + field + "\"");
    const auto& s = j[field].get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw ExpressionError("empty integer in \"" + std::string(field) + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ExpressionError("malformed integer \"" + s + "\"");
    return BigInt(s, 10);
}

void expect_keys(const nlohmann::json& j, std::initializer_list<const char*> keys) {
    if (j.size() != keys.size()) throw ExpressionError("unexpected fields in node " + j.dump());
    for (const char* k : keys)
        if (!j.contains(k)) throw ExpressionError(std::string("node is missing \"") + k + "\"");
}

RadicalExpr from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
        throw ExpressionError("expression node must be an object with a string \"op\"");
    const auto& op = j["op"].get_ref<const std::string&>();
    if (op == "const") {
        expect_keys(j, {"op", "num", "den"});
        BigInt num = parse_integer(j, "num"), den = parse_integer(j, "den");
        if (den < 1) throw ExpressionError("const denominator must be >= 1");
        BigInt g = gcd(num, den);
        if (g != 1) throw ExpressionError("const " + num.get_str() + "/" + den.get_str() + " is not reduced");
        return RadicalExpr(BigRational(num, den));
    }
    if (op == "sqrt") {
        expect_keys(j, {"op", "arg"});
        return RadicalExpr::make_sqrt(from_json(j["arg"]));
    }
    Op kind;
    if (op == "add")
        kind = Op::Add;
    else if (op == "sub")
        kind = Op::Sub;
    else if (op == "mul")
        kind = Op::Mul;
    else if (op == "div")
        kind = Op::Div;
    else
        throw ExpressionError("unknown op \"" + op + "\"");
    expect_keys(j, {"op", "args"});
    const auto& args = j["args"];
    if (!args.is_array() || args.size() != 2) throw ExpressionError("\"args\" must be an array of two nodes");
    return RadicalExpr::make(kind, from_json(args[0]), from_json(args[1]));
}

}  // namespace

void render(const RadicalExpr& expr, RenderFormat format, std::ostream& os) {
    if (format == RenderFormat::Json) {
        write_json(expr, os);
        return;
    }
    TextWriter(os, format == RenderFormat::Latex).write(expr);
}

std::string render(const RadicalExpr& expr, RenderFormat format) {
    std::ostringstream os;
    render(expr, format, os);
    return os.str();
}

RadicalExpr parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ExpressionError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
}

}  // namespace radgon
