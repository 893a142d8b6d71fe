#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "radgon/radicals.hpp"
#include "radical_internal.hpp"

namespace radgon {

namespace {

BigInt pow10(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

BigRational pow10_signed(long e) {
    return e >= 0 ? BigRational(pow10(static_cast<unsigned>(e))) : BigRational(1, pow10(static_cast<unsigned>(-e)));
}

BigInt floor_of(const BigRational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

BigInt ceil_of(const BigRational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

// RAII mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct Interval {
    Real lo;
    Real hi;
    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

// Precision was not enough to decide a division or square root.
struct Indeterminate {};

class IntervalEvaluator {
public:
    explicit IntervalEvaluator(mpfr_prec_t prec) : prec_(prec) {}

    const Interval& eval(const RadicalExpr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
        Interval out(prec_);
        switch (e.op()) {
            case RadicalExpr::Op::Const: {
                const auto& q = e.value().raw();
                mpfr_set_q(out.lo.get(), q.get_mpq_t(), MPFR_RNDD);
                mpfr_set_q(out.hi.get(), q.get_mpq_t(), MPFR_RNDU);
                break;
            }
            case RadicalExpr::Op::Add: {
                const auto& a = eval(e.left());
                const auto& b = eval(e.right());
                mpfr_add(out.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
                mpfr_add(out.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
                break;
            }
            case RadicalExpr::Op::Sub: {
                const auto& a = eval(e.left());
                const auto& b = eval(e.right());
                mpfr_sub(out.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
                mpfr_sub(out.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
                break;
            }
            case RadicalExpr::Op::Mul: {
                const auto& a = eval(e.left());
                const auto& b = eval(e.right());
                corners(out, a, b, mpfr_mul);
                break;
            }
            case RadicalExpr::Op::Div: {
                const auto& a = eval(e.left());
                const auto& b = eval(e.right());
                if (mpfr_sgn(b.lo.get()) <= 0 && mpfr_sgn(b.hi.get()) >= 0) throw Indeterminate{};
                corners(out, a, b, mpfr_div);
                break;
            }
            case RadicalExpr::Op::Sqrt: {
                const auto& a = eval(e.arg());
                if (mpfr_sgn(a.hi.get()) < 0) throw EvaluationError("sqrt of a negative value");
                if (mpfr_sgn(a.lo.get()) <= 0) throw Indeterminate{};
                mpfr_sqrt(out.lo.get(), a.lo.get(), MPFR_RNDD);
                mpfr_sqrt(out.hi.get(), a.hi.get(), MPFR_RNDU);
                break;
            }
        }
        return memo_.emplace(e.id(), std::move(out)).first->second;
    }

private:
    using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    void corners(Interval& out, const Interval& a, const Interval& b, BinaryFn fn) {
        Real down(prec_), up(prec_);
        bool first = true;
        for (const Real* x : {&a.lo, &a.hi}) {
            for (const Real* y : {&b.lo, &b.hi}) {
                fn(down.get(), x->get(), y->get(), MPFR_RNDD);
                fn(up.get(), x->get(), y->get(), MPFR_RNDU);
                if (first || mpfr_less_p(down.get(), out.lo.get())) mpfr_set(out.lo.get(), down.get(), MPFR_RNDD);
                if (first || mpfr_greater_p(up.get(), out.hi.get())) mpfr_set(out.hi.get(), up.get(), MPFR_RNDU);
                first = false;
            }
        }
    }

    mpfr_prec_t prec_;
    std::unordered_map<const RadicalExpr::Node*, Interval> memo_;
};

mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 32;
}

CertifiedDecimal to_decimal(const Interval& iv, unsigned scale) {
    const BigInt t = pow10(scale);
    const mpfr_prec_t prec = mpfr_get_prec(iv.lo.get()) + bits_for_digits(scale);
    Real tmp(prec);
    BigInt lo, hi;
    mpfr_mul_z(tmp.get(), iv.lo.get(), t.get_mpz_t(), MPFR_RNDD);
    mpfr_get_z(lo.get_mpz_t(), tmp.get(), MPFR_RNDD);
    mpfr_mul_z(tmp.get(), iv.hi.get(), t.get_mpz_t(), MPFR_RNDU);
    mpfr_get_z(hi.get_mpz_t(), tmp.get(), MPFR_RNDU);
    BigInt mid;
    BigInt sum = lo + hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
    return CertifiedDecimal(mid, hi - mid, scale);
}

constexpr unsigned kGuardDigits = 8;

}  // namespace

// ----------------------------------------------------------- CertifiedDecimal

CertifiedDecimal::CertifiedDecimal(BigInt mid_scaled, BigInt radius_scaled, unsigned scale)
    : mid_(std::move(mid_scaled)), rad_(std::move(radius_scaled)), scale_(scale) {
    if (rad_ < 0) throw std::invalid_argument("CertifiedDecimal: negative radius");
}

CertifiedDecimal CertifiedDecimal::from_ball(const BigRational& center, const BigRational& radius, unsigned scale) {
    if (radius.sign() < 0) throw std::invalid_argument("CertifiedDecimal: negative radius");
    const BigRational t(pow10(scale));
    const BigRational c = center * t;
    BigInt mid = floor_of(c + BigRational(1, 2));
    BigInt rad = ceil_of(radius * t + abs(c - BigRational(mid)));
    return CertifiedDecimal(std::move(mid), std::move(rad), scale);
}

CertifiedDecimal CertifiedDecimal::exact(const BigRational& value, unsigned scale) {
    return from_ball(value, 0, scale);
}

BigRational CertifiedDecimal::midpoint() const { return BigRational(mid_, pow10(scale_)); }

BigRational CertifiedDecimal::radius() const { return BigRational(rad_, pow10(scale_)); }

bool CertifiedDecimal::contains(const BigRational& x) const { return abs(x - midpoint()) <= radius(); }

bool CertifiedDecimal::overlaps(const CertifiedDecimal& o) const {
    return abs(midpoint() - o.midpoint()) <= radius() + o.radius();
}

BigRational CertifiedDecimal::distance_bound(const CertifiedDecimal& o) const {
    return abs(midpoint() - o.midpoint()) + radius() + o.radius();
}

BigRational CertifiedDecimal::magnitude_bound() const { return abs(midpoint()) + radius(); }

int CertifiedDecimal::certified_sign() const {
    if (mid_ - rad_ > 0) return 1;
    if (mid_ + rad_ < 0) return -1;
    return 0;
}

bool CertifiedDecimal::radius_within(unsigned digits) const {
    if (digits >= scale_) return rad_ == 0 || radius() <= pow10_signed(-static_cast<long>(digits));
    return rad_ <= pow10(scale_ - digits);
}

CertifiedDecimal CertifiedDecimal::rounded(unsigned digits) const { return from_ball(midpoint(), radius(), digits); }

CertifiedDecimal operator+(const CertifiedDecimal& a, const CertifiedDecimal& b) {
    const unsigned scale = std::max(a.scale_, b.scale_);
    const BigInt fa = pow10(scale - a.scale_), fb = pow10(scale - b.scale_);
    return CertifiedDecimal(a.mid_ * fa + b.mid_ * fb, a.rad_ * fa + b.rad_ * fb, scale);
}

std::string CertifiedDecimal::mid_string() const {
    BigInt mag = ::abs(mid_);
    std::string digits = mag.get_str(10);
    if (digits.size() <= scale_) digits.insert(0, scale_ + 1 - digits.size(), '0');
    std::string out = mid_ < 0 ? "-" : "";
    out += digits.substr(0, digits.size() - scale_);
    if (scale_ > 0) out += "." + digits.substr(digits.size() - scale_);
    return out;
}

std::string CertifiedDecimal::radius_string() const { return format_bound(radius()); }

std::string CertifiedDecimal::to_string() const { return mid_string() + " +/- " + radius_string(); }

std::string format_bound(const BigRational& value) {
    if (value.sign() < 0) throw std::invalid_argument("format_bound: negative value");
    if (value.is_zero()) return "0";
    long e = static_cast<long>(mpz_sizeinbase(value.numerator().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(value.denominator().get_mpz_t(), 10));
    while (pow10_signed(e) > value) --e;
    while (pow10_signed(e + 1) <= value) ++e;
    // two significant digits, rounded up
    BigInt k = ceil_of(value / pow10_signed(e - 1));
    if (k >= 100) {
        k = 10;
        ++e;
    }
    std::string s = k.get_str(10);
    std::ostringstream os;
    os << s[0] << '.' << s[1] << 'e' << e;
    return os.str();
}

// ------------------------------------------------------------------ evaluate

CertifiedDecimal evaluate(const RadicalExpr& expr, unsigned digits, unsigned max_digits) {
    if (digits == 0) throw std::invalid_argument("evaluate: digits must be >= 1");
    unsigned working = std::min(std::max(64u, 2 * digits), max_digits);
    for (;;) {
        try {
            IntervalEvaluator ev(bits_for_digits(working));
            auto dec = to_decimal(ev.eval(expr), digits + kGuardDigits);
            if (dec.radius_within(digits)) return dec;
        } catch (const Indeterminate&) {
        }
        if (working >= max_digits)
            throw EvaluationError("evaluate: no certified enclosure within " + std::to_string(max_digits) +
                                  " working digits (division by zero or square root of zero?)");
        working = working > max_digits / 2 ? max_digits : working * 2;
    }
}

int certified_sign(const RadicalExpr& expr, unsigned max_digits) {
    if (expr.is_const()) return expr.value().sign();
    for (unsigned working = 64;; working *= 2) {
        working = std::min(working, max_digits);
        try {
            IntervalEvaluator ev(bits_for_digits(working));
            const auto& iv = ev.eval(expr);
            if (mpfr_sgn(iv.lo.get()) > 0) return 1;
            if (mpfr_sgn(iv.hi.get()) < 0) return -1;
            if (mpfr_zero_p(iv.lo.get()) && mpfr_zero_p(iv.hi.get())) return 0;
        } catch (const Indeterminate&) {
        }
        if (working >= max_digits)
            throw EvaluationError("certified_sign: sign undecided at " + std::to_string(max_digits) + " digits");
    }
}

}  // namespace radgon
