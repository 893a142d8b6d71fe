// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "radgon/construct.hpp"
#include "radgon/irreducibility.hpp"
#include "radgon/periods.hpp"
#include "radgon/radicals.hpp"

using namespace radgon;
using Op = RadicalExpr::Op;

namespace {

// Pinned limits.
constexpr double kDecideSeconds = 10.0;
constexpr double kHeptadecagonSeconds = 1.0;
constexpr double kTwoFiftySevenSeconds = 60.0;
constexpr unsigned kPentagonDigits = 30;
constexpr unsigned kHeptadecagonDigits = 50;
constexpr unsigned kTwoFiftySevenDigits = 100;
constexpr unsigned kCompositeDigits = 30;
constexpr unsigned kWitnessExponent = 40;
constexpr unsigned kWitnessDigits = 60;
constexpr int kSampled257 = 1000;
constexpr int kRandomExpressions = 100;

BigRational ten_to_minus(unsigned k) {
    BigInt d = 1;
    for (unsigned i = 0; i < k; ++i) d *= 10;
    return BigRational(BigInt(1), d);
}

bool power_of_two(std::uint64_t v) { return v && (v & (v - 1)) == 0; }

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok) ++failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
                out.note.str().empty() ? "" : ": ", out.note.str().c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool within(const CertifiedDecimal& a, const CertifiedDecimal& b, unsigned digits) {
    return a.overlaps(b) && a.distance_bound(b) <= ten_to_minus(digits) * 2;
}

class RandomExpr {
public:
    explicit RandomExpr(std::uint64_t seed) : rng_(seed) {}

    RadicalExpr operator()(int depth) {
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
        switch (pick(rng_)) {
            case 0:
                return constant();
            case 1:
                return RadicalExpr::make(Op::Add, (*this)(depth - 1), (*this)(depth - 1));
            case 2:
                return RadicalExpr::make(Op::Sub, (*this)(depth - 1), (*this)(depth - 1));
            case 3:
                return RadicalExpr::make(Op::Mul, (*this)(depth - 1), (*this)(depth - 1));
            case 4:
                return RadicalExpr::make(Op::Div, (*this)(depth - 1), positive(depth - 1));
            default:
                return positive(depth - 1);
        }
    }

private:
    RadicalExpr constant() {
        std::uniform_int_distribution<long> num(-99, 99), den(1, 16);
        return RadicalExpr(BigRational(BigInt(num(rng_)), BigInt(den(rng_))));
    }

    RadicalExpr positive(int depth) {
        std::uniform_int_distribution<long> c(1, 9);
        auto e = depth > 0 ? (*this)(depth - 1) : constant();
        return RadicalExpr::make_sqrt(RadicalExpr::make(Op::Add, RadicalExpr::make(Op::Mul, e, e), c(rng_)));
    }

    std::mt19937_64 rng_;
};

bool round_trips(const RadicalExpr& e) {
    const auto text = render(e, RenderFormat::Json);
    const auto back = parse_json(text);
    return structurally_equal(e, back) && render(back, RenderFormat::Json) == text;
}

std::uint64_t pair_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint64_t s,
                         std::uint64_t p) {
    std::uint64_t n = 0;
    for (auto x : a)
        for (auto y : b)
            if ((x + y) % p == s) ++n;
    return n;
}

void check_witnesses(Outcome& out, std::uint64_t p) {
    DescentTrace trace;
    construct_fermat_prime(p, 0, &trace);
    out.require(!trace.steps.empty(), "empty trace");
    const auto tol = ten_to_minus(kWitnessExponent);
    for (const auto& s : trace.steps) {
        for (const auto& e : {s.child0, s.child1}) {
            const auto residual = evaluate(e * e - s.sum * e + s.product, kWitnessDigits);
            out.require(residual.magnitude_bound() < tol, "p=" + std::to_string(p) + " parent " + s.parent.to_string());
        }
    }
}

}  // namespace

int main() {
    criterion(1, "decide matches the totient power-of-two oracle for n <= 100000", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        for (std::uint64_t n = 1; n <= 100000; ++n)
            out.require(decide(n).constructible == power_of_two(phi_oracle(n)), "n=" + std::to_string(n));
        const double t = seconds_since(start);
        out.require(t < kDecideSeconds, "took " + std::to_string(t) + " s");
    });

    criterion(2, "pentagon equals (sqrt(5) - 1) / 4 to 30 digits", [](Outcome& out) {
        const auto literal = RadicalExpr::make(Op::Div, RadicalExpr::make(Op::Sub, RadicalExpr::make_sqrt(5), 1), 4);
        const auto a = evaluate(construct(5), kPentagonDigits);
        const auto b = evaluate(literal, kPentagonDigits);
        out.require(a.overlaps(b) && a.distance_bound(b) <= ten_to_minus(kPentagonDigits), "mismatch");
    });

    criterion(3, "heptadecagon to 50 digits, sqrt depth 3", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const auto e = construct(17);
        const auto got = evaluate(e, kHeptadecagonDigits);
        const double t = seconds_since(start);
        out.require(within(got, reference_cos(17, kHeptadecagonDigits), kHeptadecagonDigits), "value");
        out.require(sqrt_depth(e) == 3, "sqrt_depth " + std::to_string(sqrt_depth(e)));
        out.require(t < kHeptadecagonSeconds, "took " + std::to_string(t) + " s");
    });

    criterion(4, "257-gon to 100 digits, sqrt depth 7", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const auto e = construct(257);
        const auto got = evaluate(e, kTwoFiftySevenDigits);
        const auto want = reference_cos(257, kTwoFiftySevenDigits);
        const double t = seconds_since(start);
        out.require(within(got, want, kTwoFiftySevenDigits), "value");
        out.require(sqrt_depth(e) == 7, "sqrt_depth " + std::to_string(sqrt_depth(e)));
        out.require(t < kTwoFiftySevenSeconds, "took " + std::to_string(t) + " s");
    });

    criterion(5, "composite assembly to 30 digits", [](Outcome& out) {
        for (std::uint64_t n : {12, 15, 16, 20, 51, 60, 85, 255})
            out.require(within(evaluate(construct(n), kCompositeDigits), reference_cos(n, kCompositeDigits), kCompositeDigits),
                        "n=" + std::to_string(n));
    });

    criterion(6, "period identities for 5, 17, 257", [](Outcome& out) {
        for (std::uint64_t p : {5, 17, 257}) {
            const PeriodSystem sys(p);
            const int last = static_cast<int>(sys.m()) - 1;
            const std::string tag = "p=" + std::to_string(p) + " ";
            // partition
            for (int x = -1; x < last; ++x) {
                for (const auto& idx : sys.indices_at(x)) {
                    const auto& a = sys.support(idx.child(0));
                    const auto& b = sys.support(idx.child(1));
                    std::set<std::uint64_t> u(a.begin(), a.end());
                    u.insert(b.begin(), b.end());
                    const auto& parent = sys.support(idx);
                    out.require(u.size() == a.size() + b.size() && u == std::set<std::uint64_t>(parent.begin(), parent.end()),
                                tag + "partition at " + idx.to_string());
                }
            }
            // constancy (checked inside decompose_product) and alpha(0)
            for (int x = -1; x < last; ++x) {
                for (const auto& idx : sys.indices_at(x)) {
                    const auto d = decompose_product(sys, idx);
                    const bool singleton_children = idx.length() == sys.m() - 1;
                    out.require(singleton_children || (d.alpha0 == 0 && alpha_count(sys, idx, 0) == 0),
                                tag + "alpha(0) at " + idx.to_string());
                }
            }
            // alpha_count against the convolution
            if (p != 257) {
                for (int x = -1; x < last; ++x) {
                    for (const auto& idx : sys.indices_at(x)) {
                        const auto w = group_ring_multiply(period_vector(sys, idx.child(0)), period_vector(sys, idx.child(1)));
                        for (std::uint64_t s = 0; s < p; ++s)
                            out.require(w[s] == alpha_count(sys, idx, s), tag + "alpha at " + idx.to_string());
                    }
                }
            } else {
                std::mt19937_64 rng(20261019);
                std::uniform_int_distribution<int> level(-1, last - 1);
                std::uniform_int_distribution<std::uint64_t> residue(0, p - 1);
                for (int i = 0; i < kSampled257; ++i) {
                    const int x = level(rng);
                    const auto v = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (x + 1)) - 1)(rng);
                    const auto idx = PeriodIndex::from_value(x, v);
                    const auto s = residue(rng);
                    out.require(alpha_count(sys, idx, s) == pair_count(sys.support(idx.child(0)), sys.support(idx.child(1)), s, p),
                                tag + "sampled alpha at " + idx.to_string());
                }
            }
        }
    });

    criterion(7, "Eisenstein at p for shifted cyclotomic polynomials, p < 100", [](Outcome& out) {
        for (std::uint64_t p = 2; p < 100; ++p)
            if (is_prime(p)) out.require(eisenstein_check(poly_shift(cyclotomic_poly_prime(p)), p), "p=" + std::to_string(p));
        out.require(poly_shift(cyclotomic_poly_prime(5)) == IntPolynomial{5, 10, 10, 5, 1}, "p=5 coefficients");
    });

    criterion(8, "valid certificate for every non-constructible n <= 1000", [](Outcome& out) {
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            if (decide(n).constructible) continue;
            const auto c = certify_nonconstructible(n);
            out.require(c.valid() && c.shifted_ok && !c.degree_power_of_two, "n=" + std::to_string(n));
        }
    });

    criterion(9, "quadratic witnesses below 1e-40 for 17 and 257", [](Outcome& out) {
        check_witnesses(out, 17);
        check_witnesses(out, 257);
    });

    criterion(10, "JSON round trip: random expressions and constructions n <= 100", [](Outcome& out) {
        RandomExpr gen(1019);
        for (int i = 0; i < kRandomExpressions; ++i) out.require(round_trips(gen(5)), "random #" + std::to_string(i));
        for (std::uint64_t n = 1; n <= 100; ++n)
            if (decide(n).constructible) out.require(round_trips(construct(n)), "n=" + std::to_string(n));
    });

    std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASS", failures);
    return failures ? 1 : 0;
}
