#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "radgon/construct.hpp"
#include "radgon/irreducibility.hpp"

using namespace radgon;

namespace {

BigRational ten_to_minus(unsigned k) {
    BigInt d = 1;
    for (unsigned i = 0; i < k; ++i) d *= 10;
    return BigRational(BigInt(1), d);
}

bool power_of_two(std::uint64_t v) { return v && (v & (v - 1)) == 0; }

// Closeness of two certified values: every point of one lies within tol of
// some point of the other.
bool agree(const CertifiedDecimal& a, const CertifiedDecimal& b, const BigRational& tol) {
    return a.distance_bound(b) <= tol;
}

double approx(const RadicalExpr& e) { return std::stod(evaluate(e, 20).mid_string()); }

}  // namespace

TEST_CASE("decide examples") {
    auto v = decide(17);
    CHECK(v.constructible);
    CHECK(v.summary() == "constructible 17 = 17");
    v = decide(9);
    CHECK_FALSE(v.constructible);
    CHECK(v.reason == VerdictReason::repeated_odd_prime);
    CHECK(v.offending_prime == 3);
    CHECK(v.witness == 9);
    v = decide(7);
    CHECK(v.reason == VerdictReason::bad_prime_factor);
    CHECK(v.witness == 7);
    CHECK(decide(60).constructible);
    CHECK(decide(1).constructible);
    CHECK(decide(2).constructible);
    CHECK(decide(65537ull * 4).constructible);
    CHECK(decide(49).witness == 7);
    CHECK(decide(99).witness == 9);
    CHECK(decide(25 * 7).witness == 7);
    CHECK(decide(25 * 11).witness == 11);
    CHECK(decide(25 * 29).witness == 25);
    CHECK(to_string(VerdictReason::bad_prime_factor) == "(*)");
    CHECK(to_string(VerdictReason::repeated_odd_prime) == "(**)");
    CHECK_THROWS_AS(decide(0), std::invalid_argument);
}

TEST_CASE("decide agrees with the totient oracle") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const bool want = power_of_two(phi_oracle(n));
        const auto v = decide(n);
        if (v.constructible != want) FAIL_CHECK("mismatch at n = " << n);
        if (!v.constructible && (v.witness == 0 || n % v.witness != 0)) FAIL_CHECK("bad witness at n = " << n);
    }
}

TEST_CASE("construct_fermat_prime") {
    CHECK(approx(construct_fermat_prime(3)) == doctest::Approx(-0.5));
    const auto c5 = construct_fermat_prime(5);
    CHECK(render(c5, RenderFormat::Latex) == "\\frac{\\sqrt{5}-1}{4}");
    CHECK(sqrt_depth(c5) == 1);

    DescentTrace trace;
    const auto c17 = construct_fermat_prime(17, 0, &trace);
    CHECK(trace.p == 17);
    CHECK(trace.root == 3);
    CHECK(sqrt_depth(c17) == 3);
    const auto v17 = evaluate(c17, 20);
    CHECK(v17.rounded(20).mid_string() == "0.93247222940435580457");
    CHECK(agree(v17, reference_cos(17, 20), ten_to_minus(19)));

    // a different primitive root gives a different tree with the same value
    const auto alt = construct_fermat_prime(17, 5);
    CHECK(evaluate(alt, 40).overlaps(reference_cos(17, 40)));
    CHECK_THROWS_AS(construct_fermat_prime(7), std::invalid_argument);
    CHECK_THROWS_AS(construct_fermat_prime(17, 4), std::invalid_argument);
}

TEST_CASE("descent trace invariants") {
    for (std::uint64_t p : {5ull, 17ull, 257ull}) {
        DescentTrace trace;
        construct_fermat_prime(p, 0, &trace);
        REQUIRE(!trace.steps.empty());
        for (const auto& s : trace.steps) {
            // quadratic witness: E^2 - S E + P = 0
            for (const auto& child : {s.child0, s.child1}) {
                const auto residual = evaluate(child * child - s.sum * child + s.product, 50);
                CHECK(residual.magnitude_bound() <= ten_to_minus(45));
            }
            // sibling sum
            const auto sum = evaluate(s.child0 + s.child1, 50);
            CHECK(agree(sum, evaluate(s.sum, 50), ten_to_minus(45)));
            // children are the two roots
            const auto prod = evaluate(s.child0 * s.child1, 50);
            CHECK(agree(prod, evaluate(s.product, 50), ten_to_minus(45)));
        }
    }
}

TEST_CASE("depth law") {
    CHECK(sqrt_depth(construct_fermat_prime(5)) == 1);
    CHECK(sqrt_depth(construct_fermat_prime(17)) == 3);
    CHECK(sqrt_depth(construct_fermat_prime(257)) == 7);
}

TEST_CASE("chebyshev_apply") {
    const auto c = rsqrt(2);
    CHECK(structurally_equal(chebyshev_apply(1, c), c));
    CHECK(chebyshev_apply(3, RadicalExpr(BigRational(BigInt(-1), BigInt(2)))).value() == BigRational(1));
    const auto c5 = construct(5);
    CHECK(approx(chebyshev_apply(2, c5)) == doctest::Approx(-0.8090169943749474));
    CHECK(evaluate(chebyshev_apply(2, c5), 40).overlaps(reference_cos_fraction(2, 5, 40)));
    for (std::uint64_t k = 1; k <= 12; ++k)
        CHECK(evaluate(chebyshev_apply(k, construct(17)), 30).overlaps(reference_cos_fraction(static_cast<std::int64_t>(k), 17, 30)));
    CHECK_THROWS_AS(chebyshev_apply(0, c), std::invalid_argument);
}

TEST_CASE("half_angle") {
    CHECK(half_angle(RadicalExpr(-1), 2).value().is_zero());
    CHECK(half_angle(RadicalExpr(BigRational(BigInt(-1), BigInt(2))), 3).value() == BigRational(BigInt(1), BigInt(2)));
    const auto h = half_angle(RadicalExpr(0), 4);
    CHECK(approx(h) == doctest::Approx(0.70710678118654752));
    CHECK(evaluate(h, 40).overlaps(reference_cos(8, 40)));
}

TEST_CASE("sin_from_cos") {
    CHECK(sin_from_cos(RadicalExpr(0), 1, 4).value() == BigRational(1));
    CHECK(sin_from_cos(RadicalExpr(0), 3, 4).value() == BigRational(-1));
    CHECK(sin_from_cos(RadicalExpr(1), 0, 4).value().is_zero());
    CHECK(approx(sin_from_cos(construct(5), 1, 5)) == doctest::Approx(0.9510565162951535));
    CHECK(approx(sin_from_cos(construct(5), 4, 5)) == doctest::Approx(-0.9510565162951535));
    CHECK(approx(sin_from_cos(construct(5), -1, 5)) == doctest::Approx(-0.9510565162951535));
    CHECK_THROWS(sin_from_cos(RadicalExpr(2), 1, 5));
}

TEST_CASE("combine_coprime") {
    const auto c3 = construct(3), c4 = construct(4), c5 = construct(5), c17 = construct(17);
    const auto c15 = combine_coprime(3, 5, c3, c5);
    CHECK(approx(c15) == doctest::Approx(0.9135454576426009));
    CHECK(evaluate(c15, 40).overlaps(reference_cos(15, 40)));
    const auto c12 = combine_coprime(3, 4, c3, c4);
    CHECK(approx(c12) == doctest::Approx(0.8660254037844386));
    CHECK(evaluate(c12, 40).overlaps(reference_cos(12, 40)));
    const auto c85 = combine_coprime(5, 17, c5, c17);
    CHECK(approx(c85) == doctest::Approx(0.9972691733857346));
    CHECK(evaluate(c85, 40).overlaps(reference_cos(85, 40)));
    CHECK_THROWS_AS(combine_coprime(3, 6, c3, construct(6)), std::invalid_argument);
}

TEST_CASE("construct examples") {
    CHECK(construct(1).value() == BigRational(1));
    CHECK(construct(2).value() == BigRational(-1));
    CHECK(construct(4).value().is_zero());
    CHECK(construct(3).value() == BigRational(BigInt(-1), BigInt(2)));
    CHECK(approx(construct(16)) == doctest::Approx(0.9238795325112867));
    try {
        construct(7);
        FAIL("expected NotConstructible");
    } catch (const NotConstructible& e) {
        CHECK(e.verdict().reason == VerdictReason::bad_prime_factor);
        CHECK(e.verdict().n == 7);
    }
    CHECK_THROWS_AS(construct(9), NotConstructible);
    CHECK_THROWS_AS(construct(0), std::invalid_argument);
}

TEST_CASE("construct is deterministic") {
    for (std::uint64_t n : {15ull, 60ull, 255ull})
        CHECK(render(construct(n), RenderFormat::Json) == render(construct(n), RenderFormat::Json));
}

TEST_CASE("end-to-end certification up to 300") {
    const auto tol = ten_to_minus(30) * 2;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        if (!decide(n).constructible) continue;
        const auto e = construct(n);
        const auto got = evaluate(e, 30);
        const auto want = reference_cos(n, 30);
        if (!got.overlaps(want) || !agree(got, want, tol)) FAIL_CHECK("n = " << n);
    }
}

TEST_CASE("concurrent construction") {
    const std::vector<std::uint64_t> ns{17, 51, 85, 255};
    std::vector<std::string> got(ns.size());
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < ns.size(); ++i)
        threads.emplace_back([&, i] { got[i] = render(construct(ns[i]), RenderFormat::Json); });
    for (auto& t : threads) t.join();
    for (std::size_t i = 0; i < ns.size(); ++i) CHECK(got[i] == render(construct(ns[i]), RenderFormat::Json));
}
