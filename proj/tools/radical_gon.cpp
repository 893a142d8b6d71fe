// radical-gon: constructibility of regular polygons from the command line.
//
//   radical-gon decide 17
//   radical-gon construct 17 --format latex --digits 50
//   radical-gon verify 257 --digits 100
//   radical-gon periods 17 --level 1
//   radical-gon certify 9
//
// Exit codes: 0 success / constructible, 1 negative verdict or domain error,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "radgon/construct.hpp"
#include "radgon/irreducibility.hpp"
#include "radgon/periods.hpp"
#include "radgon/radicals.hpp"

namespace {

using namespace radgon;

constexpr int kUsageError = 2;

struct CliConfig {
    unsigned digits = 30;
    RenderFormat format = RenderFormat::Text;
    std::optional<std::uint64_t> root_override;
};

int cmd_decide(std::uint64_t n) {
    const auto v = decide(n);
    std::cout << v.summary() << '\n';
    return v.constructible ? 0 : 1;
}

int report_not_constructible(const NotConstructible& e) {
    std::cerr << e.verdict().summary() << '\n' << certify_nonconstructible(e.verdict().n).summary() << '\n';
    return 1;
}

int cmd_construct(std::uint64_t n, const CliConfig& cfg) {
    try {
        const auto expr = construct(n);
        const auto value = evaluate(expr, cfg.digits);
        const auto reference = reference_cos(n, cfg.digits);
        const auto bound = value.distance_bound(reference);
        if (!value.overlaps(reference)) {
            std::cerr << "certification failed: " << value.to_string() << " vs " << reference.to_string() << '\n';
            return 1;
        }
        render(expr, cfg.format, std::cout);
        std::cout << '\n'
                  << "verified to " << cfg.digits << " digits: |expr - cos(2pi/" << n << ")| <= " << format_bound(bound)
                  << '\n';
        return 0;
    } catch (const NotConstructible& e) {
        return report_not_constructible(e);
    }
}

int cmd_verify(std::uint64_t n, const CliConfig& cfg) {
    try {
        const auto expr = construct(n);
        const auto value = evaluate(expr, cfg.digits);
        const auto reference = reference_cos(n, cfg.digits);
        const auto metrics = measure(expr);
        const BigRational tolerance(BigInt(2), [&] {
            BigInt t;
            mpz_ui_pow_ui(t.get_mpz_t(), 10, cfg.digits);
            return t;
        }());
        const bool ok = value.overlaps(reference) && abs(value.midpoint() - reference.midpoint()) <= tolerance;
        std::cout << "n " << n << '\n'
                  << "digits " << cfg.digits << '\n'
                  << "construct " << value.rounded(cfg.digits).to_string() << '\n'
                  << "reference " << reference.rounded(cfg.digits).to_string() << '\n'
                  << "bound " << format_bound(value.distance_bound(reference)) << '\n'
                  << "sqrt_depth " << sqrt_depth(expr) << '\n'
                  << "nodes " << metrics.distinct_nodes << '\n'
                  << "tree_size " << metrics.tree_size.get_str() << '\n'
                  << (ok ? "ok" : "FAILED") << '\n';
        return ok ? 0 : 1;
    } catch (const NotConstructible& e) {
        return report_not_constructible(e);
    }
}

int cmd_periods(std::uint64_t p, std::optional<int> level, const CliConfig& cfg) {
    std::optional<PeriodSystem> sys;
    try {
        sys.emplace(p, cfg.root_override.value_or(0));
    } catch (const PeriodError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    const int m = static_cast<int>(sys->m());
    if (level && (*level < -1 || *level > m - 1)) {
        std::cerr << "level must lie in [-1, " << m - 1 << "]\n";
        return kUsageError;
    }
    std::cout << "p " << p << " m " << m << " g " << sys->g() << '\n';
    bool all_ok = true;
    for (int x = level.value_or(-1); x <= level.value_or(m - 1); ++x) {
        for (const auto& idx : sys->indices_at(x)) {
            std::cout << format_period_row(*sys, idx);
            if (x < m - 1) {
                const auto& parent = sys->support(idx);
                const auto& c0 = sys->support(idx.child(0));
                const auto& c1 = sys->support(idx.child(1));
                std::vector<std::uint64_t> merged;
                std::merge(c0.begin(), c0.end(), c1.begin(), c1.end(), std::back_inserter(merged));
                const bool sum_ok = merged == parent && std::adjacent_find(merged.begin(), merged.end()) == merged.end();
                bool alpha_ok = true;
                std::string alpha;
                try {
                    const auto d = decompose_product(*sys, idx);
                    alpha = "alpha0=" + d.alpha0.get_str();
                } catch (const PeriodIdentityViolation& e) {
                    alpha_ok = false;
                    std::cerr << e.what() << '\n';
                }
                all_ok = all_ok && sum_ok && alpha_ok;
                std::cout << " sum_ok=" << (sum_ok ? "true" : "false") << " alpha_constant=" << (alpha_ok ? "true" : "false");
                if (alpha_ok) std::cout << ' ' << alpha;
            }
            std::cout << '\n';
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_certify(std::uint64_t n) {
    if (decide(n).constructible) {
        std::cerr << "cos(2 pi / " << n << ") is constructible; no certificate\n";
        return 1;
    }
    std::cout << certify_nonconstructible(n).to_json() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructibility of the regular n-gon by nested square roots"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("RADICAL_GON_DIGITS")) {
        try {
            std::size_t used = 0;
            const long v = std::stol(env, &used);
            if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
            cfg.digits = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            std::cerr << "RADICAL_GON_DIGITS must be a positive integer\n";
            return kUsageError;
        }
    }
    std::uint64_t n = 0;
    std::string format = "text";
    std::optional<int> level;
    std::uint64_t root = 0;

    auto* decide_cmd = app.add_subcommand("decide", "Is cos(2 pi / n) constructible?");
    decide_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* construct_cmd = app.add_subcommand("construct", "Print a radical expression for cos(2 pi / n)");
    construct_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    construct_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));
    construct_cmd->add_option("--digits", cfg.digits)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Check the construction against an independent cosine");
    verify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--digits", cfg.digits)->check(CLI::PositiveNumber);

    auto* periods_cmd = app.add_subcommand("periods", "Dump the Gaussian period tree of a Fermat prime");
    periods_cmd->add_option("p", n)->required()->check(CLI::PositiveNumber);
    periods_cmd->add_option("--root", root, "primitive root to use")->check(CLI::PositiveNumber);
    periods_cmd->add_option("--level", level, "only this level (-1 .. m-1)");

    auto* certify_cmd = app.add_subcommand("certify", "Print a non-constructibility certificate as JSON");
    certify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }
    if (root != 0) cfg.root_override = root;
    cfg.format = format == "latex" ? RenderFormat::Latex : format == "json" ? RenderFormat::Json : RenderFormat::Text;

    try {
        if (*decide_cmd) return cmd_decide(n);
        if (*construct_cmd) return cmd_construct(n, cfg);
        if (*verify_cmd) return cmd_verify(n, cfg);
        if (*periods_cmd) return cmd_periods(n, level, cfg);
        if (*certify_cmd) return cmd_certify(n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kUsageError;
}
