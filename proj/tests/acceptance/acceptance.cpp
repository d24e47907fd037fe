// One line per acceptance criterion; exit status is nonzero if any fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "pascalian/algebra.hpp"
#include "pascalian/combinatorics.hpp"
#include "pascalian/curve.hpp"
#include "pascalian/polynomials.hpp"
#include "pascalian/roots.hpp"
#include "pascalian/series.hpp"

using namespace pascalian;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

IntPoly lift(const oracle::ZPoly& p) { return IntPoly(std::vector<BigInt>(p.begin(), p.end())); }

Outcome triangle_reproduction() {
    Outcome o;
    const std::vector<std::string> expected{"1", "1 1", "2 1 1", "3 3 1 1", "6 4 4 1 1", "10 10 5 5 1 1"};
    for (int n = 0; n <= 5; ++n) {
        std::string row;
        for (const auto& v : triangle_row(n)) row += (row.empty() ? "" : " ") + v.get_str();
        if (row != expected[n]) o.fail(fmt::format("row {} is '{}'", n, row));
    }
    std::ostringstream out;
    std::ostringstream err;
    cli::run_cli({"triangle", "--n-max", "5"}, out, err);
    std::string cli_rows;
    for (int n = 0; n <= 5; ++n) cli_rows += fmt::format("{}: {}\n", n, expected[n]);
    if (out.str() != cli_rows) o.fail("CLI triangle output differs");
    if (o.passed) o.detail = "rows 0..5 match exactly";
    return o;
}

Outcome enumeration_identities() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        const auto tableaux = enumerate_tableaux(n);
        if (tableaux.size() != (std::size_t{1} << n)) o.fail(fmt::format("|B_{}| = {}", n, tableaux.size()));
        const auto row = triangle_row(n);
        BigInt squares = 0;
        for (const auto& v : row) squares += v * v;
        if (squares != oracle::binom(2 * n, n)) o.fail(fmt::format("sum of squares wrong at n={}", n));
        if (height_histogram(n) != row) o.fail(fmt::format("height histogram wrong at n={}", n));
        if (oracle::height_counts(n) != std::vector<oracle::Z>(row.begin(), row.end())) {
            o.fail(fmt::format("brute-force heights disagree at n={}", n));
        }
        std::vector<BigInt> by_size(static_cast<std::size_t>(n) + 1, 0);
        std::vector<BigInt> by_shape(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& t : tableaux) {
            by_size[t.horizontal_labels().size()] += 1;
            by_shape[shape_of(t).excess()] += 1;
        }
        for (int k = 0; k <= n; ++k) {
            if (by_size[k] != oracle::binom(n, k)) o.fail(fmt::format("subset sizes wrong at n={} k={}", n, k));
            if (by_shape[k] != row[k]) o.fail(fmt::format("shape counts wrong at n={} k={}", n, k));
        }
    }
    if (o.passed) o.detail = "n = 1..12";
    return o;
}

Outcome bijection() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        std::set<Walk> image;
        for (const auto& t : enumerate_tableaux(n)) {
            const Walk w = phi(t);
            const Shape sh = shape_of(t);
            const int h = walk_height(w);
            if (w.up_count() != static_cast<int>(t.horizontal_labels().size())) o.fail("up steps != |S|");
            if ((sh.first == sh.second) != (h == 0)) o.fail("equal rows not matched by height 0");
            if (sh.first != n + h || sh.second != n - h) o.fail("shape != (n+h, n-h)");
            image.insert(w);
        }
        if (image.size() != (std::size_t{1} << n)) o.fail(fmt::format("phi not injective at n={}", n));
    }
    if (o.passed) o.detail = "n = 1..12, all tableaux";
    return o;
}

Outcome exact_identities() {
    Outcome o;
    for (int n = 1; n <= 120; ++n) {
        if (!check_r_recursion(n)) o.fail(fmt::format("R recursion n={}", n));
        if (!check_p_recursion(n)) o.fail(fmt::format("P recursion n={}", n));
    }
    for (int n = 0; n <= 120; ++n) {
        if (!check_binomial_identity(n)) o.fail(fmt::format("binomial identity n={}", n));
    }
    for (int n = 2; n <= 40; ++n)
        for (int k = 1; k <= n - 1; ++k)
            if (!check_extended_recursion(n, k)) o.fail(fmt::format("extended recursion n={} k={}", n, k));
    for (int n = 1; n <= 60; ++n) {
        if (!check_linear_decomposition(n)) o.fail(fmt::format("linear decomposition n={}", n));
    }
    for (int m = 1; m <= 60; ++m) {
        if (!check_u_identity(m)) o.fail(fmt::format("U identity m={}", m));
        if (eval(u_poly(m), 1) != oracle::binom(2 * m, m)) o.fail(fmt::format("U(1) m={}", m));
    }
    if (o.passed) o.detail = "all recursions and identities hold exactly";
    return o;
}

Outcome generating_functions() {
    Outcome o;
    const SeriesZ g = gf_G_series(40);
    const SeriesZ h = gf_H_series(40);
    for (int n = 0; n <= 40; ++n) {
        if (g.coeff(n) != p_poly(n)) o.fail(fmt::format("G coefficient z^{}", n));
        if (h.coeff(n) != r_poly(n)) o.fail(fmt::format("H coefficient z^{}", n));
        if (g.coeff(n) != lift(oracle::pascalian_poly(n))) o.fail(fmt::format("G vs oracle z^{}", n));
    }
    if (!check_gh_relation(40)) o.fail("G + xH(x,xz) relation");
    if (o.passed) o.detail = "coefficients through z^40";
    return o;
}

Outcome gcd_of_neighbours() {
    Outcome o;
    for (int n = 3; n <= 60; ++n) {
        const IntPoly g = gcd_primitive(p_poly(n), p_poly(n - 2));
        const IntPoly expected = n % 2 ? IntPoly{1, 1} : IntPoly{1};
        if (g != expected) o.fail(fmt::format("gcd at n={} is {}", n, g.to_string()));
        const auto reference = oracle::rational_gcd(oracle::pascalian_poly(n), oracle::pascalian_poly(n - 2));
        if (lift(reference) != expected) o.fail(fmt::format("oracle gcd at n={}", n));
    }
    if (o.passed) o.detail = "n = 3..60";
    return o;
}

std::vector<RootSet> solved(int n_max) {
    std::vector<RootSet> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(solve_roots(n));
    return out;
}

Outcome root_bounds(const std::vector<RootSet>& sets) {
    Outcome o;
    double worst_residual = 0;
    double worst_margin = INFINITY;
    for (int n = 2; n <= 200; ++n) {
        const RootSet& rs = sets[n - 1];
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            if (rs.is_trivial(i)) continue;
            const double r = std::abs(rs.roots[i]);
            if (!(r > std::sqrt(2.0) - 1 - 1e-9 && r < 1 + 1e-9)) o.fail(fmt::format("n={} |z|={}", n, r));
        }
        const GammaReport g = no_roots_in_gamma(rs);
        worst_margin = std::min(worst_margin, g.min_margin);
        if (g.min_margin <= -1e-9 || !g.passed()) o.fail(fmt::format("root in Gamma_{}", n));
        worst_residual = std::max(worst_residual, rs.worst_residual());
        if (rs.worst_residual() >= 1e-10) o.fail(fmt::format("residual {:.3g} at n={}", rs.worst_residual(), n));
    }
    if (o.passed) o.detail = fmt::format("worst residual {:.3g}, min Gamma margin {:.3g}", worst_residual, worst_margin);
    return o;
}

Outcome root_classification(const std::vector<RootSet>& sets) {
    Outcome o;
    for (int n = 1; n <= 200; ++n) {
        const RootSet& rs = sets[n - 1];
        const int real = count_real_roots(rs, 1e-8);
        const int imaginary = count_imaginary_pairs(rs, 1e-8);
        if (real != n % 2) o.fail(fmt::format("n={} has {} real roots", n, real));
        if (n % 2 && std::abs(rs.roots.back() - Complex(-1, 0)) != 0) o.fail("trivial root is not -1");
        if (imaginary != (n % 4 == 3 ? 1 : 0)) o.fail(fmt::format("n={} has {} imaginary pairs", n, imaginary));
    }
    if (o.passed) o.detail = "n = 1..200";
    return o;
}

Outcome vieta(const std::vector<RootSet>& sets) {
    Outcome o;
    double worst_sum = 0;
    double worst_product = 0;
    for (int n = 1; n <= 128; ++n) {
        const RootSet& rs = sets[n - 1];
        const double expected_sum = n % 2 ? -1.0 : 2.0 / (n + 2) - 1;
        const double expected_product = 1.0 / oracle::binom(n, n / 2).get_d();
        const double sum_error = std::abs(oracle::root_sum(rs.roots) - expected_sum);
        const double product_error = std::abs(std::abs(oracle::root_product(rs.roots)) - expected_product);
        worst_sum = std::max(worst_sum, sum_error / n);
        worst_product = std::max(worst_product, product_error);
        if (sum_error >= 1e-6 * n) o.fail(fmt::format("sum off by {:.3g} at n={}", sum_error, n));
        if (product_error >= 1e-6) o.fail(fmt::format("product off by {:.3g} at n={}", product_error, n));
    }
    if (o.passed) o.detail = fmt::format("worst sum error/n {:.3g}, worst product error {:.3g}", worst_sum, worst_product);
    return o;
}

Outcome convergence(const std::vector<RootSet>& sets) {
    Outcome o;
    const std::vector<int> ns{25, 50, 100, 200};
    std::vector<ConvergenceMetrics> m;
    for (int n : ns) m.push_back(convergence_metrics(sets[n - 1]));
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (!(m[i].max_match_to_zm < 0.95 * m[i - 1].max_match_to_zm)) {
            o.fail(fmt::format("max_match_to_zm {} -> {}", m[i - 1].max_match_to_zm, m[i].max_match_to_zm));
        }
        if (!(m[i].fill_gap < 0.95 * m[i - 1].fill_gap)) {
            o.fail(fmt::format("fill_gap {} -> {}", m[i - 1].fill_gap, m[i].fill_gap));
        }
    }
    if (!(m.back().hausdorff_to_curve < m.front().hausdorff_to_curve)) o.fail("hausdorff did not decrease");
    std::string detail;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        detail += fmt::format("{}n={} match={:.4f} gap={:.4f} hausdorff={:.4f}", i ? "; " : "", ns[i],
                              m[i].max_match_to_zm, m[i].fill_gap, m[i].hausdorff_to_curve);
    }
    if (o.passed) o.detail = detail;
    return o;
}

Outcome algebra() {
    Outcome o;
    for (int n = 1; n <= 201; n += 2)
        if (!factor_odd(n).checked) o.fail(fmt::format("factor_odd({})", n));
    for (int m = 1; m <= 500; ++m)
        if (is_perfect_square(oracle::binom(2 * m + 1, m))) o.fail(fmt::format("C({},{}) is a square", 2 * m + 1, m));

    std::mt19937_64 rng(2024);
    std::size_t compared = 0;
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
        for (int d = 1; d <= 8; ++d) {
            std::uint64_t space = 1;
            for (int i = 0; i < d; ++i) space *= p;
            const bool exhaustive = space <= 20000;
            const std::uint64_t trials = exhaustive ? space : 1500;
            for (std::uint64_t t = 0; t < trials; ++t) {
                std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
                oracle::FpPoly fp(static_cast<std::size_t>(d) + 1);
                std::uint64_t code = exhaustive ? t : rng();
                for (int i = 0; i < d; ++i) {
                    fp[i] = static_cast<std::uint32_t>(code % p);
                    code /= p;
                }
                fp[d] = exhaustive ? 1 : static_cast<std::uint32_t>(1 + rng() % (p - 1));
                for (int i = 0; i <= d; ++i) c[i] = fp[i];
                ++compared;
                if (irreducible_mod_p(IntPoly(c), p).irreducible_mod_p != oracle::fp_irreducible_exhaustive(fp, p)) {
                    o.fail(fmt::format("irreducible_mod_p disagrees for p={} d={}", p, d));
                }
            }
        }
    }
    for (int n = 2; n <= 60; n += 2)
        if (!rational_roots(p_poly(n)).empty()) o.fail(fmt::format("P_{} has a rational root", n));
    if (o.passed) o.detail = fmt::format("{} polynomials compared over F_p", compared);
    return o;
}

Outcome robustness() {
    Outcome o;
    int worst = 0;
    for (int n = 1; n <= 256; ++n) {
        const RootSet rs = solve_roots(n);
        worst = std::max(worst, rs.iterations);
        if (!rs.converged || rs.iterations > 200) o.fail(fmt::format("n={} used {} sweeps", n, rs.iterations));
    }
    for (const char* n : {"64", "201", "256"}) {
        std::ostringstream a;
        std::ostringstream b;
        std::ostringstream err;
        cli::run_cli({"roots", "--n", n, "--format", "csv"}, a, err);
        cli::run_cli({"roots", "--n", n, "--format", "csv"}, b, err);
        if (a.str() != b.str() || a.str().empty()) o.fail(fmt::format("CSV differs between runs for n={}", n));
    }
    if (o.passed) o.detail = fmt::format("at most {} sweeps, CSV reproducible", worst);
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::string& title, const std::function<Outcome()>& check) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.passed ? 0 : 1;
        fmt::print("{:02} {} {:<26} ({:.2f}s) {}\n", id, o.passed ? "PASS" : "FAIL", title, seconds, o.detail);
        std::fflush(stdout);
    };

    report(1, "triangle reproduction", triangle_reproduction);
    report(2, "enumeration identities", enumeration_identities);
    report(3, "bijection", bijection);
    report(4, "exact identities", exact_identities);
    report(5, "generating functions", generating_functions);
    report(6, "gcd of P_n and P_(n-2)", gcd_of_neighbours);

    std::vector<RootSet> sets;
    try {
        sets = solved(200);
    } catch (const std::exception& e) {
        fmt::print("root solving failed: {}\n", e.what());
    }
    const bool have_roots = sets.size() == 200;
    auto needs_roots = [&](Outcome (*f)(const std::vector<RootSet>&)) {
        return [&, f] {
            if (!have_roots) {
                Outcome o;
                o.fail("roots unavailable");
                return o;
            }
            return f(sets);
        };
    };
    report(7, "root bounds", needs_roots(root_bounds));
    report(8, "root classification", needs_roots(root_classification));
    report(9, "vieta", needs_roots(vieta));
    report(10, "convergence", needs_roots(convergence));
    report(11, "algebra", algebra);
    report(12, "solver robustness", robustness);

    fmt::print("{}\n", failures ? fmt::format("{} criteria failed", failures) : std::string("all criteria passed"));
    return failures ? 1 : 0;
}
