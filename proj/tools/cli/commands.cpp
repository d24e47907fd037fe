#include "commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pascalian/algebra.hpp"
#include "pascalian/combinatorics.hpp"
#include "pascalian/curve.hpp"
#include "pascalian/errors.hpp"
#include "pascalian/polynomials.hpp"
#include "pascalian/roots.hpp"
#include "pascalian/series.hpp"

namespace pascalian::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string format;
    std::string out_path;
    Tolerances tol;
    std::optional<std::uint64_t> seed;  // accepted, never read: every command is deterministic
};

struct Output {
    std::string body;
    int code = kOk;
};

// 15 significant digits; coordinates below 1e-14 print as 0 (this also drops "-0").
std::string coord(double v) {
    if (std::abs(v) < 1e-14) v = 0;
    return fmt::format("{:.15g}", v);
}

std::string num(double v) { return fmt::format("{:.15g}", v); }

double round15(double v) {
    if (!std::isfinite(v)) return v;
    return std::stod(fmt::format("{:.15g}", v));
}

double round_coord(double v) { return std::abs(v) < 1e-14 ? 0.0 : round15(v); }

json meta(const RunConfig& cfg) {
    return {
        {"tool", "pascalian"},
        {"version", kVersion},
        {"command", cfg.command},
        {"tolerances",
         {{"residual", cfg.tol.residual},
          {"imag", cfg.tol.imag},
          {"vieta_per_degree", cfg.tol.vieta_per_degree},
          {"annulus", cfg.tol.annulus},
          {"boundary", cfg.tol.boundary},
          {"max_iterations", cfg.tol.max_iterations}}},
    };
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void unsupported(const RunConfig& cfg) {
    throw DomainError("format '" + cfg.format + "' is not available for " + cfg.command);
}

// ---------------------------------------------------------------------------
// SVG

constexpr double kCanvas = 800;
constexpr double kScale = 300;  // pixels per unit; the view spans |re|, |im| <= 4/3

double sx(double re) { return kCanvas / 2 + kScale * re; }
double sy(double im) { return kCanvas / 2 - kScale * im; }

class Svg {
   public:
    explicit Svg(const std::string& title) {
        fmt::format_to(out(),
                       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
                       "viewBox=\"0 0 800 800\">\n"
                       "<rect width=\"800\" height=\"800\" style=\"fill:#ffffff\"/>\n"
                       "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" style=\"stroke:#cccccc;stroke-width:1\"/>\n"
                       "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" style=\"stroke:#cccccc;stroke-width:1\"/>\n"
                       "<text x=\"16\" y=\"28\" style=\"font-family:sans-serif;font-size:16px\">{}</text>\n",
                       title);
    }

    void annulus(double inner, double outer) {
        fmt::format_to(out(),
                       "<path d=\"M {0:.3f} 400 a {1:.3f} {1:.3f} 0 1 0 {2:.3f} 0 a {1:.3f} {1:.3f} 0 1 0 {3:.3f} 0 Z "
                       "M {4:.3f} 400 a {5:.3f} {5:.3f} 0 1 0 {6:.3f} 0 a {5:.3f} {5:.3f} 0 1 0 {7:.3f} 0 Z\" "
                       "style=\"fill:#e6e6e6;fill-rule:evenodd;stroke:none\"/>\n",
                       sx(-outer), kScale * outer, 2 * kScale * outer, -2 * kScale * outer, sx(-inner),
                       kScale * inner, 2 * kScale * inner, -2 * kScale * inner);
    }

    void circle(double radius, const char* style) {
        fmt::format_to(out(), "<circle cx=\"400\" cy=\"400\" r=\"{:.3f}\" style=\"{}\"/>\n", kScale * radius, style);
    }

    void polyline(const std::vector<Complex>& pts, const char* style) {
        std::string points;
        for (const auto& z : pts) fmt::format_to(std::back_inserter(points), "{:.3f},{:.3f} ", sx(z.real()), sy(z.imag()));
        if (!pts.empty()) {
            fmt::format_to(std::back_inserter(points), "{:.3f},{:.3f}", sx(pts.front().real()), sy(pts.front().imag()));
        }
        fmt::format_to(out(), "<polyline points=\"{}\" style=\"{}\"/>\n", points, style);
    }

    void dot(Complex z, double r, const char* style) {
        fmt::format_to(out(), "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.1f}\" style=\"{}\"/>\n", sx(z.real()),
                       sy(z.imag()), r, style);
    }

    void cross(Complex z, const char* style) {
        const double x = sx(z.real());
        const double y = sy(z.imag());
        fmt::format_to(out(), "<path d=\"M {:.3f} {:.3f} L {:.3f} {:.3f} M {:.3f} {:.3f} L {:.3f} {:.3f}\" style=\"{}\"/>\n",
                       x - 3, y - 3, x + 3, y + 3, x - 3, y + 3, x + 3, y - 3, style);
    }

    std::string finish() {
        text_ += "</svg>\n";
        return std::move(text_);
    }

   private:
    std::back_insert_iterator<std::string> out() { return std::back_inserter(text_); }
    std::string text_;
};

// ---------------------------------------------------------------------------
// triangle

Output cmd_triangle(const RunConfig& cfg, int n_max) {
    if (n_max < 0) throw DomainError("triangle: --n-max must be nonnegative");
    Output o;
    auto it = std::back_inserter(o.body);
    if (cfg.format == "text") {
        for (int n = 0; n <= n_max; ++n) {
            const auto row = triangle_row(n);
            fmt::format_to(it, "{}:", n);
            for (const auto& v : row) fmt::format_to(it, " {}", v.get_str());
            o.body += '\n';
        }
    } else if (cfg.format == "csv") {
        o.body += "n,k,value,row_sum\n";
        for (int n = 0; n <= n_max; ++n) {
            const auto row = triangle_row(n);
            BigInt sum = 0;
            for (const auto& v : row) sum += v;
            for (std::size_t k = 0; k < row.size(); ++k) {
                fmt::format_to(it, "{},{},{},{}\n", n, k, row[k].get_str(), sum.get_str());
            }
        }
    } else if (cfg.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= n_max; ++n) {
            const auto row = triangle_row(n);
            BigInt sum = 0;
            json values = json::array();
            for (const auto& v : row) {
                sum += v;
                values.push_back(v.get_str());
            }
            rows.push_back({{"n", n}, {"values", values}, {"row_sum", sum.get_str()}});
        }
        o.body = dump({{"meta", meta(cfg)}, {"rows", rows}});
    } else {
        unsupported(cfg);
    }
    return o;
}

// ---------------------------------------------------------------------------
// bijection

struct BijectionRow {
    Tableau tableau;
    Walk walk;
    int height;
    bool ok;
};

Output cmd_bijection(const RunConfig& cfg, int n) {
    const auto tableaux = enumerate_tableaux(n);
    std::vector<BijectionRow> rows;
    rows.reserve(tableaux.size());
    std::set<Walk> walks;
    bool all_ok = true;
    for (const auto& t : tableaux) {
        Walk w = phi(t);
        const int h = walk_height(w);
        const Shape s = t.shape();
        const bool up_steps = static_cast<int>(t.horizontal_labels().size()) == w.up_count();
        const bool equal_columns = (s.first == s.second) == (h == 0);
        const bool shape_height = s.first == n + h && s.second == n - h;
        const bool ok = up_steps && equal_columns && shape_height;
        all_ok = all_ok && ok;
        walks.insert(w);
        rows.push_back({t, std::move(w), h, ok});
    }
    const bool bijective = walks.size() == tableaux.size() && tableaux.size() == (std::size_t{1} << n);
    all_ok = all_ok && bijective;

    Output o;
    o.code = all_ok ? kOk : kCheckFailed;
    auto it = std::back_inserter(o.body);
    if (cfg.format == "text") {
        std::size_t width = 6;
        for (const auto& r : rows) width = std::max(width, r.tableau.subset_string().size());
        fmt::format_to(it, "{:<{}}  {:<9}  {:<{}}  {:>6}  {}\n", "subset", width, "shape", "walk",
                       std::max(4, n), "height", "ok");
        for (const auto& r : rows) {
            const Shape s = r.tableau.shape();
            fmt::format_to(it, "{:<{}}  {:<9}  {:<{}}  {:>6}  {}\n", r.tableau.subset_string(), width,
                           fmt::format("({},{})", s.first, s.second), r.walk.to_string(), std::max(4, n), r.height,
                           r.ok ? "yes" : "no");
        }
        o.body += all_ok ? "PASS\n" : "FAIL\n";
    } else if (cfg.format == "csv") {
        o.body += "subset,row1,row2,walk,height,ok\n";
        for (const auto& r : rows) {
            const Shape s = r.tableau.shape();
            fmt::format_to(it, "\"{}\",{},{},{},{},{}\n", r.tableau.subset_string(), s.first, s.second,
                           r.walk.to_string(), r.height, r.ok ? 1 : 0);
        }
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            const Shape s = r.tableau.shape();
            arr.push_back({{"subset", r.tableau.horizontal_labels()},
                           {"shape", {s.first, s.second}},
                           {"walk", r.walk.to_string()},
                           {"height", r.height},
                           {"ok", r.ok}});
        }
        o.body = dump({{"meta", meta(cfg)},
                       {"n", n},
                       {"rows", arr},
                       {"bijective", bijective},
                       {"status", all_ok ? "PASS" : "FAIL"}});
    } else {
        unsupported(cfg);
    }
    return o;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string suite;
    std::string name;
    std::string range;
    bool passed = true;
    bool informational = false;
    std::string detail;
};

CheckResult make_check(std::string suite, std::string name, std::string range) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.range = std::move(range);
    return r;
}

std::string span_text(const char* var, int lo, int hi, int step = 1) {
    if (lo > hi) return "none";
    return fmt::format("{}={}..{}{}", var, lo, hi, step == 1 ? "" : " step 2");
}

template <typename F>
CheckResult sweep(const char* suite, const char* name, const char* var, int lo, int hi, int step, F&& f) {
    CheckResult r = make_check(suite, name, span_text(var, lo, hi, step));
    for (int v = lo; v <= hi; v += step) {
        if (!f(v)) {
            r.passed = false;
            r.detail = fmt::format("first failure at {}={}", var, v);
            break;
        }
    }
    return r;
}

void suite_recursions(int n_max, std::vector<CheckResult>& out) {
    out.push_back(sweep("recursions", "reversal", "n", 0, n_max, 1,
                        [](int n) { return p_poly(n).reversed() == r_poly(n); }));
    out.push_back(sweep("recursions", "r_recursion", "n", 1, n_max, 1, check_r_recursion));
    out.push_back(sweep("recursions", "p_recursion", "n", 1, n_max, 1, check_p_recursion));
    out.push_back(sweep("recursions", "extended_recursion", "n", 2, n_max, 1, [](int n) {
        for (int k = 1; k <= n - 1; ++k) {
            if (!check_extended_recursion(n, k)) return false;
        }
        return true;
    }));
    out.push_back(sweep("recursions", "linear_decomposition", "n", 1, n_max, 1, check_linear_decomposition));
    out.push_back(sweep("recursions", "binomial_identity", "n", 0, n_max, 1, check_binomial_identity));
    out.push_back(sweep("recursions", "q_decomposition", "n", 0, n_max, 1, check_q_decomposition));
    out.push_back(sweep("recursions", "u_identity", "m", 0, n_max / 2, 1, check_u_identity));
}

void suite_gf(int n_max, std::vector<CheckResult>& out) {
    const int order = std::max(n_max, 0);
    const SeriesZ g = gf_G_series(order);
    const SeriesZ h = gf_H_series(order);
    out.push_back(sweep("gf", "G_coefficients", "j", 0, order, 1, [&](int j) { return g.coeff(j) == p_poly(j); }));
    out.push_back(sweep("gf", "H_coefficients", "j", 0, order, 1, [&](int j) { return h.coeff(j) == r_poly(j); }));
    CheckResult sq = make_check("gf", "sqrt_square", span_text("order", order, order));
    sq.passed = check_sqrt_square(order);
    out.push_back(sq);
    CheckResult gh = make_check("gf", "gh_relation", span_text("order", order, order));
    gh.passed = check_gh_relation(order);
    out.push_back(gh);
}

void suite_factor(int n_max, std::vector<CheckResult>& out) {
    out.push_back(sweep("factor", "factor_odd", "n", 1, n_max, 2, [](int n) { return factor_odd(n).checked; }));
    out.push_back(sweep("factor", "square_criterion", "n", 3, n_max, 2,
                        [](int n) { return q_square_criterion(n).reducibility_excluded; }));
    out.push_back(sweep("factor", "no_rational_roots", "n", 2, n_max, 2,
                        [](int n) { return rational_roots(p_poly(n)).empty(); }));

    const auto primes = first_primes(25);
    const auto scan = conjecture_scan(n_max, primes);
    CheckResult info = make_check("factor", "even_irreducibility_certificates", span_text("n", 2, n_max - n_max % 2, 2));
    info.informational = true;
    std::vector<std::string> missing;
    for (const auto& e : scan) {
        if (!e.certifying_prime) missing.push_back(std::to_string(e.n));
    }
    info.detail = fmt::format("{} of {} even n certified by a prime below 100", scan.size() - missing.size(),
                              scan.size());
    if (!missing.empty()) info.detail += fmt::format("; no certificate for n={}", fmt::join(missing, ","));
    out.push_back(info);
}

void suite_gcd(int n_max, std::vector<CheckResult>& out) {
    out.push_back(sweep("gcd", "gcd_p_n_p_n_minus_2", "n", 3, n_max, 1, [](int n) {
        const IntPoly expected = n % 2 == 1 ? IntPoly{1, 1} : IntPoly{1};
        return gcd_primitive(p_poly(n), p_poly(n - 2)) == expected;
    }));
}

Output cmd_verify(const RunConfig& cfg, const std::string& suite, int n_max) {
    if (n_max < 0) throw DomainError("verify: --n-max must be nonnegative");
    std::vector<CheckResult> results;
    const bool all = suite == "all";
    if (all || suite == "recursions") suite_recursions(n_max, results);
    if (all || suite == "gf") suite_gf(n_max, results);
    if (all || suite == "factor") suite_factor(n_max, results);
    if (all || suite == "gcd") suite_gcd(n_max, results);

    bool passed = true;
    for (const auto& r : results) passed = passed && (r.informational || r.passed);

    Output o;
    o.code = passed ? kOk : kCheckFailed;
    auto it = std::back_inserter(o.body);
    auto status = [](const CheckResult& r) { return r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL"); };
    if (cfg.format == "text") {
        for (const auto& r : results) {
            fmt::format_to(it, "{:<11} {:<33} {:<18} {}", r.suite, r.name, r.range, status(r));
            if (!r.detail.empty()) fmt::format_to(it, "  ({})", r.detail);
            o.body += '\n';
        }
        o.body += passed ? "PASS\n" : "FAIL\n";
    } else if (cfg.format == "csv") {
        o.body += "suite,check,range,status,detail\n";
        for (const auto& r : results) {
            fmt::format_to(it, "{},{},{},{},\"{}\"\n", r.suite, r.name, r.range, status(r), r.detail);
        }
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"suite", r.suite},
                           {"check", r.name},
                           {"range", r.range},
                           {"status", status(r)},
                           {"detail", r.detail}});
        }
        o.body = dump({{"meta", meta(cfg)},
                       {"suite", suite},
                       {"n_max", n_max},
                       {"checks", arr},
                       {"status", passed ? "PASS" : "FAIL"}});
    } else {
        unsupported(cfg);
    }
    return o;
}

// ---------------------------------------------------------------------------
// roots

Output cmd_roots(const RunConfig& cfg, int n) {
    const RootSet rs = solve_roots(n, cfg.tol);
    const AnnulusReport annulus = annulus_check(rs, cfg.tol.annulus);
    const VietaReport vieta = vieta_check(rs, cfg.tol.vieta_per_degree);

    Output o;
    o.code = annulus.passed() ? kOk : kCheckFailed;
    auto it = std::back_inserter(o.body);
    if (cfg.format == "csv") {
        o.body += "n,index,re,im,norm,residual,class\n";
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            const Complex z = rs.roots[i];
            fmt::format_to(it, "{},{},{},{},{},{},{}\n", n, i, coord(z.real()), coord(z.imag()), num(std::abs(z)),
                           num(rs.residuals[i]), to_string(classify(rs, i, cfg.tol.imag)));
        }
    } else if (cfg.format == "text") {
        fmt::format_to(it, "P_{}: {} roots, {} iterations\n", n, rs.roots.size(), rs.iterations);
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            const Complex z = rs.roots[i];
            fmt::format_to(it, "{:>4}  {:>22} {:>22}i  |z|={:<18} {}\n", i, coord(z.real()), coord(z.imag()),
                           num(std::abs(z)), to_string(classify(rs, i, cfg.tol.imag)));
        }
        if (annulus.min_norm) {
            fmt::format_to(it, "annulus: min |z| = {}, max |z| = {}, {}\n", num(*annulus.min_norm),
                           num(*annulus.max_norm), annulus.passed() ? "inside" : "VIOLATED");
        }
        fmt::format_to(it, "worst residual: {}\n", num(rs.worst_residual()));
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            const Complex z = rs.roots[i];
            arr.push_back({{"index", i},
                           {"re", round_coord(z.real())},
                           {"im", round_coord(z.imag())},
                           {"norm", round15(std::abs(z))},
                           {"residual", round15(rs.residuals[i])},
                           {"class", to_string(classify(rs, i, cfg.tol.imag))}});
        }
        json ann = {{"passed", annulus.passed()}};
        if (annulus.min_norm) {
            ann["min_norm"] = round15(*annulus.min_norm);
            ann["max_norm"] = round15(*annulus.max_norm);
        }
        o.body = dump({{"meta", meta(cfg)},
                       {"n", n},
                       {"iterations", rs.iterations},
                       {"roots", arr},
                       {"annulus", ann},
                       {"vieta",
                        {{"sum_error", round15(vieta.sum_error)},
                         {"product_error", round15(vieta.product_error)},
                         {"passed", vieta.passed()}}}});
    } else {
        Svg svg(fmt::format("roots of P_{} with the annulus sqrt(2)-1 &lt; |z| &lt; 1", n));
        svg.annulus(std::numbers::sqrt2 - 1.0, 1.0);
        svg.circle(1.0, "fill:none;stroke:#555555;stroke-width:1.5");
        svg.circle(std::numbers::sqrt2 - 1.0, "fill:none;stroke:#555555;stroke-width:1;stroke-dasharray:4 3");
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            svg.dot(rs.roots[i], 3.0, rs.is_trivial(i) ? "fill:#d62728" : "fill:#1f77b4");
        }
        o.body = svg.finish();
    }
    return o;
}

// ---------------------------------------------------------------------------
// curve

Output cmd_curve(const RunConfig& cfg, int n, bool with_metrics, int samples) {
    const CurveSpec spec = CurveSpec::finite(n);
    if (samples < 3) throw DomainError("curve: --samples must be at least 3");
    const auto count = static_cast<std::size_t>(samples);
    const RootSet rs = solve_roots(n, cfg.tol);
    const GammaReport report = no_roots_in_gamma(rs, cfg.tol.boundary);
    std::optional<ConvergenceMetrics> metrics;
    if (with_metrics) metrics = convergence_metrics(rs);

    const auto boundary_n = gamma_n_boundary(n, count);
    const auto boundary_limit = boundary_samples(count);
    const auto zm = approximants(n);

    Output o;
    o.code = report.passed() ? kOk : kCheckFailed;
    auto it = std::back_inserter(o.body);
    if (cfg.format == "csv") {
        o.body += "series,index,re,im\n";
        auto emit = [&](const char* series, const std::vector<Complex>& pts) {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                fmt::format_to(it, "{},{},{},{}\n", series, i, coord(pts[i].real()), coord(pts[i].imag()));
            }
        };
        emit("boundary_n", boundary_n);
        emit("boundary_limit", boundary_limit);
        emit("approximant", zm);
        emit("root", rs.roots);
        fmt::format_to(it, "metric,K,{},\n", num(spec.K()));
        fmt::format_to(it, "metric,min_margin,{},\n", num(report.min_margin));
        if (metrics) {
            fmt::format_to(it, "metric,hausdorff_to_curve,{},\n", num(metrics->hausdorff_to_curve));
            fmt::format_to(it, "metric,max_match_to_zm,{},\n", num(metrics->max_match_to_zm));
            fmt::format_to(it, "metric,fill_gap,{},\n", num(metrics->fill_gap));
        }
    } else if (cfg.format == "text") {
        fmt::format_to(it, "n = {}\nK = {}\nmin_margin = {}\nroots in Gamma_n: {}\n", n, num(spec.K()),
                       num(report.min_margin), report.violations.size());
        if (metrics) {
            fmt::format_to(it, "hausdorff_to_curve = {}\nmax_match_to_zm = {}\nfill_gap = {}\n",
                           num(metrics->hausdorff_to_curve), num(metrics->max_match_to_zm), num(metrics->fill_gap));
        }
    } else if (cfg.format == "json") {
        auto points = [](const std::vector<Complex>& pts) {
            json arr = json::array();
            for (const auto& z : pts) arr.push_back({round_coord(z.real()), round_coord(z.imag())});
            return arr;
        };
        json m = {{"K", round15(spec.K())},
                  {"min_margin", round15(report.min_margin)},
                  {"violations", report.violations.size()}};
        if (metrics) {
            m["hausdorff_to_curve"] = round15(metrics->hausdorff_to_curve);
            m["max_match_to_zm"] = round15(metrics->max_match_to_zm);
            m["fill_gap"] = round15(metrics->fill_gap);
        }
        o.body = dump({{"meta", meta(cfg)},
                       {"n", n},
                       {"boundary_n", points(boundary_n)},
                       {"boundary_limit", points(boundary_limit)},
                       {"approximants", points(zm)},
                       {"roots", points(rs.roots)},
                       {"metrics", m}});
    } else {
        Svg svg(fmt::format("roots of P_{} against the boundary of Gamma_{} and its limit", n, n));
        svg.circle(1.0, "fill:none;stroke:#bbbbbb;stroke-width:1");
        svg.polyline(boundary_limit, "fill:none;stroke:#2ca02c;stroke-width:1.5");
        svg.polyline(boundary_n, "fill:none;stroke:#555555;stroke-width:1;stroke-dasharray:4 3");
        for (const auto& z : zm) svg.cross(z, "stroke:#ff7f0e;stroke-width:1");
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            svg.dot(rs.roots[i], 2.5, rs.is_trivial(i) ? "fill:#d62728" : "fill:#1f77b4");
        }
        o.body = svg.finish();
    }
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pascalian numbers, polynomials and their roots", "pascalian"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::uint64_t seed = 0;
    app.add_option("--format", cfg.format, "Output format (default: text for triangle, bijection, verify; csv otherwise)")
        ->check(CLI::IsMember({"text", "csv", "json", "svg"}));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.add_option("--tol-residual", cfg.tol.residual, "Scaled residual every root must beat")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-imag", cfg.tol.imag, "Threshold for real and purely imaginary roots")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-vieta", cfg.tol.vieta_per_degree, "Vieta tolerance per degree")->check(CLI::PositiveNumber);
    app.add_option("--tol-boundary", cfg.tol.boundary, "Slack on the Gamma_n comparison")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Reserved; the solver is deterministic");

    int n_max = 10;
    auto* triangle = app.add_subcommand("triangle", "Rows 0..n-max of the Pascalian triangle")->fallthrough();
    triangle->add_option("--n-max", n_max, "Last row")->capture_default_str();

    int n = 0;
    auto* bijection = app.add_subcommand("bijection", "Tableaux of B_n, their walks and statistics")->fallthrough();
    bijection->add_option("--n", n, "Number of dominos")->required();

    std::string suite = "all";
    int verify_n_max = 30;
    auto* verify = app.add_subcommand("verify", "Exact identity suites")->fallthrough();
    verify->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"recursions", "gf", "factor", "gcd", "all"}))
        ->capture_default_str();
    verify->add_option("--n-max", verify_n_max, "Largest index checked")->capture_default_str();

    auto* roots = app.add_subcommand("roots", "Roots of P_n")->fallthrough();
    roots->add_option("--n", n, "Degree")->required();

    bool with_metrics = false;
    int samples = 512;
    auto* curve = app.add_subcommand("curve", "Boundary of Gamma_n, the limit curve, z_m and the roots")->fallthrough();
    curve->add_option("--n", n, "Degree")->required();
    curve->add_flag("--metrics", with_metrics, "Also report convergence metrics");
    curve->add_option("--samples", samples, "Points per boundary curve")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (*seed_opt) cfg.seed = seed;

    const auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.format.empty()) {
        cfg.format = (sub == roots || sub == curve) ? "csv" : "text";
    }

    Output result;
    try {
        if (sub == triangle) {
            result = cmd_triangle(cfg, n_max);
        } else if (sub == bijection) {
            result = cmd_bijection(cfg, n);
        } else if (sub == verify) {
            result = cmd_verify(cfg, suite, verify_n_max);
        } else if (sub == roots) {
            result = cmd_roots(cfg, n);
        } else {
            result = cmd_curve(cfg, n, with_metrics, samples);
        }
    } catch (const NumericError& e) {
        err << "error: " << e.what() << fmt::format(" (worst residual {:.3e})", e.worst_residual()) << '\n';
        return kNumeric;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (cfg.out_path.empty()) {
        out << result.body;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        file << result.body;
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kUsage;
        }
    }
    return result.code;
}

}  // namespace pascalian::cli
