#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gft/gft.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;

std::string fmt(double x, int digits = 12) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

void csv_banner(const std::string& command) { std::cout << "# gft " << gft::kVersion << ' ' << command << '\n'; }

json report_json(const gft::MembershipReport& r) {
    json j{{"satisfied", r.satisfied},
           {"sup_value", r.sup_value},
           {"threshold", r.threshold},
           {"argmax_r", r.argmax_r},
           {"argmax_theta", r.argmax_theta},
           {"boundary_marginal", r.boundary_marginal},
           {"caveat", r.caveat}};
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    return j;
}

double default_tol() {
    if (const char* env = std::getenv("GFT_DEFAULT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        throw gft::ParseError("GFT_DEFAULT_TOL must be a positive number");
    }
    return 1e-12;
}

struct Common {
    std::string format = "csv";
    double tol = 1e-12;
    double guard = 0.999;
    int angles = 4096;
    std::uint64_t seed = 7;

    gft::DiskGrid grid() const {
        gft::DiskGrid g;
        g.guard = guard;
        g.angular = angles;
        g.validate();
        return g;
    }
};

// radii ---------------------------------------------------------------------

int run_radii(const Common& c, double compare_tol) {
    gft::VerifyOptions opt;
    opt.root_tol = c.tol;
    opt.compare_tol = compare_tol;
    opt.angles = c.angles;
    const auto rows = gft::solve_radius_catalog(opt);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.within && r.sharpness_ok;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j{{"id", r.id},
                   {"computed", r.computed},
                   {"expected", r.expected},
                   {"diff", r.diff},
                   {"tolerance", r.tolerance},
                   {"within", r.within},
                   {"residual", r.residual},
                   {"sharp", r.sharp}};
            j["sharpness_residual"] = std::isnan(r.sharpness_residual) ? json(nullptr) : json(r.sharpness_residual);
            arr.push_back(j);
        }
        std::cout << json{{"version", gft::kVersion}, {"command", "radii"}, {"rows", arr}}.dump(2) << '\n';
    } else {
        csv_banner("radii");
        std::cout << "id,computed,expected,diff,tolerance,within,residual,sharp,sharpness_residual\n";
        for (const auto& r : rows)
            std::cout << r.id << ',' << fmt(r.computed) << ',' << fmt(r.expected) << ',' << fmt(r.diff, 3) << ','
                      << fmt(r.tolerance, 3) << ',' << (r.within ? "true" : "false") << ',' << fmt(r.residual, 3)
                      << ',' << (r.sharp ? "true" : "false") << ',' << fmt(r.sharpness_residual, 3) << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
}

// verify --------------------------------------------------------------------

int run_verify(const Common& c, const std::string& suite_name) {
    static const std::map<std::string, gft::Suite> kSuites{{"radii", gft::Suite::radii},
                                                            {"bounds", gft::Suite::bounds},
                                                            {"sufficiency", gft::Suite::sufficiency},
                                                            {"inclusion", gft::Suite::inclusion},
                                                            {"all", gft::Suite::all}};
    gft::VerifyOptions opt;
    opt.root_tol = c.tol;
    opt.seed = c.seed;
    opt.angles = c.angles;
    opt.guard = c.guard;
    const auto rep = gft::verify_all(opt, kSuites.at(suite_name));
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& r : rep.radii)
            rows.push_back({{"suite", "radii"},
                            {"name", r.id},
                            {"passed", r.within && r.sharpness_ok},
                            {"value", r.computed},
                            {"target", r.expected}});
        for (const auto& r : rep.checks)
            rows.push_back({{"suite", r.suite},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"value", r.value},
                            {"target", r.target},
                            {"detail", r.detail}});
        json err = json::array();
        for (const auto& e : gft::errata())
            err.push_back({{"id", e.id}, {"printed", e.printed}, {"implemented", e.implemented}});
        std::cout << json{{"version", gft::kVersion}, {"command", "verify"}, {"seed", c.seed},
                          {"rows", rows},         {"errata", err}}
                         .dump(2)
                  << '\n';
    } else {
        csv_banner("verify");
        std::cout << "suite,name,passed,value,target,detail\n";
        auto quote = [](const std::string& s) { return '"' + s + '"'; };
        for (const auto& r : rep.radii)
            std::cout << "radii," << r.id << ',' << (r.within && r.sharpness_ok ? "true" : "false") << ','
                      << fmt(r.computed) << ',' << fmt(r.expected) << ",\n";
        for (const auto& r : rep.checks)
            std::cout << r.suite << ',' << quote(r.name) << ',' << (r.passed ? "true" : "false") << ','
                      << fmt(r.value) << ',' << fmt(r.target) << ',' << quote(r.detail) << '\n';
        for (const auto& e : gft::errata())
            std::cout << "errata," << e.id << ",info,,," << quote("printed: " + e.printed) << '\n';
    }
    return rep.all_passed() ? kExitOk : kExitMismatch;
}

// member --------------------------------------------------------------------

int run_member(const Common& c, const std::string& cls, double lambda, double alpha, const std::string& phi,
               const std::string& series_path) {
    const gft::PowerSeries series = gft::load_power_series(series_path);
    const gft::AnalyticMap f = gft::series_map(series);
    const gft::DiskGrid grid = c.grid();
    gft::MembershipReport rep;
    json params{{"class", cls}, {"series", series_path}, {"guard", c.guard}, {"angles", c.angles}};
    if (cls == "omega") {
        rep = gft::in_omega(f, grid);
    } else if (cls == "g") {
        rep = gft::in_G(f, {lambda, alpha, series.order_n()}, grid);
        params["lambda"] = lambda;
        params["alpha"] = alpha;
    } else {
        rep = gft::in_sstar_disk(f, gft::parse_maminda(phi), grid);
        params["phi"] = phi;
    }
    std::cout << json{{"version", gft::kVersion}, {"command", "member"}, {"params", params},
                      {"report", report_json(rep)}}
                     .dump(2)
              << '\n';
    return rep.satisfied ? kExitOk : kExitMismatch;
}

// construct -----------------------------------------------------------------

int run_construct(const Common& c, const std::string& g_path, double lambda, double alpha, int n,
                  const std::string& variant_name, int terms) {
    const auto variant = variant_name == "thm2" ? gft::SufficiencyVariant::thm2 : gft::SufficiencyVariant::thm1;
    const gft::ClassParams p{lambda, alpha, n};
    const gft::Polynomial g = gft::load_polynomial(g_path);
    const gft::DiskGrid grid = c.grid();
    const double threshold = gft::sufficiency_threshold(p, variant);
    const gft::AnalyticMap g_map = gft::polynomial_map(g);
    const auto g_sup = gft::sup_on_circle([&](gft::Complex z) { return std::abs(g_map(z)); }, grid.guard, grid);

    const gft::AnalyticMap f_map = gft::build_double_integral_fn(g_map, p, variant);
    const std::size_t nterms = terms > 0 ? static_cast<std::size_t>(terms) : static_cast<std::size_t>(n) + 1 + g.size();
    const gft::PowerSeries f = gft::recover_series(f_map, nterms, n);
    const auto condition = gft::check_sufficient_condition(f_map, p, variant, grid);
    const auto member = gft::in_G(f_map, p, grid);

    std::cout << json{{"version", gft::kVersion},
                      {"command", "construct"},
                      {"params", {{"lambda", lambda}, {"alpha", alpha}, {"n", n}, {"variant", variant_name}}},
                      {"threshold", threshold},
                      {"g_sup", g_sup.value},
                      {"f", gft::to_json(f)},
                      {"sufficient_condition", report_json(condition)},
                      {"membership", report_json(member)}}
                     .dump(2)
              << '\n';
    return condition.satisfied && member.satisfied ? kExitOk : kExitMismatch;
}

// catalog -------------------------------------------------------------------

int run_catalog(const Common& c) {
    if (c.format == "json") {
        json arr = json::array();
        for (auto name : gft::kAllMaMinda) {
            const auto& e = gft::maminda(name);
            arr.push_back({{"name", gft::to_string(name)},
                           {"phi", e.phi_formula},
                           {"r1", e.r1},
                           {"r1_tabulated", e.r1_tabulated},
                           {"dist_formula", e.dist_formula_id}});
        }
        std::cout << json{{"version", gft::kVersion}, {"command", "catalog"}, {"rows", arr}}.dump(2) << '\n';
    } else {
        csv_banner("catalog");
        std::cout << "name,r1,r1_tabulated,dist_formula\n";
        for (auto name : gft::kAllMaMinda) {
            const auto& e = gft::maminda(name);
            std::cout << gft::to_string(name) << ',' << fmt(e.r1, 16) << ',' << (e.r1_tabulated ? "true" : "false")
                      << ',' << e.dist_formula_id << '\n';
        }
    }
    return kExitOk;
}

// plot ----------------------------------------------------------------------

int run_plot(const std::string& kind, const std::string& phi, std::vector<double> radii, int samples) {
    std::vector<gft::MaMindaName> names;
    if (phi == "all")
        names.assign(gft::kAllMaMinda.begin(), gft::kAllMaMinda.end());
    else
        names.push_back(gft::parse_maminda(phi));
    csv_banner("plot " + kind);
    if (kind == "boundary") {
        if (radii.empty()) radii = {0.5, 0.9, 0.999};
        std::cout << "name,r,theta,re,im\n";
        for (auto name : names) {
            const auto& e = gft::maminda(name);
            for (double r : radii) {
                for (int k = 0; k < samples; ++k) {
                    const double theta = 2.0 * std::numbers::pi * k / samples;
                    const gft::Complex w = e.phi(std::polar(r, theta));
                    std::cout << gft::to_string(name) << ',' << fmt(r) << ',' << fmt(theta) << ',' << fmt(w.real())
                              << ',' << fmt(w.imag()) << '\n';
                }
            }
        }
    } else {
        std::cout << "name,r,dist_max,growth_M,product\n";
        for (auto name : names) {
            for (int k = 1; k < samples; ++k) {
                const double r = 0.95 * k / samples;
                const double d = gft::dist_max(name, r), m = gft::growth_M(name, r);
                std::cout << gft::to_string(name) << ',' << fmt(r) << ',' << fmt(d) << ',' << fmt(m) << ','
                          << fmt(d * m) << '\n';
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for starlike-class radius and inclusion problems"};
    app.set_version_flag("--version", std::string(gft::kVersion));
    app.require_subcommand(1);

    Common common;
    try {
        common.tol = default_tol();
    } catch (const gft::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", common.tol, "Root refinement tolerance")->check(CLI::PositiveNumber);
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--guard", common.guard, "Guard radius")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--angles", common.angles, "Angular samples per circle")->check(CLI::Range(64, 1 << 22));
    };

    double compare_tol = 0.0;
    auto* radii = app.add_subcommand("radii", "Solve every radius problem and compare with its constant");
    add_format(radii);
    add_tol(radii);
    radii->add_option("--compare-tol", compare_tol, "Override the per-problem comparison tolerance")
        ->check(CLI::PositiveNumber);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run radius checks and property suites");
    add_format(verify);
    add_tol(verify);
    add_grid(verify);
    verify->add_option("--suite", suite)->check(CLI::IsMember({"bounds", "inclusion", "sufficiency", "radii", "all"}));
    verify->add_option("--seed", common.seed);

    std::string cls, phi = "e", series_path;
    double lambda = 0.25, alpha = 0.5;
    auto* member = app.add_subcommand("member", "Grid membership test for a series document");
    member->add_option("--class", cls)->required()->check(CLI::IsMember({"omega", "g", "sstar"}));
    member->add_option("--lambda", lambda);
    member->add_option("--alpha", alpha);
    member->add_option("--phi", phi);
    member->add_option("--series", series_path)->required();
    add_grid(member);

    std::string g_path, variant = "thm1";
    int n = 1, terms = 0;
    auto* construct = app.add_subcommand("construct", "Build f from g through the double integral");
    construct->add_option("--g", g_path)->required();
    construct->add_option("--lambda", lambda);
    construct->add_option("--alpha", alpha);
    construct->add_option("--n", n)->check(CLI::PositiveNumber);
    construct->add_option("--variant", variant)->check(CLI::IsMember({"thm1", "thm2"}));
    construct->add_option("--terms", terms, "Coefficients to recover (default n + 1 + deg g + 1)");
    add_grid(construct);

    auto* catalog = app.add_subcommand("catalog", "List the Ma-Minda classes");
    add_format(catalog);

    std::string kind = "boundary", plot_phi = "all";
    std::vector<double> plot_radii;
    int samples = 256;
    auto* plot = app.add_subcommand("plot", "Emit boundary traces or radial profiles as CSV");
    plot->add_option("--kind", kind)->check(CLI::IsMember({"boundary", "profile"}));
    plot->add_option("--phi", plot_phi);
    plot->add_option("--r", plot_radii, "Circle radii for boundary traces")->check(CLI::Range(0.0, 1.0));
    plot->add_option("--samples", samples)->check(CLI::Range(8, 1 << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*radii) return run_radii(common, compare_tol);
        if (*verify) return run_verify(common, suite);
        if (*member) return run_member(common, cls, lambda, alpha, phi, series_path);
        if (*construct) return run_construct(common, g_path, lambda, alpha, n, variant, terms);
        if (*catalog) return run_catalog(common);
        if (*plot) return run_plot(kind, plot_phi, plot_radii, samples);
    } catch (const gft::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const gft::NotFoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const gft::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const gft::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}
