#include "cli.hpp"

#include "asnp/bounds.hpp"
#include "asnp/counting.hpp"
#include "asnp/errors.hpp"
#include "asnp/gnp.hpp"
#include "asnp/json_io.hpp"
#include "asnp/verify.hpp"
#include "asnp/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace asnp::cli {

namespace {

struct Common {
    bool json = false;
    bool plot = false;
    std::string out_path;
};

struct Series {
    std::string name;
    const NewtonPolygon* polygon;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "Machine-readable JSON output");
    sub->add_flag("--plot-data", c.plot, "Vertex pairs, one per line");
    sub->add_option("--out", c.out_path, "Write the result to a file instead of stdout");
}

std::string vertices_str(const NewtonPolygon& np) {
    std::string s;
    for (const auto& v : np.vertices()) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(v.x) + "," + v.y.pretty() + ")";
    }
    return s;
}

std::string slopes_str(const NewtonPolygon& np) {
    std::string s;
    const auto slopes = np.slopes();
    for (const auto& e : slopes.entries()) {
        if (!s.empty()) s += ", ";
        s += e.slope.pretty() + " x " + std::to_string(e.mult);
    }
    return s.empty() ? "(none)" : s;
}

void print_polygon(std::ostream& os, const std::string& name, const NewtonPolygon& np) {
    os << name << ": " << vertices_str(np) << "\n";
    os << std::string(name.size(), ' ') << "  slopes " << slopes_str(np) << "\n";
}

void print_plot(std::ostream& os, const std::vector<Series>& series) {
    bool first = true;
    for (const auto& s : series) {
        if (series.size() > 1) {
            if (!first) os << "\n";
            os << "# " << s.name << "\n";
        }
        first = false;
        for (const auto& v : s.polygon->vertices()) os << v.x << " " << v.y.decimal_or_fraction() << "\n";
    }
}

void print_checks(std::ostream& os, const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        os << "  " << (c.passed ? "ok  " : (c.hard ? "FAIL" : "no  ")) << " " << c.name << (c.hard ? "" : " (info)");
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
}

std::string l_str(const LPolynomial& l) {
    std::string s;
    for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
        const auto& c = l.coeffs[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (s.empty()) {
            s += c < 0 ? "-" : "";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) s += mag.str();
        if (i >= 1) s += "T";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::uint32_t checked_prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 20) || !is_prime(p)) {
        throw InputError("p = " + std::to_string(p) + " must be a prime below 2^20");
    }
    return static_cast<std::uint32_t>(p);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

NewtonPolygon read_polygon(const std::string& path) {
    try {
        return polygon_from_json(read_json_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

RamificationData ramification_from_flags(std::int64_t p, std::int64_t g, const std::vector<std::int64_t>& ds,
                                         const std::string& rd_path) {
    if (!rd_path.empty()) return ramification_from_json(read_json_file(rd_path));
    return RamificationData::ordinary(p, g, ds);
}

unsigned resolve_workers(unsigned w) { return w ? w : std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton-polygon bounds for Artin-Schreier covers y^p - y = f(x)", "asnp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Common common;
    std::int64_t p = 0, d = 0, g = 0, ell = 1;
    std::vector<std::int64_t> ds;
    std::string f_text, rd_path, family = "monic-zero-constant";
    std::string path_a, path_b;
    bool scaled = false, exhaustive = false, check_extra = false, strict = false;
    std::size_t random_n = 0, cap = 1000;
    std::uint64_t seed = 0, budget = kDefaultBudget;
    unsigned workers = 0;

    auto budget_opts = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "Largest field size to enumerate")->capture_default_str();
        sub->add_option("--workers", workers, "Worker threads (0 = available cores)");
    };

    auto* c_gnp = app.add_subcommand("gnp", "Generic Newton polygon GNP(d,p)");
    c_gnp->add_option("-d", d, "Degree")->required();
    c_gnp->add_option("-p", p, "Characteristic")->required();
    c_gnp->add_flag("--scaled", scaled, "Multiplicities scaled by p-1");
    add_common(c_gnp, common);

    auto* c_hodge = app.add_subcommand("hodge", "Hodge bound for a cover with ramification D");
    auto* c_bound = app.add_subcommand("bound", "Bound NP_X(D) built from (p-1)GNP");
    for (auto* sub : {c_hodge, c_bound}) {
        sub->add_option("-p", p, "Characteristic");
        sub->add_option("-g", g, "Genus of an ordinary base curve")->capture_default_str();
        sub->add_option("-D", ds, "Ramification invariants, comma separated")->delimiter(',');
        sub->add_option("--rd", rd_path, "Ramification data JSON (overrides -p/-g/-D)");
        add_common(sub, common);
    }

    auto* c_compare = app.add_subcommand("compare", "Compare two Newton polygons");
    c_compare->add_option("A", path_a, "Polygon JSON")->required();
    c_compare->add_option("B", path_b, "Polygon JSON")->required();
    add_common(c_compare, common);

    auto* c_between = app.add_subcommand("between", "Symmetric lattice polygons between two bounds");
    c_between->add_option("L", path_a, "Lower polygon JSON")->required();
    c_between->add_option("U", path_b, "Upper polygon JSON")->required();
    c_between->add_option("--cap", cap, "Maximum number of polygons")->capture_default_str();
    c_between->add_flag("--strict", strict, "Exclude the two bounds themselves");
    add_common(c_between, common);

    auto* c_count = app.add_subcommand("count", "Points of y^p - y = f over F_{p^l}");
    c_count->add_option("--ell", ell, "Extension degree")->capture_default_str();
    auto* c_zeta = app.add_subcommand("zeta", "L-polynomial of y^p - y = f");
    auto* c_analyze = app.add_subcommand("analyze", "Newton polygon of one cover against the bounds");
    c_analyze->add_flag("--check-extra", check_extra, "Also check counts over F_{p^l} for g < l <= 2g");
    for (auto* sub : {c_count, c_zeta, c_analyze}) {
        sub->add_option("-p", p, "Characteristic")->required();
        sub->add_option("-f", f_text, "Rational function of x, e.g. \"x^3 + 1/x\"")->required();
        budget_opts(sub);
        add_common(sub, common);
    }

    auto* c_sweep = app.add_subcommand("sweep", "Analyze a family of polynomial covers of degree d");
    c_sweep->add_option("-p", p, "Characteristic")->required();
    c_sweep->add_option("-d", d, "Degree")->required();
    auto* o_ex = c_sweep->add_flag("--exhaustive", exhaustive, "Every member of the family");
    auto* o_rand = c_sweep->add_option("--random", random_n, "Random sample of this many members");
    o_ex->excludes(o_rand);
    c_sweep->add_option("--seed", seed, "Seed for --random")->capture_default_str();
    c_sweep->add_option("--family", family, "normal | monic-zero-constant | monic")->capture_default_str();
    budget_opts(c_sweep);
    add_common(c_sweep, common);

    auto* c_match = app.add_subcommand("example-matching", "Polygon strictly between the bounds for p = 23, d = 6");
    add_common(c_match, common);

    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !app.get_subcommand_no_throw(args.front())) {
        err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
        return 2;
    }
    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::ostringstream os;
    int code = 0;
    try {
        CountOptions count_opts{budget, resolve_workers(workers)};
        if (c_gnp->parsed()) {
            const GnpInput in(d, p);
            const auto np = scaled ? gnp_scaled(in) : gnp(in);
            if (common.json) {
                os << polygon_to_json(np).dump() << "\n";
            } else if (common.plot) {
                print_plot(os, {{"gnp", &np}});
            } else {
                const auto y = y_values(in);
                os << "Y_n:";
                for (auto v : y) os << " " << v;
                os << "\n";
                print_polygon(os, scaled ? "(p-1)GNP" : "GNP", np);
            }
        } else if (c_hodge->parsed() || c_bound->parsed()) {
            if (rd_path.empty() && p == 0) throw InputError("-p is required unless --rd is given");
            const auto rd = ramification_from_flags(p, g, ds, rd_path);
            const bool hodge = c_hodge->parsed();
            const auto np = hodge ? hodge_bound(rd) : np_bound(rd);
            if (common.json) {
                os << polygon_to_json(np).dump() << "\n";
            } else if (common.plot) {
                print_plot(os, {{hodge ? "hodge" : "np_bound", &np}});
            } else {
                print_polygon(os, hodge ? "hodge" : "NP_X(D)", np);
            }
        } else if (c_compare->parsed()) {
            const auto a = read_polygon(path_a);
            const auto b = read_polygon(path_b);
            std::string relation;
            if (a == b) {
                relation = "equal";
            } else if (lies_on_or_above(b, a)) {
                relation = "below";
            } else if (lies_on_or_above(a, b)) {
                relation = "above";
            } else {
                relation = "incomparable";
            }
            if (common.json) {
                os << Json{{"relation", relation}}.dump() << "\n";
            } else if (common.plot) {
                print_plot(os, {{"A", &a}, {"B", &b}});
            } else if (relation == "equal" || relation == "incomparable") {
                os << relation << "\n";
            } else {
                os << "A lies " << relation << " B\n";
            }
        } else if (c_between->parsed()) {
            const auto lo = read_polygon(path_a);
            const auto hi = read_polygon(path_b);
            const auto res = strict ? enumerate_strictly_between(lo, hi, cap) : enumerate_between(lo, hi, cap);
            if (common.json) {
                Json arr = Json::array();
                for (const auto& np : res.polygons) arr.push_back(polygon_to_json(np));
                os << Json{{"count", res.polygons.size()}, {"truncated", res.truncated}, {"polygons", arr}}.dump()
                   << "\n";
            } else if (common.plot) {
                std::vector<Series> series;
                std::vector<std::string> names;
                for (std::size_t i = 0; i < res.polygons.size(); ++i) names.push_back("polygon " + std::to_string(i + 1));
                for (std::size_t i = 0; i < res.polygons.size(); ++i) series.push_back({names[i], &res.polygons[i]});
                print_plot(os, series);
            } else {
                for (const auto& np : res.polygons) os << vertices_str(np) << "\n";
                os << res.polygons.size() << " polygon(s)" << (res.truncated ? ", truncated at --cap" : "") << "\n";
            }
        } else if (c_count->parsed()) {
            const auto f = PrimeFieldFunction::parse(checked_prime(p), f_text);
            const auto reduced = artin_schreier_reduce(f);
            if (ell < 1 || ell > kMaxExtensionDegree) throw InputError("--ell must be in 1.." + std::to_string(kMaxExtensionDegree));
            const auto pc = count_points_detailed(reduced, static_cast<int>(ell), count_opts);
            if (common.json) {
                os << Json{{"p", p},        {"ell", ell},          {"f", reduced.str()},
                           {"total", pc.total}, {"affine", pc.affine}, {"rational_poles", pc.rational_poles},
                           {"infinity", pc.infinity}}
                          .dump()
                   << "\n";
            } else if (common.plot) {
                os << ell << " " << pc.total << "\n";
            } else {
                os << "N_" << ell << " = " << pc.total << "  (y^p - y = " << reduced.str() << " over F_" << p << "^"
                   << ell << ")\n";
                os << "  affine " << pc.affine << ", finite poles " << pc.rational_poles << ", above infinity "
                   << pc.infinity << "\n";
            }
        } else if (c_zeta->parsed() || c_analyze->parsed()) {
            const auto f = PrimeFieldFunction::parse(checked_prime(p), f_text);
            AnalyzeOptions opts{count_opts, check_extra};
            const auto rep = analyze_cover(f, opts);
            if (c_zeta->parsed()) {
                if (common.json) {
                    os << lpoly_to_json(rep.l).dump() << "\n";
                } else if (common.plot) {
                    print_plot(os, {{"np", &rep.np}});
                } else {
                    os << "L(T) = " << l_str(rep.l) << "\n";
                    os << "genus " << rep.g_y << ", q = " << rep.l.q.str() << "\n";
                }
            } else {
                if (common.json) {
                    os << cover_report_to_json(rep).dump(2) << "\n";
                } else if (common.plot) {
                    print_plot(os, {{"np", &rep.np}, {"hodge", &rep.hodge}, {"np_bound", &rep.np_bound}});
                } else {
                    os << "f = " << rep.f.str();
                    if (!(rep.f == rep.original)) os << "  (reduced from " << rep.original.str() << ")";
                    os << "\nbranch:";
                    for (const auto& b : rep.branch) os << " " << b.label() << " (d=" << b.d << ")";
                    os << "\ng_Y = " << rep.g_y << "\ncounts:";
                    for (const auto& n : rep.counts) os << " " << n.str();
                    os << "\nL(T) = " << l_str(rep.l) << "\n";
                    print_polygon(os, "NP", rep.np);
                    print_polygon(os, "hodge", rep.hodge);
                    print_polygon(os, "NP_X(D)", rep.np_bound);
                    os << "checks:\n";
                    print_checks(os, rep.checks);
                }
                if (!rep.passed()) code = 1;
            }
        } else if (c_sweep->parsed()) {
            if (!exhaustive && random_n == 0) throw InputError("sweep needs --exhaustive or --random N");
            SweepMode mode{exhaustive, random_n, seed};
            const auto rep = sweep_family(p, d, family_from_name(family), mode, count_opts);
            if (common.json) {
                os << family_report_to_json(rep).dump(2) << "\n";
            } else if (common.plot) {
                std::vector<Series> series{{"hodge", &rep.hodge}, {"np_bound", &rep.np_bound}};
                std::vector<std::string> names;
                for (const auto& t : rep.distinct) names.push_back("observed x" + std::to_string(t.count));
                for (std::size_t i = 0; i < rep.distinct.size(); ++i) series.push_back({names[i], &rep.distinct[i].np});
                print_plot(os, series);
            } else {
                os << "family " << family_name(rep.family) << ", p = " << p << ", d = " << d << ", "
                   << rep.covers.size() << " cover(s), g_Y = " << rep.g_y << "\n";
                print_polygon(os, "hodge", rep.hodge);
                print_polygon(os, "NP_X(D)", rep.np_bound);
                os << "observed:\n";
                for (const auto& t : rep.distinct) os << "  " << t.count << " x " << vertices_str(t.np) << "\n";
                if (rep.minimum) print_polygon(os, "minimum", *rep.minimum);
                os << "checks:\n";
                print_checks(os, rep.checks);
                for (const auto& c : rep.covers) {
                    if (!c.passed()) os << "  failing cover: " << c.f.str() << "\n";
                }
            }
            if (!rep.passed()) code = 1;
        } else if (c_match->parsed()) {
            const auto cert = reproduce_matching_example();
            if (common.json) {
                os << certificate_to_json(cert).dump(2) << "\n";
            } else if (common.plot) {
                print_plot(os, {{"hodge", &cert.hodge}, {"intermediate", &cert.intermediate},
                                {"gnp_scaled", &cert.gnp_scaled}});
            } else {
                os << "p = 23, d = 6\n";
                print_polygon(os, "hodge", cert.hodge);
                print_polygon(os, "intermediate", cert.intermediate);
                print_polygon(os, "(p-1)GNP", cert.gnp_scaled);
                os << cert.strictly_between << " symmetric lattice polygons lie strictly between the bounds\n";
                os << "checks:\n";
                print_checks(os, cert.checks);
            }
            if (!all_hard_passed(cert.checks)) code = 1;
        }
    } catch (const EngineError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (common.out_path.empty()) {
        out << os.str();
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file || !(file << os.str())) {
            err << "error: cannot write " << common.out_path << "\n";
            return 2;
        }
    }
    return code;
}

}  // namespace asnp::cli
