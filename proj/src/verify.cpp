#include "asnp/verify.hpp"

#include "asnp/errors.hpp"
#include "asnp/gnp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace asnp {

bool all_hard_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || !c.hard; });
}

namespace {

std::string polygon_str(const NewtonPolygon& np) {
    std::string s;
    for (const auto& v : np.vertices()) {
        if (!s.empty()) s += ",";
        s += "(" + std::to_string(v.x) + "," + v.y.pretty() + ")";
    }
    return s;
}

bool fits_budget(std::uint64_t p, std::int64_t ell, std::uint64_t budget) {
    std::uint64_t size = 1;
    for (std::int64_t i = 0; i < ell; ++i) {
        if (size > budget / p) return false;
        size *= p;
    }
    return size <= budget;
}

}  // namespace

CoverReport analyze_cover(const PrimeFieldFunction& f_raw, const AnalyzeOptions& options) {
    CoverReport r;
    r.original = f_raw;
    r.f = artin_schreier_reduce(f_raw);
    const auto p = r.f.p();
    r.p = p;
    r.branch = branch_data(r.f);
    const RamificationData rd = ramification_data(r.f);
    r.g_y = genus_cover(rd);
    r.p_ge_3d = r.p >= 3 * rd.max_d();

    if (r.g_y > kMaxExtensionDegree) {
        throw BudgetError("genus " + std::to_string(r.g_y) + " needs F_p^l beyond l = " +
                          std::to_string(kMaxExtensionDegree));
    }
    if (!fits_budget(p, r.g_y, options.count.budget)) {
        throw BudgetError("genus " + std::to_string(r.g_y) + " needs counts over F_" + std::to_string(p) + "^" +
                          std::to_string(r.g_y) + ", beyond the field-size budget of " +
                          std::to_string(options.count.budget));
    }
    for (std::int64_t ell = 1; ell <= r.g_y; ++ell) {
        r.counts.push_back(BigInt(count_points(r.f, static_cast<int>(ell), options.count)));
    }
    const BigInt q(p);
    r.l = l_from_counts(r.counts, static_cast<int>(r.g_y), q);
    r.np = newton_polygon_of_l(r.l, p, 1);
    r.hodge = hodge_bound(rd);
    r.np_bound = np_bound(rd);

    auto add = [&](std::string name, bool passed, bool hard, std::string detail) {
        r.checks.push_back(Check{std::move(name), passed, hard, std::move(detail)});
    };

    add("genus_consistency", r.np.width() == 2 * r.g_y && static_cast<std::int64_t>(r.l.coeffs.size()) == 2 * r.g_y + 1,
        true, "g_Y = " + std::to_string(r.g_y) + ", NP width " + std::to_string(r.np.width()));
    for (const auto& c : validate_l(r.l)) add(c.name, c.passed, true, c.detail);

    const bool above_hodge = lies_on_or_above(r.np, r.hodge);
    if (!above_hodge) {
        throw EngineError("NP " + polygon_str(r.np) + " of y^p - y = " + r.f.str() + " lies below the Hodge bound " +
                          polygon_str(r.hodge));
    }
    add("robba_lower_bound", true, true, "NP on or above the Hodge bound");
    add("symmetry", is_symmetric(r.np), true, "slopes invariant under s -> 1 - s");
    add("integral_breakpoints", has_integral_breakpoints(r.np), true, "");
    const auto f_y = p_rank_cover(rd, 0);
    const auto slope0 = slope_zero_multiplicity(r.np);
    add("ds_p_rank", slope0 == f_y, true,
        "slope-0 multiplicity " + std::to_string(slope0) + ", Deuring-Shafarevich " + std::to_string(f_y));

    const bool within = lies_on_or_above(r.np_bound, r.np);
    add("within_upper", within, false,
        std::string(within ? "NP on or below NP_X(D)" : "NP not below NP_X(D)") +
            (r.p_ge_3d ? "" : "; theorem-scope: p < 3 max d"));
    if (r.hodge == r.np_bound) {
        add("bounds_coincide", true, false,
            within ? "Hodge bound = NP_X(D), NP pinned between equal bounds" : "Hodge bound = NP_X(D)");
    }

    if (options.check_extra && r.g_y > 0) {
        std::int64_t top = r.g_y;
        while (top < 2 * r.g_y && top < kMaxExtensionDegree && fits_budget(p, top + 1, options.count.budget)) ++top;
        const auto predicted = counts_from_l(r.l, static_cast<int>(top));
        bool ok = true;
        for (std::int64_t ell = r.g_y + 1; ell <= top; ++ell) {
            r.extra_counts.push_back(BigInt(count_points(r.f, static_cast<int>(ell), options.count)));
            ok = ok && r.extra_counts.back() == predicted[static_cast<std::size_t>(ell - 1)];
        }
        add("extra_counts", ok, true,
            top > r.g_y ? "N_l predicted by L for l = " + std::to_string(r.g_y + 1) + ".." + std::to_string(top)
                        : "no extra degree fits the budget");
    }
    return r;
}

std::string family_name(Family family) {
    switch (family) {
        case Family::Normal: return "normal";
        case Family::MonicZeroConstant: return "monic-zero-constant";
        case Family::Monic: return "monic";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "normal") return Family::Normal;
    if (name == "monic-zero-constant") return Family::MonicZeroConstant;
    if (name == "monic") return Family::Monic;
    throw InputError("unknown family '" + name + "' (normal, monic-zero-constant, monic)");
}

namespace {

void check_sweep_input(std::int64_t p, std::int64_t d) {
    if (p < 2 || !is_prime(p) || p >= (std::int64_t{1} << 20)) throw InputError("p must be a prime below 2^20");
    if (d < 1) throw InputError("degree must be positive");
    if (d % p == 0) throw InputError("degree must be prime to p");
}

// Positions of x^i (0 <= i < d) whose coefficient varies across the family.
std::vector<std::size_t> free_positions(std::int64_t d, Family family) {
    std::vector<std::size_t> out;
    for (std::int64_t i = 0; i < d; ++i) {
        if (i == 0 && family != Family::Monic) continue;
        if (i == d - 1 && family == Family::Normal) continue;
        out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

}  // namespace

std::vector<FpPoly> family_members(std::int64_t p, std::int64_t d, Family family, const SweepMode& mode) {
    check_sweep_input(p, d);
    const auto slots = free_positions(d, family);
    const auto up = static_cast<std::uint32_t>(p);
    std::vector<std::vector<std::int64_t>> tuples;
    if (mode.exhaustive) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (total > 1'000'000 / static_cast<std::uint64_t>(p)) throw BudgetError("family too large to enumerate");
            total *= static_cast<std::uint64_t>(p);
        }
        std::vector<std::int64_t> t(slots.size(), 0);
        for (std::uint64_t n = 0; n < total; ++n) {
            tuples.push_back(t);
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (++t[i] < p) break;
                t[i] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        for (std::size_t n = 0; n < mode.samples; ++n) {
            std::vector<std::int64_t> t(slots.size());
            for (auto& c : t) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
            tuples.push_back(std::move(t));
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }
    // tuples are in lexicographic order from the constant term up; exhaustive enumeration
    // above runs the lowest slot fastest, so sort once more for a single canonical order.
    std::sort(tuples.begin(), tuples.end());
    std::vector<FpPoly> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c.back() = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) c[slots[i]] = t[i];
        out.emplace_back(up, c);
    }
    return out;
}

bool FamilyReport::passed() const {
    if (!all_hard_passed(checks)) return false;
    return std::all_of(covers.begin(), covers.end(), [](const CoverReport& c) { return c.passed(); });
}

FamilyReport sweep_family(std::int64_t p, std::int64_t d, Family family, const SweepMode& mode,
                          const CountOptions& options) {
    FamilyReport rep;
    rep.p = p;
    rep.d = d;
    rep.family = family;
    rep.mode = mode;
    const auto members = family_members(p, d, family, mode);
    const auto rd = RamificationData::ordinary(p, 0, {d});
    rep.g_y = genus_cover(rd);
    rep.hodge = hodge_bound(rd);
    rep.np_bound = np_bound(rd);
    rep.gnp_scaled = gnp_scaled(GnpInput(d, p));
    if (!fits_budget(static_cast<std::uint64_t>(p), rep.g_y, options.budget) || rep.g_y > kMaxExtensionDegree) {
        throw BudgetError("sweep needs counts over F_" + std::to_string(p) + "^" + std::to_string(rep.g_y) +
                          ", beyond the field-size budget of " + std::to_string(options.budget));
    }

    std::vector<std::optional<CoverReport>> slots(members.size());
    std::vector<std::exception_ptr> errors(members.size());
    AnalyzeOptions per_cover;
    per_cover.count = options;
    per_cover.count.workers = 1;
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(members.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < members.size(); i = next++) {
            try {
                slots[i] = analyze_cover(PrimeFieldFunction(members[i]), per_cover);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    // The first failure in f-order wins, whatever the thread timing was.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& s : slots) rep.covers.push_back(std::move(*s));

    std::map<NewtonPolygon, std::size_t> tally;
    for (const auto& c : rep.covers) ++tally[c.np];
    for (const auto& [np, n] : tally) rep.distinct.push_back({np, n});
    for (const auto& a : rep.distinct) {
        bool minimal = true;
        for (const auto& b : rep.distinct) {
            if (!(a.np == b.np) && lies_on_or_above(a.np, b.np)) minimal = false;
        }
        if (minimal) rep.minimal.push_back(a.np);
    }
    if (rep.minimal.size() == 1) rep.minimum = rep.minimal.front();

    auto add = [&](std::string name, bool passed, bool hard, std::string detail) {
        rep.checks.push_back(Check{std::move(name), passed, hard, std::move(detail)});
    };
    const auto n_ok = std::count_if(rep.covers.begin(), rep.covers.end(), [](const CoverReport& c) { return c.passed(); });
    add("covers_pass", static_cast<std::size_t>(n_ok) == rep.covers.size(), true,
        std::to_string(n_ok) + " of " + std::to_string(rep.covers.size()) + " covers pass every hard check");

    const bool attained = std::any_of(rep.covers.begin(), rep.covers.end(),
                                      [&](const CoverReport& c) { return lies_on_or_above(rep.np_bound, c.np); });
    const bool scope = p >= 3 * d;
    add("upper_attained", attained, scope && mode.exhaustive,
        std::string(attained ? "some cover has NP on or below NP_X(D)" : "no cover reaches NP_X(D)") +
            (scope ? "" : "; theorem-scope: p < 3d") + (mode.exhaustive ? "" : "; random sample"));
    const bool above_gnp = std::all_of(rep.covers.begin(), rep.covers.end(),
                                       [&](const CoverReport& c) { return lies_on_or_above(c.np, rep.gnp_scaled); });
    add("all_above_gnp", above_gnp, false, "every observed NP on or above (p-1)GNP(d,p)");
    add("minimum_equals_gnp", rep.minimum && *rep.minimum == rep.gnp_scaled, false,
        rep.minimum ? "least observed NP compared with (p-1)GNP(d,p)" : "observed NPs have no least element");
    add("minimum_equals_hodge", rep.minimum && *rep.minimum == rep.hodge, false,
        "least observed NP compared with the Hodge bound");
    return rep;
}

MatchingCertificate reproduce_matching_example() {
    constexpr std::int64_t p = 23;
    constexpr std::int64_t d = 6;
    MatchingCertificate cert;
    cert.hodge = hodge_bound(RamificationData::ordinary(p, 0, {d}));
    cert.gnp_scaled = gnp_scaled(GnpInput(d, p));

    std::vector<std::int64_t> bound_xs;
    for (const auto& v : cert.hodge.vertices()) bound_xs.push_back(v.x);
    for (const auto& v : cert.gnp_scaled.vertices()) bound_xs.push_back(v.x);
    std::sort(bound_xs.begin(), bound_xs.end());

    const auto between = enumerate_strictly_between(cert.hodge, cert.gnp_scaled, 1'000'000);
    if (between.truncated) throw EngineError("lattice polygons between the bounds exceeded the search cap");
    cert.strictly_between = between.polygons.size();
    const NewtonPolygon* pick = nullptr;
    for (const auto& np : between.polygons) {
        const bool aligned = std::all_of(np.vertices().begin(), np.vertices().end(), [&](const Vertex& v) {
            return std::binary_search(bound_xs.begin(), bound_xs.end(), v.x);
        });
        if (aligned) {
            pick = &np;
            break;
        }
    }
    if (!pick) throw EngineError("no aligned polygon strictly between the bounds");
    cert.intermediate = *pick;

    auto add = [&](std::string name, bool passed, std::string detail) {
        cert.checks.push_back(Check{std::move(name), passed, true, std::move(detail)});
    };
    add("hodge_below", lies_on_or_above(cert.intermediate, cert.hodge) && !(cert.intermediate == cert.hodge),
        "Hodge bound strictly below the intermediate polygon");
    add("gnp_above", lies_on_or_above(cert.gnp_scaled, cert.intermediate) && !(cert.intermediate == cert.gnp_scaled),
        "(p-1)GNP strictly above the intermediate polygon");
    add("symmetry", is_symmetric(cert.intermediate), "");
    add("integral_breakpoints", has_integral_breakpoints(cert.intermediate), "");
    add("hodge_integral_breakpoints", !has_integral_breakpoints(cert.hodge), "Hodge bound has non-integral breakpoints");
    return cert;
}

Json checks_to_json(const std::vector<Check>& checks) {
    Json out = Json::object();
    for (const auto& c : checks) {
        out[c.name] = Json{{"passed", c.passed}, {"hard", c.hard}, {"detail", c.detail}};
    }
    return out;
}

namespace {

Json bigs_to_json(const std::vector<BigInt>& v) {
    Json out = Json::array();
    for (const auto& n : v) out.push_back(big_to_json(n));
    return out;
}

}  // namespace

Json cover_report_to_json(const CoverReport& r) {
    Json branch = Json::array();
    for (const auto& b : r.branch) {
        branch.push_back(Json{{"label", b.label()}, {"residue_degree", b.residue_degree}, {"d", b.d}});
    }
    Json j{{"f", r.f.str()},
           {"f_raw", r.original.str()},
           {"function", function_to_json(r.f)},
           {"p", r.p},
           {"branch", branch},
           {"g_Y", r.g_y},
           {"counts", bigs_to_json(r.counts)}};
    if (!r.extra_counts.empty()) j["extra_counts"] = bigs_to_json(r.extra_counts);
    j["L"] = lpoly_to_json(r.l);
    j["np"] = polygon_to_json(r.np);
    j["hodge"] = polygon_to_json(r.hodge);
    j["np_bound"] = polygon_to_json(r.np_bound);
    j["checks"] = checks_to_json(r.checks);
    j["p_ge_3d"] = r.p_ge_3d;
    j["passed"] = r.passed();
    return j;
}

Json family_report_to_json(const FamilyReport& r) {
    Json mode{{"exhaustive", r.mode.exhaustive}};
    if (!r.mode.exhaustive) {
        mode["samples"] = r.mode.samples;
        mode["seed"] = r.mode.seed;
    }
    Json covers = Json::array();
    for (const auto& c : r.covers) covers.push_back(cover_report_to_json(c));
    Json distinct = Json::array();
    for (const auto& t : r.distinct) distinct.push_back(Json{{"np", polygon_to_json(t.np)}, {"count", t.count}});
    Json minimal = Json::array();
    for (const auto& m : r.minimal) minimal.push_back(polygon_to_json(m));
    return Json{{"p", r.p},
                {"d", r.d},
                {"family", family_name(r.family)},
                {"mode", mode},
                {"g_Y", r.g_y},
                {"hodge", polygon_to_json(r.hodge)},
                {"np_bound", polygon_to_json(r.np_bound)},
                {"gnp_scaled", polygon_to_json(r.gnp_scaled)},
                {"distinct", distinct},
                {"minimal", minimal},
                {"minimum", r.minimum ? polygon_to_json(*r.minimum) : Json(nullptr)},
                {"checks", checks_to_json(r.checks)},
                {"passed", r.passed()},
                {"covers", covers}};
}

Json certificate_to_json(const MatchingCertificate& c) {
    return Json{{"p", 23},
                {"d", 6},
                {"hodge", polygon_to_json(c.hodge)},
                {"intermediate", polygon_to_json(c.intermediate)},
                {"gnp_scaled", polygon_to_json(c.gnp_scaled)},
                {"strictly_between", c.strictly_between},
                {"checks", checks_to_json(c.checks)},
                {"passed", all_hard_passed(c.checks)}};
}

}  // namespace asnp
