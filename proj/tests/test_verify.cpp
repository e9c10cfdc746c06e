#include <doctest.h>

#include "asnp/errors.hpp"
#include "asnp/gnp.hpp"
#include "asnp/json_io.hpp"
#include "asnp/verify.hpp"

using namespace asnp;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

PrimeFieldFunction F(std::uint32_t p, const std::string& s) { return PrimeFieldFunction::parse(p, s); }

std::vector<Vertex> pts(std::vector<std::pair<std::int64_t, Rational>> v) {
    std::vector<Vertex> out;
    for (auto& [x, y] : v) out.push_back({x, y});
    return out;
}

const Check* find(const std::vector<Check>& checks, const std::string& name) {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

SlopeMultiset half(std::int64_t m) {
    SlopeMultiset s;
    s.add(q(1, 2), m);
    return s;
}

}  // namespace

TEST_CASE("analyze y^2 + y = x^3 over F_2") {
    const auto r = analyze_cover(F(2, "x^3"));
    CHECK(r.g_y == 1);
    CHECK(r.counts == std::vector<BigInt>{3});
    CHECK(r.l.coeffs == std::vector<BigInt>{1, 0, 2});
    CHECK(r.np.slopes() == half(2));
    SlopeMultiset third;
    third.add(q(1, 3), 1);
    third.add(q(2, 3), 1);
    CHECK(r.hodge.slopes() == third);
    CHECK(r.passed());
    REQUIRE(find(r.checks, "robba_lower_bound"));
    CHECK(find(r.checks, "robba_lower_bound")->passed);
    CHECK(find(r.checks, "ds_p_rank")->passed);
    CHECK_FALSE(find(r.checks, "within_upper")->hard);
    CHECK(find(r.checks, "within_upper")->detail.find("theorem-scope") != std::string::npos);
    CHECK_FALSE(r.p_ge_3d);

    AnalyzeOptions extra;
    extra.check_extra = true;
    const auto r2 = analyze_cover(F(2, "x^3"), extra);
    CHECK(r2.extra_counts == std::vector<BigInt>{9});
    CHECK(find(r2.checks, "extra_counts")->passed);
}

TEST_CASE("analyze y^3 - y = x^2") {
    const auto r = analyze_cover(F(3, "x^2"));
    CHECK(r.np.slopes() == half(2));
    CHECK(r.np == r.hodge);
    CHECK(r.hodge == r.np_bound);
    CHECK(r.passed());
    for (const auto& c : r.checks) CHECK(c.passed);
    REQUIRE(find(r.checks, "bounds_coincide"));
}

TEST_CASE("analyze rejects trivial covers and oversized genera") {
    CHECK_THROWS_AS(analyze_cover(F(3, "x^3 - x")), InputError);
    CHECK_THROWS_AS(analyze_cover(F(2, "x^2 + x")), InputError);
    AnalyzeOptions small;
    small.count.budget = 100;
    CHECK_THROWS_AS(analyze_cover(F(5, "x^3 + 1/x"), small), BudgetError);
}

TEST_CASE("two branch points over F_5") {
    const auto r = analyze_cover(F(5, "x^3 + 1/x"));
    CHECK(r.g_y == 8);
    CHECK(r.branch.size() == 2);
    CHECK(r.np.width() == 16);
    CHECK(is_symmetric(r.np));
    CHECK(has_integral_breakpoints(r.np));
    CHECK(slope_zero_multiplicity(r.np) == 4);
    CHECK(lies_on_or_above(r.np, r.hodge));
    CHECK(r.passed());
}

TEST_CASE("reduction is applied before analysis") {
    const auto r = analyze_cover(F(2, "x^4 + x^3"));
    CHECK(r.f == F(2, "x^3 + x^2"));
    CHECK(r.original == F(2, "x^4 + x^3"));
    CHECK(r.passed());
}

TEST_CASE("family members") {
    CHECK(family_members(3, 2, Family::Normal, {}).size() == 1);
    CHECK(family_members(3, 2, Family::MonicZeroConstant, {}).size() == 3);
    CHECK(family_members(3, 2, Family::Monic, {}).size() == 9);
    CHECK(family_members(7, 2, Family::Monic, {}).size() == 49);
    const auto m = family_members(5, 3, Family::MonicZeroConstant, {});
    CHECK(m.size() == 25);
    CHECK(std::is_sorted(m.begin(), m.end(), [](const FpPoly& a, const FpPoly& b) { return a.coeffs() < b.coeffs(); }));
    for (const auto& f : m) {
        CHECK(f.degree() == 3);
        CHECK(f.lead() == 1);
        CHECK(f.coeff(0) == 0);
    }
    for (const auto& f : family_members(5, 4, Family::Normal, {})) CHECK(f.coeff(3) == 0);

    const SweepMode random{false, 20, 1};
    const auto a = family_members(5, 3, Family::MonicZeroConstant, random);
    CHECK(a == family_members(5, 3, Family::MonicZeroConstant, random));
    CHECK(a.size() <= 20);
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());

    CHECK_THROWS_AS(family_members(3, 3, Family::Monic, {}), InputError);
    CHECK_THROWS_AS(family_members(4, 3, Family::Monic, {}), InputError);
    CHECK_THROWS_AS(family_members(3, 0, Family::Monic, {}), InputError);
    CHECK(family_from_name("monic") == Family::Monic);
    CHECK(family_name(Family::Normal) == "normal");
    CHECK_THROWS_AS(family_from_name("all"), InputError);
}

TEST_CASE("sweep p = 3, d = 2") {
    for (Family fam : {Family::Normal, Family::Monic}) {
        const auto rep = sweep_family(3, 2, fam, {});
        CHECK(rep.passed());
        REQUIRE(rep.minimum);
        CHECK(*rep.minimum == gnp_scaled(GnpInput(2, 3)));
        for (const auto& c : rep.covers) CHECK(c.np.slopes() == half(2));
    }
}

TEST_CASE("sweep p = 7, d = 2 over all monic quadratics") {
    const auto rep = sweep_family(7, 2, Family::Monic, {});
    CHECK(rep.covers.size() == 49);
    CHECK(rep.passed());
    REQUIRE(rep.distinct.size() == 1);
    CHECK(rep.distinct[0].np.slopes() == half(6));
    CHECK(rep.hodge == rep.np_bound);
    CHECK(*rep.minimum == rep.hodge);
    CHECK(find(rep.checks, "upper_attained")->hard);
}

TEST_CASE("random sweep p = 5, d = 3 is deterministic") {
    const SweepMode mode{false, 20, 1};
    const auto a = sweep_family(5, 3, Family::MonicZeroConstant, mode, {kDefaultBudget, 1});
    const auto b = sweep_family(5, 3, Family::MonicZeroConstant, mode, {kDefaultBudget, 4});
    CHECK(family_report_to_json(a).dump() == family_report_to_json(b).dump());
    CHECK(a.passed());
    const auto gnp = gnp_scaled(GnpInput(3, 5));
    CHECK(gnp.slopes() == half(8));
    for (const auto& c : a.covers) CHECK(lies_on_or_above(c.np, gnp));
    CHECK_FALSE(find(a.checks, "upper_attained")->hard);
}

TEST_CASE("sweep budget") {
    CHECK_THROWS_AS(sweep_family(5, 3, Family::Monic, {}, {100, 1}), BudgetError);
}

TEST_CASE("matching example certificate") {
    const auto cert = reproduce_matching_example();
    CHECK(cert.hodge.vertices() ==
          pts({{0, q(0)}, {22, q(11, 3)}, {44, q(11)}, {66, q(22)}, {88, q(110, 3)}, {110, q(55)}}));
    CHECK(cert.gnp_scaled.vertices() ==
          pts({{0, q(0)}, {22, q(4)}, {44, q(12)}, {66, q(23)}, {88, q(37)}, {110, q(55)}}));
    CHECK(cert.intermediate.vertices() ==
          pts({{0, q(0)}, {22, q(4)}, {44, q(11)}, {66, q(22)}, {88, q(37)}, {110, q(55)}}));
    CHECK(cert.strictly_between > 1);
    for (const auto& c : cert.checks) CHECK(c.passed);
}

TEST_CASE("JSON round trips") {
    const auto np = from_slopes(half(2));
    CHECK(polygon_to_json(np).dump() ==
          R"({"width":2,"vertices":[[0,"0/1"],[2,"1/1"]],"slopes":[{"slope":"1/2","mult":2}]})");
    CHECK(polygon_from_json(polygon_to_json(np)) == np);
    CHECK(polygon_from_json(Json::parse(R"({"slopes":[{"slope":"1/2","mult":2}]})")) == np);
    CHECK(polygon_from_json(Json::parse(R"({"vertices":[[0,0],[2,1]]})")) == np);
    CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"width":3,"vertices":[[0,"0/1"],[2,"1/1"]]})")), InputError);
    CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"vertices":[[0,"0/1"],[2]]})")), InputError);
    CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"w":1})")), InputError);

    const auto rd = RamificationData::ordinary(5, 1, {3, 1});
    const auto rj = ramification_to_json(rd);
    CHECK(rj.dump() ==
          R"({"p":5,"g":1,"base_slopes":[{"slope":"0/1","mult":1},{"slope":"1/1","mult":1}],"branch":[{"label":"Q1","d":3},{"label":"Q2","d":1}]})");
    CHECK(hodge_bound(ramification_from_json(rj)) == hodge_bound(rd));

    const auto f = F(5, "x^3 + 1/x");
    CHECK(function_to_json(f).dump() == R"({"p":5,"num":[1,0,0,0,1],"den":[0,1]})");
    CHECK(function_from_json(function_to_json(f)) == f);
    CHECK(function_from_json(Json::parse(R"({"p":5,"num":[6,-1]})")) == F(5, "1 + 4x"));
    CHECK(function_from_json(Json::parse(R"({"p":3,"f":"x^3 + 2*x"})")) == F(3, "x^3 + 2x"));
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"p":5,"num":[1],"den":[0]})")), InputError);

    LPolynomial l{BigInt(2), 1, {1, 0, 2}};
    CHECK(lpoly_to_json(l).dump() == R"({"q":2,"genus":1,"coeffs":[1,0,2]})");
    CHECK(lpoly_from_json(lpoly_to_json(l)) == l);
    LPolynomial huge{ipow(BigInt(10), 30), 0, {1}};
    CHECK(lpoly_to_json(huge)["q"] == "1000000000000000000000000000000");
    CHECK(lpoly_from_json(lpoly_to_json(huge)) == huge);
}
