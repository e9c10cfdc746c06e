#include <doctest.h>

#include "asnp/artin_schreier.hpp"
#include "asnp/counting.hpp"
#include "asnp/errors.hpp"
#include "asnp/zeta.hpp"

#include <random>

using namespace asnp;

namespace {

LPolynomial L(std::int64_t q, int g, std::vector<std::int64_t> c) {
    LPolynomial l{BigInt(q), g, {}};
    for (auto x : c) l.coeffs.push_back(BigInt(x));
    return l;
}

std::vector<BigInt> big(std::vector<std::int64_t> v) { return {v.begin(), v.end()}; }

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("L from counts") {
    CHECK(l_from_counts(big({3}), 1, BigInt(2)) == L(2, 1, {1, 0, 2}));
    CHECK(l_from_counts({}, 0, BigInt(7)) == L(7, 0, {1}));
    for (std::int64_t n1 = 0; n1 <= 8; ++n1) CHECK(l_from_counts(big({n1}), 1, BigInt(3)) == L(3, 1, {1, n1 - 4, 3}));
    CHECK_THROWS_AS(l_from_counts(big({3, 9}), 1, BigInt(2)), InputError);
    CHECK_THROWS_AS(l_from_counts(big({-1}), 1, BigInt(2)), InputError);
    // N_1 = 1, N_2 = 4 over F_2 forces c_2 = (s_1 c_1 + s_2)/2 with s_1 = -2, s_2 = -1: not integral
    CHECK_THROWS_AS(l_from_counts(big({1, 4}), 2, BigInt(2)), EngineError);
}

TEST_CASE("counts from L") {
    CHECK(counts_from_l(L(2, 1, {1, 0, 2}), 2) == big({3, 9}));
    const auto l = l_from_counts(big({2, 22, 62, 942, 3522, 15802, 81482, 388062}), 8, BigInt(5));
    CHECK(counts_from_l(l, 8) == big({2, 22, 62, 942, 3522, 15802, 81482, 388062}));
    CHECK(counts_from_l(L(5, 0, {1}), 3) == big({6, 26, 126}));
}

TEST_CASE("Newton polygon of L") {
    CHECK(newton_polygon_of_l(L(2, 1, {1, 0, 2}), 2, 1).slopes().entries() == std::vector<SlopeEntry>{{q(1, 2), 2}});
    CHECK(newton_polygon_of_l(L(5, 1, {1, -3, 5}), 5, 1).slopes().entries() ==
          std::vector<SlopeEntry>{{q(0), 1}, {q(1), 1}});
    CHECK(newton_polygon_of_l(L(3, 1, {1, 3, 3}), 3, 1).slopes().entries() == std::vector<SlopeEntry>{{q(1, 2), 2}});
    CHECK(newton_polygon_of_l(L(9, 1, {1, 3, 9}), 3, 2).slopes().entries() == std::vector<SlopeEntry>{{q(1, 2), 2}});
    CHECK(newton_polygon_of_l(L(4, 0, {1}), 2, 2).width() == 0);
    CHECK_THROWS_AS(newton_polygon_of_l(L(2, 1, {2, 0, 2}), 2, 1), InputError);
    CHECK_THROWS_AS(newton_polygon_of_l(L(4, 1, {1, 0, 4}), 2, 1), InputError);
}

TEST_CASE("validate_l") {
    CHECK(all_pass(validate_l(L(2, 1, {1, 0, 2}))));
    CHECK(all_pass(validate_l(L(2, 1, {1, 1, 2}))));
    CHECK(all_pass(validate_l(L(3, 0, {1}))));
    const auto broken = validate_l(L(2, 1, {1, 1, 1}));
    REQUIRE(broken.size() == 4);
    CHECK(broken[0].name == "functional_equation");
    CHECK_FALSE(broken[0].passed);
    CHECK_FALSE(all_pass(validate_l(L(6, 1, {1, 0, 6}))));
    CHECK_FALSE(all_pass(validate_l(L(2, 2, {1, 0, 2}))));
    // functional equation holds but the slopes are not those of a curve
    CHECK_FALSE(all_pass(validate_l(L(8, 1, {1, 2, 8}))));
}

TEST_CASE("prime powers") {
    std::uint64_t p = 0;
    int m = 0;
    CHECK(split_prime_power(BigInt(343), p, m));
    CHECK(p == 7);
    CHECK(m == 3);
    CHECK(split_prime_power(BigInt(2), p, m));
    CHECK_FALSE(split_prime_power(BigInt(12), p, m));
    CHECK_FALSE(split_prime_power(BigInt(1), p, m));
}

TEST_CASE("round trip through real covers, including l in (g, 2g]") {
    std::mt19937_64 rng(77);
    int done = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> num(2 + rng() % 4), den(1 + rng() % 2);
            for (auto& c : num) c = static_cast<std::int64_t>(rng() % p);
            for (auto& c : den) c = static_cast<std::int64_t>(rng() % p);
            den.back() = 1;
            PrimeFieldFunction f{FpPoly(p)};
            try {
                f = artin_schreier_reduce(PrimeFieldFunction(FpPoly(p, num), FpPoly(p, den)));
            } catch (const InputError&) {
                continue;
            }
            const auto rd = ramification_data(f);
            const int g = static_cast<int>(genus_cover(rd));
            std::uint64_t size = 1;
            bool fits = true;
            for (int i = 0; i < 2 * g && fits; ++i) fits = (size *= p) <= (1u << 16);
            if (!fits) continue;
            std::vector<BigInt> counts;
            for (int ell = 1; ell <= 2 * g; ++ell) counts.push_back(BigInt(count_points(f, ell)));
            const auto l = l_from_counts({counts.begin(), counts.begin() + g}, g, BigInt(p));
            CAPTURE(f.str());
            CHECK(counts_from_l(l, 2 * g) == counts);
            CHECK(all_pass(validate_l(l)));
            ++done;
        }
    }
    CHECK(done >= 10);
}
