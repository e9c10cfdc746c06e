#pragma once

#include "asnp/cyclotomic.hpp"
#include "asnp/field.hpp"
#include "asnp/function.hpp"

#include <cstdint>
#include <vector>

namespace asnp {

struct CountOptions {
    std::uint64_t budget = kDefaultBudget;
    // 0 = hardware concurrency
    unsigned workers = 0;
};

struct PointCount {
    std::uint64_t total = 0;
    // p * #{a in F_{p^l} not a pole : Tr f(a) = 0}
    std::uint64_t affine = 0;
    // finite poles rational over F_{p^l}; each is a single totally ramified point
    std::uint64_t rational_poles = 0;
    // contribution of the point(s) above infinity
    std::uint64_t infinity = 0;
    // histogram of Tr f(a) over non-pole a in F_{p^l}
    std::vector<std::uint64_t> trace_histogram;
};

// #Y(F_{p^l}) for the smooth projective model of y^p - y = f over P^1.
// f must be AS-reduced and nonconstant. Deterministic for any worker count.
PointCount count_points_detailed(const PrimeFieldFunction& f, int ell, const CountOptions& options = {});
std::uint64_t count_points(const PrimeFieldFunction& f, int ell, const CountOptions& options = {});

// S_l(f, psi_j) = sum over a in F_{p^l} of zeta^{j Tr f(a)}; f must be a polynomial.
CyclotomicInteger exp_sum(const PrimeFieldFunction& f, int ell, std::int64_t character_index,
                          const CountOptions& options = {});

}  // namespace asnp
