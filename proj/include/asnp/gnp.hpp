#pragma once

#include "asnp/polygon.hpp"

#include <cstdint>
#include <vector>

namespace asnp {

// Degree d of the Artin-Schreier datum and the characteristic p; gcd(d, p) = 1.
class GnpInput {
public:
    GnpInput(std::int64_t d, std::int64_t p);

    std::int64_t d() const { return d_; }
    std::int64_t p() const { return p_; }

private:
    std::int64_t d_;
    std::int64_t p_;
};

// min over permutations s of {1..n} of sum_k ceil((p*k - s(k)) / d), as a linear assignment problem.
std::int64_t y_n(const GnpInput& input, std::int64_t n);

// Same value by enumerating all n! permutations; n <= 9 only.
std::int64_t y_n_bruteforce(const GnpInput& input, std::int64_t n);

// Y_1..Y_{d-1}; memoized per (d, p) behind a mutex.
std::vector<std::int64_t> y_values(const GnpInput& input);

// Lower hull of (0,0) and (n, Y_n/(p-1)), width d-1.
NewtonPolygon gnp(const GnpInput& input);

// Lower hull of (0,0) and ((p-1)n, Y_n), width (p-1)(d-1).
NewtonPolygon gnp_scaled(const GnpInput& input);

bool is_prime(std::int64_t n);

}  // namespace asnp
