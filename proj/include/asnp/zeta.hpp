#pragma once

#include "asnp/polygon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asnp {

// Numerator of Z(X,T) = L(X,T)/((1-T)(1-qT)); coeffs c_0..c_{2g}.
struct LPolynomial {
    BigInt q;
    int genus = 0;
    std::vector<BigInt> coeffs;

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

// Solves log L = sum (N_l - q^l - 1) T^l / l for c_1..c_g and completes L with the
// functional equation c_{2g-i} = q^{g-i} c_i. Throws EngineError on a non-integral coefficient.
LPolynomial l_from_counts(const std::vector<BigInt>& counts, int genus, const BigInt& q);

// N_1..N_n predicted by L (Newton's identities on the inverse roots).
std::vector<BigInt> counts_from_l(const LPolynomial& l, int n);

// Lower hull of (i, v_p(c_i)/m) over the nonzero coefficients; q must equal p^m.
NewtonPolygon newton_polygon_of_l(const LPolynomial& l, std::uint64_t p, int m);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// functional_equation, np_symmetric, np_integral_breakpoints, np_endpoint. Never throws.
std::vector<CheckResult> validate_l(const LPolynomial& l);

// q = p^m with p prime, or nothing.
bool split_prime_power(const BigInt& q, std::uint64_t& p, int& m);

}  // namespace asnp
