#pragma once

#include "asnp/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace asnp {

// Polynomial over the prime field F_p, coefficients low-to-high, no trailing zeros.
class FpPoly {
public:
    using Coeff = std::uint32_t;

    explicit FpPoly(std::uint32_t p) : p_(p) {}
    // Coefficients are reduced mod p (negative values allowed).
    FpPoly(std::uint32_t p, const std::vector<std::int64_t>& coeffs);

    static FpPoly constant(std::uint32_t p, std::int64_t c);
    static FpPoly x(std::uint32_t p) { return monomial(p, 1, 1); }
    static FpPoly monomial(std::uint32_t p, std::int64_t c, std::size_t degree);

    std::uint32_t p() const { return p_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Coeff lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Coeff>& coeffs() const { return c_; }

    FpPoly monic() const;
    Coeff eval(Coeff a) const;
    FpPoly derivative() const;
    FpPoly scaled(Coeff c) const;

    FpPoly& operator+=(const FpPoly& o);
    FpPoly& operator-=(const FpPoly& o);
    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator-(const FpPoly& a);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b);

    friend bool operator==(const FpPoly&, const FpPoly&) = default;
    friend bool operator<(const FpPoly& a, const FpPoly& b);

    // "x^3 + 2*x + 1"
    std::string str() const;

private:
    void trim();

    std::uint32_t p_;
    std::vector<Coeff> c_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
// Monic gcd (zero if both are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
// Inverse of a modulo m; throws if not coprime.
FpPoly inverse_mod(const FpPoly& a, const FpPoly& m);
FpPoly powmod(const FpPoly& base, const BigInt& exp, const FpPoly& m);
FpPoly pow(const FpPoly& base, unsigned exp);
// s(x)^p = s(x^p) over F_p.
FpPoly frobenius_power(const FpPoly& s);

bool is_irreducible(const FpPoly& f);

struct Factor {
    FpPoly poly;  // monic irreducible
    int multiplicity = 0;
};

// Complete factorization of a nonzero polynomial into monic irreducibles, sorted by (degree, coefficients).
// The leading coefficient is dropped.
std::vector<Factor> factor(const FpPoly& f);

}  // namespace asnp
