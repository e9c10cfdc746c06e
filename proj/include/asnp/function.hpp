#pragma once

#include "asnp/fp_poly.hpp"

#include <string>

namespace asnp {

// Rational function num/den over F_p with gcd(num, den) = 1 and den monic.
class PrimeFieldFunction {
public:
    PrimeFieldFunction(const FpPoly& num, const FpPoly& den);
    explicit PrimeFieldFunction(const FpPoly& poly);

    // Parses expressions such as "x^3 + 2*x", "x^3 + 1/x", "1/(x^2+1)" over F_p.
    static PrimeFieldFunction parse(std::uint32_t p, const std::string& text);

    std::uint32_t p() const { return num_.p(); }
    const FpPoly& numerator() const { return num_; }
    const FpPoly& denominator() const { return den_; }

    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    // deg num - deg den when positive, else 0.
    int pole_order_at_infinity() const;
    // Value at infinity when it is not a pole.
    std::uint32_t value_at_infinity() const;

    // f(x)^p = num(x^p)/den(x^p).
    PrimeFieldFunction frobenius() const;

    friend PrimeFieldFunction operator+(const PrimeFieldFunction& a, const PrimeFieldFunction& b);
    friend PrimeFieldFunction operator-(const PrimeFieldFunction& a, const PrimeFieldFunction& b);
    friend PrimeFieldFunction operator*(const PrimeFieldFunction& a, const PrimeFieldFunction& b);
    friend PrimeFieldFunction operator/(const PrimeFieldFunction& a, const PrimeFieldFunction& b);
    friend bool operator==(const PrimeFieldFunction&, const PrimeFieldFunction&) = default;

    // "x^3 + 1" or "(x^4 + 1)/(x)"
    std::string str() const;

private:
    FpPoly num_;
    FpPoly den_;
};

PrimeFieldFunction pow(const PrimeFieldFunction& f, unsigned exp);

}  // namespace asnp
