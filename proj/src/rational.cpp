#include "asnp/rational.hpp"

#include "asnp/errors.hpp"

namespace asnp {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    return numerator().str() + "/" + denominator().str();
}

std::string Rational::pretty() const {
    if (is_integer()) return numerator().str();
    return str();
}

std::string Rational::decimal_or_fraction() const {
    BigInt den = denominator();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return str();
    if (is_integer()) return numerator().str();
    const int digits = std::max(twos, fives);
    // value * 10^digits is an integer
    BigInt scaled = numerator() * ipow(BigInt(10), static_cast<unsigned>(digits)) / denominator();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return negative ? "-" + s : s;
}

Rational Rational::parse(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed rational '" + text + "'");
    }
}

int valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw InputError("valuation of zero is infinite");
    BigInt m = n < 0 ? BigInt(-n) : n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace asnp
