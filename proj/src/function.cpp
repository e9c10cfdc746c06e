#include "asnp/function.hpp"

#include "asnp/errors.hpp"

#include <cctype>

namespace asnp {

PrimeFieldFunction::PrimeFieldFunction(const FpPoly& num, const FpPoly& den) : num_(num), den_(den) {
    if (num.p() != den.p()) throw InputError("numerator and denominator over different fields");
    if (den_.is_zero()) throw InputError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num.p(), 1);
        return;
    }
    const FpPoly g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
    const auto inv = fp_inverse(den_.lead(), den_.p());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

PrimeFieldFunction::PrimeFieldFunction(const FpPoly& poly)
    : PrimeFieldFunction(poly, FpPoly::constant(poly.p(), 1)) {}

int PrimeFieldFunction::pole_order_at_infinity() const {
    const int diff = num_.degree() - den_.degree();
    return diff > 0 ? diff : 0;
}

std::uint32_t PrimeFieldFunction::value_at_infinity() const {
    if (pole_order_at_infinity() > 0) throw InputError("function has a pole at infinity");
    if (num_.degree() < den_.degree()) return 0;
    return num_.lead();  // den is monic
}

PrimeFieldFunction PrimeFieldFunction::frobenius() const {
    return PrimeFieldFunction(frobenius_power(num_), frobenius_power(den_));
}

PrimeFieldFunction operator+(const PrimeFieldFunction& a, const PrimeFieldFunction& b) {
    return PrimeFieldFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PrimeFieldFunction operator-(const PrimeFieldFunction& a, const PrimeFieldFunction& b) {
    return PrimeFieldFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

PrimeFieldFunction operator*(const PrimeFieldFunction& a, const PrimeFieldFunction& b) {
    return PrimeFieldFunction(a.num_ * b.num_, a.den_ * b.den_);
}

PrimeFieldFunction operator/(const PrimeFieldFunction& a, const PrimeFieldFunction& b) {
    if (b.num_.is_zero()) throw InputError("division by the zero function");
    return PrimeFieldFunction(a.num_ * b.den_, a.den_ * b.num_);
}

PrimeFieldFunction pow(const PrimeFieldFunction& f, unsigned exp) {
    return PrimeFieldFunction(pow(f.numerator(), exp), pow(f.denominator(), exp));
}

std::string PrimeFieldFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/')? unary)*      juxtaposition multiplies: "2x", "3(x+1)"
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := integer | 'x' | '(' expr ')'
class Parser {
public:
    Parser(std::uint32_t p, const std::string& text) : p_(p), text_(text) {}

    PrimeFieldFunction parse() {
        auto f = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse function '" + text_ + "' at position " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PrimeFieldFunction constant(std::int64_t c) const { return PrimeFieldFunction(FpPoly::constant(p_, c)); }

    PrimeFieldFunction expr() {
        auto f = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            auto g = term();
            f = c == '+' ? f + g : f - g;
        }
        return f;
    }

    PrimeFieldFunction term() {
        auto f = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                f = f * unary();
            } else if (c == '/') {
                ++pos_;
                auto g = unary();
                if (g.numerator().is_zero()) fail("division by zero");
                f = f / g;
            } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                f = f * unary();
            } else {
                return f;
            }
        }
    }

    PrimeFieldFunction unary() {
        if (peek() == '-') {
            ++pos_;
            return constant(0) - unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    PrimeFieldFunction power() {
        auto base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const auto e = integer();
            if (e > 100000) fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (pos_ - start >= 18) fail("integer literal too long");
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    PrimeFieldFunction atom() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return PrimeFieldFunction(FpPoly::x(p_));
        }
        if (c == '(') {
            ++pos_;
            auto f = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(integer());
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::uint32_t p_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

PrimeFieldFunction PrimeFieldFunction::parse(std::uint32_t p, const std::string& text) {
    return Parser(p, text).parse();
}

}  // namespace asnp
