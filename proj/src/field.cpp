#include "asnp/field.hpp"

#include "asnp/errors.hpp"
#include "asnp/gnp.hpp"

#include <limits>
#include <string>

namespace asnp {

FpPoly least_irreducible(std::uint32_t p, int degree) {
    // digits[0] is the constant term and the most significant position of the enumeration.
    std::vector<std::int64_t> digits(static_cast<std::size_t>(degree) + 1, 0);
    digits[static_cast<std::size_t>(degree)] = 1;
    for (;;) {
        FpPoly candidate(p, digits);
        if ((degree == 1 || digits[0] != 0) && is_irreducible(candidate)) return candidate;
        int i = degree - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == static_cast<std::int64_t>(p) - 1) {
            digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw EngineError("no irreducible polynomial of degree " + std::to_string(degree));
        ++digits[static_cast<std::size_t>(i)];
    }
}

Field make_field(std::int64_t p, int ell, std::uint64_t budget) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
    if (p >= (std::int64_t{1} << 20)) throw InputError("characteristic too large for the counting engine");
    if (ell < 1 || ell > kMaxExtensionDegree) {
        throw InputError("extension degree must lie in 1.." + std::to_string(kMaxExtensionDegree));
    }
    std::uint64_t size = 1;
    for (int i = 0; i < ell; ++i) {
        if (size > budget / static_cast<std::uint64_t>(p)) {
            throw BudgetError("F_" + std::to_string(p) + "^" + std::to_string(ell) + " exceeds the field-size budget of " +
                              std::to_string(budget) + " elements");
        }
        size *= static_cast<std::uint64_t>(p);
    }
    const auto up = static_cast<std::uint32_t>(p);
    return Field(up, ell, least_irreducible(up, ell));
}

Field::Field(std::uint32_t p, int ell, FpPoly modulus) : p_(p), ell_(ell), modulus_(std::move(modulus)) {
    for (int i = 0; i < ell_; ++i) size_ *= p_;
    Element basis{};
    for (int i = 0; i < ell_; ++i) {
        basis = Element{};
        basis.c[static_cast<std::size_t>(i)] = 1;
        trace_basis_[static_cast<std::size_t>(i)] = absolute_trace(basis);
    }
}

Element Field::one() const { return scalar(1); }

Element Field::scalar(std::uint32_t c) const {
    Element e{};
    e.c[0] = c % p_;
    return e;
}

Element Field::generator() const { return from_poly(FpPoly::x(p_)); }

Element Field::from_index(std::uint64_t index) const {
    Element e{};
    for (int i = 0; i < ell_; ++i) {
        e.c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

void Field::increment(Element& a) const {
    for (int i = 0; i < ell_; ++i) {
        auto& d = a.c[static_cast<std::size_t>(i)];
        if (++d < p_) return;
        d = 0;
    }
}

bool Field::is_zero(const Element& a) const {
    for (int i = 0; i < ell_; ++i) {
        if (a.c[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
}

Element Field::add(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < ell_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        r.c[k] = (a.c[k] + b.c[k]) % p_;
    }
    return r;
}

Element Field::sub(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < ell_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        r.c[k] = (a.c[k] + p_ - b.c[k]) % p_;
    }
    return r;
}

Element Field::mul(const Element& a, const Element& b) const {
    // p < 2^20 keeps every partial sum below 2^47.
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
    const auto n = static_cast<std::size_t>(ell_);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ai = a.c[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < n; ++j) acc[i + j] += ai * b.c[j];
    }
    const auto& m = modulus_.coeffs();
    for (std::size_t i = 2 * n - 1; i-- > n;) {
        const std::uint64_t c = acc[i] % p_;
        if (c == 0) continue;
        // t^n = -(m_0 + ... + m_{n-1} t^{n-1})
        for (std::size_t k = 0; k < n; ++k) acc[i - n + k] += (p_ - m[k]) * c;
    }
    Element r{};
    for (std::size_t i = 0; i < n; ++i) r.c[i] = static_cast<std::uint32_t>(acc[i] % p_);
    return r;
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e > 0) {
        if (e & 1u) result = mul(result, a);
        e >>= 1;
        if (e > 0) a = mul(a, a);
    }
    return result;
}

Element Field::inverse(const Element& a) const {
    if (is_zero(a)) throw InputError("inverse of zero field element");
    return pow(a, size_ - 2);
}

std::uint32_t Field::absolute_trace(const Element& a) const {
    Element sum = a;
    Element conj = a;
    for (int i = 1; i < ell_; ++i) {
        conj = frobenius(conj);
        sum = add(sum, conj);
    }
    for (int i = 1; i < ell_; ++i) {
        if (sum.c[static_cast<std::size_t>(i)] != 0) throw EngineError("trace left the prime field");
    }
    return sum.c[0];
}

std::uint32_t Field::trace(const Element& a) const {
    std::uint64_t t = 0;
    for (int i = 0; i < ell_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        t += static_cast<std::uint64_t>(a.c[k]) * trace_basis_[k];
    }
    return static_cast<std::uint32_t>(t % p_);
}

Element Field::eval(const FpPoly& f, const Element& a) const {
    Element acc{};
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul(acc, a);
        acc.c[0] = (acc.c[0] + *it) % p_;
    }
    return acc;
}

Element Field::from_poly(const FpPoly& f) const {
    const FpPoly r = f % modulus_;
    Element e{};
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.c[i] = r.coeffs()[i];
    return e;
}

}  // namespace asnp
