#pragma once

#include "asnp/fp_poly.hpp"

#include <array>
#include <cstdint>
#include <memory>

namespace asnp {

inline constexpr int kMaxExtensionDegree = 32;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Element of F_{p^ell} in the polynomial basis 1, t, ..., t^{ell-1}. Meaningful only with its Field.
struct Element {
    std::array<std::uint32_t, kMaxExtensionDegree> c{};

    friend bool operator==(const Element&, const Element&) = default;
};

// F_{p^ell} = F_p[t]/(modulus) with the lexicographically least monic irreducible modulus
// (coefficients compared from the constant term upward).
class Field {
public:
    std::uint32_t p() const { return p_; }
    int degree() const { return ell_; }
    std::uint64_t size() const { return size_; }
    const FpPoly& modulus() const { return modulus_; }

    Element zero() const { return Element{}; }
    Element one() const;
    Element scalar(std::uint32_t c) const;
    // Generator t of the polynomial basis (the class of x).
    Element generator() const;
    // Element whose coefficients are the base-p digits of index (constant term least significant).
    Element from_index(std::uint64_t index) const;
    void increment(Element& a) const;

    bool is_zero(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(Element a, std::uint64_t e) const;
    Element inverse(const Element& a) const;
    Element frobenius(const Element& a) const { return pow(a, p_); }

    // Tr_{F_{p^ell}/F_p}(a) = a + a^p + ... + a^{p^{ell-1}}
    std::uint32_t absolute_trace(const Element& a) const;
    // Same value through the precomputed linear form on the basis.
    std::uint32_t trace(const Element& a) const;

    // Horner evaluation of a polynomial with F_p coefficients.
    Element eval(const FpPoly& f, const Element& a) const;

    Element from_poly(const FpPoly& f) const;

private:
    friend Field make_field(std::int64_t p, int ell, std::uint64_t budget);
    Field(std::uint32_t p, int ell, FpPoly modulus);

    std::uint32_t p_;
    int ell_;
    std::uint64_t size_ = 1;
    FpPoly modulus_;
    std::array<std::uint32_t, kMaxExtensionDegree> trace_basis_{};
};

// Throws InputError for composite p or unsupported degree, BudgetError if p^ell > budget.
Field make_field(std::int64_t p, int ell, std::uint64_t budget = kDefaultBudget);

// Lex-least monic irreducible of the given degree over F_p.
FpPoly least_irreducible(std::uint32_t p, int degree);

}  // namespace asnp
