#include "asnp/cyclotomic.hpp"

#include "asnp/errors.hpp"

namespace asnp {

namespace {

// Fold a length-p vector over zeta^0..zeta^{p-1} into the power basis of length p-1.
std::vector<BigInt> fold(std::vector<BigInt> full) {
    const std::size_t n = full.size() - 1;
    const BigInt top = full[n];
    full.pop_back();
    for (std::size_t i = 0; i < n; ++i) full[i] -= top;
    return full;
}

}  // namespace

CyclotomicInteger::CyclotomicInteger(std::uint32_t p) : p_(p), coords_(p - 1, BigInt(0)) {
    if (p < 2) throw InputError("cyclotomic ring needs a prime p");
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coords) : p_(p), coords_(std::move(coords)) {
    if (coords_.size() != p - 1) throw InputError("cyclotomic integer needs p-1 coordinates");
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::int64_t k) {
    std::int64_t e = k % static_cast<std::int64_t>(p);
    if (e < 0) e += p;
    std::vector<BigInt> full(p, BigInt(0));
    full[static_cast<std::size_t>(e)] = 1;
    return CyclotomicInteger(p, fold(std::move(full)));
}

CyclotomicInteger CyclotomicInteger::integer(std::uint32_t p, const BigInt& n) {
    CyclotomicInteger z(p);
    z.coords_[0] = n;
    return z;
}

bool CyclotomicInteger::is_rational_integer() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

BigInt CyclotomicInteger::trace() const {
    // Tr(1) = p-1, Tr(zeta^i) = -1 for 1 <= i <= p-2
    BigInt t = coords_[0] * (p_ - 1);
    for (std::size_t i = 1; i < coords_.size(); ++i) t -= coords_[i];
    return t;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
    if (o.p_ != p_) throw InputError("cyclotomic integers of different level");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.p_ != b.p_) throw InputError("cyclotomic integers of different level");
    const std::size_t p = a.p_;
    // multiply modulo zeta^p - 1, then fold
    std::vector<BigInt> full(p, BigInt(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) full[(i + j) % p] += a.coords_[i] * b.coords_[j];
    }
    return CyclotomicInteger(a.p_, fold(std::move(full)));
}

CyclotomicInteger CyclotomicInteger::conjugate(std::int64_t j) const {
    if (j % static_cast<std::int64_t>(p_) == 0) throw InputError("conjugation exponent must be prime to p");
    CyclotomicInteger out(p_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        auto term = zeta_power(p_, static_cast<std::int64_t>(i) * j);
        for (auto& c : term.coords_) c *= coords_[i];
        out += term;
    }
    return out;
}

std::string CyclotomicInteger::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].str();
    }
    return s + "]";
}

}  // namespace asnp
