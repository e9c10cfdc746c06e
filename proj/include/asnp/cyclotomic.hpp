#pragma once

#include "asnp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asnp {

// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(std::uint32_t p);
    CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coords);

    // zeta^k for any integer k (reduced with zeta^{p-1} = -(1 + ... + zeta^{p-2})).
    static CyclotomicInteger zeta_power(std::uint32_t p, std::int64_t k);
    static CyclotomicInteger integer(std::uint32_t p, const BigInt& n);

    std::uint32_t p() const { return p_; }
    const std::vector<BigInt>& coords() const { return coords_; }

    // True iff the value lies in Z (only the zeta^0 coordinate is nonzero).
    bool is_rational_integer() const;
    // Sum over the p-1 Galois conjugates; always a rational integer.
    BigInt trace() const;

    CyclotomicInteger& operator+=(const CyclotomicInteger& o);
    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
    friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

    // apply zeta -> zeta^j, gcd(j, p) = 1
    CyclotomicInteger conjugate(std::int64_t j) const;

    std::string str() const;

private:
    std::uint32_t p_;
    std::vector<BigInt> coords_;
};

}  // namespace asnp
