#include "asnp/counting.hpp"

#include "asnp/artin_schreier.hpp"
#include "asnp/errors.hpp"

#include <algorithm>
#include <thread>

namespace asnp {

namespace {

struct Scan {
    std::vector<std::uint64_t> histogram;
    std::uint64_t poles = 0;
};

// Trace histogram of num/den over the field elements with index in [begin, end).
// Denominators are inverted in blocks with a single field inversion per block.
Scan scan_range(const Field& field, const FpPoly& num, const FpPoly& den, std::uint64_t begin, std::uint64_t end) {
    constexpr std::size_t kBlock = 256;
    Scan out;
    out.histogram.assign(field.p(), 0);
    const bool polynomial = den.is_one();
    std::vector<Element> nums(kBlock), dens(kBlock), prefix(kBlock);
    Element a = field.from_index(begin);
    for (std::uint64_t idx = begin; idx < end;) {
        const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - idx));
        for (std::size_t i = 0; i < n; ++i) {
            nums[i] = field.eval(num, a);
            if (!polynomial) dens[i] = field.eval(den, a);
            field.increment(a);
        }
        if (polynomial) {
            for (std::size_t i = 0; i < n; ++i) ++out.histogram[field.trace(nums[i])];
        } else {
            Element acc = field.one();
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                prefix[i] = acc;
                if (field.is_zero(dens[i])) {
                    ++out.poles;
                    continue;
                }
                acc = field.mul(acc, dens[i]);
                any = true;
            }
            if (any) {
                Element inv = field.inverse(acc);
                for (std::size_t i = n; i-- > 0;) {
                    if (field.is_zero(dens[i])) continue;
                    const Element den_inv = field.mul(inv, prefix[i]);
                    inv = field.mul(inv, dens[i]);
                    ++out.histogram[field.trace(field.mul(nums[i], den_inv))];
                }
            }
        }
        idx += n;
    }
    return out;
}

Scan scan_field(const Field& field, const PrimeFieldFunction& f, unsigned workers) {
    const std::uint64_t size = field.size();
    constexpr std::uint64_t kMinPerWorker = 4096;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, (size + kMinPerWorker - 1) / kMinPerWorker));
    workers = std::max(1u, workers);
    std::vector<Scan> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = size * w / workers;
        const std::uint64_t end = size * (w + 1) / workers;
        if (workers == 1) {
            parts[w] = scan_range(field, f.numerator(), f.denominator(), begin, end);
        } else {
            threads.emplace_back([&, w, begin, end] {
                parts[w] = scan_range(field, f.numerator(), f.denominator(), begin, end);
            });
        }
    }
    for (auto& t : threads) t.join();
    Scan total;
    total.histogram.assign(field.p(), 0);
    for (const auto& part : parts) {
        for (std::size_t t = 0; t < total.histogram.size(); ++t) total.histogram[t] += part.histogram[t];
        total.poles += part.poles;
    }
    return total;
}

}  // namespace

PointCount count_points_detailed(const PrimeFieldFunction& f, int ell, const CountOptions& options) {
    if (!is_artin_schreier_reduced(f)) {
        throw InputError("count_points needs a nonconstant Artin-Schreier reduced function, got " + f.str());
    }
    const Field field = make_field(f.p(), ell, options.budget);
    const Scan scan = scan_field(field, f, options.workers);
    const std::uint64_t p = f.p();
    PointCount out;
    out.trace_histogram = scan.histogram;
    out.affine = p * scan.histogram[0];
    out.rational_poles = scan.poles;
    if (f.pole_order_at_infinity() > 0) {
        out.infinity = 1;
    } else {
        // Tr of a prime-field constant c is ell * c
        const std::uint64_t tr = (static_cast<std::uint64_t>(ell) % p) * f.value_at_infinity() % p;
        out.infinity = tr == 0 ? p : 0;
    }
    out.total = out.affine + out.rational_poles + out.infinity;
    return out;
}

std::uint64_t count_points(const PrimeFieldFunction& f, int ell, const CountOptions& options) {
    return count_points_detailed(f, ell, options).total;
}

CyclotomicInteger exp_sum(const PrimeFieldFunction& f, int ell, std::int64_t character_index,
                          const CountOptions& options) {
    if (!f.is_polynomial()) {
        throw InputError("exponential sums are computed for polynomials only; use count_points for rational functions");
    }
    const auto p = f.p();
    if (character_index < 1 || character_index >= static_cast<std::int64_t>(p)) {
        throw InputError("character index must lie in 1..p-1");
    }
    const Field field = make_field(p, ell, options.budget);
    const Scan scan = scan_field(field, f, options.workers);
    CyclotomicInteger sum(p);
    for (std::uint32_t t = 0; t < p; ++t) {
        if (scan.histogram[t] == 0) continue;
        auto term = CyclotomicInteger::zeta_power(p, character_index * static_cast<std::int64_t>(t));
        sum += CyclotomicInteger::integer(p, BigInt(scan.histogram[t])) * term;
    }
    return sum;
}

}  // namespace asnp
