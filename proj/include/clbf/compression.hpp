#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace clbf {

/// Smallest d with d^k >= v (ceil of the k-th root), exact in integers.
inline uint64_t nth_root_ceil(uint64_t v, uint32_t k) {
    if (v <= 1) return v;
    if (k == 1) return v;
    auto pow_ge = [k, v](uint64_t d) {
        unsigned __int128 acc = 1;
        for (uint32_t i = 0; i < k; ++i) {
            acc *= d;
            if (acc >= v) return true;
        }
        return acc >= v;
    };
    uint64_t d = static_cast<uint64_t>(std::llround(std::pow(double(v), 1.0 / k)));
    if (d == 0) d = 1;
    while (d > 1 && pow_ge(d - 1)) --d;
    while (!pow_ge(d)) ++d;
    return d;
}

inline uint64_t ceil_div(uint64_t a, uint64_t b) { return (a + b - 1) / b; }

/// How a single column is encoded: either kept as-is or split into
/// ns subcolumns by repeated quotient/remainder division.
///
/// For a split, `divisors` are in application order (divisors[0] produces
/// the least-significant subvalue) and `subdims` are in output order
/// (subdims[0] is the final quotient's range, the most significant digit).
struct PlanEntry {
    uint64_t domain_size = 0;  // v(c_i)
    std::vector<uint64_t> divisors;
    std::vector<uint64_t> subdims;

    bool is_split() const { return !divisors.empty(); }
    uint32_t subcolumns() const { return is_split() ? uint32_t(subdims.size()) : 1; }
};

/// Per-column compression decisions for a schema.
struct CompressionPlan {
    std::vector<PlanEntry> entries;
    uint64_t theta = 0;
    uint32_t ns = 2;

    size_t column_count() const { return entries.size(); }
    size_t split_count() const {
        size_t n = 0;
        for (const auto& e : entries) n += e.is_split();
        return n;
    }
};

namespace detail {

inline PlanEntry make_split_entry(uint64_t v, uint32_t ns) {
    PlanEntry e;
    e.domain_size = v;
    uint64_t remaining = v;
    for (uint32_t step = 0; step + 1 < ns; ++step) {
        uint64_t d = nth_root_ceil(remaining, ns - step);
        e.divisors.push_back(d);
        remaining = ceil_div(remaining, d);
    }
    e.subdims.push_back(remaining);
    for (auto it = e.divisors.rbegin(); it != e.divisors.rend(); ++it)
        e.subdims.push_back(*it);
    return e;
}

}  // namespace detail

/// Decides, per column, whether to split into `ns` subcolumns.
/// A column is split iff its distinct count exceeds theta and the split
/// actually reduces dimensionality (sum of subcolumn ranges < v); the
/// second condition only bites for tiny domains.
inline CompressionPlan plan_compression(const std::vector<uint64_t>& domain_sizes,
                                        uint64_t theta, uint32_t ns = 2) {
    if (theta < 1) throw std::invalid_argument("theta must be >= 1");
    if (ns < 2) throw std::invalid_argument("ns must be >= 2");
    CompressionPlan plan;
    plan.theta = theta;
    plan.ns = ns;
    plan.entries.reserve(domain_sizes.size());
    for (uint64_t v : domain_sizes) {
        PlanEntry pass;
        pass.domain_size = v;
        if (v > theta) {
            PlanEntry split = detail::make_split_entry(v, ns);
            uint64_t dim_sum = 0;
            for (uint64_t s : split.subdims) dim_sum += s;
            if (dim_sum < v) {
                plan.entries.push_back(std::move(split));
                continue;
            }
        }
        plan.entries.push_back(std::move(pass));
    }
    return plan;
}

/// Identity plan: every column passes through uncompressed (the LMBF case).
inline CompressionPlan identity_plan(const std::vector<uint64_t>& domain_sizes) {
    CompressionPlan plan;
    plan.theta = 0;
    plan.ns = 2;
    for (uint64_t v : domain_sizes) {
        PlanEntry e;
        e.domain_size = v;
        plan.entries.push_back(std::move(e));
    }
    return plan;
}

/// Splits id x into its subvalue vector, most significant digit first.
/// Pass-through entries return {x}.
inline std::vector<uint64_t> compress_value(uint64_t x, const PlanEntry& entry) {
    if (x >= entry.domain_size) throw std::out_of_range("id out of dictionary range");
    if (!entry.is_split()) return {x};
    std::vector<uint64_t> out(entry.subdims.size());
    uint64_t q = x;
    // Remainders fill the vector back to front; the final quotient lands at 0.
    for (size_t i = 0; i < entry.divisors.size(); ++i) {
        uint64_t d = entry.divisors[i];
        out[out.size() - 1 - i] = q % d;
        q /= d;
    }
    out[0] = q;
    return out;
}

/// Exact inverse of compress_value.
inline uint64_t decompress_value(const std::vector<uint64_t>& subvalues,
                                 const PlanEntry& entry) {
    if (!entry.is_split()) {
        if (subvalues.size() != 1 || subvalues[0] >= entry.domain_size)
            throw std::out_of_range("subvalue out of range");
        return subvalues[0];
    }
    if (subvalues.size() != entry.subdims.size())
        throw std::invalid_argument("subvalue count does not match plan");
    for (size_t i = 0; i < subvalues.size(); ++i)
        if (subvalues[i] >= entry.subdims[i])
            throw std::out_of_range("subvalue out of range");
    // Horner over the divisor chain, most significant digit first.
    uint64_t x = subvalues[0];
    for (size_t i = 1; i < subvalues.size(); ++i)
        x = x * entry.divisors[entry.divisors.size() - i] + subvalues[i];
    if (x >= entry.domain_size) throw std::out_of_range("subvalue out of range");
    return x;
}

/// Accounting convention for input_dimension.
///
/// Exact counts each subcolumn's true value range. Paper mirrors the
/// source arithmetic for two-way splits (divisor + divisor - 1, e.g.
/// 60000 -> 489) so reported dimensions line up with published numbers;
/// for other split arities it falls back to exact.
enum class DimConvention { Exact, Paper };

inline uint64_t entry_dimension(const PlanEntry& e,
                                DimConvention convention = DimConvention::Exact,
                                bool count_wildcard_slot = false) {
    uint64_t wildcard = count_wildcard_slot ? e.subcolumns() : 0;
    if (!e.is_split()) return e.domain_size + wildcard;
    if (convention == DimConvention::Paper && e.subdims.size() == 2)
        return 2 * e.divisors[0] - 1 + wildcard;
    uint64_t sum = 0;
    for (uint64_t s : e.subdims) sum += s;
    return sum + wildcard;
}

/// Total one-hot/embedding vocabulary size over all model inputs.
inline uint64_t input_dimension(const CompressionPlan& plan,
                                DimConvention convention = DimConvention::Exact,
                                bool count_wildcard_slot = false) {
    uint64_t total = 0;
    for (const auto& e : plan.entries)
        total += entry_dimension(e, convention, count_wildcard_slot);
    return total;
}

}  // namespace clbf
