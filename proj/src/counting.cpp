#include "paircount/counting.hpp"

#include <array>
#include <utility>

#include "paircount/error.hpp"

namespace paircount {

namespace {

const Count kZero = 0;
const Count kOne = 1;

// Settled value for the boundary layer, or nullptr when recursion is needed.
const Count* base_value(int n, int k, int m) {
    if (n <= 0 || k < 0 || m < 0) return &kZero;
    if (k + m >= n) return &kZero;
    // Every adjacent pair is equal and the string starts with 0: all zeros.
    if (k + m == n - 1) return m == 0 ? &kOne : &kZero;
    return nullptr;
}

// The recursions hand out references into the cache (or to the constants
// above) so that summing never copies a stored value.
const Count& split_ref(int n, int k, int m, MemoCache& cache) {
    if (const Count* base = base_value(n, k, m)) return *base;
    // Only (2, 0, 0) survives the base layer at n = 2: the string "01".
    if (n == 2) return kOne;
    const Triple key{n, k, m};
    if (const Count* hit = cache.find(key)) return *hit;
    Count value = split_ref(n - 1, k - 1, m, cache);
    value += split_ref(n - 2, k, m, cache);
    value += split_ref(n - 2, m - 1, k, cache);
    return cache.publish(key, std::move(value));
}

const Count& firstone_ref(int n, int k, int m, MemoCache& cache) {
    if (const Count* base = base_value(n, k, m)) return *base;
    const Triple key{n, k, m};
    if (const Count* hit = cache.find(key)) return *hit;
    // f - 1 leading zeros, then a tail starting with 1; the tail's roles of 0 and 1 swap.
    Count value = 0;
    for (int f = 1; f <= k + 1; ++f) value += firstone_ref(n - f, m, k + 1 - f, cache);
    return cache.publish(key, std::move(value));
}

}  // namespace

std::optional<Count> z_base_case(int n, int k, int m) {
    if (const Count* base = base_value(n, k, m)) return *base;
    return std::nullopt;
}

Count z_recur_split(int n, int k, int m, MemoCache& cache) { return split_ref(n, k, m, cache); }

Count z_recur_split(int n, int k, int m) {
    MemoCache cache;
    return z_recur_split(n, k, m, cache);
}

Count z_recur_firstone(int n, int k, int m, MemoCache& cache) { return firstone_ref(n, k, m, cache); }

Count z_recur_firstone(int n, int k, int m) {
    MemoCache cache;
    return z_recur_firstone(n, k, m, cache);
}

Count z_closed_m0(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) return 0;
    return binomial((n + k - 1) / 2, k);
}

Count z_reduce_to_m0(int n, int k, int m) {
    if (auto base = z_base_case(n, k, m)) return *std::move(base);
    if (m == 0) return z_closed_m0(n, k);

    // f runs of 1s of total length m + f are injected into a string with no 1-pairs.
    // Strings ending in 0 or 01: all f runs land inside 0-pairs.
    Count total = 0;
    for (int f = 1; f <= m; ++f) {
        Count term = binomial(k + f, f) * binomial(m - 1, f - 1);
        if (term != 0) total += term * z_closed_m0(n - m - f, k + f);
    }
    // Strings ending in 11: f - 1 runs inside 0-pairs plus one run at the end. The
    // reduced string must end in 0, which parity allows only when n + k + m is even.
    if (((n + k + m) & 1) == 0) {
        for (int f = 1; f <= m; ++f) {
            Count term = binomial(k + f - 1, f - 1) * binomial(m - 1, f - 1);
            if (term != 0) total += term * z_closed_m0(n - m - f, k + f - 1);
        }
    }
    return total;
}

Count terquem_T(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("triangle index out of range");
    return binomial((n + k) / 2, k);
}

Count z_auto(int n, int k, int m) {
    if (auto base = z_base_case(n, k, m)) return *std::move(base);
    if (m == 0) return z_closed_m0(n, k);
    return z_reduce_to_m0(n, k, m);
}

Count s_circular_with(int n, int k, int m, const ZFunction& z) {
    if (n < 2) throw DomainError("circular adjacency undefined below length 2");
    if (k < 0 || m < 0) return 0;
    if (((n + k + m) & 1) != 0) return 0;
    // Ends differ: no wraparound pair. Ends equal: the wraparound pair is a 0-pair
    // (start 0) or a 1-pair (start 1, counted through the inversion z(n, m, k)).
    return z(n, k, m) + z(n, k - 1, m) + z(n, m, k) + z(n, m - 1, k);
}

Count s_circular(int n, int k, int m) {
    return s_circular_with(n, k, m, [](int a, int b, int c) { return z_auto(a, b, c); });
}

namespace {

constexpr std::array<std::pair<ZMethod, std::string_view>, 6> kMethodNames{{
    {ZMethod::Oracle, "oracle"},
    {ZMethod::Split, "split"},
    {ZMethod::FirstOne, "first-one"},
    {ZMethod::Reduce, "reduce"},
    {ZMethod::Closed, "closed"},
    {ZMethod::Auto, "auto"},
}};

}  // namespace

std::string_view method_name(ZMethod method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) return name;
    }
    return "unknown";
}

std::optional<ZMethod> parse_method(std::string_view name) {
    for (const auto& [m, n] : kMethodNames) {
        if (n == name) return m;
    }
    return std::nullopt;
}

}  // namespace paircount
