#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "paircount/count.hpp"

namespace paircount {

inline constexpr int kDefaultOracleLimit = 20;
/// Hard ceiling for any oracle limit override (strings are enumerated as 64-bit masks).
inline constexpr int kMaxOracleLimit = 32;

/// Counts of every (k, m) profile over one exhaustive pass at a fixed length n.
class ProfileHistogram {
public:
    explicit ProfileHistogram(int n)
        : n_(n), counts_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {}

    int length() const noexcept { return n_; }

    /// Zero for any (k, m) outside 0..n.
    std::uint64_t at(int k, int m) const noexcept {
        if (k < 0 || m < 0 || k > n_ || m > n_) return 0;
        return counts_[index(k, m)];
    }

    void add(int k, int m) { ++counts_[index(k, m)]; }

    std::uint64_t total() const noexcept;

private:
    std::size_t index(int k, int m) const noexcept {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(m);
    }

    int n_;
    std::vector<std::uint64_t> counts_;
};

/// Linear profiles of the 2^(n-1) strings of length n that start with 0.
/// Computed once per n and shared; throws DomainError if n < 1 or n > limit.
std::shared_ptr<const ProfileHistogram> linear_histogram(int n, int oracle_limit = kDefaultOracleLimit);

/// Circular profiles of all 2^n strings of length n; requires 2 <= n <= limit.
std::shared_ptr<const ProfileHistogram> circular_histogram(int n, int oracle_limit = kDefaultOracleLimit);

/// Ground truth for z(n, k, m) by exhaustive enumeration.
Count z_oracle(int n, int k, int m, int oracle_limit = kDefaultOracleLimit);

/// Ground truth for the wraparound count by exhaustive enumeration.
Count s_circular_oracle(int n, int k, int m, int oracle_limit = kDefaultOracleLimit);

/// Throws DomainError unless lower <= n <= oracle_limit (and the limit itself is sane).
void check_oracle_range(int n, int lower, int oracle_limit);

}  // namespace paircount
