#include "paircount/enumerate.hpp"

#include <cstdint>

#include "paircount/error.hpp"
#include "paircount/profile.hpp"

namespace paircount {

namespace {

template <typename Profile>
std::vector<BitString> filter_masks(int n, std::uint64_t end, const PairProfile& wanted, Profile profile) {
    std::vector<BitString> out;
    if (wanted.k < 0 || wanted.m < 0) return out;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        auto candidate = BitString::from_mask(n, mask);
        if (profile(candidate) == wanted) out.push_back(std::move(candidate));
    }
    return out;
}

}  // namespace

std::vector<BitString> enumerate_Z(int n, int k, int m, int oracle_limit) {
    check_oracle_range(n, 1, oracle_limit);
    // Masks below 2^(n-1) are exactly the strings whose first bit is 0.
    return filter_masks(n, 1ULL << (n - 1), PairProfile{n, k, m},
                        [](const BitString& b) { return linear_pair_counts(b); });
}

std::vector<BitString> enumerate_circular(int n, int k, int m, int oracle_limit) {
    check_oracle_range(n, 2, oracle_limit);
    return filter_masks(n, 1ULL << n, PairProfile{n, k, m},
                        [](const BitString& b) { return circular_pair_counts(b); });
}

BitString invert_bits(const BitString& b) {
    std::vector<std::uint8_t> flipped(b.bits());
    for (auto& bit : flipped) bit ^= 1U;
    return BitString::from_bits(std::move(flipped));
}

}  // namespace paircount
