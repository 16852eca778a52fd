#include "paircount/oracle.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "paircount/error.hpp"

namespace paircount {

namespace {

std::uint64_t low_bits(int count) { return count >= 64 ? ~0ULL : (1ULL << count) - 1; }

// Bit i of the mask and bit i+1 are neighbours; orientation does not matter for counting.
void linear_profile(std::uint64_t mask, int n, int& k, int& m) {
    const std::uint64_t pairs = low_bits(n - 1);
    const std::uint64_t shifted = mask >> 1;
    m = std::popcount(mask & shifted & pairs);
    k = std::popcount(~mask & ~shifted & pairs);
}

void circular_profile(std::uint64_t mask, int n, int& k, int& m) {
    const std::uint64_t all = low_bits(n);
    const std::uint64_t rotated = (mask >> 1) | ((mask & 1ULL) << (n - 1));
    m = std::popcount(mask & rotated);
    k = std::popcount(~mask & ~rotated & all);
}

ProfileHistogram build_linear(int n) {
    ProfileHistogram h(n);
    // Leading bit is 0, so only the low n - 1 bits vary.
    const std::uint64_t end = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        int k = 0, m = 0;
        linear_profile(mask, n, k, m);
        h.add(k, m);
    }
    return h;
}

ProfileHistogram build_circular(int n) {
    ProfileHistogram h(n);
    const std::uint64_t end = 1ULL << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        int k = 0, m = 0;
        circular_profile(mask, n, k, m);
        h.add(k, m);
    }
    return h;
}

struct HistogramStore {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const ProfileHistogram>> linear;
    std::map<int, std::shared_ptr<const ProfileHistogram>> circular;
};

HistogramStore& store() {
    static HistogramStore s;
    return s;
}

template <typename Build>
std::shared_ptr<const ProfileHistogram> cached(std::map<int, std::shared_ptr<const ProfileHistogram>>& slot, int n,
                                               Build build) {
    auto& s = store();
    {
        std::lock_guard lock(s.mutex);
        if (auto it = slot.find(n); it != slot.end()) return it->second;
    }
    auto fresh = std::make_shared<const ProfileHistogram>(build(n));
    std::lock_guard lock(s.mutex);
    return slot.try_emplace(n, std::move(fresh)).first->second;
}

}  // namespace

std::uint64_t ProfileHistogram::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void check_oracle_range(int n, int lower, int oracle_limit) {
    if (oracle_limit < 1 || oracle_limit > kMaxOracleLimit) {
        throw DomainError("oracle limit must lie in 1.." + std::to_string(kMaxOracleLimit));
    }
    if (n > oracle_limit) {
        throw DomainError("oracle limit exceeded: n = " + std::to_string(n) + " > " + std::to_string(oracle_limit));
    }
    if (n < lower) {
        throw DomainError("oracle requires n >= " + std::to_string(lower) + ", got " + std::to_string(n));
    }
}

std::shared_ptr<const ProfileHistogram> linear_histogram(int n, int oracle_limit) {
    check_oracle_range(n, 1, oracle_limit);
    return cached(store().linear, n, build_linear);
}

std::shared_ptr<const ProfileHistogram> circular_histogram(int n, int oracle_limit) {
    check_oracle_range(n, 2, oracle_limit);
    return cached(store().circular, n, build_circular);
}

Count z_oracle(int n, int k, int m, int oracle_limit) {
    return Count(linear_histogram(n, oracle_limit)->at(k, m));
}

Count s_circular_oracle(int n, int k, int m, int oracle_limit) {
    return Count(circular_histogram(n, oracle_limit)->at(k, m));
}

}  // namespace paircount
