#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <shared_mutex>
#include <unordered_map>

#include "paircount/count.hpp"

namespace paircount {

struct Triple {
    int n = 0;
    int k = 0;
    int m = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(t.n);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(t.k);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(t.m);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// Write-once map from (n, k, m) to z(n, k, m), shared by the recurrences.
///
/// Entries are never modified or erased once published, and node addresses
/// of std::unordered_map survive rehashing, so pointers handed out by find()
/// stay valid for the cache's lifetime. Safe for concurrent readers and writers.
class MemoCache {
public:
    MemoCache() = default;
    MemoCache(const MemoCache&) = delete;
    MemoCache& operator=(const MemoCache&) = delete;

    const Count* find(const Triple& key) const;

    /// Stores `value` unless the key is already present; returns the stored entry.
    const Count& publish(const Triple& key, Count value);

    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Triple, Count, TripleHash> entries_;
};

}  // namespace paircount
