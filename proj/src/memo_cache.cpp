#include "paircount/memo_cache.hpp"

#include <mutex>

namespace paircount {

const Count* MemoCache::find(const Triple& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

const Count& MemoCache::publish(const Triple& key, Count value) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

}  // namespace paircount
