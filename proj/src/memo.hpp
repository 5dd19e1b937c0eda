#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>

#include "pbk/rewrite.hpp"

namespace pbk::detail {

// Keyed by canonical_key. Values are computed outside the lock, so two
// threads may race to fill the same slot; both compute the same value.
template <class Value>
class MemoCache {
 public:
  std::optional<Value> find(const CanonicalKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const CanonicalKey& key, const Value& value) {
    std::lock_guard lock(mutex_);
    map_.emplace(key, value);
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalKey, Value, CanonicalKeyHash> map_;
};

}  // namespace pbk::detail
