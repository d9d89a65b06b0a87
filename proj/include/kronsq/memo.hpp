#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace kronsq {

// Write-once memo table. The value is computed outside the lock, so a
// recursive computation may re-enter the same table. If two threads race on
// one key, the first stored value wins; both computed the same thing anyway.
template <class Key, class Value, class Compare = std::less<Key>>
class ConcurrentMemo {
 public:
  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, std::move(value));
    return it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> table_;
};

}  // namespace kronsq
