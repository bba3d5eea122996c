// Copyright 2026 The steinerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <mutex>

namespace steinerlab::detail {

// Per-dimension cache for the recursively built sections. The builder runs
// outside the lock so it may recurse into the same cache.
template <class Value>
class Memo {
 public:
  template <class Make>
  Value get(int key, Make&& make) {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Value value = make();
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<int, Value> cache_;
};

}  // namespace steinerlab::detail
