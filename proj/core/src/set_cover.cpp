// Copyright 2026 The cdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdim/set_cover.hpp"

#include <queue>
#include <string>

namespace cdim {
namespace {

std::size_t first_missing(const Bitset& covered) {
  Bitset missing = ~covered;
  return missing.find_first();
}

}  // namespace

UncoverableError::UncoverableError(std::size_t element)
    : std::runtime_error("universe element " + std::to_string(element) +
                         " is not covered by any set"),
      element_(element) {}

std::vector<GreedyStep> greedy_set_cover(const SetCoverInstance& instance) {
  const std::size_t u = instance.universe_size;
  Bitset reachable(u);
  for (const auto& s : instance.sets) reachable |= s;
  if (u > 0 && !reachable.all()) throw UncoverableError(first_missing(reachable));

  Bitset uncovered(u);
  uncovered.set();
  std::vector<GreedyStep> trace;
  while (uncovered.any()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t i = 0; i < instance.sets.size(); ++i) {
      std::size_t gain = (instance.sets[i] & uncovered).count();
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    uncovered -= instance.sets[best];
    trace.push_back({best, best_gain});
  }
  return trace;
}

std::vector<GreedyStep> lazy_greedy_set_cover(std::size_t universe_size,
                                              std::size_t set_count,
                                              const SetProvider& provider) {
  // Key order: larger gain first, then lower index.
  struct Key {
    std::size_t gain;
    std::size_t index;
    bool operator<(const Key& o) const {
      return gain != o.gain ? gain < o.gain : index > o.index;
    }
  };
  Bitset scratch(universe_size), reachable(universe_size);
  std::priority_queue<Key> heap;
  for (std::size_t i = 0; i < set_count; ++i) {
    scratch.reset();
    provider(i, scratch);
    reachable |= scratch;
    heap.push({scratch.count(), i});
  }
  if (universe_size > 0 && !reachable.all()) {
    throw UncoverableError(first_missing(reachable));
  }

  Bitset uncovered(universe_size);
  uncovered.set();
  std::vector<GreedyStep> trace;
  while (uncovered.any()) {
    Key top = heap.top();
    heap.pop();
    scratch.reset();
    provider(top.index, scratch);
    Key fresh{(scratch & uncovered).count(), top.index};
    // Stale gains only overestimate, so a fresh key that still beats every
    // stale key is the true maximum.
    if (!heap.empty() && fresh < heap.top()) {
      heap.push(fresh);
      continue;
    }
    uncovered -= scratch;
    trace.push_back({fresh.index, fresh.gain});
  }
  return trace;
}

}  // namespace cdim
