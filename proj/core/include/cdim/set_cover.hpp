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

#ifndef CDIM_SET_COVER_HPP_
#define CDIM_SET_COVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cdim {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<Bitset> sets;
};

struct GreedyStep {
  std::size_t set = 0;
  std::size_t newly_covered = 0;
};

class UncoverableError : public std::runtime_error {
 public:
  explicit UncoverableError(std::size_t element);
  std::size_t element() const { return element_; }

 private:
  std::size_t element_;
};

// Classical greedy: repeatedly take the set covering the most uncovered
// elements, lowest index on ties. Throws UncoverableError naming the first
// element no set contains.
std::vector<GreedyStep> greedy_set_cover(const SetCoverInstance& instance);

// Writes set `index` into `out` (sized to the universe).
using SetProvider = std::function<void(std::size_t index, Bitset& out)>;

// Same selections and trace as greedy_set_cover, but sets are produced on
// demand and re-scored lazily from a priority queue, so only O(universe)
// bits are live at once.
std::vector<GreedyStep> lazy_greedy_set_cover(std::size_t universe_size,
                                              std::size_t set_count,
                                              const SetProvider& provider);

}  // namespace cdim

#endif  // CDIM_SET_COVER_HPP_
