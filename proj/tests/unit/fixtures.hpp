// Copyright 2026 The gsys Authors.
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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gsys/exchange_matrix.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys::testing {

inline ExchangeMatrix a2() { return ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}); }
inline ExchangeMatrix a3() { return ExchangeMatrix(IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }
inline ExchangeMatrix b2() { return ExchangeMatrix(IntMatrix{{0, 1}, {-2, 0}}); }
inline ExchangeMatrix g2() { return ExchangeMatrix(IntMatrix{{0, 1}, {-3, 0}}); }

// Visits every mutation sequence of length <= depth without immediate repeats.
inline void for_each_sequence(std::size_t n, std::size_t depth,
                              const std::function<void(const MutationSequence&)>& fn) {
  MutationSequence seq;
  std::function<void()> rec = [&] {
    fn(seq);
    if (seq.size() == depth) return;
    for (std::size_t k = 0; k < n; ++k) {
      if (!seq.empty() && seq.back() == k) continue;
      seq.push_back(k);
      rec();
      seq.pop_back();
    }
  };
  rec();
}

// Same walk, carrying the seed along.
inline void for_each_seed(const ExchangeMatrix& b0, std::size_t depth,
                          const std::function<void(const MatrixSeed&)>& fn) {
  std::function<void(const MatrixSeed&)> rec = [&](const MatrixSeed& s) {
    fn(s);
    if (s.history.size() == depth) return;
    for (std::size_t k = 0; k < b0.size(); ++k) {
      if (!s.history.empty() && s.history.back() == k) continue;
      rec(mutate(s, k));
    }
  };
  rec(MatrixSeed::initial(b0));
}

}  // namespace gsys::testing
