// Copyright 2026 The domgame Authors
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

#include <bit>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

void scan_moves_scalar(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                       std::uint64_t excluded, MoveScan& out) {
  std::uint64_t legal = 0;
  for (int v = 0; v < n; ++v) {
    if ((test[v] & ~covered) != 0) legal |= std::uint64_t{1} << v;
    out.gain[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(std::popcount(gain[v] & ~covered));
  }
  out.legal = legal & ~excluded;
}

std::uint64_t union_of_scalar(const std::uint64_t* masks, int n, std::uint64_t selection) {
  std::uint64_t out = 0;
  for (int v = 0; v < n; ++v) {
    if ((selection >> v) & 1u) out |= masks[v];
  }
  return out;
}

}  // namespace domgame::kernels
