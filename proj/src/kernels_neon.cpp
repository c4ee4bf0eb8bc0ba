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

#include <arm_neon.h>

#include <bit>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

void scan_moves_neon(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                     std::uint64_t excluded, MoveScan& out) {
  const uint64x2_t open = vdupq_n_u64(~covered);
  std::uint64_t legal = 0;
  int v = 0;
  for (; v + 2 <= n; v += 2) {
    const uint64x2_t t = vandq_u64(vld1q_u64(test + v), open);
    const uint64x2_t empty = vceqzq_u64(t);
    if (vgetq_lane_u64(empty, 0) == 0) legal |= std::uint64_t{1} << v;
    if (vgetq_lane_u64(empty, 1) == 0) legal |= std::uint64_t{1} << (v + 1);

    const uint64x2_t g = vandq_u64(vld1q_u64(gain + v), open);
    const uint64x2_t counts = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(g)))));
    out.gain[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(vgetq_lane_u64(counts, 0));
    out.gain[static_cast<std::size_t>(v + 1)] = static_cast<std::uint8_t>(vgetq_lane_u64(counts, 1));
  }
  for (; v < n; ++v) {
    if ((test[v] & ~covered) != 0) legal |= std::uint64_t{1} << v;
    out.gain[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(std::popcount(gain[v] & ~covered));
  }
  out.legal = legal & ~excluded;
}

std::uint64_t union_of_neon(const std::uint64_t* masks, int n, std::uint64_t selection) {
  uint64x2_t acc = vdupq_n_u64(0);
  int v = 0;
  for (; v + 2 <= n; v += 2) {
    const std::uint64_t pick[2] = {0 - ((selection >> v) & 1u), 0 - ((selection >> (v + 1)) & 1u)};
    acc = vorrq_u64(acc, vandq_u64(vld1q_u64(pick), vld1q_u64(masks + v)));
  }
  std::uint64_t out = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
  for (; v < n; ++v) {
    if ((selection >> v) & 1u) out |= masks[v];
  }
  return out;
}

}  // namespace domgame::kernels
