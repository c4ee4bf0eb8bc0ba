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

#include <immintrin.h>

#include <bit>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

namespace {

// Per-lane 64-bit popcount: nibble lookup then horizontal byte sums.
inline __m256i popcount_epi64(__m256i x) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low_nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_nibble);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

void scan_moves_avx2(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                     std::uint64_t excluded, MoveScan& out) {
  const __m256i open = _mm256_set1_epi64x(static_cast<long long>(~covered));
  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t legal = 0;
  int v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256i t = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(test + v)), open);
    const int empty = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(t, zero)));
    legal |= static_cast<std::uint64_t>(~empty & 0xf) << v;

    const __m256i g = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(gain + v)), open);
    alignas(32) std::uint64_t counts[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(counts), popcount_epi64(g));
    for (int lane = 0; lane < 4; ++lane) {
      out.gain[static_cast<std::size_t>(v + lane)] = static_cast<std::uint8_t>(counts[lane]);
    }
  }
  for (; v < n; ++v) {
    if ((test[v] & ~covered) != 0) legal |= std::uint64_t{1} << v;
    out.gain[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(std::popcount(gain[v] & ~covered));
  }
  out.legal = legal & ~excluded;
}

std::uint64_t union_of_avx2(const std::uint64_t* masks, int n, std::uint64_t selection) {
  const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
  __m256i acc = _mm256_setzero_si256();
  int v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256i sel = _mm256_set1_epi64x(static_cast<long long>((selection >> v) & 0xf));
    const __m256i pick = _mm256_cmpeq_epi64(_mm256_and_si256(sel, lane_bits), lane_bits);
    acc = _mm256_or_si256(acc, _mm256_and_si256(pick, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + v))));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t out = lanes[0] | lanes[1] | lanes[2] | lanes[3];
  for (; v < n; ++v) {
    if ((selection >> v) & 1u) out |= masks[v];
  }
  return out;
}

}  // namespace domgame::kernels
