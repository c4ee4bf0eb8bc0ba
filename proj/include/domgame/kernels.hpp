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

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace domgame::kernels {

/// Per-vertex results of one move scan over a covered set.
struct MoveScan {
  std::uint64_t legal = 0;                 // bit v: test[v] \ covered ≠ ∅ and v ∉ excluded
  std::array<std::uint8_t, 64> gain{};     // |gain[v] \ covered| for every v < n
};

using ScanFn = void (*)(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                        std::uint64_t excluded, MoveScan& out);

/// OR of masks[v] over the members v of `selection` (v < n).
using UnionFn = std::uint64_t (*)(const std::uint64_t* masks, int n, std::uint64_t selection);

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  std::string_view name;
  ScanFn scan_moves;
  UnionFn union_of;
};

void scan_moves_scalar(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                       std::uint64_t excluded, MoveScan& out);
std::uint64_t union_of_scalar(const std::uint64_t* masks, int n, std::uint64_t selection);

#if defined(DOMGAME_HAVE_AVX2)
void scan_moves_avx2(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                     std::uint64_t excluded, MoveScan& out);
std::uint64_t union_of_avx2(const std::uint64_t* masks, int n, std::uint64_t selection);
#endif

#if defined(DOMGAME_HAVE_NEON)
void scan_moves_neon(const std::uint64_t* test, const std::uint64_t* gain, int n, std::uint64_t covered,
                     std::uint64_t excluded, MoveScan& out);
std::uint64_t union_of_neon(const std::uint64_t* masks, int n, std::uint64_t selection);
#endif

/// Table for `isa`, or nullptr when it was not compiled in or the running
/// CPU lacks it.
const KernelTable* kernels_for(Isa isa);

/// Every table usable on this machine; scalar is always first.
std::vector<const KernelTable*> available_kernels();

/// Best usable table, chosen once per process. DOMGAME_KERNEL=scalar|avx2|neon
/// overrides the choice when that variant is usable.
const KernelTable& active_kernels();

}  // namespace domgame::kernels
