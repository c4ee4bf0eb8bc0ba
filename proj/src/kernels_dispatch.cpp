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

#include <cstdlib>
#include <string_view>

#include "domgame/kernels.hpp"

namespace domgame::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, "scalar", &scan_moves_scalar, &union_of_scalar};
#if defined(DOMGAME_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, "avx2", &scan_moves_avx2, &union_of_avx2};
#endif
#if defined(DOMGAME_HAVE_NEON)
constexpr KernelTable kNeon{Isa::neon, "neon", &scan_moves_neon, &union_of_neon};
#endif

bool cpu_has_avx2() {
#if defined(DOMGAME_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable& choose() {
  const KernelTable* best = &kScalar;
  for (const KernelTable* table : available_kernels()) best = table;
  if (const char* forced = std::getenv("DOMGAME_KERNEL")) {
    for (const KernelTable* table : available_kernels()) {
      if (table->name == std::string_view(forced)) return *table;
    }
  }
  return *best;
}

}  // namespace

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar: return &kScalar;
    case Isa::avx2:
#if defined(DOMGAME_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(DOMGAME_HAVE_NEON)
      return &kNeon;  // Advanced SIMD is mandatory on aarch64.
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (const KernelTable* table = kernels_for(isa)) out.push_back(table);
  }
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = choose();
  return table;
}

}  // namespace domgame::kernels
