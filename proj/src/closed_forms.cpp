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

#include "domgame/closed_forms.hpp"

#include "domgame/errors.hpp"

namespace domgame::closed_forms {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int gamma_Zg_path(int n) {
  if (n < 2) throw InvalidArgument("path formula needs n >= 2");
  return n % 4 == 3 ? ceil_div(n, 2) - 1 : ceil_div(n, 2);
}

int gamma_Zg_cycle_power(int big_n, int n) {
  if (big_n < 3 || n < 1) throw InvalidArgument("cycle power formula needs N >= 3 and n >= 1");
  const int base = ceil_div(big_n, n + 1);
  return big_n % (2 * n + 2) <= n + 1 ? base : base - 1;
}

int game_values_hamming(int m, int n) {
  if (m < 2 || n < 2 * m - 1) throw InvalidArgument("K_m □ K_n formula needs m >= 2 and n >= 2m - 1");
  return 2 * m - 1;
}

int game_values_bridge(int m, int n) {
  if (m < 3 || n < 3) throw InvalidArgument("bridge graph values need m, n >= 3");
  return 3;
}

HatValues hat_values(int n_g) {
  if (n_g < 3) throw InvalidArgument("hat graph values need n(G) >= 3");
  return {n_g + 1, n_g + 1, 2 * n_g + 1};
}

}  // namespace domgame::closed_forms
