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

namespace domgame::closed_forms {

/// γ_Zg(P_n), n >= 2: ceil(n/2) - 1 when n ≡ 3 (mod 4), else ceil(n/2).
int gamma_Zg_path(int n);

/// γ_Zg(C_N^n), N >= 3, n >= 1: ceil(N/(n+1)) when N mod (2n+2) <= n+1,
/// otherwise one less.
int gamma_Zg_cycle_power(int big_n, int n);

/// Common Z/L/LL D-game value 2m - 1 of K_m □ K_n for m >= 2, n >= 2m - 1.
int game_values_hamming(int m, int n);

/// Common Z/L/LL D-game value of the bridge graph G_{m,n}, m, n >= 3.
int game_values_bridge(int m, int n);

struct HatValues {
  int gamma_Zg;
  int gamma;
  int gamma_g;
  bool operator==(const HatValues&) const = default;
};

/// Values on the hat graph of a connected G with n(G) = n_g >= 3.
HatValues hat_values(int n_g);

}  // namespace domgame::closed_forms
