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

#include <doctest.h>

#include "domgame/closed_forms.hpp"
#include "domgame/errors.hpp"

using namespace domgame;
using namespace domgame::closed_forms;

TEST_CASE("path values") {
  CHECK(gamma_Zg_path(7) == 3);
  CHECK(gamma_Zg_path(6) == 3);
  CHECK(gamma_Zg_path(2) == 1);
  CHECK(gamma_Zg_path(3) == 1);
  CHECK(gamma_Zg_path(4) == 2);
  CHECK(gamma_Zg_path(11) == 5);
  CHECK_THROWS_AS(gamma_Zg_path(1), InvalidArgument);
}

TEST_CASE("cycle power values") {
  CHECK(gamma_Zg_cycle_power(5, 1) == 3);
  CHECK(gamma_Zg_cycle_power(5, 2) == 1);
  CHECK(gamma_Zg_cycle_power(8, 1) == 4);
  CHECK(gamma_Zg_cycle_power(7, 1) == 3);
  CHECK_THROWS_AS(gamma_Zg_cycle_power(2, 1), InvalidArgument);
  CHECK_THROWS_AS(gamma_Zg_cycle_power(5, 0), InvalidArgument);
}

TEST_CASE("Hamming and bridge values") {
  CHECK(game_values_hamming(2, 3) == 3);
  CHECK(game_values_hamming(3, 5) == 5);
  CHECK(game_values_hamming(2, 4) == 3);
  CHECK_THROWS_AS(game_values_hamming(3, 4), InvalidArgument);
  CHECK_THROWS_AS(game_values_hamming(1, 4), InvalidArgument);
  CHECK(game_values_bridge(3, 3) == 3);
  CHECK(game_values_bridge(4, 5) == 3);
  CHECK(game_values_bridge(3, 6) == 3);
  CHECK_THROWS_AS(game_values_bridge(2, 6), InvalidArgument);
}

TEST_CASE("hat values") {
  CHECK(hat_values(3) == HatValues{4, 4, 7});
  CHECK(hat_values(4) == HatValues{5, 5, 9});
  for (int n = 3; n < 10; ++n) CHECK(hat_values(n).gamma_Zg == (hat_values(n).gamma_g + 1) / 2);
  CHECK_THROWS_AS(hat_values(2), InvalidArgument);
}
