// Copyright 2026 The kpphase Authors
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

#ifndef KPPHASE_SWEEP_CONFIG_H_
#define KPPHASE_SWEEP_CONFIG_H_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "kpphase/sweep.h"

namespace kpphase {

// Sweep configuration file, INI style:
//
//   [model]
//   n = 50
//   low = 1
//   high = 10000000
//   seed = 7
//
//   [grid]
//   step = 0.04
//   trials = 200
//   budget = 1000000
//   include_bounds = true
//   record_time = false
//
//   [isoquants]
//   levels = 0.4,0.5,0.6
//
//   [output]
//   dir = results
//
// `step` accepts a decimal or a fraction and is parsed exactly. Comments
// must sit on their own line. Missing keys keep the GridConfig / SweepConfig
// defaults; unknown sections and keys are rejected.
struct SweepConfig {
  GridConfig grid;
  std::vector<double> levels{0.4, 0.5, 0.6};
  std::filesystem::path out_dir = ".";
};

// Throws std::invalid_argument on unknown keys or malformed values.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::filesystem::path& path);

}  // namespace kpphase

#endif  // KPPHASE_SWEEP_CONFIG_H_
