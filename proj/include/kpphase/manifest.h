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

#ifndef KPPHASE_MANIFEST_H_
#define KPPHASE_MANIFEST_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "kpphase/sweep.h"

namespace kpphase {

inline constexpr const char* kVersion = "0.1.0";

// Sidecar written next to every CSV artifact. `config` echoes every input
// that affects the deterministic columns, so rerunning the recorded command
// with it reproduces them byte for byte.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::vector<std::string> outputs;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;

  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;
};

nlohmann::json to_json(const SamplingModel& model);
nlohmann::json to_json(const GridConfig& config);

}  // namespace kpphase

#endif  // KPPHASE_MANIFEST_H_
