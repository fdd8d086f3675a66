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

#include "kpphase/manifest.h"

#include <ctime>
#include <fstream>
#include <stdexcept>

namespace kpphase {

namespace {

std::string iso8601(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  const double wall =
      std::chrono::duration<double>(finished - started).count();
  return nlohmann::json{
      {"command", command},
      {"config", config},
      {"master_seed", seed},
      {"version", version},
      {"outputs", outputs},
      {"started_utc", iso8601(started)},
      {"finished_utc", iso8601(finished)},
      {"wall_seconds", wall},
  };
}

void RunManifest::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  out << to_json().dump(2) << '\n';
}

nlohmann::json to_json(const SamplingModel& model) {
  return nlohmann::json{
      {"n", model.n}, {"low", model.low}, {"high", model.high}, {"seed", model.master_seed}};
}

nlohmann::json to_json(const GridConfig& config) {
  nlohmann::json j{
      {"model", to_json(config.model)},
      {"step", config.step.to_string()},
      {"trials", config.trials_per_cell},
      {"include_bounds", config.include_bounds},
      {"record_time", config.record_time},
  };
  j["budget"] = config.node_budget ? nlohmann::json(*config.node_budget) : nlohmann::json();
  return j;
}

}  // namespace kpphase
