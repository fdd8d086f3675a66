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

#ifndef KPPHASE_TESTS_FIXTURES_H_
#define KPPHASE_TESTS_FIXTURES_H_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "kpphase/instance.h"
#include "kpphase/ratio.h"

namespace kpphase::testing {

// The four-item lattice example: weights 2,5,8,4 and values 3,2,6,9.
inline Instance FigureOneInstance() { return Instance({2, 5, 8, 4}, {3, 2, 6, 9}); }

// Raw capacity 10, raw profit 15.
inline ConstraintPair FigureOneA() { return ConstraintPair(Ratio(10, 19), Ratio(3, 4)); }
// Raw capacity 12, raw profit 12.
inline ConstraintPair FigureOneB() { return ConstraintPair(Ratio(12, 19), Ratio(3, 5)); }

// Independent feasibility check: weight/W <= c and value/V >= p by
// cross-multiplication, without going through Thresholds.
inline bool NaiveAdmits(const Instance& inst, const ConstraintPair& cp, std::int64_t w,
                        std::int64_t v) {
  using i128 = __int128;
  const bool cap_ok = static_cast<i128>(w) * cp.c().denominator() <=
                      static_cast<i128>(cp.c().numerator()) * inst.total_weight();
  const bool profit_ok = static_cast<i128>(v) * cp.p().denominator() >=
                         static_cast<i128>(cp.p().numerator()) * inst.total_value();
  return cap_ok && profit_ok;
}

// Plain 2^n loop; the reference the solvers are checked against.
inline bool NaiveSolvable(const Instance& inst, const ConstraintPair& cp) {
  const std::size_t n = inst.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t w = 0;
    std::int64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        w += inst.weights()[i];
        v += inst.values()[i];
      }
    }
    if (NaiveAdmits(inst, cp, w, v)) return true;
  }
  return false;
}

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("kpphase_" + tag + "_" + std::to_string(std::rand()) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace kpphase::testing

#endif  // KPPHASE_TESTS_FIXTURES_H_
