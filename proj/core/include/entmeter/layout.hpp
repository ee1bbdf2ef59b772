// Copyright 2026 The entmeter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMETER_LAYOUT_HPP_
#define ENTMETER_LAYOUT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace entmeter {

// One tensor leg: subsystem `subsystem` of state copy `copy`, local
// dimension `dim`. A plain bipartite state has legs (0,"A") and (0,"B");
// its two-fold copy adds (1,"A") and (1,"B").
struct Leg {
  int copy = 0;
  std::string subsystem;
  int dim = 0;

  bool operator==(const Leg&) const = default;
};

// Ordered list of legs defining how a flat amplitude vector factorizes.
// Flattening is row-major with the first leg varying slowest.
class LegLayout {
 public:
  LegLayout() = default;
  explicit LegLayout(std::vector<Leg> legs);

  // Layout for a single copy (copy index 0) with the given subsystems.
  static LegLayout single_copy(
      const std::vector<std::pair<std::string, int>>& subsystems);

  // Layout of n copies of this single-copy layout, copies indexed 0..n-1
  // in leg order copy-major: all legs of copy 0, then copy 1, ...
  LegLayout tensor_power(int n) const;

  int leg_count() const { return static_cast<int>(legs_.size()); }
  const Leg& leg(int i) const { return legs_.at(static_cast<size_t>(i)); }
  const std::vector<Leg>& legs() const { return legs_; }

  std::int64_t total_dim() const;

  // Index of the leg (copy, subsystem), or -1 if absent.
  int find(int copy, const std::string& subsystem) const;
  // Same, but throws std::invalid_argument if absent.
  int require(int copy, const std::string& subsystem) const;

  // Number of distinct copy indices. Copies must be labeled 0..n-1.
  int n_copies() const;

  // Subsystem labels of copy 0, in leg order.
  std::vector<std::string> subsystems() const;

  // True when every copy carries the same subsystems with the same dims.
  bool uniform_copies() const;

  // Layout of a single copy extracted from a uniform multi-copy layout.
  LegLayout copy_layout() const;

  // Row-major strides: flat index = sum_i index_i * stride_i.
  std::vector<std::int64_t> strides() const;

  bool operator==(const LegLayout&) const = default;

 private:
  std::vector<Leg> legs_;
};

// Dimensions of the legs, in order.
std::vector<int> leg_dims(const LegLayout& layout);

}  // namespace entmeter

#endif  // ENTMETER_LAYOUT_HPP_
