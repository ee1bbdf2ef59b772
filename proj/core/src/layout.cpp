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

#include "entmeter/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace entmeter {

LegLayout::LegLayout(std::vector<Leg> legs) : legs_(std::move(legs)) {
  if (legs_.empty()) {
    throw std::invalid_argument("LegLayout: at least one leg required");
  }
  std::set<std::pair<int, std::string>> seen;
  std::set<int> copies;
  for (const Leg& leg : legs_) {
    if (leg.dim < 2) {
      throw std::invalid_argument("LegLayout: leg dimension must be >= 2");
    }
    if (leg.copy < 0) {
      throw std::invalid_argument("LegLayout: copy index must be >= 0");
    }
    if (leg.subsystem.empty()) {
      throw std::invalid_argument("LegLayout: empty subsystem label");
    }
    if (!seen.insert({leg.copy, leg.subsystem}).second) {
      throw std::invalid_argument("LegLayout: duplicate leg (copy " +
                                  std::to_string(leg.copy) + ", subsystem " +
                                  leg.subsystem + ")");
    }
    copies.insert(leg.copy);
  }
  // Copy labels must be exactly 0..n-1 so that copy permutations are total.
  int expected = 0;
  for (int c : copies) {
    if (c != expected++) {
      throw std::invalid_argument("LegLayout: copy indices must be 0..n-1");
    }
  }
}

LegLayout LegLayout::single_copy(
    const std::vector<std::pair<std::string, int>>& subsystems) {
  std::vector<Leg> legs;
  legs.reserve(subsystems.size());
  for (const auto& [name, dim] : subsystems) {
    legs.push_back(Leg{0, name, dim});
  }
  return LegLayout(std::move(legs));
}

LegLayout LegLayout::tensor_power(int n) const {
  if (n < 1) {
    throw std::invalid_argument("tensor_power: n must be >= 1");
  }
  if (n_copies() != 1) {
    throw std::invalid_argument("tensor_power: base layout must be one copy");
  }
  std::vector<Leg> legs;
  legs.reserve(legs_.size() * static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    for (const Leg& leg : legs_) {
      legs.push_back(Leg{c, leg.subsystem, leg.dim});
    }
  }
  return LegLayout(std::move(legs));
}

std::int64_t LegLayout::total_dim() const {
  std::int64_t d = 1;
  for (const Leg& leg : legs_) d *= leg.dim;
  return d;
}

int LegLayout::find(int copy, const std::string& subsystem) const {
  for (size_t i = 0; i < legs_.size(); ++i) {
    if (legs_[i].copy == copy && legs_[i].subsystem == subsystem) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int LegLayout::require(int copy, const std::string& subsystem) const {
  int i = find(copy, subsystem);
  if (i < 0) {
    throw std::invalid_argument("LegLayout: no leg (copy " +
                                std::to_string(copy) + ", subsystem " +
                                subsystem + ")");
  }
  return i;
}

int LegLayout::n_copies() const {
  int max_copy = 0;
  for (const Leg& leg : legs_) max_copy = std::max(max_copy, leg.copy);
  return max_copy + 1;
}

std::vector<std::string> LegLayout::subsystems() const {
  std::vector<std::string> names;
  for (const Leg& leg : legs_) {
    if (leg.copy == 0) names.push_back(leg.subsystem);
  }
  return names;
}

bool LegLayout::uniform_copies() const {
  const int n = n_copies();
  std::vector<std::vector<std::pair<std::string, int>>> per_copy(
      static_cast<size_t>(n));
  for (const Leg& leg : legs_) {
    per_copy[static_cast<size_t>(leg.copy)].push_back({leg.subsystem, leg.dim});
  }
  for (int c = 1; c < n; ++c) {
    if (per_copy[static_cast<size_t>(c)] != per_copy[0]) return false;
  }
  return true;
}

LegLayout LegLayout::copy_layout() const {
  if (!uniform_copies()) {
    throw std::invalid_argument("copy_layout: copies are not uniform");
  }
  std::vector<Leg> legs;
  for (const Leg& leg : legs_) {
    if (leg.copy == 0) legs.push_back(leg);
  }
  return LegLayout(std::move(legs));
}

std::vector<std::int64_t> LegLayout::strides() const {
  std::vector<std::int64_t> s(legs_.size());
  std::int64_t acc = 1;
  for (size_t i = legs_.size(); i-- > 0;) {
    s[i] = acc;
    acc *= legs_[i].dim;
  }
  return s;
}

std::vector<int> leg_dims(const LegLayout& layout) {
  std::vector<int> dims;
  dims.reserve(static_cast<size_t>(layout.leg_count()));
  for (const Leg& leg : layout.legs()) dims.push_back(leg.dim);
  return dims;
}

}  // namespace entmeter
