// Copyright 2026 The Authors.
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

#include "xmatroid/element_set.h"

namespace xmatroid {

ElementSet::ElementSet(std::initializer_list<int> ids) {
  for (int e : ids) bits_ |= uint64_t{1} << e;
}

ElementSet ElementSet::FromIds(std::span<const int> ids) {
  uint64_t bits = 0;
  for (int e : ids) bits |= uint64_t{1} << e;
  return ElementSet(bits);
}

std::vector<int> ElementSet::ids() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace xmatroid
