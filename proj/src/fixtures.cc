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

#include "xmatroid/fixtures.h"

#include <random>

#include "xmatroid/errors.h"

namespace xmatroid {

Matroid RandomBinaryMatroid(int n, int dim, uint64_t seed) {
  if (dim < 1 || dim > 32) {
    throw Error(ErrorKind::kInvalidArgument, "binary dimension must be in [1, 32]");
  }
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> vectors(n);
  for (uint32_t& v : vectors) v = static_cast<uint32_t>(rng()) & ((uint64_t{1} << dim) - 1);
  const Matroid oracle = Matroid::FromIndependence(n, [vectors](ElementSet f) {
    // Gaussian elimination with the pivot at each vector's top bit.
    uint32_t basis[32] = {};
    for (int e : f) {
      uint32_t v = vectors[e];
      while (v != 0) {
        const int top = 31 - std::countl_zero(v);
        if (basis[top] == 0) {
          basis[top] = v;
          break;
        }
        v ^= basis[top];
      }
      if (v == 0) return false;
    }
    return true;
  });
  return ToExplicit(oracle);
}

int CountSpanningCircuits(const Matroid& m) {
  const int r = m.rank();
  int count = 0;
  ForEachKSubset(m.ground_size(), r + 1, [&](ElementSet s) {
    for (int e : s) {
      if (!m.IsIndependent(s.Without(e))) return true;
    }
    ++count;
    return true;
  });
  return count;
}

std::vector<Matroid> SmallErectionFixtures(int count, uint64_t seed, int max_spanning) {
  std::mt19937_64 rng(seed);
  std::vector<Matroid> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int dim = 2 + static_cast<int>(rng() % (n - 2));
    Matroid m = RandomBinaryMatroid(n, dim, rng());
    // Truncations always have a nontrivial erection.
    if (rng() % 2 == 0 && m.rank() >= 2) m = Truncate(m);
    if (CountSpanningCircuits(m) <= max_spanning) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace xmatroid
