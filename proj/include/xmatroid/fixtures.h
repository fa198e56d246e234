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

#ifndef XMATROID_FIXTURES_H_
#define XMATROID_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "xmatroid/matroid.h"

namespace xmatroid {

/// Column matroid of n random vectors in GF(2)^dim (explicit form).
/// Zero vectors are allowed, so the result may have loops.
Matroid RandomBinaryMatroid(int n, int dim, uint64_t seed);

/// Number of (rank+1)-sets whose rank-sized subsets are all independent.
int CountSpanningCircuits(const Matroid& m);

/// `count` seeded binary matroids on 4 to 8 elements, about half of them
/// truncated, with at most `max_spanning` spanning circuits so that their
/// erections can be enumerated.
std::vector<Matroid> SmallErectionFixtures(int count, uint64_t seed, int max_spanning = 14);

}  // namespace xmatroid

#endif  // XMATROID_FIXTURES_H_
