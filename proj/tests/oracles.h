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

// Brute-force references used only by the tests.

#ifndef XMATROID_TESTS_ORACLES_H_
#define XMATROID_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"

namespace doctest {
template <>
struct StringMaker<xmatroid::ElementSet> {
  static String convert(xmatroid::ElementSet s) { return s.ToString().c_str(); }
};
}  // namespace doctest

namespace xmatroid::testing {

// Acyclicity by union-find.
inline bool IsForest(const HostGraph& host, ElementSet f) {
  std::vector<int> parent(host.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int e : f) {
    const int a = find(host.edge(e).u), b = find(host.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Largest independent subset, by scanning all subsets.
inline int BruteRank(const std::function<bool(ElementSet)>& independent,
                     ElementSet f) {
  int best = 0;
  ForEachSubset(f, [&](ElementSet s) {
    if (s.size() > best && independent(s)) best = s.size();
  });
  return best;
}

// Every nonempty subset I satisfies |I| <= value(I).
inline bool CountIndependent(const std::function<int(ElementSet)>& value,
                             ElementSet f) {
  bool ok = true;
  ForEachSubset(f, [&](ElementSet s) {
    if (ok && !s.empty() && s.size() > value(s)) ok = false;
  });
  return ok;
}

// Each component of (V(F), F) has at most one cycle, and that cycle is odd.
inline bool EvenCycleIndependent(const HostGraph& host, ElementSet f) {
  const int n = host.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (int e : f) {
    adj[host.edge(e).u].push_back(host.edge(e).v);
    adj[host.edge(e).v].push_back(host.edge(e).u);
  }
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0 || adj[s].empty()) continue;
    int vertices = 0, degree_sum = 0;
    bool odd = false;
    std::vector<int> stack = {s};
    color[s] = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += static_cast<int>(adj[v].size());
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          odd = true;
        }
      }
    }
    const int edges = degree_sum / 2;
    if (edges > vertices) return false;
    if (edges == vertices && !odd) return false;
  }
  return true;
}

// Column vectors over GF(p) with small p; independence by elimination.
struct SmallLinear {
  int p = 2;
  int dim = 0;
  std::vector<std::vector<int>> vectors;

  bool Independent(ElementSet f) const {
    std::vector<std::vector<int>> rows;
    for (int e : f) rows.push_back(vectors[e]);
    int rank = 0;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
      int pivot = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][col] % p != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      int inv = 1;
      while ((rows[rank][col] * inv) % p != 1) ++inv;
      for (int& x : rows[rank]) x = (x * inv) % p;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        const int factor = rows[r][col];
        for (int c = 0; c < dim; ++c) {
          rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
        }
      }
      ++rank;
    }
    return rank == static_cast<int>(rows.size());
  }
};

inline SmallLinear RandomLinear(int n, int dim, int p, uint64_t seed) {
  SmallLinear out;
  out.p = p;
  out.dim = dim;
  uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(dim);
    for (int& x : v) x = static_cast<int>(next() % p);
    out.vectors.push_back(v);
  }
  return out;
}

}  // namespace xmatroid::testing

#endif  // XMATROID_TESTS_ORACLES_H_
