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

#include "xmatroid/count_matroid.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "xmatroid/errors.h"

namespace xmatroid {

CountFunction CountFunction::F(int a, int b) {
  if (a < 0) throw Error(ErrorKind::kInvalidArgument, "f_{a,b} needs a >= 0");
  CountFunction f;
  f.kind = Kind::kF;
  f.a = a;
  f.b = b;
  return f;
}

CountFunction CountFunction::G(int a, int b, int c) {
  if (b < 0 || a < b) {
    throw Error(ErrorKind::kInvalidArgument, "g_{a,b,c} needs a >= b >= 0");
  }
  CountFunction f;
  f.kind = Kind::kG;
  f.a = a;
  f.b = b;
  f.c = c;
  return f;
}

CountFunction CountFunction::PictureLifting(int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "h needs k >= 1");
  CountFunction f;
  f.kind = Kind::kPictureLifting;
  f.k = k;
  return f;
}

CountFunction CountFunction::Custom(std::function<int(ElementSet)> fn) {
  CountFunction f;
  f.kind = Kind::kCustom;
  f.custom = std::move(fn);
  return f;
}

std::string CountFunction::Name() const {
  switch (kind) {
    case Kind::kF: return "f(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::kG:
      return "g(" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
    case Kind::kPictureLifting: return "h(" + std::to_string(k) + ")";
    case Kind::kCustom: break;
  }
  return "custom";
}

int BipartiteComponents(const HostGraph& host, ElementSet f) {
  const int n = host.num_vertices();
  // Union-find with parity: parity[v] is the colour of v relative to its parent.
  std::vector<int> parent(n), parity(n, 0);
  std::vector<bool> odd(n, false);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    int p = 0;
    int root = v;
    while (parent[root] != root) {
      p ^= parity[root];
      root = parent[root];
    }
    // Path compression keeping parities.
    int cur = v, cur_p = p;
    while (parent[cur] != cur) {
      const int next = parent[cur];
      const int next_p = cur_p ^ parity[cur];
      parent[cur] = root;
      parity[cur] = cur_p;
      cur = next;
      cur_p = next_p;
    }
    return std::pair<int, int>(root, p);
  };
  for (int e : f) {
    const auto [ru, pu] = find(host.edge(e).u);
    const auto [rv, pv] = find(host.edge(e).v);
    if (ru == rv) {
      if (pu == pv) odd[ru] = true;
      continue;
    }
    parent[rv] = ru;
    parity[rv] = pu ^ pv ^ 1;
    odd[ru] = odd[ru] || odd[rv];
  }
  int count = 0;
  for (int v : host.VerticesOf(f)) {
    if (find(v).first == v && !odd[v]) ++count;
  }
  return count;
}

int EvalFunction(const CountFunction& f, const HostGraph& host, ElementSet set) {
  if (set.empty()) return 0;
  switch (f.kind) {
    case CountFunction::Kind::kF:
      return f.a * host.VerticesOf(set).size() - f.b;
    case CountFunction::Kind::kG:
      return f.a * host.VerticesOf(set).size() -
             f.b * BipartiteComponents(host, set) - f.c;
    case CountFunction::Kind::kPictureLifting: {
      const ElementSet v = host.VerticesOf(set);
      const ElementSet left = v & ElementSet::Full(host.left_size());
      return left.size() + f.k * (v - left).size() - f.k;
    }
    case CountFunction::Kind::kCustom:
      return f.custom(set);
  }
  return 0;
}

void ValidateCountFunction(const CountFunction& f, const HostGraph& host) {
  if (f.kind == CountFunction::Kind::kPictureLifting &&
      host.kind() != HostGraph::Kind::kBipartite) {
    throw Error(ErrorKind::kInvalidArgument, "h needs a bipartite host");
  }
  if (f.kind != CountFunction::Kind::kCustom || host.num_edges() > 14) return;
  const ElementSet all = host.AllEdges();
  const int n = host.num_edges();
  std::vector<int> value(size_t{1} << n);
  for (uint64_t s = 1; s < value.size(); ++s) value[s] = f.custom(ElementSet(s));
  for (uint64_t s = 1; s < value.size(); ++s) {
    const ElementSet a(s);
    for (int x : all - a) {
      const int ax = value[a.With(x).bits()];
      if (ax < value[s]) {
        throw Error(ErrorKind::kInvalidArgument,
                    "custom function decreases at " + a.ToString());
      }
      for (int y : all - a) {
        if (y <= x) continue;
        const int ay = value[a.With(y).bits()];
        const int axy = value[a.With(x).With(y).bits()];
        if (ax + ay < axy + value[s]) {
          throw Error(ErrorKind::kInvalidArgument,
                      "custom function not submodular at " + a.ToString());
        }
      }
    }
  }
}

namespace {

constexpr int kMaxScan = 22;

bool UsesVertexScan(const CountFunction& f) {
  return f.kind == CountFunction::Kind::kF ||
         f.kind == CountFunction::Kind::kPictureLifting;
}

// Vertex-determined functions: the worst subset on a vertex set S is the
// set of edges of `set` induced by S. Only vertex sets containing `must`
// are scanned.
InducedIndependence VertexScan(const CountFunction& f, const HostGraph& host,
                               ElementSet set, ElementSet must) {
  const ElementSet vertices = host.VerticesOf(set);
  if (vertices.size() - must.size() > kMaxScan) {
    throw Error(ErrorKind::kBudgetExceeded, "vertex scan too large");
  }
  InducedIndependence out;
  ForEachSubset(vertices - must, [&](ElementSet extra) {
    if (!out.independent) return;
    const ElementSet induced = host.InducedEdges(extra | must) & set;
    if (induced.empty()) return;
    if (induced.size() > EvalFunction(f, host, induced)) {
      out.independent = false;
      out.violating = induced;
    }
  });
  return out;
}

// Edge-subset scan over the subsets of `set` that contain `must`.
InducedIndependence EdgeScan(const CountFunction& f, const HostGraph& host,
                             ElementSet set, ElementSet must) {
  if ((set - must).size() > kMaxScan) {
    throw Error(ErrorKind::kBudgetExceeded, "edge subset scan too large");
  }
  InducedIndependence out;
  ForEachSubset(set - must, [&](ElementSet extra) {
    if (!out.independent) return;
    const ElementSet sub = extra | must;
    if (sub.empty()) return;
    if (sub.size() > EvalFunction(f, host, sub)) {
      out.independent = false;
      out.violating = sub;
    }
  });
  return out;
}

}  // namespace

InducedIndependence CheckInducedIndependent(const CountFunction& f,
                                            const HostGraph& host,
                                            ElementSet set) {
  if (UsesVertexScan(f)) return VertexScan(f, host, set, ElementSet());
  return EdgeScan(f, host, set, ElementSet());
}

namespace {

// Independence of i + e given that i is independent: only sets through e
// can be newly violated.
bool CanExtend(const CountFunction& f, const HostGraph& host, ElementSet i,
               int e) {
  const ElementSet set = i.With(e);
  if (UsesVertexScan(f)) {
    const Edge& ed = host.edge(e);
    return VertexScan(f, host, set,
                      ElementSet::Singleton(ed.u).With(ed.v)).independent;
  }
  return EdgeScan(f, host, set, ElementSet::Singleton(e)).independent;
}

}  // namespace

int InducedRank(const CountFunction& f, const HostGraph& host, ElementSet set) {
  ElementSet basis;
  for (int e : set) {
    if (CanExtend(f, host, basis, e)) basis = basis.With(e);
  }
  return basis.size();
}

int InducedRankBrute(const CountFunction& f, const HostGraph& host,
                     ElementSet set) {
  if (set.size() > 10) {
    throw Error(ErrorKind::kBudgetExceeded, "partition oracle needs |F| <= 10");
  }
  const std::vector<int> ids = set.ids();
  const int n = static_cast<int>(ids.size());
  auto to_global = [&](uint64_t local) {
    uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
      if ((local >> i) & 1U) bits |= uint64_t{1} << ids[i];
    }
    return ElementSet(bits);
  };
  const uint64_t count = uint64_t{1} << n;
  std::vector<int> value(count);
  for (uint64_t s = 1; s < count; ++s) value[s] = EvalFunction(f, host, to_global(s));
  // best[s] = min over partitions of s into nonempty parts of Σ f(part).
  std::vector<int> best(count, std::numeric_limits<int>::max());
  best[0] = 0;
  for (uint64_t s = 1; s < count; ++s) {
    const uint64_t low = s & (~s + 1);
    const uint64_t rest = s ^ low;
    // Parts containing the lowest element of s.
    uint64_t sub = rest;
    while (true) {
      const uint64_t part = sub | low;
      best[s] = std::min(best[s], value[part] + best[s ^ part]);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  int answer = std::numeric_limits<int>::max();
  for (uint64_t f0 = 0; f0 < count; ++f0) {
    answer = std::min(answer, std::popcount(f0) + best[(count - 1) ^ f0]);
  }
  return answer;
}

int PebbleGameRank(int a, int b, const HostGraph& host, ElementSet set) {
  if (a < 1 || b < 0 || b > 2 * a - 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "pebble game needs 0 <= b <= 2a-1");
  }
  const int n = host.num_vertices();
  std::vector<int> pebbles(n, a);
  // out[v] holds heads of edges covered by a pebble on v.
  std::vector<std::vector<int>> out(n);
  std::vector<int> from(n);
  std::vector<bool> seen(n);

  // Moves a free pebble to x from a reachable vertex other than x and y.
  auto gather = [&](int x, int y) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<int> stack = {x};
    seen[x] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : out[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        from[w] = v;
        if (w != y && pebbles[w] > 0) {
          // Reverse the path x -> ... -> w.
          --pebbles[w];
          ++pebbles[x];
          for (int cur = w; cur != x;) {
            const int prev = from[cur];
            auto& edges = out[prev];
            edges.erase(std::find(edges.begin(), edges.end(), cur));
            out[cur].push_back(prev);
            cur = prev;
          }
          return true;
        }
        stack.push_back(w);
      }
    }
    return false;
  };

  int rank = 0;
  for (int e : set) {
    const int u = host.edge(e).u;
    const int v = host.edge(e).v;
    while (pebbles[u] + pebbles[v] < b + 1) {
      if (pebbles[u] < a && gather(u, v)) continue;
      if (pebbles[v] < a && gather(v, u)) continue;
      break;
    }
    if (pebbles[u] + pebbles[v] < b + 1) continue;
    if (pebbles[u] > 0) {
      --pebbles[u];
      out[u].push_back(v);
    } else {
      --pebbles[v];
      out[v].push_back(u);
    }
    ++rank;
  }
  return rank;
}

bool InducedCircuitCheck(const CountFunction& f, const HostGraph& host,
                         ElementSet set) {
  if (set.empty() || set.size() != EvalFunction(f, host, set) + 1) return false;
  for (int e : set) {
    if (!CheckInducedIndependent(f, host, set.Without(e)).independent) return false;
  }
  return true;
}

bool InducedFlatCheck(const CountFunction& f, const HostGraph& host,
                      ElementSet set) {
  const int base = EvalFunction(f, host, set);
  for (int e : host.AllEdges() - set) {
    if (EvalFunction(f, host, set.With(e)) != base + 1) return false;
  }
  return true;
}

Matroid InducedMatroid(const CountFunction& f, const HostGraph& host) {
  ValidateCountFunction(f, host);
  return Matroid::FromIndependence(
      host.num_edges(),
      [f, host](ElementSet s) {
        return CheckInducedIndependent(f, host, s).independent;
      },
      [f, host](ElementSet i, int e) { return CanExtend(f, host, i, e); });
}

}  // namespace xmatroid
