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

#include "xmatroid/checks.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "xmatroid/errors.h"

namespace xmatroid {

namespace {

CheckReport Report(const std::string& property) {
  CheckReport r;
  r.property = property;
  return r;
}

bool Exhaustive(const CheckOptions& options, int ground, int auto_limit) {
  switch (options.mode) {
    case CheckOptions::Mode::kExhaustive:
      if (ground > 15) {
        throw Error(ErrorKind::kInvalidArgument, "exhaustive mode needs at most 15 elements");
      }
      return true;
    case CheckOptions::Mode::kSampled:
      return false;
    case CheckOptions::Mode::kAuto:
      return ground <= auto_limit;
  }
  return false;
}

void RequireSameGround(const Matroid& m, const HostGraph& host) {
  if (m.ground_size() != host.num_edges()) {
    throw Error(ErrorKind::kGroundMismatch,
                "matroid has " + std::to_string(m.ground_size()) + " elements, host has " +
                    std::to_string(host.num_edges()) + " edges");
  }
}

std::string Vertices(const std::vector<int>& vs) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << "}";
  return out.str();
}

std::vector<int> NeighboursIn(const HostGraph& host, ElementSet f, int v) {
  std::vector<int> out;
  for (int e : f & host.EdgesAt(v)) {
    out.push_back(host.edge(e).u == v ? host.edge(e).v : host.edge(e).u);
  }
  return out;
}

// A random independent set avoiding the edges at `avoid`, grown greedily
// from a shuffled order up to a random target size.
ElementSet RandomIndependent(const Matroid& m, const HostGraph& host, int avoid,
                             std::mt19937_64& gen) {
  std::vector<int> order;
  for (int e = 0; e < host.num_edges(); ++e) {
    if (avoid < 0 || !host.EdgesAt(avoid).contains(e)) order.push_back(e);
  }
  std::shuffle(order.begin(), order.end(), gen);
  const int target = std::uniform_int_distribution<int>(0, static_cast<int>(order.size()))(gen);
  ElementSet f;
  for (int e : order) {
    if (f.size() >= target) break;
    if (m.CanAdd(f, e)) f = f.With(e);
  }
  return f;
}

void Fail(CheckReport& r, ElementSet witness, std::vector<int> operation,
          std::optional<ElementSet> result, std::string detail) {
  r.verdict = Verdict::kFail;
  r.witness = witness;
  r.operation = std::move(operation);
  r.result = result;
  r.detail = std::move(detail);
}

// Runs fn on every diamond splitting of independent f; fn returns false to
// stop. Returns false when stopped.
template <typename Fn>
bool ForEachDiamond(const HostGraph& host, ElementSet f, Fn fn) {
  const ElementSet used = host.VerticesOf(f);
  for (int v1 : used) {
    const std::vector<int> nbrs = NeighboursIn(host, f, v1);
    const int d = static_cast<int>(nbrs.size());
    if (d < 2) continue;
    for (int v0 = 0; v0 < host.num_vertices(); ++v0) {
      if (used.contains(v0)) continue;
      for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
          std::vector<int> rest;
          for (int i = 0; i < d; ++i) {
            if (i != a && i != b) rest.push_back(nbrs[i]);
          }
          for (uint64_t mask = 0; mask < (uint64_t{1} << rest.size()); ++mask) {
            std::vector<int> u0;
            for (size_t i = 0; i < rest.size(); ++i) {
              if ((mask >> i) & 1) u0.push_back(rest[i]);
            }
            const std::vector<int> star = {nbrs[a], nbrs[b]};
            const auto g = DiamondSplit(host, f, v1, v0, u0, star);
            if (g && !fn(v1, v0, u0, star, *g)) return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<int> DiamondOperation(int v1, int v0, const std::vector<int>& u0,
                                  const std::vector<int>& star) {
  std::vector<int> op = {v1, v0, static_cast<int>(u0.size())};
  op.insert(op.end(), u0.begin(), u0.end());
  op.insert(op.end(), star.begin(), star.end());
  return op;
}

std::vector<std::pair<int, int>> Transpositions(const HostGraph& host) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < host.num_vertices(); ++a) {
    for (int b = a + 1; b < host.num_vertices(); ++b) {
      if (host.kind() == HostGraph::Kind::kBipartite && host.IsLeft(a) != host.IsLeft(b)) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive-sampled";
  }
  return "?";
}

const char* CoverageName(Coverage c) {
  return c == Coverage::kExhaustive ? "exhaustive" : "sampled";
}

CheckReport IsXMatroid(const Matroid& m, const CopyFamily& family) {
  CheckReport r = Report("isXMatroid");
  for (ElementSet x : family.members) {
    ++r.instances;
    if (m.IsCircuit(x)) continue;
    Fail(r, x, {}, {},
         m.IsIndependent(x) ? "member is independent" : "member is dependent but not minimal");
    break;
  }
  return r;
}

CheckReport IsXCyclic(const Matroid& m, const CopyFamily& family) {
  CheckReport r = Report("isXCyclic");
  for (ElementSet x : family.members) {
    for (int e : x) {
      ++r.instances;
      // e lies in a circuit inside x iff e is spanned by x - e.
      if (m.Rank(x.Without(e)) == m.Rank(x)) continue;
      Fail(r, x, {e}, {}, "element " + std::to_string(e) + " is a coloop of the member");
      return r;
    }
  }
  return r;
}

CheckReport HasXCovering(const Matroid& m, const CopyFamily& family, int64_t max_flats) {
  CheckReport r = Report("hasXCovering");
  for (ElementSet flat : CyclicFlats(m, max_flats)) {
    ++r.instances;
    ElementSet covered;
    for (ElementSet x : family.members) {
      if (x.IsSubsetOf(flat)) covered |= x;
    }
    if (covered == flat) continue;
    Fail(r, flat, {}, covered,
         "cyclic flat " + flat.ToString() + " has member union " + covered.ToString());
    break;
  }
  return r;
}

std::optional<ElementSet> ZeroExtend(const HostGraph& host, ElementSet f, int v0, int v1,
                                     int v2) {
  if (v1 == v2 || v0 == v1 || v0 == v2) return std::nullopt;
  if (host.VerticesOf(f).contains(v0)) return std::nullopt;
  const int a = host.EdgeId(v0, v1), b = host.EdgeId(v0, v2);
  if (a < 0 || b < 0) return std::nullopt;
  return f.With(a).With(b);
}

std::optional<ElementSet> DiamondSplit(const HostGraph& host, ElementSet f, int v1, int v0,
                                       const std::vector<int>& u0,
                                       const std::vector<int>& u_star) {
  if (u_star.size() != 2 || u_star[0] == u_star[1] || v0 == v1) return std::nullopt;
  if (host.VerticesOf(f).contains(v0)) return std::nullopt;
  ElementSet seen;
  for (const auto* group : {&u0, &u_star}) {
    for (int u : *group) {
      const int e = host.EdgeId(v1, u);
      if (e < 0 || !f.contains(e) || seen.contains(u)) return std::nullopt;
      seen = seen.With(u);
    }
  }
  ElementSet g = f;
  for (int u : u0) g = g.Without(host.EdgeId(v1, u));
  for (const auto* group : {&u0, &u_star}) {
    for (int u : *group) {
      const int e = host.EdgeId(v0, u);
      if (e < 0) return std::nullopt;
      g = g.With(e);
    }
  }
  return g;
}

CheckReport ZeroExtensionCheck(const Matroid& m, const HostGraph& host,
                               const CheckOptions& options) {
  RequireSameGround(m, host);
  CheckReport r = Report("zeroExtension");
  r.seed = options.seed;
  const int nv = host.num_vertices();
  auto test = [&](ElementSet f, int v0, int v1, int v2) {
    const auto g = ZeroExtend(host, f, v0, v1, v2);
    if (!g) return true;
    ++r.instances;
    if (m.IsIndependent(*g)) return true;
    Fail(r, f, {v0, v1, v2}, *g,
         "0-extension at new vertex " + std::to_string(v0) + " joined to " +
             std::to_string(v1) + "," + std::to_string(v2) + " is dependent");
    return false;
  };
  if (Exhaustive(options, host.num_edges(), 15)) {
    r.coverage = Coverage::kExhaustive;
    bool go = true;
    ForEachSubset(host.AllEdges(), [&](ElementSet f) {
      if (!go || !m.IsIndependent(f)) return;
      const ElementSet used = host.VerticesOf(f);
      for (int v0 = 0; v0 < nv && go; ++v0) {
        if (used.contains(v0)) continue;
        for (int v1 = 0; v1 < nv && go; ++v1) {
          for (int v2 = v1 + 1; v2 < nv && go; ++v2) go = test(f, v0, v1, v2);
        }
      }
      if (go && r.instances > options.budget) {
        r.verdict = Verdict::kInconclusive;
        r.detail = "instance budget exhausted";
        go = false;
      }
    });
    return r;
  }
  r.coverage = Coverage::kSampled;
  std::mt19937_64 gen(options.seed);
  std::uniform_int_distribution<int> vertex(0, nv - 1);
  for (int64_t attempts = 0; r.instances < options.samples; ++attempts) {
    if (attempts > 100 * options.samples) {
      r.verdict = Verdict::kInconclusive;
      r.detail = "too few applicable instances";
      break;
    }
    const int v0 = vertex(gen), v1 = vertex(gen), v2 = vertex(gen);
    if (!ZeroExtend(host, {}, v0, v1, v2)) continue;
    if (!test(RandomIndependent(m, host, v0, gen), v0, v1, v2)) break;
  }
  return r;
}

CheckReport DiamondSplittingCheck(const Matroid& m, const HostGraph& host,
                                  const CheckOptions& options) {
  RequireSameGround(m, host);
  CheckReport r = Report("diamondSplitting");
  r.seed = options.seed;
  auto test = [&](ElementSet f, int v1, int v0, const std::vector<int>& u0,
                  const std::vector<int>& star, ElementSet g) {
    ++r.instances;
    if (m.IsIndependent(g)) return true;
    Fail(r, f, DiamondOperation(v1, v0, u0, star), g,
         "splitting " + std::to_string(v1) + " into " + std::to_string(v0) + " with U_0 = " +
             Vertices(u0) + ", U* = " + Vertices(star) + " is dependent");
    return false;
  };
  if (Exhaustive(options, host.num_edges(), 10)) {
    r.coverage = Coverage::kExhaustive;
    bool go = true;
    ForEachSubset(host.AllEdges(), [&](ElementSet f) {
      if (!go || !m.IsIndependent(f)) return;
      go = ForEachDiamond(host, f, [&](int v1, int v0, const auto& u0, const auto& star,
                                       ElementSet g) { return test(f, v1, v0, u0, star, g); });
      if (go && r.instances > options.budget) {
        r.verdict = Verdict::kInconclusive;
        r.detail = "instance budget exhausted";
        go = false;
      }
    });
    return r;
  }
  r.coverage = Coverage::kSampled;
  std::mt19937_64 gen(options.seed);
  std::uniform_int_distribution<int> vertex(0, host.num_vertices() - 1);
  for (int64_t attempts = 0; r.instances < options.samples; ++attempts) {
    if (attempts > 100 * options.samples) {
      r.verdict = Verdict::kInconclusive;
      r.detail = "too few applicable instances";
      break;
    }
    const int v0 = vertex(gen);
    const ElementSet f = RandomIndependent(m, host, v0, gen);
    std::vector<int> candidates;
    for (int v : host.VerticesOf(f)) {
      if (NeighboursIn(host, f, v).size() >= 2) candidates.push_back(v);
    }
    if (candidates.empty()) continue;
    const int v1 = candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(gen)];
    std::vector<int> nbrs = NeighboursIn(host, f, v1);
    std::shuffle(nbrs.begin(), nbrs.end(), gen);
    const std::vector<int> star = {nbrs[0], nbrs[1]};
    std::vector<int> u0;
    for (size_t i = 2; i < nbrs.size(); ++i) {
      if (gen() & 1) u0.push_back(nbrs[i]);
    }
    std::sort(u0.begin(), u0.end());
    const auto g = DiamondSplit(host, f, v1, v0, u0, star);
    if (!g) continue;
    if (!test(f, v1, v0, u0, star, *g)) break;
  }
  return r;
}

CheckReport RankBoundCheck(const Matroid& m, int s, int delta, int n) {
  if (s < 1 || delta < 0 || n < s - 1) {
    throw Error(ErrorKind::kInvalidArgument, "rank bound needs s >= 1, delta >= 0, n >= s-1");
  }
  CheckReport r = Report("rankBound");
  r.instances = 1;
  const int bound = (delta - 1) * (n - s + 1) + (s - 1) * (s - 2) / 2;
  const int rank = m.rank();
  r.detail = "rank " + std::to_string(rank) + (rank <= bound ? " <= " : " > ") + "bound " +
             std::to_string(bound);
  if (rank > bound) Fail(r, m.ground(), {}, {}, r.detail);
  return r;
}

std::vector<int> MinBasisDegrees(const Matroid& m, const HostGraph& host, ElementSet x) {
  std::vector<int> out(host.num_vertices(), 0);
  for (int v : host.VerticesOf(x)) {
    const ElementSet at_v = x & host.EdgesAt(v);
    ElementSet basis;
    for (int e : x - at_v) {
      if (m.CanAdd(basis, e)) basis = basis.With(e);
    }
    for (int e : at_v) {
      if (m.CanAdd(basis, e)) basis = basis.With(e);
    }
    out[v] = (basis & at_v).size();
  }
  return out;
}

CheckReport DegreeBoundCheck(const Matroid& m, const HostGraph& host, ElementSet x) {
  RequireSameGround(m, host);
  if (x.empty() || !IsConnected(m, x)) {
    throw Error(ErrorKind::kInvalidArgument, x.ToString() + " is not a connected set");
  }
  CheckReport r = Report("degreeBound");
  const ElementSet vertices = host.VerticesOf(x);
  const std::vector<int> mins = MinBasisDegrees(m, host, x);
  int sum = 0;
  std::vector<int> per_vertex;
  for (int v : vertices) {
    sum += mins[v];
    per_vertex.push_back(mins[v]);
  }
  r.instances = vertices.size();
  const int bound = 2 * (m.Rank(x) - 1) - vertices.size();
  r.operation = per_vertex;
  r.detail = "sum of least basis degrees " + std::to_string(sum) + (sum <= bound ? " <= " : " > ") +
             std::to_string(bound);
  if (sum > bound) Fail(r, x, per_vertex, {}, r.detail);
  return r;
}

CheckReport Circuits2ConnectedCheck(const Matroid& m, const HostGraph& host, int max_size) {
  RequireSameGround(m, host);
  CheckReport r = Report("circuits2Connected");
  r.detail = "circuits with at most " + std::to_string(max_size) + " elements";
  ForEachCircuit(m, max_size, [&](ElementSet c) {
    ++r.instances;
    if (IsTwoConnected(host, c)) return true;
    Fail(r, c, {}, {}, "circuit " + c.ToString() + " is not 2-connected");
    return false;
  });
  return r;
}

ElementSet SwapVertices(const HostGraph& host, ElementSet f, int a, int b) {
  auto map = [&](int v) { return v == a ? b : v == b ? a : v; };
  ElementSet out;
  for (int e : f) {
    const int id = host.EdgeId(map(host.edge(e).u), map(host.edge(e).v));
    if (id < 0) {
      throw Error(ErrorKind::kInvalidArgument, "transposition leaves the host edge set");
    }
    out = out.With(id);
  }
  return out;
}

CheckReport SymmetryCheck(const Matroid& m, const HostGraph& host, const CheckOptions& options) {
  RequireSameGround(m, host);
  if (host.kind() == HostGraph::Kind::kEdges) {
    throw Error(ErrorKind::kInvalidArgument, "symmetry needs a complete or bipartite host");
  }
  CheckReport r = Report("symmetry");
  r.seed = options.seed;
  const auto swaps = Transpositions(host);
  auto test = [&](ElementSet f, int a, int b) {
    ++r.instances;
    const ElementSet g = SwapVertices(host, f, a, b);
    if (g == f) return true;
    const int rf = m.Rank(f), rg = m.Rank(g);
    if (rf == rg) return true;
    Fail(r, f, {a, b}, g,
         "swapping " + std::to_string(a) + "," + std::to_string(b) + " changes rank " +
             std::to_string(rf) + " to " + std::to_string(rg));
    return false;
  };
  if (Exhaustive(options, host.num_edges(), 15)) {
    r.coverage = Coverage::kExhaustive;
    for (auto [a, b] : swaps) {
      bool go = true;
      ForEachSubset(host.AllEdges(), [&](ElementSet f) {
        if (go) go = test(f, a, b);
      });
      if (!go) break;
    }
    return r;
  }
  r.coverage = Coverage::kSampled;
  std::mt19937_64 gen(options.seed);
  const int n = host.num_edges();
  for (int64_t i = 0; i < options.samples && !swaps.empty(); ++i) {
    const auto [a, b] = swaps[std::uniform_int_distribution<size_t>(0, swaps.size() - 1)(gen)];
    std::vector<int> order(n);
    for (int e = 0; e < n; ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), gen);
    const int size = std::uniform_int_distribution<int>(0, n)(gen);
    ElementSet f;
    for (int j = 0; j < size; ++j) f = f.With(order[j]);
    if (!test(f, a, b)) break;
  }
  return r;
}

}  // namespace xmatroid
