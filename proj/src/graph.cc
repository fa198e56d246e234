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

#include "xmatroid/graph.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "xmatroid/errors.h"

namespace xmatroid {

namespace {

void CheckVertexCount(int n) {
  if (n < 1 || n > kMaxElements) {
    throw Error(ErrorKind::kInvalidArgument,
                "vertex count must be in [1, 64], got " + std::to_string(n));
  }
}

void CheckEdgeCount(size_t m) {
  if (m == 0 || m > static_cast<size_t>(kMaxElements)) {
    throw Error(ErrorKind::kInvalidArgument,
                "host must have between 1 and 64 edges, got " + std::to_string(m));
  }
}

}  // namespace

HostGraph HostGraph::Complete(int n) {
  CheckVertexCount(n);
  HostGraph g;
  g.kind_ = Kind::kComplete;
  g.num_vertices_ = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges_.push_back({i, j});
  }
  CheckEdgeCount(g.edges_.size());
  g.Index();
  return g;
}

HostGraph HostGraph::Bipartite(int m, int n) {
  CheckVertexCount(m);
  CheckVertexCount(n);
  CheckVertexCount(m + n);
  HostGraph g;
  g.kind_ = Kind::kBipartite;
  g.num_vertices_ = m + n;
  g.left_ = m;
  g.right_ = n;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) g.edges_.push_back({i, m + j});
  }
  CheckEdgeCount(g.edges_.size());
  g.Index();
  return g;
}

HostGraph HostGraph::FromEdges(int num_vertices, std::vector<Edge> edges) {
  CheckVertexCount(num_vertices);
  for (Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= num_vertices ||
        e.v >= num_vertices) {
      throw Error(ErrorKind::kInvalidArgument, "invalid edge");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::kInvalidArgument, "duplicate edge");
  }
  CheckEdgeCount(edges.size());
  HostGraph g;
  g.kind_ = Kind::kEdges;
  g.num_vertices_ = num_vertices;
  g.edges_ = std::move(edges);
  g.Index();
  return g;
}

void HostGraph::Index() {
  id_.assign(num_vertices_ * num_vertices_, -1);
  incident_.assign(num_vertices_, ElementSet());
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    id_[e.u * num_vertices_ + e.v] = i;
    id_[e.v * num_vertices_ + e.u] = i;
    incident_[e.u] = incident_[e.u].With(i);
    incident_[e.v] = incident_[e.v].With(i);
  }
}

int HostGraph::EdgeId(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) return -1;
  return id_[u * num_vertices_ + v];
}

ElementSet HostGraph::VerticesOf(ElementSet f) const {
  ElementSet out;
  for (int e : f) out = out.With(edges_[e].u).With(edges_[e].v);
  return out;
}

ElementSet HostGraph::InducedEdges(ElementSet vertices) const {
  ElementSet out;
  for (int i = 0; i < num_edges(); ++i) {
    if (vertices.contains(edges_[i].u) && vertices.contains(edges_[i].v)) {
      out = out.With(i);
    }
  }
  return out;
}

std::vector<int> HostGraph::Degrees(ElementSet f) const {
  std::vector<int> deg(num_vertices_);
  for (int e : f) {
    ++deg[edges_[e].u];
    ++deg[edges_[e].v];
  }
  return deg;
}

std::string HostGraph::EdgeLabel(int id) const {
  const Edge& e = edges_[id];
  if (kind_ == Kind::kBipartite) {
    return "u" + std::to_string(e.u + 1) + "w" + std::to_string(e.v - left_ + 1);
  }
  return "v" + std::to_string(e.u + 1) + "v" + std::to_string(e.v + 1);
}

std::string HostGraph::Describe() const {
  switch (kind_) {
    case Kind::kComplete: return "K" + std::to_string(num_vertices_);
    case Kind::kBipartite:
      return "K" + std::to_string(left_) + "," + std::to_string(right_);
    case Kind::kEdges: break;
  }
  return "G(" + std::to_string(num_vertices_) + "," +
         std::to_string(num_edges()) + ")";
}

Pattern Pattern::Explicit(int num_vertices, std::vector<Edge> edges) {
  Pattern p;
  p.kind = Kind::kExplicit;
  p.explicit_vertices = num_vertices;
  p.explicit_edges = std::move(edges);
  if (p.explicit_edges.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "pattern needs at least one edge");
  }
  return p;
}

Pattern Pattern::Parse(const std::string& text) {
  auto fail = [&]() -> Pattern {
    throw Error(ErrorKind::kMalformedInput, "unknown pattern '" + text + "'");
  };
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
      fail();
    }
    return std::stoi(s);
  };
  if (text.size() < 2) return fail();
  const size_t k2 = text.find("K2");
  if (text.back() == '2' && k2 != std::string::npos && k2 > 0 &&
      k2 + 2 == text.size()) {
    return Matching(number(text.substr(0, k2)));
  }
  const char head = text[0];
  std::string rest = text.substr(1);
  if (head == 'C') return Cycle(number(rest));
  if (head == 'P') return Path(number(rest));
  if (head == 'S') return Star(number(rest));
  if (head != 'K') return fail();
  if (!rest.empty() && rest.back() == '-') {
    return CompleteMinusEdge(number(rest.substr(0, rest.size() - 1)));
  }
  const size_t comma = rest.find(',');
  if (comma != std::string::npos) {
    return CompleteBipartite(number(rest.substr(0, comma)),
                             number(rest.substr(comma + 1)));
  }
  return Complete(number(rest));
}

int Pattern::NumVertices() const {
  switch (kind) {
    case Kind::kComplete:
    case Kind::kCompleteMinusEdge:
    case Kind::kCycle: return p;
    case Kind::kCompleteBipartite: return p + q;
    case Kind::kPath:
    case Kind::kStar: return p + 1;
    case Kind::kMatching: return 2 * p;
    case Kind::kExplicit: return explicit_vertices;
  }
  return 0;
}

std::vector<Edge> Pattern::Edges() const {
  std::vector<Edge> out;
  switch (kind) {
    case Kind::kComplete:
    case Kind::kCompleteMinusEdge:
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) out.push_back({i, j});
      }
      if (kind == Kind::kCompleteMinusEdge) out.erase(out.begin());
      break;
    case Kind::kCompleteBipartite:
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) out.push_back({i, p + j});
      }
      break;
    case Kind::kCycle:
      for (int i = 0; i < p; ++i) out.push_back({i, (i + 1) % p});
      break;
    case Kind::kPath:
      for (int i = 0; i < p; ++i) out.push_back({i, i + 1});
      break;
    case Kind::kStar:
      for (int i = 1; i <= p; ++i) out.push_back({0, i});
      break;
    case Kind::kMatching:
      for (int i = 0; i < p; ++i) out.push_back({2 * i, 2 * i + 1});
      break;
    case Kind::kExplicit:
      out = explicit_edges;
      break;
  }
  return out;
}

int Pattern::NumEdges() const { return static_cast<int>(Edges().size()); }

std::string Pattern::Name() const {
  const std::string sp = std::to_string(p);
  switch (kind) {
    case Kind::kComplete: return "K" + sp;
    case Kind::kCompleteMinusEdge: return "K" + sp + "-";
    case Kind::kCompleteBipartite: return "K" + sp + "," + std::to_string(q);
    case Kind::kCycle: return "C" + sp;
    case Kind::kPath: return "P" + sp;
    case Kind::kStar: return "S" + sp;
    case Kind::kMatching: return sp + "K2";
    case Kind::kExplicit: break;
  }
  return "H(" + std::to_string(explicit_vertices) + "," +
         std::to_string(explicit_edges.size()) + ")";
}

CopyFamily CopyFamily::FromSets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  CopyFamily f;
  f.members = std::move(sets);
  return f;
}

int CopyFamily::UniformSize() const {
  if (members.empty()) return -1;
  const int k = members.front().size();
  for (ElementSet m : members) {
    if (m.size() != k) return -1;
  }
  return k;
}

ElementSet CopyFamily::Support() const {
  ElementSet out;
  for (ElementSet m : members) out |= m;
  return out;
}

bool CopyFamily::Contains(ElementSet s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

namespace {

// Adds the edges between every pair in `vertices` except `skip`; false when
// the host lacks one.
bool AddClique(const HostGraph& host, const std::vector<int>& vertices,
               ElementSet& out, int skip_a = -1, int skip_b = -1) {
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (static_cast<int>(i) == skip_a && static_cast<int>(j) == skip_b) continue;
      const int id = host.EdgeId(vertices[i], vertices[j]);
      if (id < 0) return false;
      out = out.With(id);
    }
  }
  return true;
}

std::vector<ElementSet> CompleteCopies(int t, bool minus_edge,
                                       const HostGraph& host) {
  std::vector<ElementSet> out;
  ForEachKSubset(host.num_vertices(), t, [&](ElementSet vs) {
    const std::vector<int> v = vs.ids();
    if (!minus_edge) {
      ElementSet edges;
      if (AddClique(host, v, edges)) out.push_back(edges);
      return true;
    }
    for (int a = 0; a < t; ++a) {
      for (int b = a + 1; b < t; ++b) {
        ElementSet edges;
        if (AddClique(host, v, edges, a, b)) out.push_back(edges);
      }
    }
    return true;
  });
  return out;
}

bool AddBiclique(const HostGraph& host, ElementSet a, ElementSet b,
                 ElementSet& out) {
  for (int x : a) {
    for (int y : b) {
      const int id = host.EdgeId(x, y);
      if (id < 0) return false;
      out = out.With(id);
    }
  }
  return true;
}

std::vector<ElementSet> BipartiteCopies(int s, int t, const HostGraph& host) {
  std::vector<ElementSet> out;
  const ElementSet all = ElementSet::Full(host.num_vertices());
  ForEachKSubset(host.num_vertices(), s, [&](ElementSet a) {
    ForEachKSubsetOf(all - a, t, [&](ElementSet b) {
      if (s == t && b.min() < a.min()) return true;
      ElementSet edges;
      if (AddBiclique(host, a, b, edges)) out.push_back(edges);
      return true;
    });
    return true;
  });
  return out;
}

// Paths (or closed cycles) as vertex sequences; the first vertex is the
// smallest for cycles and smaller than the last for paths.
std::vector<ElementSet> WalkCopies(int edges, bool cycle, const HostGraph& host) {
  std::vector<ElementSet> out;
  const int nv = host.num_vertices();
  const int length = cycle ? edges : edges + 1;
  std::vector<int> seq;
  ElementSet used_vertices;
  std::function<void(ElementSet)> extend = [&](ElementSet used_edges) {
    if (static_cast<int>(seq.size()) == length) {
      if (cycle) {
        if (seq[1] > seq.back()) return;
        const int id = host.EdgeId(seq.back(), seq.front());
        if (id >= 0) out.push_back(used_edges.With(id));
      } else if (seq.front() < seq.back()) {
        out.push_back(used_edges);
      }
      return;
    }
    const int last = seq.back();
    for (int w = 0; w < nv; ++w) {
      if (used_vertices.contains(w)) continue;
      if (cycle && w < seq.front()) continue;
      const int id = host.EdgeId(last, w);
      if (id < 0) continue;
      seq.push_back(w);
      used_vertices = used_vertices.With(w);
      extend(used_edges.With(id));
      used_vertices = used_vertices.Without(w);
      seq.pop_back();
    }
  };
  for (int start = 0; start < nv; ++start) {
    seq = {start};
    used_vertices = ElementSet::Singleton(start);
    extend(ElementSet());
  }
  return out;
}

std::vector<ElementSet> StarCopies(int k, const HostGraph& host) {
  std::vector<ElementSet> out;
  for (int c = 0; c < host.num_vertices(); ++c) {
    ForEachKSubsetOf(host.EdgesAt(c), k, [&](ElementSet s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

std::vector<ElementSet> MatchingCopies(int k, const HostGraph& host) {
  std::vector<ElementSet> out;
  std::function<void(int, ElementSet, ElementSet)> extend =
      [&](int next, ElementSet chosen, ElementSet covered) {
        if (chosen.size() == k) {
          out.push_back(chosen);
          return;
        }
        for (int e = next; e < host.num_edges(); ++e) {
          const Edge& ed = host.edge(e);
          if (covered.contains(ed.u) || covered.contains(ed.v)) continue;
          extend(e + 1, chosen.With(e), covered.With(ed.u).With(ed.v));
        }
      };
  extend(0, ElementSet(), ElementSet());
  return out;
}

std::vector<ElementSet> GenericCopies(const Pattern& pattern,
                                      const HostGraph& host) {
  const int pv = pattern.NumVertices();
  const std::vector<Edge> pedges = pattern.Edges();
  std::vector<std::vector<int>> adj(pv);
  for (const Edge& e : pedges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Order pattern vertices so that each one after the first of its
  // component is adjacent to an earlier one.
  std::vector<int> order;
  std::vector<bool> seen(pv, false);
  for (int s = 0; s < pv; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int w : adj[order[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> image(pv, -1);
  ElementSet used;
  std::unordered_set<ElementSet, ElementSetHash> found;
  std::function<void(size_t)> place = [&](size_t pos) {
    if (pos == order.size()) {
      ElementSet edges;
      for (const Edge& e : pedges) edges = edges.With(host.EdgeId(image[e.u], image[e.v]));
      found.insert(edges);
      return;
    }
    const int pvtx = order[pos];
    for (int hv = 0; hv < host.num_vertices(); ++hv) {
      if (used.contains(hv)) continue;
      bool ok = true;
      for (int w : adj[pvtx]) {
        if (image[w] >= 0 && host.EdgeId(hv, image[w]) < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[pvtx] = hv;
      used = used.With(hv);
      place(pos + 1);
      used = used.Without(hv);
      image[pvtx] = -1;
    }
  };
  place(0);
  return std::vector<ElementSet>(found.begin(), found.end());
}

void CheckFits(const Pattern& pattern, const HostGraph& host) {
  if (pattern.NumEdges() < 1) {
    throw Error(ErrorKind::kInvalidArgument, "pattern needs at least one edge");
  }
  if (pattern.NumVertices() > host.num_vertices()) {
    throw Error(ErrorKind::kPatternTooLarge,
                pattern.Name() + " does not fit in " + host.Describe());
  }
}

}  // namespace

CopyFamily EnumerateCopiesGeneric(const Pattern& pattern, const HostGraph& host) {
  CheckFits(pattern, host);
  if (pattern.NumVertices() > 7) {
    throw Error(ErrorKind::kPatternTooLarge,
                "generic enumeration supports at most 7 pattern vertices");
  }
  CopyFamily family = CopyFamily::FromSets(GenericCopies(pattern, host));
  family.patterns = {pattern};
  family.pattern_of.assign(family.members.size(), 0);
  return family;
}

CopyFamily EnumerateCopies(const Pattern& pattern, const HostGraph& host) {
  CheckFits(pattern, host);
  std::vector<ElementSet> sets;
  switch (pattern.kind) {
    case Pattern::Kind::kComplete:
      sets = CompleteCopies(pattern.p, false, host);
      break;
    case Pattern::Kind::kCompleteMinusEdge:
      if (pattern.p < 3) {
        throw Error(ErrorKind::kInvalidArgument, "K_t minus an edge needs t >= 3");
      }
      sets = CompleteCopies(pattern.p, true, host);
      break;
    case Pattern::Kind::kCompleteBipartite:
      sets = BipartiteCopies(pattern.p, pattern.q, host);
      break;
    case Pattern::Kind::kCycle:
      if (pattern.p < 3) throw Error(ErrorKind::kInvalidArgument, "C_k needs k >= 3");
      sets = WalkCopies(pattern.p, true, host);
      break;
    case Pattern::Kind::kPath:
      sets = WalkCopies(pattern.p, false, host);
      break;
    case Pattern::Kind::kStar:
      sets = StarCopies(pattern.p, host);
      break;
    case Pattern::Kind::kMatching:
      sets = MatchingCopies(pattern.p, host);
      break;
    case Pattern::Kind::kExplicit:
      return EnumerateCopiesGeneric(pattern, host);
  }
  CopyFamily family = CopyFamily::FromSets(std::move(sets));
  family.patterns = {pattern};
  family.pattern_of.assign(family.members.size(), 0);
  return family;
}

CopyFamily EnumerateCopies(const std::vector<Pattern>& patterns,
                           const HostGraph& host) {
  // A pattern too large for the host contributes no copies; the family is
  // rejected only when no pattern fits.
  std::map<ElementSet, int> tagged;
  int fitting = 0;
  std::optional<Error> last;
  for (size_t i = 0; i < patterns.size(); ++i) {
    CopyFamily part;
    try {
      part = EnumerateCopies(patterns[i], host);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kPatternTooLarge) throw;
      last = e;
      continue;
    }
    ++fitting;
    for (ElementSet m : part.members) tagged.emplace(m, static_cast<int>(i));
  }
  if (fitting == 0 && last) throw *last;
  CopyFamily family;
  family.patterns = patterns;
  for (const auto& [m, tag] : tagged) {
    family.members.push_back(m);
    family.pattern_of.push_back(tag);
  }
  return family;
}

CopyFamily RootedCopies(int s, int t, const HostGraph& host) {
  if (host.kind() != HostGraph::Kind::kBipartite) {
    throw Error(ErrorKind::kInvalidArgument, "rooted copies need a bipartite host");
  }
  if (s < 1 || t < 1 || s > host.left_size() || t > host.right_size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "rooted K_{" + std::to_string(s) + "," + std::to_string(t) +
                    "} does not fit in " + host.Describe());
  }
  const int m = host.left_size();
  std::vector<ElementSet> sets;
  ForEachKSubset(m, s, [&](ElementSet a) {
    ForEachKSubset(host.right_size(), t, [&](ElementSet b_local) {
      ElementSet edges;
      for (int u : a) {
        for (int w : b_local) edges = edges.With(host.EdgeId(u, m + w));
      }
      sets.push_back(edges);
      return true;
    });
    return true;
  });
  CopyFamily family = CopyFamily::FromSets(std::move(sets));
  family.patterns = {Pattern::CompleteBipartite(s, t)};
  family.pattern_of.assign(family.members.size(), 0);
  return family;
}

namespace {

// Connectivity of (V(f) - removed, f - edges at removed).
bool ConnectedWithout(const HostGraph& host, ElementSet f, int removed) {
  ElementSet vertices = host.VerticesOf(f);
  if (removed >= 0) {
    vertices = vertices.Without(removed);
    f = f - host.EdgesAt(removed);
  }
  if (vertices.empty()) return true;
  ElementSet reached = ElementSet::Singleton(*vertices.begin());
  for (bool grew = true; grew;) {
    grew = false;
    for (int e : f) {
      const Edge& edge = host.edge(e);
      if (reached.contains(edge.u) != reached.contains(edge.v)) {
        reached = reached.With(edge.u).With(edge.v);
        grew = true;
      }
    }
  }
  return reached == vertices;
}

int RequireUniform(const CopyFamily& family) {
  if (family.empty()) {
    throw Error(ErrorKind::kAmbiguousUniformSize, "empty family has no size");
  }
  const int k = family.UniformSize();
  if (k < 0) throw Error(ErrorKind::kNotUniform, "family members differ in size");
  return k;
}

using Buckets = std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash>;

}  // namespace

UnionStability CheckUnionStable(const CopyFamily& family) {
  RequireUniform(family);
  // Pairs with a union of size k+1 share a (k-1)-subset; bucket by it.
  std::map<ElementSet, std::vector<ElementSet>> buckets;
  for (ElementSet m : family.members) {
    for (int e : m) buckets[m.Without(e)].push_back(m);
  }
  for (const auto& [shared, group] : buckets) {
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        const ElementSet u = group[i] | group[j];
        for (int e : shared) {
          if (!family.Contains(u.Without(e))) {
            return {false, group[i], group[j], e};
          }
        }
      }
    }
  }
  return {};
}

bool IsUnionStable(const CopyFamily& family) {
  return CheckUnionStable(family).stable;
}

CopyFamily UnionStableClosure(const CopyFamily& family, int64_t max_members) {
  RequireUniform(family);
  std::unordered_set<ElementSet, ElementSetHash> in(family.members.begin(),
                                                    family.members.end());
  Buckets buckets;
  std::vector<ElementSet> work(family.members.begin(), family.members.end());
  while (!work.empty()) {
    const ElementSet y = work.back();
    work.pop_back();
    for (int drop : y) {
      const ElementSet shared = y.Without(drop);
      std::vector<ElementSet>& group = buckets[shared];
      for (ElementSet x : group) {
        const ElementSet u = x | y;
        for (int e : shared) {
          const ElementSet z = u.Without(e);
          if (in.insert(z).second) {
            if (static_cast<int64_t>(in.size()) > max_members) {
              throw Error(ErrorKind::kBudgetExceeded, "union-stable closure too large");
            }
            work.push_back(z);
          }
        }
      }
      group.push_back(y);
    }
  }
  CopyFamily out = CopyFamily::FromSets(std::vector<ElementSet>(in.begin(), in.end()));
  out.patterns = family.patterns;
  if (!family.pattern_of.empty()) {
    // Added members carry no pattern tag.
    out.pattern_of.assign(out.members.size(), -1);
    for (size_t i = 0; i < family.members.size(); ++i) {
      auto it = std::lower_bound(out.members.begin(), out.members.end(),
                                 family.members[i]);
      out.pattern_of[it - out.members.begin()] = family.pattern_of[i];
    }
  }
  return out;
}

bool UniformRecipeIndependent(const CopyFamily& family, int k, ElementSet f) {
  return f.size() <= k && !family.Contains(f);
}

Matroid BuildUniformMatroid(const CopyFamily& family, int ground_size) {
  const int k = RequireUniform(family);
  if (!family.Support().IsSubsetOf(ElementSet::Full(ground_size)) ||
      k > ground_size) {
    throw Error(ErrorKind::kInvalidArgument, "family exceeds the ground set");
  }
  const UnionStability st = CheckUnionStable(family);
  if (!st.stable) {
    throw Error(ErrorKind::kNotUnionStable,
                "U_X is a matroid if and only if X is union-stable; members " +
                    st.first.ToString() + " and " + st.second.ToString() +
                    " with shared element " + std::to_string(st.shared_element) +
                    " violate it");
  }
  double all_k_sets = 1;
  for (int i = 1; i <= k; ++i) all_k_sets = all_k_sets * (ground_size - k + i) / i;
  const Matroid m =
      static_cast<double>(family.size()) == all_k_sets
          ? Matroid::Uniform(ground_size, k - 1)
          : Matroid::Explicit(ground_size, k, family.members);
  if (ground_size <= 20) {
    const AxiomReport report = VerifyMatroidAxioms(m);
    if (!report.ok) {
      throw Error(ErrorKind::kAxiomViolation,
                  "uniform matroid failed axiom check: " + report.violation);
    }
  }
  return m;
}

SupportRestriction RestrictToSupport(const HostGraph& host,
                                     const CopyFamily& family) {
  const ElementSet support = family.Support();
  SupportRestriction out;
  std::vector<int> new_id(host.num_edges(), -1);
  std::vector<Edge> edges;
  for (int e : support) {
    new_id[e] = static_cast<int>(edges.size());
    out.old_id.push_back(e);
    edges.push_back(host.edge(e));
  }
  out.host = HostGraph::FromEdges(host.num_vertices(), edges);
  out.family = family;
  for (ElementSet& m : out.family.members) {
    ElementSet mapped;
    for (int e : m) mapped = mapped.With(new_id[e]);
    m = mapped;
  }
  return out;
}

bool IsConnectedGraph(const HostGraph& host, ElementSet f) {
  return ConnectedWithout(host, f, -1);
}

bool IsTwoConnected(const HostGraph& host, ElementSet f) {
  const ElementSet vertices = host.VerticesOf(f);
  if (vertices.size() < 3 || !ConnectedWithout(host, f, -1)) return false;
  for (int v : vertices) {
    if (!ConnectedWithout(host, f, v)) return false;
  }
  return true;
}

}  // namespace xmatroid
