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

#ifndef XMATROID_GRAPH_H_
#define XMATROID_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xmatroid/element_set.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple graph whose edges are the ground elements of a matroid.
///
/// Edge ids follow the canonical indexing: complete-graph edges are sorted
/// lexicographically by (i, j) with i < j; bipartite K(U;W) has
/// U = {0..m-1}, W = {m..m+n-1} and edge u_i w_j gets id i*n + j; explicit
/// edge lists are normalized to i < j and sorted.
class HostGraph {
 public:
  enum class Kind { kComplete, kBipartite, kEdges };

  static HostGraph Complete(int n);
  static HostGraph Bipartite(int m, int n);
  static HostGraph FromEdges(int num_vertices, std::vector<Edge> edges);

  Kind kind() const { return kind_; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// Side sizes of a bipartite host; 0 otherwise.
  int left_size() const { return left_; }
  int right_size() const { return right_; }
  bool IsLeft(int vertex) const { return vertex < left_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  ElementSet AllEdges() const { return ElementSet::Full(num_edges()); }
  /// -1 when uv is not an edge.
  int EdgeId(int u, int v) const;
  /// Vertices touched by f, as a vertex bitset.
  ElementSet VerticesOf(ElementSet f) const;
  /// Edges with both endpoints in the vertex set.
  ElementSet InducedEdges(ElementSet vertices) const;
  ElementSet EdgesAt(int vertex) const { return incident_[vertex]; }
  std::vector<int> Degrees(ElementSet f) const;
  /// "v1v2" style label; bipartite hosts use "u1w2". One-based.
  std::string EdgeLabel(int id) const;
  std::string Describe() const;

 private:
  void Index();

  Kind kind_ = Kind::kEdges;
  int num_vertices_ = 0;
  int left_ = 0;
  int right_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> id_;  // num_vertices^2 table
  std::vector<ElementSet> incident_;
};

/// A pattern graph H. Edge counts: K_t has C(t,2), C_k and P_k have k
/// edges (P_k is the path with k edges), Star(k) is K_{1,k} and
/// Matching(k) is k disjoint edges.
struct Pattern {
  enum class Kind {
    kComplete,
    kCompleteMinusEdge,
    kCompleteBipartite,
    kCycle,
    kPath,
    kStar,
    kMatching,
    kExplicit,
  };

  Kind kind = Kind::kExplicit;
  int p = 0;
  int q = 0;
  int explicit_vertices = 0;
  std::vector<Edge> explicit_edges;

  static Pattern Complete(int t) { return Make(Kind::kComplete, t); }
  static Pattern CompleteMinusEdge(int t) { return Make(Kind::kCompleteMinusEdge, t); }
  static Pattern CompleteBipartite(int s, int t) {
    return Make(Kind::kCompleteBipartite, s, t);
  }
  static Pattern Cycle(int k) { return Make(Kind::kCycle, k); }
  static Pattern Path(int k) { return Make(Kind::kPath, k); }
  static Pattern Star(int k) { return Make(Kind::kStar, k); }
  static Pattern Matching(int k) { return Make(Kind::kMatching, k); }
  static Pattern Explicit(int num_vertices, std::vector<Edge> edges);
  /// Accepts "K4", "K4-", "K2,3", "C5", "P3", "S3", "3K2".
  static Pattern Parse(const std::string& text);

  int NumVertices() const;
  int NumEdges() const;
  /// One labeled instance on vertices 0..NumVertices()-1.
  std::vector<Edge> Edges() const;
  std::string Name() const;

 private:
  static Pattern Make(Kind kind, int p, int q = 0) {
    Pattern out;
    out.kind = kind;
    out.p = p;
    out.q = q;
    return out;
  }
};

/// A family of edge sets, typically all copies of some patterns in a host.
struct CopyFamily {
  /// Distinct, in canonical order.
  std::vector<ElementSet> members;
  /// Index into `patterns` of the pattern that produced each member;
  /// empty for abstract families.
  std::vector<int> pattern_of;
  std::vector<Pattern> patterns;

  static CopyFamily FromSets(std::vector<ElementSet> sets);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  /// Common member size, or -1 for mixed sizes or an empty family.
  int UniformSize() const;
  ElementSet Support() const;
  bool Contains(ElementSet s) const;
};

/// Every copy of the pattern in the host exactly once. Throws
/// kPatternTooLarge when the pattern has more vertices than the host, or
/// is an explicit pattern with more than 7 vertices.
CopyFamily EnumerateCopies(const Pattern& pattern, const HostGraph& host);
/// Union of the copies of several patterns; members keep the tag of the
/// first pattern that produced them.
CopyFamily EnumerateCopies(const std::vector<Pattern>& patterns,
                           const HostGraph& host);
/// Backtracking enumeration over vertex embeddings; works for any pattern
/// with at most 7 vertices.
CopyFamily EnumerateCopiesGeneric(const Pattern& pattern, const HostGraph& host);

/// Copies of K_{s,t} with the s-side in U and the t-side in W.
CopyFamily RootedCopies(int s, int t, const HostGraph& host);

/// Whether the graph (V(f), f) is connected in the host.
bool IsConnectedGraph(const HostGraph& host, ElementSet f);
/// At least three vertices and no cut vertex.
bool IsTwoConnected(const HostGraph& host, ElementSet f);

struct UnionStability {
  bool stable = true;
  ElementSet first;
  ElementSet second;
  int shared_element = -1;
};

/// Throws kNotUniform on a mixed family.
UnionStability CheckUnionStable(const CopyFamily& family);
bool IsUnionStable(const CopyFamily& family);

/// Least union-stable k-uniform superset. Throws kBudgetExceeded when the
/// closure outgrows max_members.
CopyFamily UnionStableClosure(const CopyFamily& family,
                              int64_t max_members = 1 << 22);

/// U_X on {0..ground_size-1}: independent sets are the sets of size <= k
/// that are not members. Throws kAmbiguousUniformSize on an empty family,
/// kNotUniform on mixed sizes and kNotUnionStable otherwise when X is not
/// union-stable (U_X is a matroid exactly when X is union-stable).
Matroid BuildUniformMatroid(const CopyFamily& family, int ground_size);
/// Independence of U_X without any stability check; for testing the
/// equivalence between union-stability and the matroid axioms.
bool UniformRecipeIndependent(const CopyFamily& family, int k, ElementSet f);

/// Host and family with every edge outside the support dropped and the
/// remaining edges renumbered in order.
struct SupportRestriction {
  HostGraph host;
  CopyFamily family;
  /// Old edge id of each new edge id.
  std::vector<int> old_id;
};
SupportRestriction RestrictToSupport(const HostGraph& host,
                                     const CopyFamily& family);

}  // namespace xmatroid

#endif  // XMATROID_GRAPH_H_
