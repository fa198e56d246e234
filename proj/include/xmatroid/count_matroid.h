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

#ifndef XMATROID_COUNT_MATROID_H_
#define XMATROID_COUNT_MATROID_H_

#include <functional>
#include <string>

#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

/// An integer set function on host edges that induces a matroid: F is
/// independent iff |I| <= f(I) for every nonempty I ⊆ F.
///
///  * F(a, b):    a|V(F)| - b
///  * G(a, b, c): a|V(F)| - b·β(F) - c, β = number of bipartite components
///  * PictureLifting(k) on K(U;W): |U(F)| + k|W(F)| - k
///  * Custom: any function; checked for monotonicity and submodularity on
///    intersecting pairs when the host has at most 14 edges
struct CountFunction {
  enum class Kind { kF, kG, kPictureLifting, kCustom };

  Kind kind = Kind::kF;
  int a = 0;
  int b = 0;
  int c = 0;
  int k = 0;
  std::function<int(ElementSet)> custom;

  static CountFunction F(int a, int b);
  static CountFunction G(int a, int b, int c);
  static CountFunction PictureLifting(int k);
  static CountFunction Custom(std::function<int(ElementSet)> fn);

  std::string Name() const;
};

/// Number of connected components of (V(f), f) that are bipartite.
int BipartiteComponents(const HostGraph& host, ElementSet f);

/// f(F); 0 at the empty set.
int EvalFunction(const CountFunction& f, const HostGraph& host, ElementSet set);

/// Throws kInvalidArgument when a custom function fails the scan, or when a
/// picture-lifting function is used on a non-bipartite host.
void ValidateCountFunction(const CountFunction& f, const HostGraph& host);

struct InducedIndependence {
  bool independent = true;
  /// A nonempty subset with |I| > f(I) when dependent.
  ElementSet violating;
};

/// Exact check. F and picture-lifting functions scan vertex subsets of
/// V(set); G and custom functions scan edge subsets, |set| <= 22.
InducedIndependence CheckInducedIndependent(const CountFunction& f,
                                            const HostGraph& host,
                                            ElementSet set);
/// Rank by greedy growth of a maximal independent subset.
int InducedRank(const CountFunction& f, const HostGraph& host, ElementSet set);
/// min{|F_0| + Σ f(F_i)} over F_0 ⊆ F and partitions {F_i} of F - F_0;
/// |set| <= 10.
int InducedRankBrute(const CountFunction& f, const HostGraph& host,
                     ElementSet set);
/// (a,b) pebble game on the edges of set in id order, 0 <= b <= 2a-1.
int PebbleGameRank(int a, int b, const HostGraph& host, ElementSet set);
/// |F| = f(F) + 1 and every proper nonempty subset satisfies the count.
bool InducedCircuitCheck(const CountFunction& f, const HostGraph& host,
                         ElementSet set);
/// f(F + e) = f(F) + 1 for every host edge e outside F.
bool InducedFlatCheck(const CountFunction& f, const HostGraph& host,
                      ElementSet set);

/// The matroid M_f on the host edges, as an oracle.
Matroid InducedMatroid(const CountFunction& f, const HostGraph& host);

}  // namespace xmatroid

#endif  // XMATROID_COUNT_MATROID_H_
