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

#ifndef XMATROID_PARSE_H_
#define XMATROID_PARSE_H_

#include <string>

#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"
#include "xmatroid/linear.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

/// "complete:5" or "bipartite:3,4". Throws kMalformedInput.
HostGraph ParseHost(const std::string& text);
/// Inverse of ParseHost for complete and bipartite hosts.
std::string HostName(const HostGraph& host);

/// Patterns joined by '+', e.g. "K4+K2,3"; "rooted:K3,2" gives copies of
/// K_{3,2} with the 3-side in U.
CopyFamily ParseFamily(const std::string& text, const HostGraph& host);

/// "all", or comma-separated edge labels ("v1v2", "u1w3") or edge ids.
ElementSet ParseTarget(const std::string& text, const HostGraph& host);
std::string TargetLabels(ElementSet s, const HostGraph& host);

/// Matroid on the host edges:
///   graphic | free | uniform:r | count:f(a,b) | count:g(a,b,c) | count:h(k)
///   | ux (U_X of the family) | val (val_X of the family)
///   | linear:<spec>, e.g. linear:hyper:n=6,d=2 | file:<matroid json>
/// `family` may be empty unless ux or val is requested.
Matroid ParseMatroid(const std::string& text, const HostGraph& host, const std::string& family,
                     const GenericOptions& generic = {});

}  // namespace xmatroid

#endif  // XMATROID_PARSE_H_
