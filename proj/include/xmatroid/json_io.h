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

#ifndef XMATROID_JSON_IO_H_
#define XMATROID_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "xmatroid/checks.h"
#include "xmatroid/element_set.h"
#include "xmatroid/erection.h"
#include "xmatroid/graph.h"
#include "xmatroid/matroid.h"
#include "xmatroid/sequence.h"

namespace xmatroid {

using Json = nlohmann::json;

/// Version stamped into every artifact as "schema".
inline constexpr int kSchemaVersion = 1;

/// Sorted element ids.
Json ToJson(ElementSet s);
/// Throws kMalformedInput unless the value is an array of ids in [0, 64).
ElementSet ElementSetFromJson(const Json& j);

/// {"schema", "kind": "certificate", "host", "family", "target",
/// "sequence", "members", "value", "family_hash"}.
Json CertificateToJson(const Certificate& cert, const std::string& host,
                       const std::string& family, const CopyFamily& members);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Re-evaluates properness and the value from the listed sets. When host
/// and family are given, also rebuilds the family and requires the hash
/// to match and every set to be the member at its listed index. Accepts a
/// certificate or a document with a "certificate" field.
CertificateCheck VerifyCertificateJson(const Json& doc);

/// Explicit form: {"schema", "kind": "matroid", "ground_size", "rank",
/// "circuits"} with the non-spanning circuits.
Json MatroidToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j);

Json ChainToJson(const ElevationChain& chain);
Json CheckReportToJson(const CheckReport& r);
Json CompareToJson(const CompareResult& r);

/// Two-space indentation with sorted keys, newline terminated.
std::string Dump(const Json& j);

Json ParseJsonText(const std::string& text);

}  // namespace xmatroid

#endif  // XMATROID_JSON_IO_H_
