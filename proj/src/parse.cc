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

#include "xmatroid/parse.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "xmatroid/count_matroid.h"
#include "xmatroid/errors.h"
#include "xmatroid/json_io.h"
#include "xmatroid/sequence.h"

namespace xmatroid {

namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int ToInt(const std::string& s, const std::string& context) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw Error(ErrorKind::kMalformedInput, "bad integer '" + s + "' in '" + context + "'");
  }
  return value;
}

std::vector<int> IntList(const std::string& s, const std::string& context) {
  std::vector<int> out;
  for (const auto& part : Split(s, ',')) out.push_back(ToInt(part, context));
  return out;
}

// "prefix(a,b,...)" -> the integers, or nothing when the prefix differs.
bool Call(const std::string& text, const std::string& prefix, std::vector<int>& args) {
  if (text.rfind(prefix + "(", 0) != 0 || text.back() != ')') return false;
  args = IntList(text.substr(prefix.size() + 1, text.size() - prefix.size() - 2), text);
  return true;
}

}  // namespace

HostGraph ParseHost(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos) {
    throw Error(ErrorKind::kMalformedInput, "host '" + text + "' lacks ':'");
  }
  const auto sizes = IntList(text.substr(colon + 1), text);
  if (kind == "complete" && sizes.size() == 1 && sizes[0] >= 2) {
    if (sizes[0] * (sizes[0] - 1) / 2 > kMaxElements) {
      throw Error(ErrorKind::kMalformedInput, "host '" + text + "' has too many edges");
    }
    return HostGraph::Complete(sizes[0]);
  }
  if (kind == "bipartite" && sizes.size() == 2 && sizes[0] >= 1 && sizes[1] >= 1) {
    if (sizes[0] * sizes[1] > kMaxElements) {
      throw Error(ErrorKind::kMalformedInput, "host '" + text + "' has too many edges");
    }
    return HostGraph::Bipartite(sizes[0], sizes[1]);
  }
  throw Error(ErrorKind::kMalformedInput, "unknown host '" + text + "'");
}

std::string HostName(const HostGraph& host) {
  switch (host.kind()) {
    case HostGraph::Kind::kComplete:
      return "complete:" + std::to_string(host.num_vertices());
    case HostGraph::Kind::kBipartite:
      return "bipartite:" + std::to_string(host.left_size()) + "," +
             std::to_string(host.right_size());
    case HostGraph::Kind::kEdges:
      break;
  }
  throw Error(ErrorKind::kInvalidArgument, "explicit hosts have no name");
}

CopyFamily ParseFamily(const std::string& text, const HostGraph& host) {
  if (text.rfind("rooted:", 0) == 0) {
    const Pattern p = Pattern::Parse(text.substr(7));
    if (p.kind != Pattern::Kind::kCompleteBipartite) {
      throw Error(ErrorKind::kMalformedInput, "rooted families need K_{s,t}");
    }
    return RootedCopies(p.p, p.q, host);
  }
  std::vector<Pattern> patterns;
  for (const auto& part : Split(text, '+')) patterns.push_back(Pattern::Parse(part));
  if (patterns.empty()) throw Error(ErrorKind::kMalformedInput, "empty family");
  return patterns.size() == 1 ? EnumerateCopies(patterns[0], host)
                              : EnumerateCopies(patterns, host);
}

ElementSet ParseTarget(const std::string& text, const HostGraph& host) {
  if (text == "all") return host.AllEdges();
  ElementSet out;
  if (text.empty()) return out;
  for (const auto& part : Split(text, ',')) {
    int id = -1;
    if (!part.empty() && std::isdigit(static_cast<unsigned char>(part[0]))) {
      id = ToInt(part, text);
    } else {
      for (int e = 0; e < host.num_edges(); ++e) {
        if (host.EdgeLabel(e) == part) id = e;
      }
    }
    if (id < 0 || id >= host.num_edges()) {
      throw Error(ErrorKind::kMalformedInput, "unknown edge '" + part + "'");
    }
    out = out.With(id);
  }
  return out;
}

std::string TargetLabels(ElementSet s, const HostGraph& host) {
  std::string out;
  for (int e : s) out += (out.empty() ? "" : ",") + host.EdgeLabel(e);
  return out;
}

Matroid ParseMatroid(const std::string& text, const HostGraph& host, const std::string& family,
                     const GenericOptions& generic) {
  const int n = host.num_edges();
  std::vector<int> args;
  if (text == "graphic") return InducedMatroid(CountFunction::F(1, 1), host);
  if (text == "free") return Matroid::Free(n);
  if (text.rfind("uniform:", 0) == 0) return Matroid::Uniform(n, ToInt(text.substr(8), text));
  if (Call(text, "count:f", args) && args.size() == 2) {
    return InducedMatroid(CountFunction::F(args[0], args[1]), host);
  }
  if (Call(text, "count:g", args) && args.size() == 3) {
    return InducedMatroid(CountFunction::G(args[0], args[1], args[2]), host);
  }
  if (Call(text, "count:h", args) && args.size() == 1) {
    return InducedMatroid(CountFunction::PictureLifting(args[0]), host);
  }
  if (text == "ux" || text == "val") {
    if (family.empty()) {
      throw Error(ErrorKind::kMalformedInput, "matroid '" + text + "' needs a family");
    }
    const CopyFamily x = ParseFamily(family, host);
    return text == "ux" ? BuildUniformMatroid(x, n) : BuildValMatroid(x, n).matroid;
  }
  if (text.rfind("linear:", 0) == 0) {
    const LinearSpec spec = LinearSpec::Parse(text.substr(7));
    if (HostName(spec.Host()) != HostName(host)) {
      throw Error(ErrorKind::kGroundMismatch, spec.Name() + " lives on " + HostName(spec.Host()));
    }
    return LinearMatroid(spec, generic);
  }
  if (text.rfind("file:", 0) == 0) {
    std::ifstream in(text.substr(5));
    if (!in) throw Error(ErrorKind::kMalformedInput, "cannot read " + text.substr(5));
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Matroid m = MatroidFromJson(ParseJsonText(buffer.str()));
    if (m.ground_size() != n) {
      throw Error(ErrorKind::kGroundMismatch, "matroid file does not match the host");
    }
    return m;
  }
  throw Error(ErrorKind::kMalformedInput, "unknown matroid '" + text + "'");
}

}  // namespace xmatroid
