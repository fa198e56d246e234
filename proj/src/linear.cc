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

#include "xmatroid/linear.h"

#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "xmatroid/errors.h"

namespace xmatroid {

namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, p);
    a = MulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> RandomVector(std::mt19937_64& gen, int dim, uint64_t p) {
  // Rejection sampling keeps coordinates uniform on [0, p).
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % p);
  std::vector<uint64_t> v(dim);
  for (auto& x : v) {
    uint64_t r;
    do r = gen();
    while (r >= limit);
    x = r % p;
  }
  return v;
}

void CheckEdgeCount(const LinearSpec& spec) {
  const int64_t edges = spec.kind == LinearSpec::Kind::kBirigidity
                            ? int64_t{spec.m} * spec.n
                            : int64_t{spec.n} * (spec.n - 1) / 2;
  if (edges > kMaxElements) {
    throw Error(ErrorKind::kInvalidArgument, spec.Name() + ": host has more than " +
                                                 std::to_string(kMaxElements) +
                                                 " edges");
  }
}

// Matrices of every trial, built once and shared by the rank queries.
struct TrialMatrices {
  PrimeField field;
  std::vector<FieldMatrix> matrices;
  std::vector<uint64_t> seeds;

  TrialMatrices(const LinearSpec& spec, const GenericOptions& options)
      : field(options.prime) {
    if (options.trials < 3) {
      throw Error(ErrorKind::kInvalidArgument, "generic rank needs at least 3 trials");
    }
    for (int t = 0; t < options.trials; ++t) {
      seeds.push_back(TrialSeed(options.seed, t));
      matrices.push_back(
          BuildMatrix(spec, GenericAssignment::Generate(spec, seeds.back(), options.prime)));
    }
  }

  int Rank(const std::string& name, ElementSet f) const {
    std::vector<int> ranks;
    for (const auto& m : matrices) {
      FieldMatrix rows;
      rows.reserve(f.size());
      for (int e : f) rows.push_back(m[e]);
      ranks.push_back(FieldRank(std::move(rows), field));
    }
    for (int r : ranks) {
      if (r != ranks[0]) {
        std::ostringstream msg;
        msg << name << ": generic rank of " << f.ToString() << " differs across trials:";
        for (size_t t = 0; t < ranks.size(); ++t) {
          msg << " seed " << seeds[t] << " -> " << ranks[t] << ";";
        }
        throw Error(ErrorKind::kTrialDisagreement, msg.str());
      }
    }
    return ranks[0];
  }
};

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p < (uint64_t{1} << 31) || p >= (uint64_t{1} << 63) || !IsPrime(p)) {
    throw Error(ErrorKind::kInvalidArgument,
                "field modulus " + std::to_string(p) + " is not a prime in [2^31, 2^63)");
  }
}

uint64_t PrimeField::Add(uint64_t a, uint64_t b) const {
  const uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

uint64_t PrimeField::Sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

uint64_t PrimeField::Mul(uint64_t a, uint64_t b) const { return MulMod(a, b, p_); }

uint64_t PrimeField::Inverse(uint64_t a) const {
  if (a == 0) throw Error(ErrorKind::kInvalidArgument, "inverse of zero");
  return PowMod(a, p_ - 2, p_);
}

int FieldRank(FieldMatrix rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  const int n = static_cast<int>(rows.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const uint64_t inv = field.Inverse(rows[rank][c]);
    for (int r = rank + 1; r < n; ++r) {
      if (rows[r][c] == 0) continue;
      const uint64_t factor = field.Mul(rows[r][c], inv);
      for (int j = c; j < cols; ++j) {
        rows[r][j] = field.Sub(rows[r][j], field.Mul(factor, rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

LinearSpec LinearSpec::Hyperconnectivity(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::kInvalidArgument, "hyper needs n, d >= 1");
  LinearSpec s;
  s.kind = Kind::kHyperconnectivity;
  s.n = n;
  s.d = d;
  CheckEdgeCount(s);
  return s;
}

LinearSpec LinearSpec::SymmetricCompletion(int n, int d) {
  LinearSpec s = Hyperconnectivity(n, d);
  s.kind = Kind::kSymmetricCompletion;
  return s;
}

LinearSpec LinearSpec::Rigidity(int n, int d) {
  LinearSpec s = Hyperconnectivity(n, d);
  s.kind = Kind::kRigidity;
  return s;
}

LinearSpec LinearSpec::Birigidity(int m, int n, int k, int l) {
  if (m < 1 || n < 1 || k < 1 || l < 1) {
    throw Error(ErrorKind::kInvalidArgument, "biri needs m, n, k, l >= 1");
  }
  LinearSpec s;
  s.kind = Kind::kBirigidity;
  s.m = m;
  s.n = n;
  s.k = k;
  s.l = l;
  CheckEdgeCount(s);
  return s;
}

LinearSpec LinearSpec::Parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::kMalformedInput, "linear matroid '" + text + "' lacks ':'");
  }
  const std::string kind = text.substr(0, colon);
  std::vector<std::pair<std::string, int>> params;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorKind::kMalformedInput, "bad parameter '" + item + "' in '" + text + "'");
    }
    try {
      size_t used = 0;
      const int value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      params.emplace_back(item.substr(0, eq), value);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kMalformedInput, "bad integer in '" + item + "'");
    }
  }
  auto get = [&](const std::vector<std::string>& names) {
    if (params.size() != names.size()) {
      throw Error(ErrorKind::kMalformedInput, "wrong parameter count in '" + text + "'");
    }
    std::vector<int> values;
    for (const auto& name : names) {
      bool found = false;
      for (const auto& [key, value] : params) {
        if (key == name) {
          values.push_back(value);
          found = true;
        }
      }
      if (!found) {
        throw Error(ErrorKind::kMalformedInput, "missing '" + name + "' in '" + text + "'");
      }
    }
    return values;
  };
  if (kind == "hyper") {
    const auto v = get({"n", "d"});
    return Hyperconnectivity(v[0], v[1]);
  }
  if (kind == "sym") {
    const auto v = get({"n", "d"});
    return SymmetricCompletion(v[0], v[1]);
  }
  if (kind == "rig") {
    const auto v = get({"n", "d"});
    return Rigidity(v[0], v[1]);
  }
  if (kind == "biri") {
    const auto v = get({"m", "n", "k", "l"});
    return Birigidity(v[0], v[1], v[2], v[3]);
  }
  throw Error(ErrorKind::kMalformedInput, "unknown linear matroid kind '" + kind + "'");
}

std::string LinearSpec::Name() const {
  switch (kind) {
    case Kind::kHyperconnectivity:
      return "hyper:n=" + std::to_string(n) + ",d=" + std::to_string(d);
    case Kind::kSymmetricCompletion:
      return "sym:n=" + std::to_string(n) + ",d=" + std::to_string(d);
    case Kind::kRigidity:
      return "rig:n=" + std::to_string(n) + ",d=" + std::to_string(d);
    case Kind::kBirigidity:
      return "biri:m=" + std::to_string(m) + ",n=" + std::to_string(n) +
             ",k=" + std::to_string(k) + ",l=" + std::to_string(l);
  }
  return {};
}

HostGraph LinearSpec::Host() const {
  return kind == Kind::kBirigidity ? HostGraph::Bipartite(m, n) : HostGraph::Complete(n);
}

int LinearSpec::NumColumns() const {
  return kind == Kind::kBirigidity ? l * m + k * n : d * n;
}

GenericAssignment GenericAssignment::Generate(const LinearSpec& spec, uint64_t seed,
                                              uint64_t prime) {
  PrimeField field(prime);
  GenericAssignment a;
  a.seed = seed;
  a.prime = prime;
  std::mt19937_64 gen(seed);
  if (spec.kind == LinearSpec::Kind::kBirigidity) {
    for (int i = 0; i < spec.m; ++i) a.p.push_back(RandomVector(gen, spec.k, prime));
    for (int j = 0; j < spec.n; ++j) a.q.push_back(RandomVector(gen, spec.l, prime));
  } else {
    for (int i = 0; i < spec.n; ++i) a.p.push_back(RandomVector(gen, spec.d, prime));
  }
  return a;
}

FieldMatrix BuildMatrix(const LinearSpec& spec, const GenericAssignment& a) {
  const PrimeField field(a.prime);
  const HostGraph host = spec.Host();
  const int cols = spec.NumColumns();
  FieldMatrix rows(host.num_edges(), std::vector<uint64_t>(cols, 0));
  for (int e = 0; e < host.num_edges(); ++e) {
    auto& row = rows[e];
    const int u = host.edge(e).u, v = host.edge(e).v;
    if (spec.kind == LinearSpec::Kind::kBirigidity) {
      const int i = u, j = v - spec.m;
      for (int c = 0; c < spec.l; ++c) row[i * spec.l + c] = a.q[j][c];
      for (int c = 0; c < spec.k; ++c) row[spec.l * spec.m + j * spec.k + c] = a.p[i][c];
      continue;
    }
    const int d = spec.d;
    for (int c = 0; c < d; ++c) {
      const uint64_t pu = a.p[u][c], pv = a.p[v][c];
      switch (spec.kind) {
        case LinearSpec::Kind::kHyperconnectivity:
          row[u * d + c] = pv;
          row[v * d + c] = field.Neg(pu);
          break;
        case LinearSpec::Kind::kSymmetricCompletion:
          row[u * d + c] = pv;
          row[v * d + c] = pu;
          break;
        case LinearSpec::Kind::kRigidity:
          row[u * d + c] = field.Sub(pu, pv);
          row[v * d + c] = field.Sub(pv, pu);
          break;
        case LinearSpec::Kind::kBirigidity:
          break;
      }
    }
  }
  return rows;
}

uint64_t TrialSeed(uint64_t seed, int trial) {
  // splitmix64 of (seed, trial).
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int GenericRank(const LinearSpec& spec, ElementSet f, const GenericOptions& options) {
  return GenericRanks(spec, {f}, options)[0];
}

std::vector<int> GenericRanks(const LinearSpec& spec, const std::vector<ElementSet>& sets,
                              const GenericOptions& options) {
  const TrialMatrices trials(spec, options);
  const ElementSet ground = spec.Host().AllEdges();
  std::vector<int> out;
  for (ElementSet f : sets) {
    if (!f.IsSubsetOf(ground)) {
      throw Error(ErrorKind::kGroundMismatch, f.ToString() + " is not a set of host edges");
    }
    out.push_back(trials.Rank(spec.Name(), f));
  }
  return out;
}

bool LinearCircuitCheck(const LinearSpec& spec, ElementSet c, const GenericOptions& options) {
  if (c.empty() || c.size() > 30) {
    throw Error(ErrorKind::kInvalidArgument, "circuit check needs 1 <= |C| <= 30");
  }
  std::vector<ElementSet> sets = {c};
  for (int e : c) sets.push_back(c.Without(e));
  const auto ranks = GenericRanks(spec, sets, options);
  if (ranks[0] != c.size() - 1) return false;
  for (size_t i = 1; i < ranks.size(); ++i) {
    if (ranks[i] != c.size() - 1) return false;
  }
  return true;
}

namespace {

// Ranks are memoized; the table stops growing at kMaxCached entries.
struct CachedRanks {
  static constexpr size_t kMaxCached = size_t{1} << 20;

  TrialMatrices trials;
  std::string name;
  std::mutex mu;
  std::unordered_map<uint64_t, int> cache;

  CachedRanks(const LinearSpec& spec, const GenericOptions& options)
      : trials(spec, options), name(spec.Name()) {}

  int Rank(ElementSet f) {
    {
      std::lock_guard<std::mutex> lock(mu);
      const auto it = cache.find(f.bits());
      if (it != cache.end()) return it->second;
    }
    const int r = trials.Rank(name, f);
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() < kMaxCached) cache.emplace(f.bits(), r);
    return r;
  }
};

}  // namespace

Matroid LinearMatroid(const LinearSpec& spec, const GenericOptions& options) {
  auto ranks = std::make_shared<CachedRanks>(spec, options);
  return Matroid::FromRank(spec.Host().num_edges(),
                           [ranks](ElementSet f) { return ranks->Rank(f); });
}

}  // namespace xmatroid
