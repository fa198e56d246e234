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

#ifndef XMATROID_LINEAR_H_
#define XMATROID_LINEAR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

inline constexpr uint64_t kMersenne61 = (uint64_t{1} << 61) - 1;

/// Arithmetic modulo a prime below 2^63.
class PrimeField {
 public:
  /// Throws kInvalidArgument unless p is a prime in [2^31, 2^63).
  explicit PrimeField(uint64_t p = kMersenne61);

  uint64_t prime() const { return p_; }
  uint64_t Add(uint64_t a, uint64_t b) const;
  uint64_t Sub(uint64_t a, uint64_t b) const;
  uint64_t Neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t Mul(uint64_t a, uint64_t b) const;
  uint64_t Inverse(uint64_t a) const;

 private:
  uint64_t p_;
};

bool IsPrime(uint64_t n);

using FieldMatrix = std::vector<std::vector<uint64_t>>;

/// Rank by Gaussian elimination over the field.
int FieldRank(FieldMatrix rows, const PrimeField& field);

/// A generic row matroid on the edges of K_n or K_{m,n}.
struct LinearSpec {
  enum class Kind { kHyperconnectivity, kSymmetricCompletion, kBirigidity, kRigidity };

  Kind kind = Kind::kRigidity;
  /// Vertices of K_n, or |W| for birigidity.
  int n = 0;
  /// Dimension for the K_n kinds.
  int d = 0;
  /// Birigidity: |U| and the dimensions of p on U and q on W.
  int m = 0;
  int k = 0;
  int l = 0;

  static LinearSpec Hyperconnectivity(int n, int d);
  static LinearSpec SymmetricCompletion(int n, int d);
  static LinearSpec Birigidity(int m, int n, int k, int l);
  static LinearSpec Rigidity(int n, int d);
  /// "hyper:n=6,d=2", "sym:n=6,d=2", "biri:m=3,n=3,k=2,l=2", "rig:n=5,d=2".
  static LinearSpec Parse(const std::string& text);

  std::string Name() const;
  HostGraph Host() const;
  int NumColumns() const;
};

/// Coordinates drawn uniformly from the field by a seeded generator: p on
/// the vertices (on U for birigidity) and q on W.
struct GenericAssignment {
  uint64_t seed = 0;
  uint64_t prime = kMersenne61;
  std::vector<std::vector<uint64_t>> p;
  std::vector<std::vector<uint64_t>> q;

  static GenericAssignment Generate(const LinearSpec& spec, uint64_t seed,
                                    uint64_t prime = kMersenne61);
};

/// One row per host edge, in edge-id order, with vertex-major column
/// blocks. Hyperconnectivity row v_iv_j (i < j): p(v_j) in the block of v_i,
/// -p(v_i) in the block of v_j; symmetric completion uses +p(v_i);
/// birigidity row u_iw_j: q(w_j) in the block of u_i, p(u_i) in the block
/// of w_j; rigidity row v_iv_j: p(v_i)-p(v_j) and p(v_j)-p(v_i).
FieldMatrix BuildMatrix(const LinearSpec& spec, const GenericAssignment& a);

struct GenericOptions {
  int trials = 3;
  uint64_t seed = 1;
  uint64_t prime = kMersenne61;
};

/// Seed of trial t; trials are independent assignments.
uint64_t TrialSeed(uint64_t seed, int trial);

/// Rank of the rows in f, required to agree across all trials. Throws
/// kTrialDisagreement listing every value, kInvalidArgument for trials < 3.
int GenericRank(const LinearSpec& spec, ElementSet f, const GenericOptions& options = {});

/// Rank on each listed set with the matrices built once.
std::vector<int> GenericRanks(const LinearSpec& spec, const std::vector<ElementSet>& sets,
                              const GenericOptions& options = {});

/// r(C) = |C|-1 and every C-e independent; |C| <= 30.
bool LinearCircuitCheck(const LinearSpec& spec, ElementSet c,
                        const GenericOptions& options = {});

/// Rank-oracle matroid on the host edges; every query checks trial
/// agreement.
Matroid LinearMatroid(const LinearSpec& spec, const GenericOptions& options = {});

}  // namespace xmatroid

#endif  // XMATROID_LINEAR_H_
