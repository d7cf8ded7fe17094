#pragma once

#include "modlie/cartan.hpp"

namespace modlie {

/// Relabeling of the |nbar| target variables y_{i,j} (i = 1..m,
/// j = 0..n_i - 1) as a flat list, block by block.
struct VariableSplit {
  u32 m = 0;
  std::vector<u32> nbar;
  u32 N = 0;            // |nbar|
  std::vector<u32> offset;

  VariableSplit() = default;
  VariableSplit(u32 m_, std::vector<u32> nbar_);
  u32 flat(u32 i, u32 j) const { return offset[i] + j; }
  std::pair<u32, u32> unflat(u32 t) const;
};

/// The algebra isomorphism phi: A(m;nbar) -> B_N induced by
/// y_{i,j} -> x^(p^j eps_i). On basis elements it sends x^(a) to
/// unit * y^c where c is the base-p digit vector of a. The divided-power
/// unit is computed by multiplying out the generator powers (and checked to
/// be 1); `unit` below carries the extra monomial-normalization factor
/// 1/prod(c_t!) of the truncated-polynomial realization.
struct PhiMap {
  VariableSplit split;
  DividedPowerAlgebra A;
  TruncatedPolyRing B;
  std::vector<u32> target_mono;  // per source basis index, a bijection
  FpVec unit;                    // nonzero scalars

  FpVec apply(const FpVec& f) const;      // A -> B_N
  FpVec apply_inv(const FpVec& g) const;  // B_N -> A
};

PhiMap build_phi(u32 m, const std::vector<u32>& nbar, u32 p);

/// The embedding iota: W(m;nbar) -> W(N;1), D -> phi o D o phi^{-1}.
/// Construction verifies injectivity and bracket preservation on all basis
/// pairs and throws on failure.
struct EmbeddingMap {
  PhiMap phi;
  LieAlgebra source;  // W(m;nbar)
  LieAlgebra target;  // W(N;1)
  FpMat matrix;       // target.dim x source.dim

  FpVec apply(const FpVec& v) const { return mat_vec(matrix, v); }
  Subspace image() const;
};

EmbeddingMap build_iota(u32 m, const std::vector<u32>& nbar, u32 p);

/// iota(d_i) against the expected expansion
///   D_{i,0} + sum_{j>=1} (-1)^j y_{i,0}^{p-1} .. y_{i,j-1}^{p-1} D_{i,j}.
struct DExpansionReport {
  bool all_match = true;
  std::vector<FpVec> actual;    // per i, target coordinates
  std::vector<FpVec> expected;
};

DExpansionReport check_D_i_expansion(const EmbeddingMap& emb);

/// Per-block coefficient identity for a target-side derivation
/// E = sum a_{s,j} D_{s,j}: block (s,j) passes when
///   a_{s,j} = (-1)^j y_{s,0}^{p-1} .. y_{s,j-1}^{p-1} a_{s,0}.
/// The identity characterizes membership in sum_s B * iota(d_s); it holds on
/// the embedded image and fails on the extra p-envelope directions.
struct CoeffIdentityReport {
  bool holds = true;
  std::vector<std::pair<u32, u32>> failing_blocks;  // (i, j) pairs
};

CoeffIdentityReport check_coefficient_identity(const EmbeddingMap& emb, const FpVec& target_vec);

/// Minimal p-envelope of the embedded image inside W(N;1), with the p-powers
/// computed by derivation composition.
PEnvelope envelope_in_target(const EmbeddingMap& emb);

}  // namespace modlie
