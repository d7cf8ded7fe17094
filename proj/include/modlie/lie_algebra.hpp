#pragma once

#include <functional>
#include <map>
#include <string>

#include "modlie/fp_matrix.hpp"

namespace modlie {

struct BracketTerm {
  u32 k;  // basis index
  u32 c;  // coefficient, 1..p-1
  bool operator==(const BracketTerm& o) const { return k == o.k && c == o.c; }
};

using ScRow = std::vector<BracketTerm>;  // sorted by k, no zero coefficients

/// Finite-dimensional Lie algebra over F_p given by structure constants on a
/// fixed basis, optionally with a p-map (rows of `pmap` are b_i^{[p]}).
/// Instances are immutable after construction; all operations are const.
struct LieAlgebra {
  PrimeField F;
  u32 dim = 0;
  std::vector<std::string> labels;
  std::vector<ScRow> sc;  // dim*dim entries, (i,j) at i*dim+j
  bool has_pmap = false;
  FpMat pmap;

  std::string family;  // catalog tag, e.g. "w-n-1"; empty for ad-hoc algebras
  std::map<std::string, std::vector<long long>> params;

  LieAlgebra() = default;
  LieAlgebra(PrimeField f, u32 d);

  const ScRow& sc_at(u32 i, u32 j) const { return sc[static_cast<size_t>(i) * dim + j]; }
  /// Sets [b_i, b_j] for i != j; the (j, i) entry is filled by antisymmetry.
  void set_bracket(u32 i, u32 j, const ScRow& terms);
  /// Raw write of a single (i, j) entry. Exists so tests can corrupt one
  /// structure constant without touching its antisymmetric partner.
  void set_sc_raw(u32 i, u32 j, const ScRow& terms);

  FpVec bracket(const FpVec& u, const FpVec& v) const;
  FpMat ad(const FpVec& u) const;       // matrix of x -> [u, x]
  FpMat ad_basis(u32 i) const;          // ad of basis element b_i
  FpVec p_power_basis(u32 i) const;
  FpVec zero() const { return FpVec(dim, 0); }
  FpVec basis_vec(u32 i) const;

  bool operator==(const LieAlgebra& o) const;
};

using PPowerFn = std::function<FpVec(const FpVec&)>;

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;  // capped; see total counts
  u64 antisym_failures = 0, jacobi_failures = 0, restrict_failures = 0;
  bool pmap_checked = false;
};

/// Checks antisymmetry ([b_i,b_i]=0, sc(i,j) = -sc(j,i)), the Jacobi identity
/// on all basis triples, and, when a p-map is present, ad(b_i^{[p]}) = ad(b_i)^p.
ValidationReport validate_algebra(const LieAlgebra& L);

/// u^{[p]} by Jacobson's formula: fold over the nonzero terms of u, using
/// (x+y)^{[p]} = x^{[p]} + y^{[p]} + sum_i s_i(x,y) where i*s_i is the
/// lambda^{i-1} coefficient of ad(lambda x + y)^{p-1}(x). Scalars of F_p are
/// fixed by c -> c^p, so single terms reduce to (c b_k)^{[p]} = c b_k^{[p]}.
FpVec jacobson_p_power(const LieAlgebra& L, const FpVec& u);

bool is_bracket_closed(const LieAlgebra& L, const Subspace& S);

/// Derived series S = S^(0) >= S^(1) >= ... ; appends terms until the
/// dimension stabilizes or hits zero, and returns the whole chain.
/// Throws if S is not closed under the bracket.
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S);
bool is_solvable(const LieAlgebra& L, const Subspace& S);

Subspace centralizer(const LieAlgebra& L, const Subspace& S);
Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<FpVec>& gens);

/// A subalgebra re-based as a standalone algebra, with the change-of-basis
/// matrix back to the ambient coordinates (rows of `basis`).
struct PromotedAlgebra {
  LieAlgebra algebra;
  FpMat basis;  // algebra.dim x ambient.dim

  FpVec to_ambient(const FpVec& v) const;
};

/// Re-bases the subalgebra spanned by S. If `with_pmap`, computes b^{[p]} for
/// each new basis vector via `p_power` (defaults to jacobson_p_power in the
/// ambient algebra) and requires the result to stay inside S.
PromotedAlgebra promote_subalgebra(const LieAlgebra& ambient, const Subspace& S,
                                   bool with_pmap, const PPowerFn& p_power = {},
                                   const std::string& label_prefix = "b");

}  // namespace modlie
