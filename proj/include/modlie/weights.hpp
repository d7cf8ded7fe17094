#pragma once

#include <map>

#include "modlie/p_structure.hpp"

namespace modlie {

/// A weight of a torus t: its values on the toral basis, as a vector in
/// F_p^mu. Toral elements satisfy t^[p] = t, so ad t satisfies X^p - X and
/// every eigenvalue lies in the prime field; enumerating all p^mu characters
/// is therefore exhaustive.
using Character = FpVec;

struct WeightDecomposition {
  Torus torus;
  u32 module_dim = 0;
  Subspace zero_space;                    // the chi = 0 space, ambient coords
  std::map<Character, u32> table;         // every chi with dim > 0, incl. zero
  std::map<Character, Subspace> spaces;   // same keys as table
};

/// Simultaneous eigenspace decomposition of the (sub-)adjoint module under a
/// torus of L. `module` restricts the adjoint module to a t-stable subspace
/// (pass nullptr for all of L). Throws domain_error when the module is not
/// t-stable, the toral basis fails its checks, or the weight spaces do not
/// partition the module (the span was not actually toral).
WeightDecomposition decompose(const LieAlgebra& L, const Torus& t,
                              const Subspace* module = nullptr);

/// Re-derive the defining equations: [t_i, u] = chi_i u on every stored basis
/// vector, pairwise-distinct characters, and the partition of the module.
bool verify_decomposition(const LieAlgebra& L, const WeightDecomposition& wd,
                          const Subspace* module = nullptr);

struct CoverageReport {
  bool full = false;
  std::vector<Character> missing;  // nonzero characters with no weight vector
};
CoverageReport coverage_check(const WeightDecomposition& wd);

struct EqualDimsReport {
  bool equal = false;
  u32 common_dim = 0;  // 0 when no nonzero weight is present
  std::vector<Character> violating;  // a witness pair when not equal
};
EqualDimsReport equal_dims_check(const WeightDecomposition& wd);

/// dim M = dim M_0 + (p^mu - 1) d, applicable once coverage is full and the
/// nonzero dims agree.
struct DimensionIdentityReport {
  bool applicable = false;
  bool holds = false;
  u32 module_dim = 0, zero_dim = 0, common_dim = 0;
  u64 rhs = 0;
};
DimensionIdentityReport dimension_identity_check(const LieAlgebra& L, const Subspace* module,
                                                 const WeightDecomposition& wd);

/// Restriction along a subtorus sub of t: beta_i = alpha(s_i) via the
/// coordinates of the sub basis in the toral basis.
struct FiberReport {
  bool ok = false;
  u32 sub_dim = 0, complement_dim = 0;
  u64 expected_fiber = 0;  // p^{complement_dim}
  bool counts_checked = false;  // only asserted when wd_big covers fully
  std::map<Character, u32> fiber_counts;  // beta -> #nonzero alpha over it
  bool restriction_consistent = false;    // decompose(L, sub) matches fiber sums
};
FiberReport fiber_count_check(const LieAlgebra& L, const WeightDecomposition& wd_big,
                              const Torus& sub, const Subspace* module = nullptr);

struct BracketAdditivityReport {
  bool ok = false;
  u64 pairs_checked = 0;
};
/// [M_a, M_b] subset of M_{a+b} on the full adjoint module, all basis pairs.
BracketAdditivityReport bracket_additivity_check(const LieAlgebra& L,
                                                 const WeightDecomposition& wd);

/// Sorted dims of all weight spaces (zero included); two tori of the same
/// algebra must produce the same multiset.
std::vector<u32> weight_dim_multiset(const WeightDecomposition& wd);

}  // namespace modlie
