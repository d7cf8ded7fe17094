#pragma once

#include "modlie/divided_power.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/p_structure.hpp"
#include "modlie/poly_ring.hpp"

namespace modlie {

/// W(n;1) = Der B_n, the Jacobson-Witt algebra: basis x^alpha D_i,
/// dim n p^n, restricted (p-map by p-fold composition of derivations).
/// Basis index = i * p^n + mono with i the 0-based variable of D_{i+1}.
LieAlgebra build_jacobson_witt(u32 n, u32 p);

inline u32 witt_index(const TruncatedPolyRing& B, u32 var, u32 mono) {
  return var * B.dim + mono;
}

/// Operator matrix (dim B x dim B) of the derivation with coordinates u.
FpMat derivation_operator(const TruncatedPolyRing& B, const FpVec& u);
/// Derivation coordinates from an operator known to be a derivation
/// (reads off the images of the variables).
FpVec operator_to_derivation(const TruncatedPolyRing& B, const FpMat& op);
/// f(x) for the derivation with coordinates u applied to f in B_n.
FpVec apply_derivation(const TruncatedPolyRing& B, const FpVec& u, const FpVec& f);
/// u^{[p]} by composing the derivation p times. Independent route from
/// jacobson_p_power; also the p-map used by the W(n;1) constructor.
FpVec p_power_by_composition(const TruncatedPolyRing& B, const FpVec& u);
/// Coordinates of f * D_{var+1}.
FpVec function_times_D(const TruncatedPolyRing& B, u32 var, const FpVec& f);

/// Generalized Witt algebra W(m;nbar) over the divided power algebra,
/// dim m p^{|nbar|}. Restricted (p-map present) only when nbar = (1,..,1).
LieAlgebra build_witt_general(u32 m, const std::vector<u32>& nbar, u32 p);

/// Same basis-index convention over A(m;nbar).
inline u32 witt_index_dp(const DividedPowerAlgebra& A, u32 var, u32 mono) {
  return var * A.dim + mono;
}

FpMat dp_derivation_operator(const DividedPowerAlgebra& A, const FpVec& u);
FpVec dp_p_power_by_composition(const DividedPowerAlgebra& A, const FpVec& u);

/// Change of basis W(m;(1,..,1)) -> W(m;1) matching divided powers with
/// monomials: x^(a) D_i maps to (1/a!) x^a D_i (same flat index, unit scale).
/// Returns the diagonal scale factors aligned with the basis.
FpVec divided_to_truncated_scale(const DividedPowerAlgebra& A);

enum class ClassicalType { kSl, kGl };

/// sl_n or gl_n by matrix units (E_ij, then H_k = E_kk - E_{k+1,k+1} for sl),
/// brackets by matrix commutator, p-map by matrix p-th power.
LieAlgebra build_classical(ClassicalType type, u32 n, u32 p);

/// S(n;1)^(1) inside W(n;1), spanned by D_ij(f) = D_j(f) D_i - D_i(f) D_j
/// over monomials f. Re-based as a standalone restricted algebra.
LieAlgebra build_special_S(u32 n, u32 p, bool with_pmap = true);

/// H(2r;1)^(2) inside W(2r;1), spanned by
///   D_H(f) = sum_i D_i(f) D_{i+r} - D_{i+r}(f) D_i
/// with f over monomials minus constants and the top monomial.
LieAlgebra build_hamiltonian_H(u32 two_r, u32 p, bool with_pmap = true);

/// The generic torus of W(n;1): t_i = (1 + x_i) D_i, i = 1..n.
Torus standard_generic_torus(const LieAlgebra& W);

enum class SolvableOrientation { kLower, kUpper };

/// Maximal solvable subalgebra of W(n;1) containing the generic torus.
/// With u_i = 1 + x_i, the kLower orientation is
///   span{ f(u_1,..,u_{i-1}) u_i^e D_i : 1 <= i <= n, e = 1, 2 },
/// of dim 2(p^n - 1)/(p - 1); kUpper reverses the variable roles. Both
/// orientations are bracket- and p-closed and solvable; lifts of
/// lower-unitriangular exponent matrices stabilize kLower, upper ones
/// kUpper. Maximality at n = 2 is certified by the sylow verify suite.
Subspace standard_maximal_solvable(const LieAlgebra& W,
                                   SolvableOrientation o = SolvableOrientation::kLower);

/// Degrees of the standard grading: deg(x^a D_i) = |a| - 1.
std::vector<int> witt_grading(const LieAlgebra& W);

/// Metadata helpers for algebras built here.
TruncatedPolyRing witt_ring(const LieAlgebra& W);
DividedPowerAlgebra witt_dp_algebra(const LieAlgebra& W);

}  // namespace modlie
