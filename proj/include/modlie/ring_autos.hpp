#pragma once

#include "modlie/cartan.hpp"

namespace modlie {

struct NotAnAutomorphism : std::domain_error {
  using std::domain_error::domain_error;
};
struct DoesNotNormalize : std::domain_error {
  using std::domain_error::domain_error;
};

/// Ring endomorphism of B_n given by the images of the variables. Images must
/// have zero constant term (so that f(x_i)^p = 0 holds in B_n).
struct RingEndo {
  TruncatedPolyRing R;
  std::vector<FpVec> images;

  RingEndo(TruncatedPolyRing r, std::vector<FpVec> imgs);
  /// Coefficient matrix L of the linear parts: images[i] = sum_j L_ij x_j + h.o.t.
  FpMat linear_part() const;
};

RingEndo identity_endo(const TruncatedPolyRing& R);

/// Precomputed monomial-image table for repeated substitution.
struct SubstitutionTable {
  const TruncatedPolyRing R;
  std::vector<FpVec> mono_image;

  explicit SubstitutionTable(const RingEndo& e);
  FpVec apply(const FpVec& f) const;
};

FpVec substitute(const RingEndo& e, const FpVec& f);
/// compose(e1, e2)(f) = e1(e2(f)); images are e1 applied to e2's images.
RingEndo compose(const RingEndo& e1, const RingEndo& e2);
bool endo_invertible(const RingEndo& e);
/// Compositional inverse, solved degree by degree through the filtration.
/// Throws NotAnAutomorphism when the linear part is singular.
RingEndo invert_endo(const RingEndo& e);

struct LieAuto {
  FpMat matrix;  // coordinates on W(n;1)
};

/// The automorphism of W(n;1) induced by an invertible ring endomorphism:
/// D -> phi o D o phi^{-1}. The map e -> induced(e) is a group homomorphism
/// for compose() above.
LieAuto induced_lie_auto(const LieAlgebra& W, const RingEndo& e);

bool stabilizes_subspace(const LieAuto& a, const Subspace& S);

/// Bracket (and p-map, when present) preservation on basis pairs. With
/// sample_pairs = 0 every pair is checked; otherwise that many seeded random
/// pairs per check. `p_power` may replace jacobson_p_power on the image side.
bool is_lie_automorphism(const LieAlgebra& L, const LieAuto& a, u32 sample_pairs = 0,
                         u64 seed = 1, const PPowerFn& p_power = {});

/// Matrix of a|_t in the toral basis (columns are images); throws
/// DoesNotNormalize when some a(t_i) leaves the torus span.
FpMat restriction_to_torus(const LieAuto& a, const Torus& t);

/// x_i -> prod_j (1 + x_j)^{g_ji} - 1 for a matrix g over F_p (the exponent
/// matrix of the lift acting on the group generated by the 1 + x_j).
RingEndo demushkin_lift(const TruncatedPolyRing& R, const FpMat& g);

/// The lift whose restriction to the generic torus equals g on the nose.
/// Under the composition convention above the restriction of
/// demushkin_lift(a) works out to (a^{-1})^T, so this passes (g^{-1})^T.
RingEndo weyl_lift(const TruncatedPolyRing& R, const FpMat& g);

FpMat mat_inverse(const FpMat& M);  // throws NotAnAutomorphism if singular

/// All invertible n x n matrices over F_p, enumeration order row-major
/// lexicographic. |GL_n(F_p)| = prod_k (p^n - p^k).
std::vector<FpMat> all_invertible_matrices(PrimeField F, u32 n);

}  // namespace modlie
