#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "modlie/ring_autos.hpp"

using namespace modlie;

namespace {

TruncatedPolyRing ring(u32 n) { return TruncatedPolyRing(PrimeField(5), n); }

// x -> x + x^2 in B_1
RingEndo sample_endo1() {
  TruncatedPolyRing R = ring(1);
  FpVec img = vec_add(R.F, R.var(0), R.mul(R.var(0), R.var(0)));
  return RingEndo(R, {img});
}

}  // namespace

TEST_CASE("endo construction rejects constant terms and arity mismatch") {
  TruncatedPolyRing R = ring(1);
  FpVec bad = R.one();
  CHECK_THROWS(RingEndo(R, {bad}));
  CHECK_THROWS(RingEndo(R, {}));
}

TEST_CASE("substitution table agrees with naive monomial expansion") {
  TruncatedPolyRing R = ring(2);
  FpVec i0 = vec_add(R.F, R.var(0), R.mul(R.var(1), R.var(1)));
  FpVec i1 = vec_add(R.F, vec_scale(R.F, 3, R.var(1)), R.mul(R.var(0), R.var(1)));
  RingEndo e(R, {i0, i1});
  SubstitutionTable tab(e);
  for (u32 idx = 0; idx < R.dim; ++idx) {
    std::vector<u32> exps = R.exponents(idx);
    FpVec naive = R.one();
    for (u32 v = 0; v < R.n; ++v) naive = R.mul(naive, R.pow(e.images[v], exps[v]));
    CHECK(tab.mono_image[idx] == naive);
  }
  FpVec f(R.dim);
  std::mt19937_64 rng(3);
  for (auto& c : f) c = static_cast<u32>(rng() % 5);
  CHECK(tab.apply(f) == substitute(e, f));
}

TEST_CASE("composition order convention") {
  TruncatedPolyRing R = ring(1);
  RingEndo e1 = sample_endo1();                       // x -> x + x^2
  RingEndo e2(R, {vec_scale(R.F, 2, R.var(0))});      // x -> 2x
  // compose(e1,e2)(x) = e1(e2(x)) = 2(x + x^2)
  FpVec lhs = compose(e1, e2).images[0];
  FpVec want1(R.dim);
  want1[1] = 2; want1[2] = 2;
  CHECK(lhs == want1);
  // compose(e2,e1)(x) = e2(x + x^2) = 2x + 4x^2
  FpVec rhs = compose(e2, e1).images[0];
  FpVec want2(R.dim);
  want2[1] = 2; want2[2] = 4;
  CHECK(rhs == want2);
}

TEST_CASE("inverse of x -> x + x^2 (hand-solved coefficients)") {
  RingEndo e = sample_endo1();
  CHECK(endo_invertible(e));
  RingEndo g = invert_endo(e);
  // g(x + x^2) = x forces g = x + 4x^2 + 2x^3 (the x^4 term cancels mod 5)
  FpVec want(5);
  want[1] = 1; want[2] = 4; want[3] = 2;
  CHECK(g.images[0] == want);
  CHECK(compose(e, g).images == identity_endo(e.R).images);
  CHECK(compose(g, e).images == identity_endo(e.R).images);
}

TEST_CASE("non-invertible endo detected") {
  TruncatedPolyRing R = ring(1);
  RingEndo sq(R, {R.mul(R.var(0), R.var(0))});
  CHECK(!endo_invertible(sq));
  CHECK_THROWS_AS(invert_endo(sq), NotAnAutomorphism);
}

TEST_CASE("demushkin lift, n = 1: images and torus restriction") {
  TruncatedPolyRing R = ring(1);
  FpMat g(R.F, 1, 1);
  g.at(0, 0) = 2;
  RingEndo e = demushkin_lift(R, g);
  FpVec want(5);  // (1+x)^2 - 1 = 2x + x^2
  want[1] = 2; want[2] = 1;
  CHECK(e.images[0] == want);

  LieAlgebra W = build_jacobson_witt(1, 5);
  Torus t0 = standard_generic_torus(W);
  LieAuto a = induced_lie_auto(W, e);
  FpMat r = restriction_to_torus(a, t0);
  CHECK(r.at(0, 0) == 3);  // inverse-transpose of (2)

  LieAuto w = induced_lie_auto(W, weyl_lift(R, g));
  CHECK(restriction_to_torus(w, t0).at(0, 0) == 2);
}

TEST_CASE("demushkin lift, n = 2: exponent-matrix columns and restriction") {
  TruncatedPolyRing R = ring(2);
  FpMat g(R.F, 2, 2);
  g.at(0, 0) = 1; g.at(0, 1) = 1; g.at(1, 1) = 1;  // [[1,1],[0,1]]
  RingEndo e = demushkin_lift(R, g);
  CHECK(e.images[0] == R.var(0));  // column (1,0): x1 -> (1+x1) - 1
  // column (1,1): x2 -> (1+x1)(1+x2) - 1 = x1 + x2 + x1 x2
  FpVec want(R.dim);
  want[R.index({1, 0})] = 1;
  want[R.index({0, 1})] = 1;
  want[R.index({1, 1})] = 1;
  CHECK(e.images[1] == want);

  LieAlgebra W = build_jacobson_witt(2, 5);
  Torus t0 = standard_generic_torus(W);
  LieAuto a = induced_lie_auto(W, e);
  FpMat r = restriction_to_torus(a, t0);
  FpMat want_r(R.F, 2, 2);  // g^{-T} = [[1,0],[4,1]]
  want_r.at(0, 0) = 1; want_r.at(1, 0) = 4; want_r.at(1, 1) = 1;
  CHECK(r == want_r);

  LieAuto w = induced_lie_auto(W, weyl_lift(R, g));
  CHECK(restriction_to_torus(w, t0) == g);
}

TEST_CASE("induced map is a homomorphism for compose") {
  TruncatedPolyRing R = ring(2);
  LieAlgebra W = build_jacobson_witt(2, 5);
  FpMat g1(R.F, 2, 2), g2(R.F, 2, 2);
  g1.at(0, 0) = 2; g1.at(1, 1) = 1;
  g2.at(0, 0) = 1; g2.at(0, 1) = 1; g2.at(1, 1) = 1;
  RingEndo e1 = demushkin_lift(R, g1), e2 = demushkin_lift(R, g2);
  LieAuto a12 = induced_lie_auto(W, compose(e1, e2));
  CHECK(a12.matrix == mat_mul(induced_lie_auto(W, e1).matrix, induced_lie_auto(W, e2).matrix));
}

TEST_CASE("induced lifts are Lie automorphisms (full basis check)") {
  TruncatedPolyRing R = ring(2);
  LieAlgebra W = build_jacobson_witt(2, 5);
  TruncatedPolyRing B = witt_ring(W);
  PPowerFn pp = [B](const FpVec& v) { return p_power_by_composition(B, v); };
  FpMat g(R.F, 2, 2);
  g.at(0, 1) = 4; g.at(1, 0) = 1;  // det = 1
  LieAuto a = induced_lie_auto(W, weyl_lift(R, g));
  CHECK(is_lie_automorphism(W, a, 0, 1, pp));
}

TEST_CASE("restriction throws when the torus is not normalized") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  Torus t0 = standard_generic_torus(W);
  LieAuto a = induced_lie_auto(W, sample_endo1());
  CHECK_THROWS_AS(restriction_to_torus(a, t0), DoesNotNormalize);
}

TEST_CASE("stabilizing the standard maximal solvable subalgebra") {
  TruncatedPolyRing R = ring(2);
  LieAlgebra W = build_jacobson_witt(2, 5);
  Subspace c = standard_maximal_solvable(W);
  CHECK(stabilizes_subspace(induced_lie_auto(W, identity_endo(R)), c));

  FpMat lower(R.F, 2, 2);
  lower.at(0, 0) = 1; lower.at(1, 0) = 1; lower.at(1, 1) = 1;
  CHECK(stabilizes_subspace(induced_lie_auto(W, weyl_lift(R, lower)), c));

  FpMat upper(R.F, 2, 2);
  upper.at(0, 0) = 1; upper.at(0, 1) = 1; upper.at(1, 1) = 1;
  CHECK(!stabilizes_subspace(induced_lie_auto(W, weyl_lift(R, upper)), c));

  // the mirror orientation swaps which unitriangular side stabilizes
  Subspace m = standard_maximal_solvable(W, SolvableOrientation::kUpper);
  CHECK(stabilizes_subspace(induced_lie_auto(W, weyl_lift(R, upper)), m));
  CHECK(!stabilizes_subspace(induced_lie_auto(W, weyl_lift(R, lower)), m));
}

TEST_CASE("matrix inverse") {
  PrimeField F(5);
  FpMat m(F, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 1) = 1;
  FpMat inv = mat_inverse(m);
  CHECK(inv.at(0, 1) == 4);
  CHECK(mat_mul(m, inv) == FpMat::identity(F, 2));

  FpMat sing(F, 2, 2);
  sing.at(0, 0) = 1; sing.at(0, 1) = 2; sing.at(1, 0) = 2; sing.at(1, 1) = 4;
  CHECK_THROWS_AS(mat_inverse(sing), NotAnAutomorphism);
}

TEST_CASE("enumerating GL_n(F_5)") {
  PrimeField F(5);
  std::vector<FpMat> g1 = all_invertible_matrices(F, 1);
  CHECK(g1.size() == 4);
  std::vector<FpMat> g2 = all_invertible_matrices(F, 2);
  CHECK(g2.size() == 480);
  std::set<std::vector<u32>> seen;
  for (const FpMat& m : g2) {
    CHECK(rref(m).rank == 2);
    seen.insert(m.a);
  }
  CHECK(seen.size() == 480);
}
