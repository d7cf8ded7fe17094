#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modlie/lie_algebra.hpp"

using namespace modlie;

namespace {

// sl_2 by hand: e=0, f=1, h=2 with [e,f]=h, [h,e]=2e, [h,f]=-2f,
// e^[5]=f^[5]=0, h^[5]=h (5th powers of the defining 2x2 matrices)
LieAlgebra hand_sl2() {
  PrimeField F(5);
  LieAlgebra L(F, 3);
  L.labels = {"e", "f", "h"};
  L.set_bracket(0, 1, {{2, 1}});
  L.set_bracket(2, 0, {{0, 2}});
  L.set_bracket(2, 1, {{1, 3}});
  L.has_pmap = true;
  L.pmap = FpMat(F, 3, 3);
  L.pmap.at(2, 2) = 1;
  return L;
}

}  // namespace

TEST_CASE("hand sl_2 passes validation") {
  LieAlgebra L = hand_sl2();
  ValidationReport rep = validate_algebra(L);
  CHECK(rep.ok);
  CHECK(rep.pmap_checked);
  CHECK(rep.antisym_failures == 0);
  CHECK(rep.jacobi_failures == 0);
  CHECK(rep.restrict_failures == 0);
}

TEST_CASE("bracket of coordinate vectors") {
  LieAlgebra L = hand_sl2();
  FpVec e = L.basis_vec(0), f = L.basis_vec(1), h = L.basis_vec(2);
  CHECK(L.bracket(e, f) == h);
  CHECK(L.bracket(f, e) == vec_scale(L.F, 4, h));
  CHECK(L.bracket(h, e) == vec_scale(L.F, 2, e));
  CHECK(is_zero_vec(L.bracket(h, h)));
  // bilinearity: [h, 2e+3f] = 2*2e + 3*3f = 4e + 4f
  FpVec u = vec_add(L.F, vec_scale(L.F, 2, e), vec_scale(L.F, 3, f));
  FpVec expect = vec_add(L.F, vec_scale(L.F, 4, e), vec_scale(L.F, 4, f));
  CHECK(L.bracket(h, u) == expect);
}

TEST_CASE("ad matrix of h is diag(2,3,0)") {
  LieAlgebra L = hand_sl2();
  FpMat M = L.ad(L.basis_vec(2));
  CHECK(M.at(0, 0) == 2);
  CHECK(M.at(1, 1) == 3);
  CHECK(M.at(2, 2) == 0);
  CHECK(M == L.ad_basis(2));
}

TEST_CASE("jacobson p-power on sl_2, matrix oracles") {
  LieAlgebra L = hand_sl2();
  FpVec e = L.basis_vec(0), f = L.basis_vec(1), h = L.basis_vec(2);
  // (e+f) is [[0,1],[1,0]], squares to I, so its 5th power is itself
  FpVec ef = vec_add(L.F, e, f);
  CHECK(jacobson_p_power(L, ef) == ef);
  // (h+e) = [[1,1],[0,-1]] also squares to I
  FpVec he = vec_add(L.F, h, e);
  CHECK(jacobson_p_power(L, he) == he);
  // e+4f = [[0,1],[4,0]]: square is 4I, 5th power is the matrix again
  FpVec e4f = vec_add(L.F, e, vec_scale(L.F, 4, f));
  CHECK(jacobson_p_power(L, e4f) == e4f);
  // scalars of F_p are p-th-power fixed: (3h)^[5] = 3h, (2e)^[5] = 0
  CHECK(jacobson_p_power(L, vec_scale(L.F, 3, h)) == vec_scale(L.F, 3, h));
  CHECK(is_zero_vec(jacobson_p_power(L, vec_scale(L.F, 2, e))));
}

TEST_CASE("validation catches a broken antisymmetry entry") {
  LieAlgebra L = hand_sl2();
  L.set_sc_raw(1, 0, {{2, 1}});  // [f,e] should be -h
  ValidationReport rep = validate_algebra(L);
  CHECK(!rep.ok);
  CHECK(rep.antisym_failures > 0);
}

TEST_CASE("validation catches a Jacobi violation") {
  LieAlgebra L = hand_sl2();
  L.set_bracket(0, 1, {{0, 1}});  // [e,f] = e breaks Jacobi with h
  ValidationReport rep = validate_algebra(L);
  CHECK(!rep.ok);
  CHECK(rep.jacobi_failures > 0);
}

TEST_CASE("validation catches a wrong p-map row") {
  LieAlgebra L = hand_sl2();
  L.pmap.at(0, 0) = 1;  // e^[5] = e is false: ad(e)^5 != ad(e)
  ValidationReport rep = validate_algebra(L);
  CHECK(!rep.ok);
  CHECK(rep.restrict_failures > 0);
}

TEST_CASE("derived series: sl_2 is perfect, its Borel is solvable") {
  LieAlgebra L = hand_sl2();
  Subspace full = full_subspace(L.F, 3);
  std::vector<Subspace> chain = derived_series(L, full);
  CHECK(chain.back().dim() == 3);
  CHECK(!is_solvable(L, full));

  Subspace borel = subspace_from_vectors(L.F, {L.basis_vec(0), L.basis_vec(2)}, 3);
  std::vector<Subspace> bchain = derived_series(L, borel);
  REQUIRE(bchain.size() == 3);
  CHECK(bchain[0].dim() == 2);
  CHECK(bchain[1].dim() == 1);
  CHECK(bchain[2].dim() == 0);
  CHECK(is_solvable(L, borel));
}

TEST_CASE("derived series rejects non-subalgebras") {
  LieAlgebra L = hand_sl2();
  Subspace not_closed = subspace_from_vectors(L.F, {L.basis_vec(0), L.basis_vec(1)}, 3);
  CHECK_THROWS(derived_series(L, not_closed));
}

TEST_CASE("centralizers in sl_2") {
  LieAlgebra L = hand_sl2();
  Subspace hspan = subspace_from_vectors(L.F, {L.basis_vec(2)}, 3);
  Subspace c = centralizer(L, hspan);
  CHECK(c.dim() == 1);
  CHECK(c.contains(L.basis_vec(2)));
  CHECK(centralizer(L, full_subspace(L.F, 3)).dim() == 0);  // trivial center
}

TEST_CASE("subalgebra closure of {e, f} is everything") {
  LieAlgebra L = hand_sl2();
  Subspace S = subalgebra_closure(L, {L.basis_vec(0), L.basis_vec(1)});
  CHECK(S.dim() == 3);
}

TEST_CASE("promoting the Borel keeps its structure") {
  LieAlgebra L = hand_sl2();
  Subspace borel = subspace_from_vectors(L.F, {L.basis_vec(0), L.basis_vec(2)}, 3);
  PromotedAlgebra P = promote_subalgebra(L, borel, /*with_pmap=*/true);
  CHECK(P.algebra.dim == 2);
  CHECK(validate_algebra(P.algebra).ok);
  // the promoted bracket of the two basis vectors is nonzero (it is ±2e)
  FpVec br = P.algebra.bracket(P.algebra.basis_vec(0), P.algebra.basis_vec(1));
  CHECK(!is_zero_vec(br));
  // and maps back into the Borel
  CHECK(borel.contains(P.to_ambient(br)));
}

TEST_CASE("promotion rejects a subspace that is not bracket-closed") {
  LieAlgebra L = hand_sl2();
  // [e,f] = h leaves span{e,f}
  Subspace S = subspace_from_vectors(L.F, {L.basis_vec(0), L.basis_vec(1)}, 3);
  CHECK_THROWS(promote_subalgebra(L, S, false));
}
