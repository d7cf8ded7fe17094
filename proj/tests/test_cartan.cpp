#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modlie/cartan.hpp"

using namespace modlie;

namespace {

// index of x^a D_{var+1} in W(1;1) is just a for var = 0
FpVec witt1_elem(const LieAlgebra& W, u32 a) { return W.basis_vec(a); }

}  // namespace

TEST_CASE("truncated ring: packing, products, derivatives") {
  TruncatedPolyRing B(PrimeField(5), 2);
  CHECK(B.dim == 25);
  CHECK(B.index({2, 3}) == 2 + 3 * 5);
  CHECK(B.exponents(17) == std::vector<u32>{2, 3});
  CHECK(B.mono_mul(B.index({2, 0}), B.index({2, 0})) == B.index({4, 0}));
  CHECK(B.mono_mul(B.index({3, 0}), B.index({2, 0})) == B.dim);  // x1^5 = 0
  FpVec f = B.mul(B.var(0), B.var(1));  // x1 x2
  CHECK(f[B.index({1, 1})] == 1);
  FpVec df = B.derivative(0, f);
  CHECK(df == B.var(1));
  // (1+x1)^4 = 1 + 4x1 + 6x1^2 + 4x1^3 + x1^4
  FpVec u = B.one_plus_var_pow(0, 4);
  CHECK(u[0] == 1);
  CHECK(u[1] == 4);
  CHECK(u[2] == 1);
  CHECK(u[3] == 4);
  CHECK(u[4] == 1);
}

TEST_CASE("W(1;1): brackets match (b-a) x^{a+b-1} D") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  CHECK(W.dim == 5);
  CHECK(validate_algebra(W).ok);
  auto bra = [&](u32 a, u32 b) { return W.bracket(witt1_elem(W, a), witt1_elem(W, b)); };
  CHECK(bra(0, 1) == witt1_elem(W, 0));                  // [D, xD] = D
  CHECK(bra(1, 2) == witt1_elem(W, 2));                  // [xD, x2D] = x2D
  CHECK(bra(2, 3) == witt1_elem(W, 4));                  // [x2D, x3D] = x4D
  CHECK(is_zero_vec(bra(3, 4)));                         // x6D truncates
  CHECK(bra(0, 3) == vec_scale(W.F, 3, witt1_elem(W, 2)));
}

TEST_CASE("W(1;1): p-map fixes xD and kills everything else on the basis") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  for (u32 a = 0; a < 5; ++a) {
    FpVec expect = a == 1 ? witt1_elem(W, 1) : W.zero();
    CHECK(W.pmap.row(a) == expect);
  }
}

TEST_CASE("derivation operators on B_1") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  TruncatedPolyRing B = witt_ring(W);
  FpVec x3(B.dim, 0);
  x3[3] = 1;
  // D(x^3) = 3x^2
  FpVec d = apply_derivation(B, witt1_elem(W, 0), x3);
  CHECK(d[2] == 3);
  FpMat op = derivation_operator(B, witt1_elem(W, 1));  // xD is diagonal
  for (u32 a = 0; a < 5; ++a) CHECK(op.at(a, a) == a);
  CHECK(operator_to_derivation(B, op) == witt1_elem(W, 1));
}

TEST_CASE("composition p-power agrees with jacobson and fixes the torus") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  TruncatedPolyRing B = witt_ring(W);
  // (1+x)D is toral
  FpVec t = vec_add(W.F, witt1_elem(W, 0), witt1_elem(W, 1));
  CHECK(p_power_by_composition(B, t) == t);
  CHECK(jacobson_p_power(W, t) == t);
  // D + x^2 D: independent routes must agree even when the value is not obvious
  FpVec u = vec_add(W.F, witt1_elem(W, 0), witt1_elem(W, 2));
  CHECK(jacobson_p_power(W, u) == p_power_by_composition(B, u));
}

TEST_CASE("W(2;1): dim 50, sample brackets") {
  LieAlgebra W = build_jacobson_witt(2, 5);
  TruncatedPolyRing B = witt_ring(W);
  CHECK(W.dim == 50);
  FpVec d1 = W.basis_vec(witt_index(B, 0, 0));
  FpVec x1d2 = W.basis_vec(witt_index(B, 1, B.index({1, 0})));
  FpVec d2 = W.basis_vec(witt_index(B, 1, 0));
  CHECK(W.bracket(d1, x1d2) == d2);  // [D1, x1 D2] = D2
  FpVec x1d1 = W.basis_vec(witt_index(B, 0, B.index({1, 0})));
  CHECK(W.bracket(x1d1, x1d2) == x1d2);  // [x1 D1, x1 D2] = x1 D2
  CHECK(is_zero_vec(W.bracket(d1, d2)));
}

TEST_CASE("W(1;(2)): divided-power brackets, no p-map") {
  LieAlgebra W = build_witt_general(1, {2}, 5);
  CHECK(W.dim == 25);
  CHECK(!W.has_pmap);
  CHECK(validate_algebra(W).ok);
  auto e = [&](u32 a) { return W.basis_vec(a); };
  // [x^(a)D, x^(b)D] = (C(a+b-1,a) - C(a+b-1,b)) x^(a+b-1)D
  CHECK(W.bracket(e(0), e(2)) == e(1));                    // C(1,0) - C(1,2) = 1
  CHECK(W.bracket(e(1), e(2)) == e(2));                    // C(2,1) - C(2,2) = 1
  CHECK(is_zero_vec(W.bracket(e(4), e(2))));               // C(5,4) = C(5,2) = 0
  CHECK(W.bracket(e(5), e(1)) == e(5));                    // C(5,5) - C(5,1) = 1 - 0
  CHECK(W.bracket(e(1), e(5)) == vec_scale(W.F, 4, e(5))); // antisymmetric partner
  CHECK(W.bracket(e(23), e(2)) == vec_scale(W.F, 3, e(24)));  // C(24,23)-C(24,2) = 4-1
}

TEST_CASE("divided-to-truncated rescaling carries W(1;(1)) onto W(1;1)") {
  LieAlgebra Wdp = build_witt_general(1, {1}, 5);
  LieAlgebra Wtr = build_jacobson_witt(1, 5);
  DividedPowerAlgebra A = witt_dp_algebra(Wdp);
  FpVec scale = divided_to_truncated_scale(A);
  auto carry = [&](const FpVec& v) {
    FpVec w(v.size());
    for (size_t k = 0; k < v.size(); ++k) w[k] = Wdp.F.mul(scale[k], v[k]);
    return w;
  };
  for (u32 i = 0; i < 5; ++i)
    for (u32 j = 0; j < 5; ++j) {
      FpVec lhs = carry(Wdp.bracket(Wdp.basis_vec(i), Wdp.basis_vec(j)));
      FpVec rhs = Wtr.bracket(carry(Wdp.basis_vec(i)), carry(Wdp.basis_vec(j)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("classical algebras") {
  LieAlgebra sl2 = build_classical(ClassicalType::kSl, 2, 5);
  CHECK(sl2.dim == 3);
  CHECK(validate_algebra(sl2).ok);
  // [E12, E21] = H1
  CHECK(sl2.bracket(sl2.basis_vec(0), sl2.basis_vec(1)) == sl2.basis_vec(2));
  CHECK(sl2.pmap.row(2) == sl2.basis_vec(2));  // H^[5] = H
  CHECK(is_zero_vec(sl2.pmap.row(0)));

  LieAlgebra gl2 = build_classical(ClassicalType::kGl, 2, 5);
  CHECK(gl2.dim == 4);
  CHECK(validate_algebra(gl2).ok);
  CHECK(centralizer(gl2, full_subspace(gl2.F, 4)).dim() == 1);  // scalars
}

TEST_CASE("S(2;1) validates; S(3;1) has dim 248") {
  LieAlgebra S2 = build_special_S(2, 5);
  CHECK(S2.dim == 24);  // (n-1)(p^n - 1)
  CHECK(S2.has_pmap);
  CHECK(validate_algebra(S2).ok);
  LieAlgebra S3 = build_special_S(3, 5, /*with_pmap=*/false);
  CHECK(S3.dim == 248);
}

TEST_CASE("H(2;1)^(2) validates at dim 23") {
  LieAlgebra H = build_hamiltonian_H(2, 5);
  CHECK(H.dim == 23);  // p^2 - 2
  CHECK(H.has_pmap);
  CHECK(validate_algebra(H).ok);
}

TEST_CASE("generic torus of W(2;1) is (1+x_i)D_i") {
  LieAlgebra W = build_jacobson_witt(2, 5);
  TruncatedPolyRing B = witt_ring(W);
  Torus t0 = standard_generic_torus(W);
  REQUIRE(t0.dim() == 2);
  FpVec r0 = t0.span.basis.row(0), r1 = t0.span.basis.row(1);
  CHECK(r0[witt_index(B, 0, 0)] == 1);
  CHECK(r0[witt_index(B, 0, B.index({1, 0}))] == 1);
  CHECK(r1[witt_index(B, 1, 0)] == 1);
  CHECK(r1[witt_index(B, 1, B.index({0, 1}))] == 1);
  for (u32 i = 0; i < 2; ++i) CHECK(is_toral(W, t0.span.basis.row(i)));
}

TEST_CASE("standard maximal solvable subalgebra") {
  LieAlgebra W = build_jacobson_witt(2, 5);
  TruncatedPolyRing B = witt_ring(W);
  Torus t0 = standard_generic_torus(W);
  Subspace c = standard_maximal_solvable(W);
  CHECK(c.dim() == 12);  // 2(p^2-1)/(p-1)
  CHECK(is_bracket_closed(W, c));
  CHECK(subspace_leq(t0.span, c));
  std::vector<u32> dims;
  for (const Subspace& s : derived_series(W, c)) dims.push_back(s.dim());
  CHECK(dims == std::vector<u32>{12, 11, 9, 5, 0});

  // kUpper swaps the variable roles; same dimensions, different space
  Subspace m = standard_maximal_solvable(W, SolvableOrientation::kUpper);
  CHECK(m.dim() == 12);
  CHECK(is_bracket_closed(W, m));
  CHECK(is_solvable(W, m));
  CHECK(!(m == c));
  // the orientations meet exactly in span{u_i D_i, u_i^2 D_i}
  Subspace meet = intersect_subspaces(c, m);
  CHECK(meet.dim() == 4);
  for (u32 i = 0; i < 2; ++i)
    for (u32 e = 1; e <= 2; ++e)
      CHECK(meet.contains(function_times_D(B, i, B.one_plus_var_pow(i, e))));
}

TEST_CASE("standard maximal solvable at n = 1 and n = 3") {
  LieAlgebra W1 = build_jacobson_witt(1, 5);
  TruncatedPolyRing B1 = witt_ring(W1);
  Subspace c1 = standard_maximal_solvable(W1);
  CHECK(c1.dim() == 2);  // span{(1+x)D, (1+x)^2 D}
  CHECK(c1.contains(function_times_D(B1, 0, B1.one_plus_var_pow(0, 1))));
  CHECK(c1.contains(function_times_D(B1, 0, B1.one_plus_var_pow(0, 2))));
  CHECK(is_bracket_closed(W1, c1));
  CHECK(is_solvable(W1, c1));

  LieAlgebra W3 = build_jacobson_witt(3, 5);
  Subspace c3 = standard_maximal_solvable(W3);
  CHECK(c3.dim() == 62);  // 2(p^3-1)/(p-1)
  CHECK(is_bracket_closed(W3, c3));
  CHECK(is_solvable(W3, c3));
  CHECK(subspace_leq(standard_generic_torus(W3).span, c3));
}

TEST_CASE("grading: degrees and bracket compatibility") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  std::vector<int> g = witt_grading(W);
  CHECK(g == std::vector<int>{-1, 0, 1, 2, 3});
  // [x^2D, x^3D] has degree 1+2
  FpVec b = W.bracket(W.basis_vec(2), W.basis_vec(3));
  for (u32 k = 0; k < W.dim; ++k)
    if (b[k]) CHECK(g[k] == 3);
}
