#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modlie/cartan.hpp"
#include "modlie/weights.hpp"

using namespace modlie;

TEST_CASE("W(1;1) under the generic torus: five weight lines") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  Torus t0 = standard_generic_torus(W);
  WeightDecomposition wd = decompose(W, t0);

  CHECK(wd.module_dim == 5);
  CHECK(wd.table.size() == 5);
  for (auto& [chi, d] : wd.table) CHECK(d == 1);
  CHECK(wd.zero_space == t0.span);

  // lambda = 1 eigenvector of ad((1+x)D): recursion (a+1)c_{a+1} = (2-a)c_a
  // from c_0 = 1 gives (1, 2, 1, 0, 0)
  FpVec v{1, 2, 1, 0, 0};
  Character one{1};
  REQUIRE(wd.spaces.count(one) == 1);
  CHECK(wd.spaces.at(one).contains(v));
  CHECK(wd.spaces.at(one).dim() == 1);

  CHECK(verify_decomposition(W, wd));
  CHECK(coverage_check(wd).full);
  EqualDimsReport eq = equal_dims_check(wd);
  CHECK(eq.equal);
  CHECK(eq.common_dim == 1);
  DimensionIdentityReport di = dimension_identity_check(W, nullptr, wd);
  CHECK(di.applicable);
  CHECK(di.holds);
  CHECK(di.rhs == 1 + 4 * 1);
  CHECK(bracket_additivity_check(W, wd).ok);
  CHECK(weight_dim_multiset(wd) == std::vector<u32>{1, 1, 1, 1, 1});
}

TEST_CASE("W(1;1) under the torus spanned by xD: same multiset, different zero space") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  Torus t = torus_generated(W, {W.basis_vec(1)});
  REQUIRE(t.dim() == 1);
  WeightDecomposition wd = decompose(W, t);
  // ad(xD) x^a D = (a-1) x^a D: one line per eigenvalue 4,0,1,2,3
  CHECK(weight_dim_multiset(wd) == std::vector<u32>{1, 1, 1, 1, 1});
  CHECK(wd.zero_space == t.span);
  Character three{3};
  CHECK(wd.spaces.at(three).contains(W.basis_vec(4)));
}

TEST_CASE("sl_2 misses the characters 1 and 4") {
  LieAlgebra sl2 = build_classical(ClassicalType::kSl, 2, 5);
  Torus t = torus_generated(sl2, {sl2.basis_vec(2)});  // h
  WeightDecomposition wd = decompose(sl2, t);
  CHECK(wd.table.size() == 3);
  CHECK(wd.table.at(Character{0}) == 1);
  CHECK(wd.table.at(Character{2}) == 1);
  CHECK(wd.table.at(Character{3}) == 1);
  CoverageReport cov = coverage_check(wd);
  CHECK(!cov.full);
  CHECK(cov.missing == std::vector<Character>{{1}, {4}});
  CHECK(!dimension_identity_check(sl2, nullptr, wd).applicable);
  CHECK(verify_decomposition(sl2, wd));
}

TEST_CASE("W(2;1): 24 nonzero weights of dimension 2") {
  LieAlgebra W = build_jacobson_witt(2, 5);
  Torus t0 = standard_generic_torus(W);
  WeightDecomposition wd = decompose(W, t0);
  CHECK(wd.module_dim == 50);
  CHECK(wd.table.size() == 25);
  CHECK(wd.zero_space.dim() == 2);
  EqualDimsReport eq = equal_dims_check(wd);
  CHECK(eq.equal);
  CHECK(eq.common_dim == 2);
  DimensionIdentityReport di = dimension_identity_check(W, nullptr, wd);
  CHECK(di.holds);
  CHECK(di.rhs == 2 + 24 * 2);
  CHECK(verify_decomposition(W, wd));
  CHECK(bracket_additivity_check(W, wd).ok);
}

TEST_CASE("fiber counts under a rank-1 subtorus of the W(2;1) torus") {
  LieAlgebra W = build_jacobson_witt(2, 5);
  Torus t0 = standard_generic_torus(W);
  WeightDecomposition wd = decompose(W, t0);
  Torus sub = torus_generated(W, {t0.span.basis.row(0)});
  REQUIRE(sub.dim() == 1);
  FiberReport fr = fiber_count_check(W, wd, sub);
  CHECK(fr.ok);
  CHECK(fr.sub_dim == 1);
  CHECK(fr.complement_dim == 1);
  CHECK(fr.expected_fiber == 5);
  CHECK(fr.counts_checked);
  for (auto& [beta, cnt] : fr.fiber_counts) {
    if (is_zero_vec(beta)) CHECK(cnt == 4);
    else CHECK(cnt == 5);
  }
  CHECK(fr.restriction_consistent);
}

TEST_CASE("module-restricted decomposition") {
  LieAlgebra sl2 = build_classical(ClassicalType::kSl, 2, 5);
  Torus t = torus_generated(sl2, {sl2.basis_vec(2)});
  Subspace borel = subspace_from_vectors(sl2.F, {sl2.basis_vec(0), sl2.basis_vec(2)}, 3);
  WeightDecomposition wd = decompose(sl2, t, &borel);
  CHECK(wd.module_dim == 2);
  CHECK(wd.table.size() == 2);
  CHECK(wd.table.at(Character{0}) == 1);
  CHECK(wd.table.at(Character{2}) == 1);
  CHECK(verify_decomposition(sl2, wd, &borel));

  // span{e + f} is not t-stable
  Subspace bad = subspace_from_vectors(
      sl2.F, {vec_add(sl2.F, sl2.basis_vec(0), sl2.basis_vec(1))}, 3);
  CHECK_THROWS_AS(decompose(sl2, t, &bad), std::domain_error);
}

TEST_CASE("decompose rejects a non-toral span") {
  LieAlgebra W = build_jacobson_witt(1, 5);
  Torus fake;
  fake.span = subspace_from_vectors(W.F, {W.basis_vec(0)}, 5);  // D is nilpotent
  CHECK_THROWS_AS(decompose(W, fake), std::domain_error);
}
