#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "modlie/fp_matrix.hpp"

using namespace modlie;

namespace {

FpMat random_mat(const PrimeField& F, u32 r, u32 c, std::mt19937_64& rng) {
  FpMat M(F, r, c);
  for (auto& x : M.a) x = static_cast<u32>(rng() % F.p);
  return M;
}

}  // namespace

TEST_CASE("parallel product matches the serial reference") {
  PrimeField F(5);
  std::mt19937_64 rng(42);
  for (auto [r, k, c] : {std::tuple<u32, u32, u32>{1, 1, 1},
                         {3, 7, 2},
                         {16, 16, 16},
                         {33, 65, 17},
                         {64, 64, 64},
                         {128, 96, 128}}) {
    FpMat A = random_mat(F, r, k, rng);
    FpMat B = random_mat(F, k, c, rng);
    FpMat S = mat_mul_serial(A, B);
    CHECK(mat_mul_parallel(A, B) == S);
    CHECK(mat_mul(A, B) == S);
  }
}

TEST_CASE("dispatcher agrees across the size threshold") {
  PrimeField F(7);
  std::mt19937_64 rng(7);
  // 65^3 > 2^18 forces the parallel path; 8^3 stays serial
  for (u32 n : {8u, 65u}) {
    FpMat A = random_mat(F, n, n, rng);
    FpMat B = random_mat(F, n, n, rng);
    CHECK(mat_mul(A, B) == mat_mul_serial(A, B));
  }
}

TEST_CASE("matrix powers") {
  PrimeField F(5);
  std::mt19937_64 rng(3);
  FpMat A = random_mat(F, 20, 20, rng);
  FpMat prod = FpMat::identity(F, 20);
  for (int e = 0; e <= 6; ++e) {
    CHECK(mat_pow(A, e) == prod);
    prod = mat_mul_serial(prod, A);
  }
}

TEST_CASE("vector kernels") {
  PrimeField F(5);
  std::mt19937_64 rng(9);
  FpVec u(40), v(40);
  for (auto& x : u) x = static_cast<u32>(rng() % 5);
  for (auto& x : v) x = static_cast<u32>(rng() % 5);
  FpVec sum = vec_add(F, u, v), diff = vec_sub(F, u, v);
  for (u32 i = 0; i < 40; ++i) {
    CHECK(sum[i] == (u[i] + v[i]) % 5);
    CHECK(diff[i] == (u[i] + 5 - v[i]) % 5);
  }
  FpVec acc = u;
  vec_add_scaled(F, acc, 3, v);
  CHECK(acc == vec_add(F, u, vec_scale(F, 3, v)));
}
