#pragma once

#include <string>

#include "modlie/fp_matrix.hpp"

namespace modlie {

/// Divided power algebra A(m; nbar) with basis x^(a), 0 <= a_i < p^{n_i},
/// dim p^{|nbar|}. Product rule on basis elements:
///   x^(a) x^(b) = prod_i binom(a_i + b_i, a_i) * x^(a+b),
/// zero when some a_i + b_i >= p^{n_i}. Indices pack mixed-radix with the
/// first variable fastest.
struct DividedPowerAlgebra {
  PrimeField F;
  u32 m = 0;
  std::vector<u32> nbar;
  std::vector<u64> bound;  // p^{n_i}
  u32 dim = 0;

  DividedPowerAlgebra() = default;
  DividedPowerAlgebra(PrimeField f, u32 m_, std::vector<u32> nbar_);

  std::vector<u64> exponents(u32 idx) const;
  u32 index(const std::vector<u64>& exps) const;

  struct MonoProd {
    u32 idx;   // dim when the product is zero
    u32 coeff;
  };
  MonoProd mono_mul(u32 a, u32 b) const;

  FpVec one() const;
  FpVec mul(const FpVec& f, const FpVec& g) const;
  /// x^(a - eps_i), the divided-power partial derivative of x^(a); dim if a_i = 0.
  u32 mono_derivative(u32 idx, u32 i) const;

  u64 total_degree(u32 idx) const;
  std::string mono_label(u32 idx) const;  // "x^(0,3)" style, "1" for zero index
};

}  // namespace modlie
