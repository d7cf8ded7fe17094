#pragma once

#include <string>

#include "modlie/fp_matrix.hpp"

namespace modlie {

/// B_n = k[x_1..x_n]/(x_i^p): truncated polynomial ring, dim p^n.
/// Monomial indices are packed little-endian base p (x_1 exponent fastest).
/// Elements are FpVec coordinate vectors over the monomial basis.
struct TruncatedPolyRing {
  PrimeField F;
  u32 n = 0;
  u32 dim = 0;  // p^n

  TruncatedPolyRing() = default;
  TruncatedPolyRing(PrimeField f, u32 n_);

  bool operator==(const TruncatedPolyRing& o) const { return F.p == o.F.p && n == o.n; }

  std::vector<u32> exponents(u32 idx) const;
  u32 index(const std::vector<u32>& exps) const;

  /// Product of two monomials; returns dim (sentinel) when an exponent
  /// overflows p-1, i.e. the product is zero in B_n.
  u32 mono_mul(u32 a, u32 b) const;

  FpVec one() const;
  FpVec var(u32 i) const;  // x_{i+1}, 0-based i
  FpVec mul(const FpVec& f, const FpVec& g) const;
  FpVec pow(const FpVec& f, u64 e) const;
  FpVec derivative(u32 i, const FpVec& f) const;
  u32 const_term(const FpVec& f) const { return f[0]; }
  /// (1 + x_i)^e expanded by the binomial theorem.
  FpVec one_plus_var_pow(u32 i, u32 e) const;

  u32 total_degree(u32 idx) const;
  std::string mono_label(u32 idx) const;  // "1", "x1^2 x3", ...
};

}  // namespace modlie
