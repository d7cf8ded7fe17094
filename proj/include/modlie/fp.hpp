#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace modlie {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime_u32(u32 n);

/// Prime field F_p, scalars stored as canonical representatives 0..p-1.
/// The standing hypothesis everywhere in this project is p >= 5; the
/// `allow_small` escape hatch exists only for unit tests of the field itself.
struct PrimeField {
  u32 p = 0;

  PrimeField() = default;
  explicit PrimeField(u32 p_, bool allow_small = false);

  bool operator==(const PrimeField& o) const { return p == o.p; }

  u32 norm(long long a) const {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<u32>(r);
  }
  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p ? s - p : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<u64>(a) * b % p); }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;

  /// n! mod p, requires n < p.
  u32 factorial(u32 n) const;

  /// binom(n, k) mod p by Lucas' theorem (digit-wise base-p binomials).
  u32 binom(u64 n, u64 k) const;
};

}  // namespace modlie
