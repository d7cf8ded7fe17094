#include "modlie/fp.hpp"

namespace modlie {

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(u32 p_, bool allow_small) : p(p_) {
  if (!is_prime_u32(p)) throw std::invalid_argument("PrimeField: p is not prime");
  if (!allow_small && p < 5) throw std::invalid_argument("PrimeField: p >= 5 required");
}

u32 PrimeField::pow(u32 a, u64 e) const {
  u64 base = a % p, r = 1;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 PrimeField::inv(u32 a) const {
  a %= p;
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p - 2);
}

u32 PrimeField::factorial(u32 n) const {
  if (n >= p) throw std::domain_error("PrimeField::factorial: n >= p");
  u32 r = 1;
  for (u32 i = 2; i <= n; ++i) r = mul(r, i);
  return r;
}

u32 PrimeField::binom(u64 n, u64 k) const {
  if (k > n) return 0;
  u32 r = 1;
  while (n || k) {
    u32 nd = static_cast<u32>(n % p), kd = static_cast<u32>(k % p);
    if (kd > nd) return 0;
    // binom(nd, kd) with nd < p, all factors invertible
    u32 num = 1, den = 1;
    for (u32 i = 0; i < kd; ++i) {
      num = mul(num, nd - i);
      den = mul(den, i + 1);
    }
    r = mul(r, mul(num, inv(den)));
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace modlie
