#include "modlie/poly_ring.hpp"

namespace modlie {

TruncatedPolyRing::TruncatedPolyRing(PrimeField f, u32 n_) : F(f), n(n_) {
  u64 d = 1;
  for (u32 i = 0; i < n; ++i) {
    d *= F.p;
    if (d > (1u << 26)) throw std::invalid_argument("TruncatedPolyRing: dimension cap exceeded");
  }
  dim = static_cast<u32>(d);
}

std::vector<u32> TruncatedPolyRing::exponents(u32 idx) const {
  std::vector<u32> e(n);
  for (u32 i = 0; i < n; ++i) {
    e[i] = idx % F.p;
    idx /= F.p;
  }
  return e;
}

u32 TruncatedPolyRing::index(const std::vector<u32>& exps) const {
  u32 idx = 0, mult = 1;
  for (u32 i = 0; i < n; ++i) {
    if (exps[i] >= F.p) throw std::invalid_argument("monomial exponent out of range");
    idx += exps[i] * mult;
    mult *= F.p;
  }
  return idx;
}

u32 TruncatedPolyRing::mono_mul(u32 a, u32 b) const {
  u32 idx = 0, mult = 1;
  for (u32 i = 0; i < n; ++i) {
    u32 e = a % F.p + b % F.p;
    if (e >= F.p) return dim;
    idx += e * mult;
    mult *= F.p;
    a /= F.p;
    b /= F.p;
  }
  return idx;
}

FpVec TruncatedPolyRing::one() const {
  FpVec f(dim, 0);
  f[0] = 1;
  return f;
}

FpVec TruncatedPolyRing::var(u32 i) const {
  std::vector<u32> e(n, 0);
  e[i] = 1;
  FpVec f(dim, 0);
  f[index(e)] = 1;
  return f;
}

FpVec TruncatedPolyRing::mul(const FpVec& f, const FpVec& g) const {
  FpVec r(dim, 0);
  for (u32 a = 0; a < dim; ++a) {
    if (f[a] == 0) continue;
    for (u32 b = 0; b < dim; ++b) {
      if (g[b] == 0) continue;
      u32 m = mono_mul(a, b);
      if (m == dim) continue;
      r[m] = F.add(r[m], F.mul(f[a], g[b]));
    }
  }
  return r;
}

FpVec TruncatedPolyRing::pow(const FpVec& f, u64 e) const {
  FpVec r = one(), base = f;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FpVec TruncatedPolyRing::derivative(u32 i, const FpVec& f) const {
  FpVec r(dim, 0);
  u32 mult = 1;
  for (u32 t = 0; t < i; ++t) mult *= F.p;
  for (u32 a = 0; a < dim; ++a) {
    if (f[a] == 0) continue;
    u32 e = (a / mult) % F.p;
    if (e == 0) continue;
    r[a - mult] = F.add(r[a - mult], F.mul(f[a], e));
  }
  return r;
}

FpVec TruncatedPolyRing::one_plus_var_pow(u32 i, u32 e) const {
  FpVec r(dim, 0);
  std::vector<u32> exps(n, 0);
  for (u32 k = 0; k <= e && k < F.p; ++k) {
    exps[i] = k;
    r[index(exps)] = F.add(r[index(exps)], F.binom(e, k));
  }
  return r;
}

u32 TruncatedPolyRing::total_degree(u32 idx) const {
  u32 d = 0;
  for (u32 i = 0; i < n; ++i) {
    d += idx % F.p;
    idx /= F.p;
  }
  return d;
}

std::string TruncatedPolyRing::mono_label(u32 idx) const {
  auto e = exponents(idx);
  std::string s;
  for (u32 i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace modlie
