#include "modlie/divided_power.hpp"

namespace modlie {

DividedPowerAlgebra::DividedPowerAlgebra(PrimeField f, u32 m_, std::vector<u32> nbar_)
    : F(f), m(m_), nbar(std::move(nbar_)) {
  if (nbar.size() != m || m == 0) throw std::invalid_argument("DividedPowerAlgebra: bad nbar");
  u64 d = 1;
  bound.resize(m);
  for (u32 i = 0; i < m; ++i) {
    if (nbar[i] == 0) throw std::invalid_argument("DividedPowerAlgebra: n_i >= 1 required");
    u64 b = 1;
    for (u32 t = 0; t < nbar[i]; ++t) b *= F.p;
    bound[i] = b;
    d *= b;
    if (d > (1u << 26)) throw std::invalid_argument("DividedPowerAlgebra: dimension cap exceeded");
  }
  dim = static_cast<u32>(d);
}

std::vector<u64> DividedPowerAlgebra::exponents(u32 idx) const {
  std::vector<u64> e(m);
  u64 rest = idx;
  for (u32 i = 0; i < m; ++i) {
    e[i] = rest % bound[i];
    rest /= bound[i];
  }
  return e;
}

u32 DividedPowerAlgebra::index(const std::vector<u64>& exps) const {
  u64 idx = 0, mult = 1;
  for (u32 i = 0; i < m; ++i) {
    if (exps[i] >= bound[i]) throw std::invalid_argument("divided power exponent out of range");
    idx += exps[i] * mult;
    mult *= bound[i];
  }
  return static_cast<u32>(idx);
}

DividedPowerAlgebra::MonoProd DividedPowerAlgebra::mono_mul(u32 a, u32 b) const {
  auto ea = exponents(a), eb = exponents(b);
  u32 coeff = 1;
  std::vector<u64> e(m);
  for (u32 i = 0; i < m; ++i) {
    e[i] = ea[i] + eb[i];
    if (e[i] >= bound[i]) return {dim, 0};
    coeff = F.mul(coeff, F.binom(e[i], ea[i]));
  }
  if (coeff == 0) return {dim, 0};
  return {index(e), coeff};
}

FpVec DividedPowerAlgebra::one() const {
  FpVec f(dim, 0);
  f[0] = 1;
  return f;
}

FpVec DividedPowerAlgebra::mul(const FpVec& f, const FpVec& g) const {
  FpVec r(dim, 0);
  for (u32 a = 0; a < dim; ++a) {
    if (f[a] == 0) continue;
    for (u32 b = 0; b < dim; ++b) {
      if (g[b] == 0) continue;
      MonoProd pr = mono_mul(a, b);
      if (pr.idx == dim) continue;
      r[pr.idx] = F.add(r[pr.idx], F.mul(F.mul(f[a], g[b]), pr.coeff));
    }
  }
  return r;
}

u32 DividedPowerAlgebra::mono_derivative(u32 idx, u32 i) const {
  auto e = exponents(idx);
  if (e[i] == 0) return dim;
  e[i] -= 1;
  return index(e);
}

u64 DividedPowerAlgebra::total_degree(u32 idx) const {
  auto e = exponents(idx);
  u64 d = 0;
  for (u64 x : e) d += x;
  return d;
}

std::string DividedPowerAlgebra::mono_label(u32 idx) const {
  if (idx == 0) return "1";
  auto e = exponents(idx);
  std::string s = "x^(";
  for (u32 i = 0; i < m; ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace modlie
