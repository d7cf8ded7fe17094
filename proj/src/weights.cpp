#include "modlie/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace modlie {

namespace {

Character decode_character(const PrimeField& F, u64 code, u32 mu) {
  Character chi(mu, 0);
  for (u32 i = 0; i < mu; ++i) {
    chi[i] = static_cast<u32>(code % F.p);
    code /= F.p;
  }
  return chi;
}

u64 pow_u64(u64 b, u32 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

WeightDecomposition decompose(const LieAlgebra& L, const Torus& t, const Subspace* module) {
  const PrimeField& F = L.F;
  const u32 mu = t.dim();
  const Subspace V = module ? *module : full_subspace(F, L.dim);
  const u32 d = V.dim();

  for (u32 i = 0; i < mu; ++i) {
    FpVec ti = t.span.basis.row(i);
    if (L.has_pmap && !is_toral(L, ti))
      throw std::domain_error("decompose: basis element is not toral");
    for (u32 j = i + 1; j < mu; ++j)
      if (!is_zero_vec(L.bracket(ti, t.span.basis.row(j))))
        throw std::domain_error("decompose: toral basis does not commute");
  }

  // matrices of ad t_i on the module, in module coordinates
  std::vector<FpMat> act;
  for (u32 i = 0; i < mu; ++i) {
    FpMat A(F, d, d);
    FpVec ti = t.span.basis.row(i);
    for (u32 j = 0; j < d; ++j) {
      auto c = V.coordinates(L.bracket(ti, V.basis.row(j)));
      if (!c) throw std::domain_error("decompose: module is not torus-stable");
      for (u32 r = 0; r < d; ++r) A.at(r, j) = (*c)[r];
    }
    act.push_back(std::move(A));
  }

  const u64 total = pow_u64(F.p, mu);
  std::vector<Subspace> found(total, zero_subspace(F, L.dim));

#pragma omp parallel for schedule(dynamic)
  for (long long codell = 0; codell < static_cast<long long>(total); ++codell) {
    const u64 code = static_cast<u64>(codell);
    Character chi = decode_character(F, code, mu);
    FpMat stacked(F, mu * d, d);
    for (u32 i = 0; i < mu; ++i)
      for (u32 r = 0; r < d; ++r)
        for (u32 c = 0; c < d; ++c) {
          u32 v = act[i].at(r, c);
          if (r == c) v = F.sub(v, chi[i]);
          stacked.at(i * d + r, c) = v;
        }
    FpMat ker = kernel_basis(stacked);
    if (ker.rows == 0) continue;
    std::vector<FpVec> ambient;
    for (u32 r = 0; r < ker.rows; ++r) {
      FpVec k = ker.row(r);
      FpVec v(L.dim, 0);
      for (u32 j = 0; j < d; ++j) vec_add_scaled(F, v, k[j], V.basis.row(j));
      ambient.push_back(std::move(v));
    }
    found[code] = subspace_from_vectors(F, ambient, L.dim);
  }

  WeightDecomposition wd;
  wd.torus = t;
  wd.module_dim = d;
  wd.zero_space = zero_subspace(F, L.dim);
  u32 covered = 0;
  for (u64 code = 0; code < total; ++code) {
    if (found[code].dim() == 0) continue;
    Character chi = decode_character(F, code, mu);
    covered += found[code].dim();
    wd.table[chi] = found[code].dim();
    if (code == 0) wd.zero_space = found[code];
    wd.spaces[chi] = std::move(found[code]);
  }
  if (covered != d)
    throw std::domain_error("decompose: weight spaces do not partition the module");
  return wd;
}

bool verify_decomposition(const LieAlgebra& L, const WeightDecomposition& wd,
                          const Subspace* module) {
  const PrimeField& F = L.F;
  const u32 mu = wd.torus.dim();
  u32 covered = 0;
  for (const auto& [chi, S] : wd.spaces) {
    if (chi.size() != mu || wd.table.at(chi) != S.dim() || S.dim() == 0) return false;
    covered += S.dim();
    for (u32 j = 0; j < S.dim(); ++j) {
      FpVec u = S.basis.row(j);
      if (module && !module->contains(u)) return false;
      for (u32 i = 0; i < mu; ++i) {
        FpVec lhs = L.bracket(wd.torus.span.basis.row(i), u);
        if (lhs != vec_scale(F, chi[i], u)) return false;
      }
    }
  }
  const u32 d = module ? module->dim() : L.dim;
  return covered == d && d == wd.module_dim;
}

CoverageReport coverage_check(const WeightDecomposition& wd) {
  const PrimeField& F = wd.torus.span.basis.F;
  const u32 mu = wd.torus.dim();
  CoverageReport rep;
  const u64 total = pow_u64(F.p, mu);
  for (u64 code = 1; code < total; ++code) {
    Character chi = decode_character(F, code, mu);
    if (!wd.table.count(chi)) rep.missing.push_back(std::move(chi));
  }
  rep.full = rep.missing.empty();
  return rep;
}

EqualDimsReport equal_dims_check(const WeightDecomposition& wd) {
  EqualDimsReport rep;
  rep.equal = true;
  Character first_chi;
  for (const auto& [chi, dim] : wd.table) {
    if (is_zero_vec(chi)) continue;
    if (rep.common_dim == 0) {
      rep.common_dim = dim;
      first_chi = chi;
    } else if (dim != rep.common_dim) {
      rep.equal = false;
      rep.violating = {first_chi, chi};
      return rep;
    }
  }
  return rep;
}

DimensionIdentityReport dimension_identity_check(const LieAlgebra& L, const Subspace* module,
                                                 const WeightDecomposition& wd) {
  DimensionIdentityReport rep;
  rep.module_dim = module ? module->dim() : L.dim;
  rep.zero_dim = wd.zero_space.dim();
  CoverageReport cov = coverage_check(wd);
  EqualDimsReport eq = equal_dims_check(wd);
  if (!cov.full || !eq.equal) return rep;  // not applicable
  rep.applicable = true;
  rep.common_dim = eq.common_dim;
  rep.rhs = rep.zero_dim + (pow_u64(L.F.p, wd.torus.dim()) - 1) * rep.common_dim;
  rep.holds = (rep.rhs == rep.module_dim) && (rep.module_dim == wd.module_dim);
  return rep;
}

FiberReport fiber_count_check(const LieAlgebra& L, const WeightDecomposition& wd_big,
                              const Torus& sub, const Subspace* module) {
  const PrimeField& F = L.F;
  const Torus& t = wd_big.torus;
  if (!subspace_leq(sub.span, t.span))
    throw std::domain_error("fiber_count_check: subtorus is not inside the torus");

  FiberReport rep;
  rep.sub_dim = sub.dim();
  rep.complement_dim = t.dim() - sub.dim();
  rep.expected_fiber = pow_u64(F.p, rep.complement_dim);

  // restriction matrix: row i = coordinates of sub's i-th basis vector in t
  FpMat C(F, rep.sub_dim, t.dim());
  for (u32 i = 0; i < rep.sub_dim; ++i) {
    auto coords = t.span.coordinates(sub.span.basis.row(i));
    C.set_row(i, *coords);
  }
  auto restrict_chi = [&](const Character& alpha) { return mat_vec(C, alpha); };

  std::map<Character, u32> fiber_dims;  // beta -> summed dims (zero alpha included)
  for (const auto& [alpha, dim] : wd_big.table) {
    Character beta = restrict_chi(alpha);
    fiber_dims[beta] += dim;
    if (!is_zero_vec(alpha)) rep.fiber_counts[beta] += 1;
  }

  CoverageReport cov = coverage_check(wd_big);
  rep.counts_checked = cov.full;
  bool counts_ok = true;
  if (rep.counts_checked) {
    const u64 total = pow_u64(F.p, rep.sub_dim);
    for (u64 code = 1; code < total; ++code) {
      Character beta = decode_character(F, code, rep.sub_dim);
      auto it = rep.fiber_counts.find(beta);
      if (it == rep.fiber_counts.end() || it->second != rep.expected_fiber) counts_ok = false;
    }
  }

  WeightDecomposition wd_sub = decompose(L, sub, module);
  rep.restriction_consistent = true;
  for (const auto& [beta, dim] : wd_sub.table)
    if (!fiber_dims.count(beta) || fiber_dims.at(beta) != dim) rep.restriction_consistent = false;
  for (const auto& [beta, dim] : fiber_dims)
    if (!wd_sub.table.count(beta) || wd_sub.table.at(beta) != dim)
      rep.restriction_consistent = false;

  rep.ok = rep.restriction_consistent && counts_ok;
  return rep;
}

BracketAdditivityReport bracket_additivity_check(const LieAlgebra& L,
                                                 const WeightDecomposition& wd) {
  const PrimeField& F = L.F;
  BracketAdditivityReport rep;
  rep.ok = true;
  for (const auto& [a, A] : wd.spaces)
    for (const auto& [b, B] : wd.spaces) {
      Character sum(a.size());
      for (size_t i = 0; i < a.size(); ++i) sum[i] = F.add(a[i], b[i]);
      auto target = wd.spaces.find(sum);
      for (u32 i = 0; i < A.dim(); ++i)
        for (u32 j = 0; j < B.dim(); ++j) {
          FpVec w = L.bracket(A.basis.row(i), B.basis.row(j));
          ++rep.pairs_checked;
          if (is_zero_vec(w)) continue;
          if (target == wd.spaces.end() || !target->second.contains(w)) rep.ok = false;
        }
    }
  return rep;
}

std::vector<u32> weight_dim_multiset(const WeightDecomposition& wd) {
  std::vector<u32> dims;
  for (const auto& [chi, dim] : wd.table) dims.push_back(dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace modlie
