#include "modlie/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modlie {

namespace {

constexpr size_t kMaxViolationsListed = 32;

ScRow normalize_terms(const PrimeField& F, const ScRow& terms) {
  std::map<u32, u32> acc;
  for (const auto& t : terms) acc[t.k] = F.add(acc[t.k], t.c % F.p);
  ScRow out;
  for (const auto& [k, c] : acc)
    if (c != 0) out.push_back({k, c});
  return out;
}

ScRow negate_terms(const PrimeField& F, const ScRow& terms) {
  ScRow out = terms;
  for (auto& t : out) t.c = F.neg(t.c);
  return out;
}

void note(ValidationReport& rep, u64& counter, const std::string& msg) {
  rep.ok = false;
  ++counter;
  if (rep.violations.size() < kMaxViolationsListed) rep.violations.push_back(msg);
}

}  // namespace

LieAlgebra::LieAlgebra(PrimeField f, u32 d) : F(f), dim(d), sc(static_cast<size_t>(d) * d) {
  labels.resize(d);
  for (u32 i = 0; i < d; ++i) labels[i] = "b" + std::to_string(i);
}

void LieAlgebra::set_bracket(u32 i, u32 j, const ScRow& terms) {
  if (i == j) throw std::invalid_argument("set_bracket: i == j");
  ScRow t = normalize_terms(F, terms);
  sc[static_cast<size_t>(i) * dim + j] = t;
  sc[static_cast<size_t>(j) * dim + i] = negate_terms(F, t);
}

void LieAlgebra::set_sc_raw(u32 i, u32 j, const ScRow& terms) {
  sc[static_cast<size_t>(i) * dim + j] = normalize_terms(F, terms);
}

FpVec LieAlgebra::bracket(const FpVec& u, const FpVec& v) const {
  if (u.size() != dim || v.size() != dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  FpVec r(dim, 0);
  for (u32 i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (u32 j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      u32 c = F.mul(u[i], v[j]);
      for (const auto& t : sc_at(i, j)) r[t.k] = F.add(r[t.k], F.mul(c, t.c));
    }
  }
  return r;
}

FpMat LieAlgebra::ad(const FpVec& u) const {
  FpMat M(F, dim, dim);
  for (u32 i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (u32 j = 0; j < dim; ++j)
      for (const auto& t : sc_at(i, j))
        M.at(t.k, j) = F.add(M.at(t.k, j), F.mul(u[i], t.c));
  }
  return M;
}

FpMat LieAlgebra::ad_basis(u32 i) const {
  FpMat M(F, dim, dim);
  for (u32 j = 0; j < dim; ++j)
    for (const auto& t : sc_at(i, j)) M.at(t.k, j) = F.add(M.at(t.k, j), t.c);
  return M;
}

FpVec LieAlgebra::p_power_basis(u32 i) const {
  if (!has_pmap) throw std::logic_error("p_power_basis: algebra has no p-map");
  return pmap.row(i);
}

FpVec LieAlgebra::basis_vec(u32 i) const {
  FpVec v(dim, 0);
  v[i] = 1;
  return v;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return F.p == o.F.p && dim == o.dim && labels == o.labels && sc == o.sc &&
         has_pmap == o.has_pmap && (!has_pmap || pmap == o.pmap) && family == o.family &&
         params == o.params;
}

ValidationReport validate_algebra(const LieAlgebra& L) {
  ValidationReport rep;
  const PrimeField& F = L.F;
  for (u32 i = 0; i < L.dim; ++i) {
    if (!L.sc_at(i, i).empty())
      note(rep, rep.antisym_failures, "antisymmetry: [b" + std::to_string(i) + ",b" + std::to_string(i) + "] != 0");
    for (u32 j = i + 1; j < L.dim; ++j)
      if (L.sc_at(j, i) != negate_terms(F, L.sc_at(i, j)))
        note(rep, rep.antisym_failures,
             "antisymmetry: sc(" + std::to_string(j) + "," + std::to_string(i) + ") != -sc(" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
  }
  // Jacobi on basis triples, sparse: [[bi,bj],bk] = sum_t sc(i,j)_t [bt,bk]
  auto double_bracket = [&](u32 i, u32 j, u32 k, FpVec& acc) {
    for (const auto& t : L.sc_at(i, j))
      for (const auto& s : L.sc_at(t.k, k)) acc[s.k] = F.add(acc[s.k], F.mul(t.c, s.c));
  };
  for (u32 i = 0; i < L.dim; ++i)
    for (u32 j = i + 1; j < L.dim; ++j)
      for (u32 k = j + 1; k < L.dim; ++k) {
        FpVec acc(L.dim, 0);
        double_bracket(i, j, k, acc);
        double_bracket(j, k, i, acc);
        double_bracket(k, i, j, acc);
        if (!is_zero_vec(acc))
          note(rep, rep.jacobi_failures,
               "jacobi: (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (L.has_pmap) {
    rep.pmap_checked = true;
    if (L.pmap.rows != L.dim || L.pmap.cols != L.dim) {
      note(rep, rep.restrict_failures, "p-map: wrong shape");
    } else {
      for (u32 i = 0; i < L.dim; ++i) {
        FpMat lhs = L.ad(L.pmap.row(i));
        FpMat rhs = mat_pow(L.ad_basis(i), F.p);
        if (!(lhs == rhs))
          note(rep, rep.restrict_failures, "restricted: ad(b" + std::to_string(i) + "^[p]) != ad(b" + std::to_string(i) + ")^p");
      }
    }
  }
  return rep;
}

FpVec jacobson_p_power(const LieAlgebra& L, const FpVec& u) {
  if (!L.has_pmap) throw std::logic_error("jacobson_p_power: algebra has no p-map");
  const PrimeField& F = L.F;
  const u32 p = F.p, n = L.dim;
  std::vector<u32> nz;
  for (u32 i = 0; i < n; ++i)
    if (u[i] != 0) nz.push_back(i);
  FpVec result(n, 0);
  if (nz.empty()) return result;

  FpMat ad_tail = L.ad(u);
  for (size_t step = 0; step < nz.size(); ++step) {
    const u32 t = nz[step];
    const u32 c = u[t];
    FpMat ad_x = mat_scale(L.ad_basis(t), c);
    ad_tail = mat_sub(ad_tail, ad_x);  // now ad of the remaining tail y
    vec_add_scaled(F, result, c, L.pmap.row(t));  // (c b_t)^{[p]} = c^p b_t^{[p]}, c^p = c
    if (step + 1 == nz.size()) break;  // no tail left, no cross terms

    // s_i(x, y): apply ad(lambda x + y) p-1 times to the degree-0 polynomial x
    std::vector<FpVec> coeff(p, FpVec(n, 0));
    FpVec x(n, 0);
    x[t] = c;
    coeff[0] = x;
    for (u32 it = 0; it < p - 1; ++it) {
      std::vector<FpVec> next(p, FpVec(n, 0));
      for (u32 d = 0; d <= it && d < p; ++d) {
        FpVec by = mat_vec(ad_tail, coeff[d]);
        for (u32 r = 0; r < n; ++r) next[d][r] = F.add(next[d][r], by[r]);
        if (d + 1 < p) {
          FpVec bx = mat_vec(ad_x, coeff[d]);
          for (u32 r = 0; r < n; ++r) next[d + 1][r] = F.add(next[d + 1][r], bx[r]);
        }
      }
      coeff = std::move(next);
    }
    for (u32 i = 1; i <= p - 1; ++i)
      vec_add_scaled(F, result, F.inv(i), coeff[i - 1]);
  }
  return result;
}

bool is_bracket_closed(const LieAlgebra& L, const Subspace& S) {
  for (u32 i = 0; i < S.dim(); ++i)
    for (u32 j = i + 1; j < S.dim(); ++j)
      if (!S.contains(L.bracket(S.basis.row(i), S.basis.row(j)))) return false;
  return true;
}

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S) {
  if (!is_bracket_closed(L, S))
    throw std::invalid_argument("derived_series: subspace is not a subalgebra");
  std::vector<Subspace> chain{S};
  while (true) {
    const Subspace& cur = chain.back();
    std::vector<FpVec> brackets;
    for (u32 i = 0; i < cur.dim(); ++i)
      for (u32 j = i + 1; j < cur.dim(); ++j)
        brackets.push_back(L.bracket(cur.basis.row(i), cur.basis.row(j)));
    Subspace next = subspace_from_vectors(L.F, brackets, L.dim);
    u32 prev_dim = cur.dim();
    chain.push_back(next);
    if (next.dim() == 0 || next.dim() == prev_dim) break;
  }
  return chain;
}

bool is_solvable(const LieAlgebra& L, const Subspace& S) {
  return derived_series(L, S).back().dim() == 0;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  Subspace result = full_subspace(L.F, L.dim);
  for (u32 i = 0; i < S.dim(); ++i) {
    Subspace k = row_space(kernel_basis(L.ad(S.basis.row(i))));
    result = intersect_subspaces(result, k);
  }
  return result;
}

Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<FpVec>& gens) {
  Subspace cur = subspace_from_vectors(L.F, gens, L.dim);
  while (true) {
    std::vector<FpVec> vecs;
    for (u32 i = 0; i < cur.dim(); ++i) vecs.push_back(cur.basis.row(i));
    for (u32 i = 0; i < cur.dim(); ++i)
      for (u32 j = i + 1; j < cur.dim(); ++j)
        vecs.push_back(L.bracket(cur.basis.row(i), cur.basis.row(j)));
    Subspace next = subspace_from_vectors(L.F, vecs, L.dim);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

FpVec PromotedAlgebra::to_ambient(const FpVec& v) const {
  FpVec r(basis.cols, 0);
  for (u32 i = 0; i < basis.rows; ++i) vec_add_scaled(algebra.F, r, v[i], basis.row(i));
  return r;
}

PromotedAlgebra promote_subalgebra(const LieAlgebra& ambient, const Subspace& S,
                                   bool with_pmap, const PPowerFn& p_power,
                                   const std::string& label_prefix) {
  const u32 d = S.dim();
  LieAlgebra A(ambient.F, d);
  for (u32 i = 0; i < d; ++i) A.labels[i] = label_prefix + std::to_string(i);
  auto coords_in_S = [&](const FpVec& v, const char* what) {
    auto c = S.coordinates(v);
    if (!c) throw std::domain_error(std::string("promote_subalgebra: ") + what + " leaves the subspace");
    return *c;
  };
  for (u32 i = 0; i < d; ++i)
    for (u32 j = i + 1; j < d; ++j) {
      FpVec br = ambient.bracket(S.basis.row(i), S.basis.row(j));
      FpVec c = coords_in_S(br, "bracket");
      ScRow terms;
      for (u32 k = 0; k < d; ++k)
        if (c[k] != 0) terms.push_back({k, c[k]});
      A.set_bracket(i, j, terms);
    }
  if (with_pmap) {
    PPowerFn pf = p_power;
    if (!pf) pf = [&ambient](const FpVec& v) { return jacobson_p_power(ambient, v); };
    A.pmap = FpMat(ambient.F, d, d);
    for (u32 i = 0; i < d; ++i)
      A.pmap.set_row(i, coords_in_S(pf(S.basis.row(i)), "p-power"));
    A.has_pmap = true;
  }
  return PromotedAlgebra{std::move(A), S.basis};
}

}  // namespace modlie
