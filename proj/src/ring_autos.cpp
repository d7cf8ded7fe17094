#include "modlie/ring_autos.hpp"

#include <random>

namespace modlie {

RingEndo::RingEndo(TruncatedPolyRing r, std::vector<FpVec> imgs)
    : R(std::move(r)), images(std::move(imgs)) {
  if (images.size() != R.n) throw std::invalid_argument("RingEndo: one image per variable");
  for (const auto& f : images) {
    if (f.size() != R.dim) throw std::invalid_argument("RingEndo: image size mismatch");
    if (f[0] != 0) throw std::invalid_argument("RingEndo: images need zero constant term");
  }
}

FpMat RingEndo::linear_part() const {
  FpMat L(R.F, R.n, R.n);
  for (u32 i = 0; i < R.n; ++i)
    for (u32 j = 0; j < R.n; ++j) {
      std::vector<u32> e(R.n, 0);
      e[j] = 1;
      L.at(i, j) = images[i][R.index(e)];
    }
  return L;
}

RingEndo identity_endo(const TruncatedPolyRing& R) {
  std::vector<FpVec> imgs;
  for (u32 i = 0; i < R.n; ++i) imgs.push_back(R.var(i));
  return RingEndo(R, imgs);
}

SubstitutionTable::SubstitutionTable(const RingEndo& e) : R(e.R) {
  mono_image.resize(R.dim);
  mono_image[0] = R.one();
  for (u32 idx = 1; idx < R.dim; ++idx) {
    u32 v = 0, step = 1;
    while ((idx / step) % R.F.p == 0) {
      step *= R.F.p;
      ++v;
    }
    mono_image[idx] = R.mul(mono_image[idx - step], e.images[v]);
  }
}

FpVec SubstitutionTable::apply(const FpVec& f) const {
  FpVec r(R.dim, 0);
  for (u32 m = 0; m < R.dim; ++m)
    if (f[m] != 0) vec_add_scaled(R.F, r, f[m], mono_image[m]);
  return r;
}

FpVec substitute(const RingEndo& e, const FpVec& f) { return SubstitutionTable(e).apply(f); }

RingEndo compose(const RingEndo& e1, const RingEndo& e2) {
  SubstitutionTable t(e1);
  std::vector<FpVec> imgs;
  for (u32 i = 0; i < e1.R.n; ++i) imgs.push_back(t.apply(e2.images[i]));
  return RingEndo(e1.R, imgs);
}

bool endo_invertible(const RingEndo& e) {
  return rref(e.linear_part()).rank == e.R.n;
}

RingEndo invert_endo(const RingEndo& e) {
  const TruncatedPolyRing& R = e.R;
  FpMat L = e.linear_part();
  if (rref(L).rank != R.n) throw NotAnAutomorphism("invert_endo: singular linear part");
  FpMat Linv = mat_inverse(L);
  std::vector<FpVec> lin_imgs;
  for (u32 i = 0; i < R.n; ++i) {
    FpVec f(R.dim, 0);
    for (u32 j = 0; j < R.n; ++j) {
      std::vector<u32> ex(R.n, 0);
      ex[j] = 1;
      f[R.index(ex)] = Linv.at(i, j);
    }
    lin_imgs.push_back(std::move(f));
  }
  RingEndo lin_inv(R, lin_imgs);
  SubstitutionTable et(e), lt(lin_inv);

  std::vector<FpVec> g = lin_imgs;  // first-order guess; refine through the filtration
  const u32 max_deg = R.n * (R.F.p - 1) + 1;
  for (u32 it = 0; it <= max_deg; ++it) {
    bool done = true;
    for (u32 i = 0; i < R.n; ++i) {
      std::vector<u32> ex(R.n, 0);
      ex[i] = 1;
      const u32 xi = R.index(ex);
      FpVec err = et.apply(g[i]);
      err[xi] = R.F.sub(err[xi], 1);
      if (!is_zero_vec(err)) {
        done = false;
        g[i] = vec_sub(R.F, g[i], lt.apply(err));
      }
    }
    if (done) return RingEndo(R, g);
  }
  throw std::logic_error("invert_endo: iteration failed to converge");
}

LieAuto induced_lie_auto(const LieAlgebra& W, const RingEndo& e) {
  TruncatedPolyRing B = witt_ring(W);
  if (!(B == e.R)) throw std::invalid_argument("induced_lie_auto: ring mismatch");
  if (!endo_invertible(e)) throw NotAnAutomorphism("induced_lie_auto: endo not invertible");
  RingEndo einv = invert_endo(e);
  SubstitutionTable et(e);
  FpMat M(W.F, W.dim, W.dim);
  // column k: images of the target variables under phi o D_k o phi^{-1}
  for (u32 k = 0; k < W.dim; ++k) {
    FpVec bk = W.basis_vec(k);
    for (u32 t = 0; t < B.n; ++t) {
      FpVec img = et.apply(apply_derivation(B, bk, einv.images[t]));
      for (u32 m = 0; m < B.dim; ++m) M.at(witt_index(B, t, m), k) = img[m];
    }
  }
  return LieAuto{std::move(M)};
}

bool stabilizes_subspace(const LieAuto& a, const Subspace& S) {
  for (u32 i = 0; i < S.dim(); ++i)
    if (!S.contains(mat_vec(a.matrix, S.basis.row(i)))) return false;
  return true;
}

bool is_lie_automorphism(const LieAlgebra& L, const LieAuto& a, u32 sample_pairs, u64 seed,
                         const PPowerFn& p_power) {
  if (rref(a.matrix).rank != L.dim) return false;
  auto check_pair = [&](u32 i, u32 j) {
    FpVec lhs = mat_vec(a.matrix, L.bracket(L.basis_vec(i), L.basis_vec(j)));
    FpVec rhs = L.bracket(a.matrix.col(i), a.matrix.col(j));
    return lhs == rhs;
  };
  auto check_pmap = [&](u32 i) {
    if (!L.has_pmap) return true;
    FpVec lhs = mat_vec(a.matrix, L.pmap.row(i));
    FpVec rhs = p_power ? p_power(a.matrix.col(i)) : jacobson_p_power(L, a.matrix.col(i));
    return lhs == rhs;
  };
  if (sample_pairs == 0) {
    for (u32 i = 0; i < L.dim; ++i) {
      if (!check_pmap(i)) return false;
      for (u32 j = i + 1; j < L.dim; ++j)
        if (!check_pair(i, j)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (u32 t = 0; t < sample_pairs; ++t) {
    u32 i = static_cast<u32>(rng() % L.dim), j = static_cast<u32>(rng() % L.dim);
    if (i != j && !check_pair(i, j)) return false;
    if (!check_pmap(i)) return false;
  }
  return true;
}

FpMat restriction_to_torus(const LieAuto& a, const Torus& t) {
  const u32 d = t.dim();
  FpMat R(a.matrix.F, d, d);
  for (u32 i = 0; i < d; ++i) {
    auto coords = t.span.coordinates(mat_vec(a.matrix, t.span.basis.row(i)));
    if (!coords) throw DoesNotNormalize("restriction_to_torus: image leaves the torus");
    for (u32 j = 0; j < d; ++j) R.at(j, i) = (*coords)[j];
  }
  return R;
}

RingEndo demushkin_lift(const TruncatedPolyRing& R, const FpMat& g) {
  if (g.rows != R.n || g.cols != R.n || g.F.p != R.F.p)
    throw std::invalid_argument("demushkin_lift: matrix shape mismatch");
  std::vector<FpVec> imgs;
  for (u32 i = 0; i < R.n; ++i) {
    FpVec f = R.one();
    for (u32 j = 0; j < R.n; ++j) f = R.mul(f, R.one_plus_var_pow(j, g.at(j, i)));
    f[0] = R.F.sub(f[0], 1);
    imgs.push_back(std::move(f));
  }
  return RingEndo(R, imgs);
}

RingEndo weyl_lift(const TruncatedPolyRing& R, const FpMat& g) {
  return demushkin_lift(R, mat_inverse(g).transpose());
}

FpMat mat_inverse(const FpMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("mat_inverse: square required");
  const u32 n = M.rows;
  FpMat aug(M.F, n, 2 * n);
  for (u32 i = 0; i < n; ++i) {
    for (u32 j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult R = rref(aug);
  for (u32 i = 0; i < n; ++i)
    if (i >= R.rank || R.pivots[i] != i) throw NotAnAutomorphism("mat_inverse: singular matrix");
  FpMat inv(M.F, n, n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) inv.at(i, j) = R.mat.at(i, n + j);
  return inv;
}

std::vector<FpMat> all_invertible_matrices(PrimeField F, u32 n) {
  std::vector<FpMat> out;
  const u32 cells = n * n;
  u64 total = 1;
  for (u32 i = 0; i < cells; ++i) total *= F.p;
  for (u64 code = 0; code < total; ++code) {
    FpMat M(F, n, n);
    u64 rest = code;
    for (u32 c = cells; c-- > 0;) {
      M.a[c] = static_cast<u32>(rest % F.p);
      rest /= F.p;
    }
    if (rref(M).rank == n) out.push_back(std::move(M));
  }
  return out;
}

}  // namespace modlie
