#include "modlie/embedding.hpp"

namespace modlie {

VariableSplit::VariableSplit(u32 m_, std::vector<u32> nbar_) : m(m_), nbar(std::move(nbar_)) {
  offset.resize(m);
  for (u32 i = 0; i < m; ++i) {
    offset[i] = N;
    N += nbar[i];
  }
}

std::pair<u32, u32> VariableSplit::unflat(u32 t) const {
  for (u32 i = m; i-- > 0;)
    if (t >= offset[i]) return {i, t - offset[i]};
  throw std::out_of_range("VariableSplit::unflat");
}

FpVec PhiMap::apply(const FpVec& f) const {
  FpVec g(B.dim, 0);
  for (u32 a = 0; a < A.dim; ++a)
    if (f[a] != 0) g[target_mono[a]] = A.F.add(g[target_mono[a]], A.F.mul(unit[a], f[a]));
  return g;
}

FpVec PhiMap::apply_inv(const FpVec& g) const {
  FpVec f(A.dim, 0);
  for (u32 a = 0; a < A.dim; ++a)
    if (g[target_mono[a]] != 0) f[a] = A.F.mul(A.F.inv(unit[a]), g[target_mono[a]]);
  return f;
}

PhiMap build_phi(u32 m, const std::vector<u32>& nbar, u32 p) {
  PrimeField F(p);
  VariableSplit split(m, nbar);
  DividedPowerAlgebra A(F, m, nbar);
  TruncatedPolyRing B(F, split.N);
  PhiMap phi{split, A, B, std::vector<u32>(A.dim), FpVec(A.dim)};
  for (u32 a = 0; a < A.dim; ++a) {
    auto exps = A.exponents(a);
    // digits c_{i,j} of a_i base p; the target monomial has y_{i,j}^{c_{i,j}}
    std::vector<u32> tex(split.N, 0);
    for (u32 i = 0; i < m; ++i) {
      u64 rest = exps[i];
      for (u32 j = 0; j < nbar[i]; ++j) {
        tex[split.flat(i, j)] = static_cast<u32>(rest % p);
        rest /= p;
      }
    }
    // compute the divided-power unit of prod (x^(p^j eps_i))^{c_{i,j}} / c_{i,j}!
    // instead of assuming it; digit-separated products give exactly 1
    FpVec acc = A.one();
    u32 norm = 1;
    for (u32 i = 0; i < m; ++i) {
      u64 pj = 1;
      for (u32 j = 0; j < nbar[i]; ++j) {
        u32 c = tex[split.flat(i, j)];
        std::vector<u64> gen(m, 0);
        gen[i] = pj;
        FpVec genv(A.dim, 0);
        genv[A.index(gen)] = 1;
        for (u32 t = 0; t < c; ++t) acc = A.mul(acc, genv);
        norm = F.mul(norm, F.factorial(c));
        pj *= p;
      }
    }
    FpVec expect(A.dim, 0);
    expect[a] = norm;  // acc should equal norm * x^(a), i.e. unit 1 after dividing
    if (!(acc == expect))
      throw std::logic_error("build_phi: divided-power unit is not 1");
    // truncated realization: y^(c) = y^c / prod c_t!
    u32 fact = 1;
    for (u32 t = 0; t < split.N; ++t) fact = F.mul(fact, F.factorial(tex[t]));
    phi.target_mono[a] = B.index(tex);
    phi.unit[a] = F.inv(fact);
  }
  return phi;
}

Subspace EmbeddingMap::image() const {
  std::vector<FpVec> cols;
  for (u32 j = 0; j < matrix.cols; ++j) cols.push_back(matrix.col(j));
  return subspace_from_vectors(target.F, cols, target.dim);
}

EmbeddingMap build_iota(u32 m, const std::vector<u32>& nbar, u32 p) {
  PhiMap phi = build_phi(m, nbar, p);
  LieAlgebra source = build_witt_general(m, nbar, p);
  LieAlgebra target = build_jacobson_witt(phi.split.N, p);
  const DividedPowerAlgebra& A = phi.A;
  const TruncatedPolyRing& B = phi.B;
  FpMat M(source.F, target.dim, source.dim);
  // iota(x^(b) d_s)(y_{s,j}) = phi(x^(b) x^((p^j - 1) eps_s))
  for (u32 s = 0; s < m; ++s) {
    u64 pj = 1;
    for (u32 j = 0; j < nbar[s]; ++j) {
      std::vector<u64> e(m, 0);
      e[s] = pj - 1;
      const u32 shift = A.index(e);
      for (u32 bm = 0; bm < A.dim; ++bm) {
        auto pr = A.mono_mul(bm, shift);
        if (pr.idx == A.dim) continue;
        u32 row = witt_index(B, phi.split.flat(s, j), phi.target_mono[pr.idx]);
        u32 val = source.F.mul(pr.coeff, phi.unit[pr.idx]);
        M.at(row, witt_index_dp(A, s, bm)) = val;
      }
      pj *= p;
    }
  }
  EmbeddingMap emb{std::move(phi), std::move(source), std::move(target), std::move(M)};
  if (rref(emb.matrix).rank != emb.source.dim)
    throw std::logic_error("build_iota: embedding is not injective");
  for (u32 i = 0; i < emb.source.dim; ++i)
    for (u32 j = i + 1; j < emb.source.dim; ++j) {
      FpVec lhs = emb.apply(emb.source.bracket(emb.source.basis_vec(i), emb.source.basis_vec(j)));
      FpVec rhs = emb.target.bracket(emb.matrix.col(i), emb.matrix.col(j));
      if (!(lhs == rhs)) throw std::logic_error("build_iota: bracket preservation failed");
    }
  return emb;
}

DExpansionReport check_D_i_expansion(const EmbeddingMap& emb) {
  DExpansionReport rep;
  const PrimeField& F = emb.source.F;
  const TruncatedPolyRing& B = emb.phi.B;
  for (u32 s = 0; s < emb.phi.split.m; ++s) {
    FpVec actual = emb.apply(emb.source.basis_vec(witt_index_dp(emb.phi.A, s, 0)));
    FpVec expected(emb.target.dim, 0);
    for (u32 j = 0; j < emb.phi.split.nbar[s]; ++j) {
      std::vector<u32> e(B.n, 0);
      for (u32 l = 0; l < j; ++l) e[emb.phi.split.flat(s, l)] = F.p - 1;
      u32 sign = j % 2 == 0 ? 1 : F.neg(1);
      expected[witt_index(B, emb.phi.split.flat(s, j), B.index(e))] = sign;
    }
    if (!(actual == expected)) rep.all_match = false;
    rep.actual.push_back(std::move(actual));
    rep.expected.push_back(std::move(expected));
  }
  return rep;
}

CoeffIdentityReport check_coefficient_identity(const EmbeddingMap& emb, const FpVec& target_vec) {
  CoeffIdentityReport rep;
  const PrimeField& F = emb.source.F;
  const TruncatedPolyRing& B = emb.phi.B;
  auto block = [&](u32 t) {
    return FpVec(target_vec.begin() + static_cast<size_t>(t) * B.dim,
                 target_vec.begin() + static_cast<size_t>(t + 1) * B.dim);
  };
  for (u32 s = 0; s < emb.phi.split.m; ++s) {
    FpVec a0 = block(emb.phi.split.flat(s, 0));
    FpVec mult = B.one();
    for (u32 j = 1; j < emb.phi.split.nbar[s]; ++j) {
      FpVec ypow(B.dim, 0);
      std::vector<u32> e(B.n, 0);
      e[emb.phi.split.flat(s, j - 1)] = F.p - 1;
      ypow[B.index(e)] = 1;
      mult = B.mul(mult, ypow);
      FpVec rhs = vec_scale(F, j % 2 == 0 ? 1 : F.neg(1), B.mul(mult, a0));
      if (!(block(emb.phi.split.flat(s, j)) == rhs)) {
        rep.holds = false;
        rep.failing_blocks.push_back({s, j});
      }
    }
  }
  return rep;
}

PEnvelope envelope_in_target(const EmbeddingMap& emb) {
  TruncatedPolyRing B = emb.phi.B;
  PPowerFn pp = [B](const FpVec& v) { return p_power_by_composition(B, v); };
  return p_envelope(emb.target, emb.image(), pp);
}

}  // namespace modlie
