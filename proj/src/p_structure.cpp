#include "modlie/p_structure.hpp"

#include <random>

namespace modlie {

namespace {

PPowerFn default_pp(const LieAlgebra& L, const PPowerFn& given) {
  if (given) return given;
  return [&L](const FpVec& v) { return jacobson_p_power(L, v); };
}

}  // namespace

bool is_toral(const LieAlgebra& L, const FpVec& v, const PPowerFn& p_power) {
  return default_pp(L, p_power)(v) == v;
}

FpVec semisimple_part(const LieAlgebra& L, const FpVec& u, const PPowerFn& p_power) {
  PPowerFn pp = default_pp(L, p_power);
  std::vector<FpVec> iterates{u};
  while (true) {
    FpVec next = pp(iterates.back());
    for (size_t e = 0; e < iterates.size(); ++e) {
      if (iterates[e] == next) {
        // iterates[k] for k >= e cycle with period d; smallest k >= e, d | k
        size_t d = iterates.size() - e;
        size_t k = (e + d - 1) / d * d;
        while (iterates.size() <= k) iterates.push_back(pp(iterates.back()));
        return iterates[k];
      }
    }
    iterates.push_back(std::move(next));
    if (iterates.size() > 4096)
      throw std::logic_error("semisimple_part: p-power iteration failed to cycle");
  }
}

bool is_ad_nilpotent(const LieAlgebra& L, const FpVec& v) {
  FpMat M = L.ad(v);
  // (ad v)^{p^k} zero for some p^k <= dim suffices; go one power beyond
  u64 e = 1;
  while (e < L.dim) e *= L.F.p;
  FpMat P = mat_pow(M, e);
  return P == FpMat(L.F, L.dim, L.dim);
}

Torus torus_generated(const LieAlgebra& L, const std::vector<FpVec>& gens,
                      const PPowerFn& p_power) {
  PPowerFn pp = default_pp(L, p_power);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!(semisimple_part(L, gens[i], pp) == gens[i]))
      throw std::invalid_argument("torus_generated: generator is not semisimple");
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!is_zero_vec(L.bracket(gens[i], gens[j])))
        throw std::invalid_argument("torus_generated: generators do not commute");
  }
  Subspace V = subspace_from_vectors(L.F, gens, L.dim);
  while (true) {
    std::vector<FpVec> vecs;
    for (u32 i = 0; i < V.dim(); ++i) {
      vecs.push_back(V.basis.row(i));
      vecs.push_back(pp(V.basis.row(i)));
    }
    Subspace next = subspace_from_vectors(L.F, vecs, L.dim);
    if (next.dim() == V.dim()) break;
    V = next;
  }
  // toral part: kernel of v -> v^{[p]} - v on V (F_p-linear on an abelian span)
  if (V.dim() == 0) return Torus{V};
  FpMat M(L.F, L.dim, V.dim());
  for (u32 i = 0; i < V.dim(); ++i) {
    FpVec w = vec_sub(L.F, pp(V.basis.row(i)), V.basis.row(i));
    for (u32 r = 0; r < L.dim; ++r) M.at(r, i) = w[r];
  }
  FpMat K = kernel_basis(M);
  std::vector<FpVec> toral;
  for (u32 t = 0; t < K.rows; ++t) {
    FpVec w(L.dim, 0);
    for (u32 i = 0; i < V.dim(); ++i) vec_add_scaled(L.F, w, K.at(t, i), V.basis.row(i));
    toral.push_back(std::move(w));
  }
  return Torus{subspace_from_vectors(L.F, toral, L.dim)};
}

PEnvelope p_envelope(const LieAlgebra& ambient, const Subspace& S, const PPowerFn& p_power) {
  if (!is_bracket_closed(ambient, S))
    throw std::invalid_argument("p_envelope: subspace is not a subalgebra");
  PPowerFn pp = default_pp(ambient, p_power);
  Subspace V = S;
  while (true) {
    std::vector<FpVec> vecs;
    for (u32 i = 0; i < V.dim(); ++i) {
      vecs.push_back(V.basis.row(i));
      vecs.push_back(pp(V.basis.row(i)));
    }
    Subspace next = subspace_from_vectors(ambient.F, vecs, ambient.dim);
    if (next.dim() == V.dim()) break;
    V = next;
  }
  return PEnvelope{S, V};
}

namespace {

// deterministic uniform draw in 0..p-1 (64-bit draw, negligible bias)
u32 draw_mod(std::mt19937_64& rng, u32 p) { return static_cast<u32>(rng() % p); }

Torus search_one_restart(const LieAlgebra& L, u64 seed, u32 restart, const PPowerFn& pp) {
  std::mt19937_64 rng(seed * 1000003ull + restart);
  constexpr u32 kStepBudget = 24;
  Torus T{zero_subspace(L.F, L.dim)};
  Subspace C = full_subspace(L.F, L.dim);
  u32 fails = 0;
  while (fails < kStepBudget) {
    if (C.dim() == 0) break;
    FpVec u(L.dim, 0);
    for (u32 i = 0; i < C.dim(); ++i)
      vec_add_scaled(L.F, u, draw_mod(rng, L.F.p), C.basis.row(i));
    if (is_zero_vec(u)) {
      ++fails;
      continue;
    }
    FpVec s = semisimple_part(L, u, pp);
    if (is_zero_vec(s) || T.span.contains(s)) {
      ++fails;
      continue;
    }
    std::vector<FpVec> gens;
    for (u32 i = 0; i < T.dim(); ++i) gens.push_back(T.span.basis.row(i));
    gens.push_back(s);
    Torus cand = torus_generated(L, gens, pp);
    if (cand.dim() > T.dim()) {
      T = cand;
      C = centralizer(L, T.span);
      fails = 0;
    } else {
      ++fails;
    }
  }
  return T;
}

}  // namespace

TorusSearchResult max_torus_search(const LieAlgebra& L, u64 seed, u32 restarts,
                                   const PPowerFn& p_power) {
  PPowerFn pp = default_pp(L, p_power);
  std::vector<Torus> results(restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < static_cast<int>(restarts); ++r)
    results[r] = search_one_restart(L, seed, static_cast<u32>(r), pp);
  TorusSearchResult best{Torus{zero_subspace(L.F, L.dim)}, 0};
  for (u32 r = 0; r < restarts; ++r)
    if (results[r].dim() > best.torus.dim()) best = {results[r], r};
  return best;
}

}  // namespace modlie
