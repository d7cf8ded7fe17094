#include "modlie/cartan.hpp"

#include <map>

namespace modlie {

namespace {

void accumulate(const PrimeField& F, std::map<u32, u32>& acc, u32 k, u32 c) {
  if (c == 0) return;
  u32 v = F.add(acc.count(k) ? acc[k] : 0, c);
  if (v == 0)
    acc.erase(k);
  else
    acc[k] = v;
}

ScRow to_terms(const std::map<u32, u32>& acc) {
  ScRow out;
  for (const auto& [k, c] : acc) out.push_back({k, c});
  return out;
}

/// Solve x * rowsBasis = target for independent basis rows; nullopt if
/// target is outside the row span.
std::optional<FpVec> solve_in_basis(const FpMat& rowsBasis, const FpVec& target) {
  const PrimeField F = rowsBasis.F;
  const u32 r = rowsBasis.rows, n = rowsBasis.cols;
  FpMat M(F, n, r + 1);
  for (u32 i = 0; i < n; ++i) {
    for (u32 j = 0; j < r; ++j) M.at(i, j) = rowsBasis.at(j, i);
    M.at(i, r) = target[i];
  }
  RrefResult R = rref(M);
  FpVec x(r, 0);
  for (u32 row = 0; row < R.rank; ++row) {
    if (R.pivots[row] == r) return std::nullopt;  // inconsistent
    x[R.pivots[row]] = R.mat.at(row, r);
  }
  return x;
}

}  // namespace

LieAlgebra build_jacobson_witt(u32 n, u32 p) {
  PrimeField F(p);
  TruncatedPolyRing B(F, n);
  LieAlgebra W(F, n * B.dim);
  W.family = "w-n-1";
  W.params = {{"n", {n}}, {"p", {p}}};
  for (u32 v = 0; v < n; ++v)
    for (u32 m = 0; m < B.dim; ++m) {
      std::string d = "D" + std::to_string(v + 1);
      W.labels[witt_index(B, v, m)] = m == 0 ? d : B.mono_label(m) + " " + d;
    }
  // [x^a D_s, x^b D_t] = (x^a d_s(x^b)) D_t - (x^b d_t(x^a)) D_s
  for (u32 i = 0; i < W.dim; ++i) {
    u32 s = i / B.dim, am = i % B.dim;
    auto a = B.exponents(am);
    for (u32 j = i + 1; j < W.dim; ++j) {
      u32 t = j / B.dim, bm = j % B.dim;
      auto b = B.exponents(bm);
      std::map<u32, u32> acc;
      if (b[s] > 0) {
        auto bd = b;
        bd[s] -= 1;
        u32 m = B.mono_mul(am, B.index(bd));
        if (m != B.dim) accumulate(F, acc, witt_index(B, t, m), b[s]);
      }
      if (a[t] > 0) {
        auto ad = a;
        ad[t] -= 1;
        u32 m = B.mono_mul(bm, B.index(ad));
        if (m != B.dim) accumulate(F, acc, witt_index(B, s, m), F.neg(a[t]));
      }
      W.set_bracket(i, j, to_terms(acc));
    }
  }
  // p-map: p-fold composition; basis derivations send monomials to monomials,
  // so the composition is a p-step chain per starting monomial
  W.pmap = FpMat(F, W.dim, W.dim);
  for (u32 s = 0; s < n; ++s)
    for (u32 am = 0; am < B.dim; ++am) {
      auto a = B.exponents(am);
      FpMat op(F, B.dim, B.dim);
      for (u32 bm = 0; bm < B.dim; ++bm) {
        u32 coeff = 1, cur = bm;
        for (u32 step = 0; step < p && coeff; ++step) {
          auto e = B.exponents(cur);
          if (e[s] == 0) {
            coeff = 0;
            break;
          }
          coeff = F.mul(coeff, e[s]);
          e[s] -= 1;
          u32 m = B.mono_mul(am, B.index(e));
          if (m == B.dim) {
            coeff = 0;
            break;
          }
          cur = m;
        }
        if (coeff) op.at(cur, bm) = coeff;
      }
      W.pmap.set_row(witt_index(B, s, am), operator_to_derivation(B, op));
    }
  W.has_pmap = true;
  return W;
}

FpMat derivation_operator(const TruncatedPolyRing& B, const FpVec& u) {
  FpMat op(B.F, B.dim, B.dim);
  for (u32 v = 0; v < u.size() / B.dim; ++v) {
    for (u32 am = 0; am < B.dim; ++am) {
      u32 c = u[witt_index(B, v, am)];
      if (c == 0) continue;
      for (u32 bm = 0; bm < B.dim; ++bm) {
        auto e = B.exponents(bm);
        if (e[v] == 0) continue;
        u32 coeff = B.F.mul(c, e[v]);
        e[v] -= 1;
        u32 m = B.mono_mul(am, B.index(e));
        if (m == B.dim) continue;
        op.at(m, bm) = B.F.add(op.at(m, bm), coeff);
      }
    }
  }
  return op;
}

FpVec operator_to_derivation(const TruncatedPolyRing& B, const FpMat& op) {
  FpVec u(static_cast<size_t>(B.n) * B.dim, 0);
  for (u32 v = 0; v < B.n; ++v) {
    std::vector<u32> e(B.n, 0);
    e[v] = 1;
    FpVec img = op.col(B.index(e));
    for (u32 m = 0; m < B.dim; ++m) u[witt_index(B, v, m)] = img[m];
  }
  return u;
}

FpVec apply_derivation(const TruncatedPolyRing& B, const FpVec& u, const FpVec& f) {
  FpVec r(B.dim, 0);
  for (u32 v = 0; v < u.size() / B.dim; ++v) {
    FpVec coeff(u.begin() + static_cast<size_t>(v) * B.dim,
                u.begin() + static_cast<size_t>(v + 1) * B.dim);
    if (is_zero_vec(coeff)) continue;
    r = vec_add(B.F, r, B.mul(coeff, B.derivative(v, f)));
  }
  return r;
}

FpVec p_power_by_composition(const TruncatedPolyRing& B, const FpVec& u) {
  FpMat op = derivation_operator(B, u);
  return operator_to_derivation(B, mat_pow(op, B.F.p));
}

FpVec function_times_D(const TruncatedPolyRing& B, u32 var, const FpVec& f) {
  FpVec u(static_cast<size_t>(B.n) * B.dim, 0);
  for (u32 m = 0; m < B.dim; ++m) u[witt_index(B, var, m)] = f[m];
  return u;
}

LieAlgebra build_witt_general(u32 m, const std::vector<u32>& nbar, u32 p) {
  PrimeField F(p);
  DividedPowerAlgebra A(F, m, nbar);
  LieAlgebra W(F, m * A.dim);
  W.family = "w-m-n";
  W.params = {{"m", {m}}, {"p", {p}}, {"nbar", {}}};
  for (u32 x : nbar) W.params["nbar"].push_back(x);
  for (u32 v = 0; v < m; ++v)
    for (u32 mono = 0; mono < A.dim; ++mono) {
      std::string d = "d" + std::to_string(v + 1);
      W.labels[witt_index_dp(A, v, mono)] = mono == 0 ? d : A.mono_label(mono) + " " + d;
    }
  for (u32 i = 0; i < W.dim; ++i) {
    u32 s = i / A.dim, am = i % A.dim;
    for (u32 j = i + 1; j < W.dim; ++j) {
      u32 t = j / A.dim, bm = j % A.dim;
      std::map<u32, u32> acc;
      u32 bd = A.mono_derivative(bm, s);
      if (bd != A.dim) {
        auto pr = A.mono_mul(am, bd);
        if (pr.idx != A.dim) accumulate(F, acc, witt_index_dp(A, t, pr.idx), pr.coeff);
      }
      u32 ad = A.mono_derivative(am, t);
      if (ad != A.dim) {
        auto pr = A.mono_mul(bm, ad);
        if (pr.idx != A.dim) accumulate(F, acc, witt_index_dp(A, s, pr.idx), F.neg(pr.coeff));
      }
      W.set_bracket(i, j, to_terms(acc));
    }
  }
  bool all_one = true;
  for (u32 x : nbar) all_one = all_one && x == 1;
  if (all_one) {
    W.pmap = FpMat(F, W.dim, W.dim);
    for (u32 i = 0; i < W.dim; ++i)
      W.pmap.set_row(i, dp_p_power_by_composition(A, W.basis_vec(i)));
    W.has_pmap = true;
  }
  return W;
}

FpMat dp_derivation_operator(const DividedPowerAlgebra& A, const FpVec& u) {
  FpMat op(A.F, A.dim, A.dim);
  for (u32 v = 0; v < u.size() / A.dim; ++v)
    for (u32 am = 0; am < A.dim; ++am) {
      u32 c = u[witt_index_dp(A, v, am)];
      if (c == 0) continue;
      for (u32 bm = 0; bm < A.dim; ++bm) {
        u32 bd = A.mono_derivative(bm, v);
        if (bd == A.dim) continue;
        auto pr = A.mono_mul(am, bd);
        if (pr.idx == A.dim) continue;
        op.at(pr.idx, bm) = A.F.add(op.at(pr.idx, bm), A.F.mul(c, pr.coeff));
      }
    }
  return op;
}

FpVec dp_p_power_by_composition(const DividedPowerAlgebra& A, const FpVec& u) {
  FpMat opP = mat_pow(dp_derivation_operator(A, u), A.F.p);
  FpVec r(u.size(), 0);
  for (u32 v = 0; v < A.m; ++v) {
    std::vector<u64> e(A.m, 0);
    e[v] = 1;
    FpVec img = opP.col(A.index(e));
    for (u32 mono = 0; mono < A.dim; ++mono) r[witt_index_dp(A, v, mono)] = img[mono];
  }
  return r;
}

FpVec divided_to_truncated_scale(const DividedPowerAlgebra& A) {
  for (u32 x : A.nbar)
    if (x != 1) throw std::invalid_argument("divided_to_truncated_scale: nbar = (1,..,1) required");
  FpVec scale(static_cast<size_t>(A.m) * A.dim);
  for (u32 v = 0; v < A.m; ++v)
    for (u32 mono = 0; mono < A.dim; ++mono) {
      auto e = A.exponents(mono);
      u32 fact = 1;
      for (u64 x : e) fact = A.F.mul(fact, A.F.factorial(static_cast<u32>(x)));
      scale[witt_index_dp(A, v, mono)] = A.F.inv(fact);
    }
  return scale;
}

LieAlgebra build_classical(ClassicalType type, u32 n, u32 p) {
  PrimeField F(p);
  if (n < 2) throw std::invalid_argument("build_classical: n >= 2 required");
  std::vector<FpVec> mats;  // flattened n x n basis matrices
  std::vector<std::string> labels;
  auto unit = [&](u32 i, u32 j) {
    FpVec e(n * n, 0);
    e[i * n + j] = 1;
    return e;
  };
  if (type == ClassicalType::kGl) {
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) {
        mats.push_back(unit(i, j));
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  } else {
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) {
        if (i == j) continue;
        mats.push_back(unit(i, j));
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    for (u32 k = 0; k + 1 < n; ++k) {
      FpVec h = vec_sub(F, unit(k, k), unit(k + 1, k + 1));
      mats.push_back(h);
      labels.push_back("H" + std::to_string(k + 1));
    }
  }
  const u32 d = static_cast<u32>(mats.size());
  FpMat basis = FpMat::from_rows(F, mats);
  auto mat_of = [&](const FpVec& flat) {
    FpMat M(F, n, n);
    M.a = flat;
    return M;
  };
  LieAlgebra L(F, d);
  L.labels = labels;
  L.family = type == ClassicalType::kSl ? "sl-n" : "gl-n";
  L.params = {{"n", {n}}, {"p", {p}}};
  for (u32 i = 0; i < d; ++i)
    for (u32 j = i + 1; j < d; ++j) {
      FpMat A = mat_of(mats[i]), Bm = mat_of(mats[j]);
      FpMat C = mat_sub(mat_mul_serial(A, Bm), mat_mul_serial(Bm, A));
      auto coords = solve_in_basis(basis, C.a);
      if (!coords) throw std::logic_error("build_classical: commutator outside span");
      ScRow terms;
      for (u32 k = 0; k < d; ++k)
        if ((*coords)[k] != 0) terms.push_back({k, (*coords)[k]});
      L.set_bracket(i, j, terms);
    }
  L.pmap = FpMat(F, d, d);
  for (u32 i = 0; i < d; ++i) {
    FpMat P = mat_pow(mat_of(mats[i]), p);
    auto coords = solve_in_basis(basis, P.a);
    if (!coords) throw std::logic_error("build_classical: p-th power outside span");
    L.pmap.set_row(i, *coords);
  }
  L.has_pmap = true;
  return L;
}

namespace {

LieAlgebra promote_inside_witt(const LieAlgebra& W, const TruncatedPolyRing& B,
                               const std::vector<FpVec>& gens, bool with_pmap,
                               const std::string& label_prefix, const std::string& family,
                               std::map<std::string, std::vector<long long>> params) {
  Subspace S = subspace_from_vectors(W.F, gens, W.dim);
  PPowerFn pp = [&B](const FpVec& v) { return p_power_by_composition(B, v); };
  PromotedAlgebra P = promote_subalgebra(W, S, with_pmap, pp, label_prefix);
  P.algebra.family = family;
  P.algebra.params = std::move(params);
  return std::move(P.algebra);
}

}  // namespace

LieAlgebra build_special_S(u32 n, u32 p, bool with_pmap) {
  if (n < 2) throw std::invalid_argument("build_special_S: n >= 2 required");
  LieAlgebra W = build_jacobson_witt(n, p);
  TruncatedPolyRing B(W.F, n);
  std::vector<FpVec> gens;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j)
      for (u32 mono = 1; mono < B.dim; ++mono) {
        FpVec f(B.dim, 0);
        f[mono] = 1;
        // D_ij(f) = D_j(f) D_i - D_i(f) D_j
        FpVec v = vec_sub(W.F, function_times_D(B, i, B.derivative(j, f)),
                          function_times_D(B, j, B.derivative(i, f)));
        if (!is_zero_vec(v)) gens.push_back(std::move(v));
      }
  return promote_inside_witt(W, B, gens, with_pmap, "s", "s-n-1", {{"n", {n}}, {"p", {p}}});
}

LieAlgebra build_hamiltonian_H(u32 two_r, u32 p, bool with_pmap) {
  if (two_r < 2 || two_r % 2 != 0)
    throw std::invalid_argument("build_hamiltonian_H: even 2r >= 2 required");
  const u32 r = two_r / 2;
  LieAlgebra W = build_jacobson_witt(two_r, p);
  TruncatedPolyRing B(W.F, two_r);
  std::vector<FpVec> gens;
  const u32 top = B.dim - 1;  // all exponents p-1
  for (u32 mono = 1; mono < B.dim; ++mono) {
    if (mono == top) continue;
    FpVec f(B.dim, 0);
    f[mono] = 1;
    FpVec v(W.dim, 0);
    for (u32 i = 0; i < r; ++i) {
      v = vec_add(W.F, v, function_times_D(B, i + r, B.derivative(i, f)));
      v = vec_sub(W.F, v, function_times_D(B, i, B.derivative(i + r, f)));
    }
    if (!is_zero_vec(v)) gens.push_back(std::move(v));
  }
  return promote_inside_witt(W, B, gens, with_pmap, "h", "h-2r-1",
                             {{"two_r", {two_r}}, {"p", {p}}});
}

TruncatedPolyRing witt_ring(const LieAlgebra& W) {
  if (W.family != "w-n-1") throw std::invalid_argument("witt_ring: not a w-n-1 algebra");
  return TruncatedPolyRing(W.F, static_cast<u32>(W.params.at("n")[0]));
}

DividedPowerAlgebra witt_dp_algebra(const LieAlgebra& W) {
  if (W.family != "w-m-n") throw std::invalid_argument("witt_dp_algebra: not a w-m-n algebra");
  std::vector<u32> nbar;
  for (long long x : W.params.at("nbar")) nbar.push_back(static_cast<u32>(x));
  return DividedPowerAlgebra(W.F, static_cast<u32>(W.params.at("m")[0]), nbar);
}

Torus standard_generic_torus(const LieAlgebra& W) {
  TruncatedPolyRing B = witt_ring(W);
  std::vector<FpVec> gens;
  for (u32 i = 0; i < B.n; ++i) {
    FpVec t(W.dim, 0);
    std::vector<u32> e(B.n, 0);
    t[witt_index(B, i, 0)] = 1;  // D_i
    e[i] = 1;
    t[witt_index(B, i, B.index(e))] = 1;  // x_i D_i
    gens.push_back(std::move(t));
  }
  return Torus{subspace_from_vectors(W.F, gens, W.dim)};
}

Subspace standard_maximal_solvable(const LieAlgebra& W, SolvableOrientation o) {
  TruncatedPolyRing B = witt_ring(W);
  const u32 n = B.n;
  const u32 p = W.F.p;
  std::vector<u32> order(n);
  for (u32 i = 0; i < n; ++i)
    order[i] = o == SolvableOrientation::kLower ? i : n - 1 - i;
  std::vector<FpVec> gens;
  for (u32 s = 0; s < n; ++s) {
    const u32 var = order[s];
    u32 count = 1;
    for (u32 t = 0; t < s; ++t) count *= p;
    for (u32 m = 0; m < count; ++m) {
      // m enumerates the monomials in u_j = 1 + x_j over the earlier variables
      FpVec f = B.one();
      u32 rem = m;
      for (u32 t = 0; t < s; ++t) {
        f = B.mul(f, B.one_plus_var_pow(order[t], rem % p));
        rem /= p;
      }
      for (u32 e = 1; e <= 2; ++e)
        gens.push_back(function_times_D(B, var, B.mul(f, B.one_plus_var_pow(var, e))));
    }
  }
  return subspace_from_vectors(W.F, gens, W.dim);
}

std::vector<int> witt_grading(const LieAlgebra& W) {
  std::vector<int> deg(W.dim);
  if (W.family == "w-n-1") {
    TruncatedPolyRing B = witt_ring(W);
    for (u32 i = 0; i < W.dim; ++i)
      deg[i] = static_cast<int>(B.total_degree(i % B.dim)) - 1;
  } else if (W.family == "w-m-n") {
    DividedPowerAlgebra A = witt_dp_algebra(W);
    for (u32 i = 0; i < W.dim; ++i)
      deg[i] = static_cast<int>(A.total_degree(i % A.dim)) - 1;
  } else {
    throw std::invalid_argument("witt_grading: not a Witt-family algebra");
  }
  return deg;
}

}  // namespace modlie
