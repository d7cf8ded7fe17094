#include "modlie/fp_matrix.hpp"

#include <algorithm>

namespace modlie {

bool is_zero_vec(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
}

FpMat FpMat::identity(PrimeField f, u32 n) {
  FpMat m(f, n, n);
  for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(PrimeField f, const std::vector<FpVec>& rows) {
  u32 c = rows.empty() ? 0 : static_cast<u32>(rows[0].size());
  FpMat m(f, static_cast<u32>(rows.size()), c);
  for (u32 i = 0; i < m.rows; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

FpVec FpMat::row(u32 i) const {
  return FpVec(a.begin() + static_cast<size_t>(i) * cols,
               a.begin() + static_cast<size_t>(i + 1) * cols);
}

FpVec FpMat::col(u32 j) const {
  FpVec v(rows);
  for (u32 i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

void FpMat::set_row(u32 i, const FpVec& v) {
  std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(i) * cols);
}

FpMat FpMat::transpose() const {
  FpMat t(F, cols, rows);
  for (u32 i = 0; i < rows; ++i)
    for (u32 j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

static void check_same_shape(const FpMat& A, const FpMat& B) {
  if (A.rows != B.rows || A.cols != B.cols || A.F.p != B.F.p)
    throw std::invalid_argument("matrix shape/field mismatch");
}

FpMat mat_add(const FpMat& A, const FpMat& B) {
  check_same_shape(A, B);
  FpMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.F.add(A.a[i], B.a[i]);
  return C;
}

FpMat mat_sub(const FpMat& A, const FpMat& B) {
  check_same_shape(A, B);
  FpMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.F.sub(A.a[i], B.a[i]);
  return C;
}

FpMat mat_scale(const FpMat& A, u32 c) {
  FpMat C = A;
  for (auto& x : C.a) x = A.F.mul(x, c);
  return C;
}

static void mul_rows_range(const FpMat& A, const FpMat& B, FpMat& C, u32 i0, u32 i1) {
  // accumulate raw u64: inner <= 2^32 terms of size < p^2 never overflows
  for (u32 i = i0; i < i1; ++i) {
    for (u32 j = 0; j < B.cols; ++j) {
      u64 acc = 0;
      for (u32 k = 0; k < A.cols; ++k)
        acc += static_cast<u64>(A.at(i, k)) * B.at(k, j);
      C.at(i, j) = static_cast<u32>(acc % A.F.p);
    }
  }
}

FpMat mat_mul_serial(const FpMat& A, const FpMat& B) {
  if (A.cols != B.rows || A.F.p != B.F.p)
    throw std::invalid_argument("mat_mul: shape/field mismatch");
  FpMat C(A.F, A.rows, B.cols);
  mul_rows_range(A, B, C, 0, A.rows);
  return C;
}

FpMat mat_mul_parallel(const FpMat& A, const FpMat& B) {
  if (A.cols != B.rows || A.F.p != B.F.p)
    throw std::invalid_argument("mat_mul: shape/field mismatch");
  FpMat C(A.F, A.rows, B.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(A.rows); ++i)
    mul_rows_range(A, B, C, static_cast<u32>(i), static_cast<u32>(i) + 1);
  return C;
}

FpMat mat_mul(const FpMat& A, const FpMat& B) {
  const u64 work = static_cast<u64>(A.rows) * A.cols * B.cols;
  if (work >= (1u << 18)) return mat_mul_parallel(A, B);
  return mat_mul_serial(A, B);
}

FpMat mat_pow(const FpMat& A, u64 e) {
  if (A.rows != A.cols) throw std::invalid_argument("mat_pow: square matrix required");
  FpMat r = FpMat::identity(A.F, A.rows), base = A;
  while (e) {
    if (e & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return r;
}

FpVec mat_vec(const FpMat& A, const FpVec& v) {
  if (v.size() != A.cols) throw std::invalid_argument("mat_vec: size mismatch");
  FpVec r(A.rows, 0);
  for (u32 i = 0; i < A.rows; ++i) {
    u64 acc = 0;
    for (u32 k = 0; k < A.cols; ++k) acc += static_cast<u64>(A.at(i, k)) * v[k];
    r[i] = static_cast<u32>(acc % A.F.p);
  }
  return r;
}

FpVec vec_add(const PrimeField& F, const FpVec& u, const FpVec& v) {
  FpVec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = F.add(u[i], v[i]);
  return r;
}

FpVec vec_sub(const PrimeField& F, const FpVec& u, const FpVec& v) {
  FpVec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = F.sub(u[i], v[i]);
  return r;
}

FpVec vec_scale(const PrimeField& F, u32 c, const FpVec& v) {
  FpVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = F.mul(c, v[i]);
  return r;
}

void vec_add_scaled(const PrimeField& F, FpVec& acc, u32 c, const FpVec& v) {
  for (size_t i = 0; i < v.size(); ++i) acc[i] = F.add(acc[i], F.mul(c, v[i]));
}

RrefResult rref(const FpMat& A) {
  RrefResult res{A, {}, 0};
  FpMat& M = res.mat;
  u32 r = 0;
  for (u32 c = 0; c < M.cols && r < M.rows; ++c) {
    u32 piv = r;
    while (piv < M.rows && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != r)
      for (u32 j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    u32 inv = M.F.inv(M.at(r, c));
    for (u32 j = c; j < M.cols; ++j) M.at(r, j) = M.F.mul(inv, M.at(r, j));
    for (u32 i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      u32 f = M.at(i, c);
      for (u32 j = c; j < M.cols; ++j)
        M.at(i, j) = M.F.sub(M.at(i, j), M.F.mul(f, M.at(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

FpMat kernel_basis(const FpMat& A) {
  RrefResult R = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (u32 c : R.pivots) is_pivot[c] = true;
  std::vector<FpVec> rows;
  for (u32 f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    FpVec v(A.cols, 0);
    v[f] = 1;
    for (u32 r = 0; r < R.rank; ++r) v[R.pivots[r]] = A.F.neg(R.mat.at(r, f));
    rows.push_back(std::move(v));
  }
  FpMat K = FpMat::from_rows(A.F, rows);
  if (rows.empty()) K = FpMat(A.F, 0, A.cols);
  return K;
}

FpMat eigenspace(const FpMat& M, u32 lambda) {
  if (M.rows != M.cols) throw std::invalid_argument("eigenspace: square matrix required");
  FpMat S = mat_sub(M, mat_scale(FpMat::identity(M.F, M.rows), lambda));
  return kernel_basis(S);
}

bool Subspace::contains(const FpVec& v) const { return coordinates(v).has_value(); }

std::optional<FpVec> Subspace::coordinates(const FpVec& v) const {
  if (v.size() != basis.cols) throw std::invalid_argument("Subspace: ambient dim mismatch");
  FpVec rem = v, coords(basis.rows, 0);
  for (u32 r = 0; r < basis.rows; ++r) {
    u32 c = rem[pivots[r]];
    if (c != 0) {
      coords[r] = c;
      for (u32 j = 0; j < basis.cols; ++j)
        rem[j] = basis.F.sub(rem[j], basis.F.mul(c, basis.at(r, j)));
    }
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

Subspace row_space(const FpMat& A) {
  RrefResult R = rref(A);
  FpMat b(A.F, R.rank, A.cols);
  for (u32 i = 0; i < R.rank; ++i) b.set_row(i, R.mat.row(i));
  return Subspace{b, R.pivots};
}

Subspace subspace_from_vectors(PrimeField F, const std::vector<FpVec>& vecs, u32 ambient) {
  if (vecs.empty()) return zero_subspace(F, ambient);
  return row_space(FpMat::from_rows(F, vecs));
}

Subspace full_subspace(PrimeField F, u32 n) { return row_space(FpMat::identity(F, n)); }

Subspace zero_subspace(PrimeField F, u32 n) { return Subspace{FpMat(F, 0, n), {}}; }

Subspace intersect_subspaces(const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != V.ambient_dim() || U.basis.F.p != V.basis.F.p)
    throw std::invalid_argument("intersect: ambient mismatch");
  const PrimeField F = U.basis.F;
  const u32 n = U.ambient_dim(), r = U.dim(), s = V.dim();
  if (r == 0 || s == 0) return zero_subspace(F, n);
  // solve sum_i x_i U_i - sum_j y_j V_j = 0; columns are (x, y)
  FpMat M(F, n, r + s);
  for (u32 k = 0; k < n; ++k) {
    for (u32 i = 0; i < r; ++i) M.at(k, i) = U.basis.at(i, k);
    for (u32 j = 0; j < s; ++j) M.at(k, r + j) = F.neg(V.basis.at(j, k));
  }
  FpMat K = kernel_basis(M);
  std::vector<FpVec> vecs;
  for (u32 t = 0; t < K.rows; ++t) {
    FpVec w(n, 0);
    for (u32 i = 0; i < r; ++i) vec_add_scaled(F, w, K.at(t, i), U.basis.row(i));
    vecs.push_back(std::move(w));
  }
  return subspace_from_vectors(F, vecs, n);
}

bool subspace_leq(const Subspace& U, const Subspace& V) {
  for (u32 i = 0; i < U.dim(); ++i)
    if (!V.contains(U.basis.row(i))) return false;
  return true;
}

}  // namespace modlie
