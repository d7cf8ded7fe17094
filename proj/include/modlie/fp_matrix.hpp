#pragma once

#include <optional>
#include <string>

#include "modlie/fp.hpp"

namespace modlie {

/// Coordinate vector over F_p; the field travels alongside, not inside.
using FpVec = std::vector<u32>;

bool is_zero_vec(const FpVec& v);

struct FpMat {
  PrimeField F;
  u32 rows = 0, cols = 0;
  std::vector<u32> a;  // row-major

  FpMat() = default;
  FpMat(PrimeField f, u32 r, u32 c) : F(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  u32& at(u32 i, u32 j) { return a[static_cast<size_t>(i) * cols + j]; }
  u32 at(u32 i, u32 j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FpMat identity(PrimeField f, u32 n);
  static FpMat from_rows(PrimeField f, const std::vector<FpVec>& rows);

  FpVec row(u32 i) const;
  FpVec col(u32 j) const;
  void set_row(u32 i, const FpVec& v);
  FpMat transpose() const;

  bool operator==(const FpMat& o) const {
    return F.p == o.F.p && rows == o.rows && cols == o.cols && a == o.a;
  }
};

FpMat mat_add(const FpMat& A, const FpMat& B);
FpMat mat_sub(const FpMat& A, const FpMat& B);
FpMat mat_scale(const FpMat& A, u32 c);

/// Serial reference product, kept as the oracle for the OpenMP kernel.
FpMat mat_mul_serial(const FpMat& A, const FpMat& B);
/// OpenMP product (row-parallel); falls back to serial when built without OpenMP.
FpMat mat_mul_parallel(const FpMat& A, const FpMat& B);
/// Dispatcher: parallel above a size threshold, serial below.
FpMat mat_mul(const FpMat& A, const FpMat& B);

FpMat mat_pow(const FpMat& A, u64 e);
FpVec mat_vec(const FpMat& A, const FpVec& v);

FpVec vec_add(const PrimeField& F, const FpVec& u, const FpVec& v);
FpVec vec_sub(const PrimeField& F, const FpVec& u, const FpVec& v);
FpVec vec_scale(const PrimeField& F, u32 c, const FpVec& v);
void vec_add_scaled(const PrimeField& F, FpVec& acc, u32 c, const FpVec& v);

struct RrefResult {
  FpMat mat;               // reduced row-echelon form
  std::vector<u32> pivots; // pivot column per nonzero row
  u32 rank = 0;
};

RrefResult rref(const FpMat& A);

/// Basis of the right kernel {x : Ax = 0}, rows of the result. The basis is
/// the standard one (one vector per free column, free coordinate set to 1).
FpMat kernel_basis(const FpMat& A);

/// Basis of ker(M - lambda I), rows of the result.
FpMat eigenspace(const FpMat& M, u32 lambda);

/// Row space of A in canonical form (RREF rows, zero rows dropped).
struct Subspace {
  FpMat basis;              // RREF, no zero rows; rows are the basis vectors
  std::vector<u32> pivots;  // pivot column of each row

  u32 dim() const { return basis.rows; }
  u32 ambient_dim() const { return basis.cols; }
  bool contains(const FpVec& v) const;
  /// Coordinates of v in this basis; nullopt if v is outside the span.
  std::optional<FpVec> coordinates(const FpVec& v) const;
  bool operator==(const Subspace& o) const { return basis == o.basis; }
};

Subspace row_space(const FpMat& A);
Subspace subspace_from_vectors(PrimeField F, const std::vector<FpVec>& vecs, u32 ambient);
Subspace full_subspace(PrimeField F, u32 n);
Subspace zero_subspace(PrimeField F, u32 n);
Subspace intersect_subspaces(const Subspace& U, const Subspace& V);
bool subspace_leq(const Subspace& U, const Subspace& V);

}  // namespace modlie
