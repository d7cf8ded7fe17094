#pragma once

#include "modlie/lie_algebra.hpp"

namespace modlie {

/// F_p-span of commuting toral elements (t^{[p]} = t), closed under the p-map
/// by construction. Basis rows are echelonized and each row is itself toral.
struct Torus {
  Subspace span;

  u32 dim() const { return span.dim(); }
};

struct PEnvelope {
  Subspace inner;    // the starting subalgebra
  Subspace closure;  // its minimal p-closure inside the ambient algebra
};

/// Default restart budget of the randomized torus search.
inline constexpr u32 kTorusSearchRestarts = 32;
/// Default seed (overridable via MODLIE_SEED in the CLI).
inline constexpr u64 kDefaultSeed = 12345;

bool is_toral(const LieAlgebra& L, const FpVec& v, const PPowerFn& p_power = {});

/// Semisimple part of u: iterate u -> u^{[p]} until the sequence becomes
/// periodic (preperiod e, period d), then return u^{[p^k]} for the smallest
/// k >= e with k = 0 mod d. The difference u - s is ad-nilpotent and
/// [s, u-s] = 0.
FpVec semisimple_part(const LieAlgebra& L, const FpVec& u, const PPowerFn& p_power = {});

bool is_ad_nilpotent(const LieAlgebra& L, const FpVec& v);

/// Torus generated by commuting semisimple elements: close the span under the
/// p-map, then cut out the toral (F_p-rational) part as the kernel of
/// v -> v^{[p]} - v, which is linear over F_p on an abelian p-closed span.
Torus torus_generated(const LieAlgebra& L, const std::vector<FpVec>& gens,
                      const PPowerFn& p_power = {});

/// Minimal p-closure of a bracket-closed subspace S inside a restricted
/// ambient algebra: iterate adding basis p-powers until the dimension is
/// stable. `p_power` may supply a faster equivalent of jacobson_p_power.
PEnvelope p_envelope(const LieAlgebra& ambient, const Subspace& S,
                     const PPowerFn& p_power = {});

struct TorusSearchResult {
  Torus torus;
  u32 restart = 0;  // index of the restart that produced the winner
};

/// Greedy randomized search for a maximal torus: sample elements of the
/// centralizer of the current torus, take semisimple parts, extend. Restarts
/// are independent (and may run in OpenMP threads); the merge is
/// deterministic: largest torus, ties broken by lowest restart index.
TorusSearchResult max_torus_search(const LieAlgebra& L, u64 seed = kDefaultSeed,
                                   u32 restarts = kTorusSearchRestarts,
                                   const PPowerFn& p_power = {});

}  // namespace modlie
