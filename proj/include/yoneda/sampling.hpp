#pragma once

#include <optional>
#include <vector>

#include "yoneda/rng.hpp"
#include "yoneda/subcategory.hpp"

namespace yoneda {

// All samplers are pure functions of the rng state: same seed, same stream of
// draws, same outputs. Rejection loops are bounded, with deterministic
// fallbacks, so a sampler never spins forever on an unlucky seed.

// Invertible square matrix with small entries (rejection on singularity).
Matrix random_invertible(Rng& rng, const Field& k, int n);

// Base-change of an algebra along a random invertible matrix.
AlgebraPtr change_basis(const AlgebraPtr& a, const Matrix& p);

// One of: full matrix algebra, upper triangular algebra, truncated polynomial
// quotient, cyclic group algebra, or a product of two smaller draws, then a
// random change of basis. Dimension is at most max_dim (and at least 1).
AlgebraPtr random_algebra(Rng& rng, FieldSpec fs, int max_dim);

// Closures of random generator sets: pairwise distinct, proper unless
// allow_unit, at most `count` of them (fewer when rejection runs out).
std::vector<LeftIdeal> random_ideals(Rng& rng, const AlgebraPtr& a, int count,
                                     bool allow_unit = false);

// Submodule or quotient of A or A + A generated/cogenerated by random vectors,
// rejected until dim <= max_dim (deterministic fallback: zero module).
ModulePtr random_module(Rng& rng, const AlgebraPtr& a, int max_dim);

// Kernel or cokernel of a random transformation between direct sums of
// representables; total dimension kept at or below max_total_dim when possible.
FunctorPtr random_functor(Rng& rng, const BPtr& b, int summands, int max_total_dim = 12);

// Random combination of a transformation-space basis.
NatTrans random_nat(Rng& rng, const NatBasis& basis);

// Budget for the randomized fleets below. With `field` unset the iterations
// alternate between the rationals and F_5, so both characteristics are swept in
// a single run.
struct FleetBudget {
    int count = 100;
    int max_algebra_dim = 8;
    int max_ideals = 3;
    int max_module_dim = 6;
    int functor_summands = 2;
    std::optional<FieldSpec> field;
    std::uint64_t seed = 0;
};

// One random instance per iteration (algebra, ideal set, functor, module), one
// summarized check per iteration; failures carry the failing sub-checks as the
// witness. adjunction_fleet checks dim Nat(F, Y(V)) = dim Hom(|F|, V) plus the
// explicit bijection; triangle_fleet checks both triangle identities.
AuditReport adjunction_fleet(const FleetBudget& budget);
AuditReport triangle_fleet(const FleetBudget& budget);

} // namespace yoneda
