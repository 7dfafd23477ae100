#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "yoneda/algebra.hpp"

namespace yoneda {

struct SubcategoryB;
using BPtr = std::shared_ptr<const SubcategoryB>;

// Full subcategory on the cyclic quotients A/I_1 .. A/I_m, carrying pinned hom bases
// and the composition structure constants over those bases. Built once, then shared
// read-only; all downstream computations index into these tables.
struct SubcategoryB {
    AlgebraPtr algebra;
    std::vector<LeftIdeal> ideals;
    std::vector<CyclicModule> objects;

    // homs[s][t]: canonical basis of the maps object s -> object t.
    std::vector<std::vector<HomBasis>> homs;

    // comp[s][t][u]: one row per pair (k, j) at index k * homs[s][t].dim() + j,
    // holding the coordinates in homs[s][u] of basis_k(t -> u) composed after
    // basis_j(s -> t).
    std::vector<std::vector<std::vector<Matrix>>> comp;

    // identities[s]: coordinates of the identity map in homs[s][s].
    std::vector<Vec> identities;

    AuditReport build_report;

    int size() const { return int(objects.size()); }
    const Field& field() const { return algebra->field(); }

    // Coordinates of (g: t -> u) after (f: s -> t), both given in basis coordinates.
    Vec compose_coords(int s, int t, int u, const Vec& g, const Vec& f) const;
};

// Rejects duplicate ideals (same subspace). The build report records, per object
// pair, that right-multiplication classes of {a : I_s a <= I_t} modulo I_t span
// exactly the computed hom space, and that the composition constants are
// associative and unital on every basis triple/pair.
BPtr build_subcategory(const AlgebraPtr& a, std::vector<LeftIdeal> ideals);

// Contravariant functor on the subcategory: a space F(B) per object and, for every
// hom basis element f: s -> t, a matrix F(f): F(t) -> F(s).
struct FunctorRep {
    BPtr base;
    std::vector<int> dims;
    std::vector<std::vector<std::vector<Matrix>>> maps; // maps[s][t][k], dims[s] x dims[t]

    // F applied to the combination of hom basis elements s -> t with the given
    // coordinates; a dims[s] x dims[t] matrix.
    Matrix map_of(int s, int t, const Vec& coords) const;
};

using FunctorPtr = std::shared_ptr<const FunctorRep>;

// Shape-checks and canonicalizes entries; the functor axioms are checked by
// validate_functor.
FunctorPtr make_functor(BPtr base, std::vector<int> dims,
                        std::vector<std::vector<std::vector<Matrix>>> maps);

// Identity axiom at every object and the composition axiom on every hom basis
// pair, extended bilinearly through the composition constants.
AuditReport validate_functor(const FunctorRep& f);

FunctorPtr zero_functor(const BPtr& b);

// hom(-, object) assembled purely from the stored hom bases and composition
// constants; coincides with yoneda() applied to the object's module.
FunctorPtr representable_functor(const BPtr& b, int object);

FunctorPtr functor_direct_sum(const FunctorPtr& x, const FunctorPtr& y);

// Same base (pointer identity), same dimensions, same matrices.
bool functors_equal(const FunctorRep& x, const FunctorRep& y);

// Restricted Yoneda image of a module: object s carries Hom(A/I_s, V) in its
// canonical basis and morphisms act by precomposition.
struct YonedaFunctor {
    FunctorPtr functor;
    ModulePtr v;
    std::vector<HomBasis> hom_bases; // hom_bases[s]: basis of Hom(A/I_s, V)
};

YonedaFunctor restricted_yoneda(const BPtr& b, const ModulePtr& v);

struct NatTrans {
    FunctorPtr source;
    FunctorPtr target;
    std::vector<Matrix> components; // components[s]: source dims[s] -> target dims[s]
};

// First (s, t, k) with theta_s . F(f_k) != G(f_k) . theta_t, if any.
std::optional<std::array<int, 3>> naturality_defect(const NatTrans& t);

NatTrans identity_nat(const FunctorPtr& f);
NatTrans compose_nats(const NatTrans& g, const NatTrans& f); // g after f

// Postcomposition by a module map h: V -> W, as a transformation Y(V) -> Y(W).
NatTrans yoneda_on_map(const YonedaFunctor& yv, const YonedaFunctor& yw, const ModuleMap& h);

// Canonical basis of Nat(F, G). The vectorization concatenates the row-major
// components object by object, in object order.
struct NatBasis {
    FunctorPtr source;
    FunctorPtr target;
    std::vector<NatTrans> basis;
    Subspace space;

    int dim() const { return int(basis.size()); }
    Vec coords(const NatTrans& t) const; // throws if not in the space
};

NatBasis nat_space(const FunctorPtr& f, const FunctorPtr& g);

Vec vectorize_nat(const NatTrans& t);
NatTrans nat_from_vector(const FunctorPtr& f, const FunctorPtr& g, const Vec& v);

// Object-wise kernel of a transformation, made into a functor; inclusion is natural.
struct FunctorKernel {
    FunctorPtr functor;
    NatTrans inclusion; // functor -> source of t
    std::vector<Subspace> kernels;
};
FunctorKernel functor_kernel(const NatTrans& t);

// Object-wise cokernel; projection is natural.
struct FunctorCokernel {
    FunctorPtr functor;
    NatTrans projection; // target of t -> functor
    std::vector<QuotientSpace> quotients;
};
FunctorCokernel functor_cokernel(const NatTrans& t);

} // namespace yoneda
