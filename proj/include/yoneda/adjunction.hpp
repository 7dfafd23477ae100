#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yoneda/subcategory.hpp"

namespace yoneda {

// The realization |F|: quotient of the direct sum over objects B of i(B) (x) F(B)
// by the span of all  g(b) (x) v  -  b (x) F(g)(v).  Block B occupies columns
// [offsets[B], offsets[B+1]) of the ambient space, with local index
// x * dim F(B) + v for basis vectors x of i(B) and v of F(B).
struct Realization {
    BPtr base;
    FunctorPtr f;
    ModulePtr module; // |F|
    int ambient = 0;
    std::vector<int> offsets;  // size m+1
    Subspace relations;        // inside the ambient space
    QuotientSpace quotient;    // ambient coords -> |F| coords
    std::vector<Matrix> kappa; // kappa[B]: block B coords -> |F| coords

    int block_dim(int b) const { return offsets[b + 1] - offsets[b]; }
};

// Checks that the relation span is stable under the blockwise action before
// quotienting; instability indicates an invalid functor and throws.
Realization realize(const BPtr& b, const FunctorPtr& f);

// The induced map |theta|: |F| -> |G| of a natural transformation, via the
// blockwise maps id (x) theta_B on the ambients.
ModuleMap realize_nat(const NatTrans& theta, const Realization& rf, const Realization& rg);

// Counit at V: evaluation x (x) phi |-> phi(x) on each block of |Y(V)|,
// descended to the quotient.
struct Counit {
    YonedaFunctor y;    // Y(V)
    Realization real;   // |Y(V)|
    ModuleMap map;      // |Y(V)| -> V
    MapClassification cls;
};

Counit counit_from(const BPtr& b, const YonedaFunctor& yv, const Realization& ryv);
Counit counit(const BPtr& b, const ModulePtr& v);

// Unit at F: component at B sends v to the module map x |-> kappa_B(x (x) v),
// written in the canonical basis of Hom(i(B), |F|).
struct Unit {
    Realization real;     // |F|
    YonedaFunctor y_real; // Y(|F|)
    NatTrans eta;         // F -> Y(|F|)
    std::vector<MapClassification> component_cls;
    MapClassification cls; // pointwise conjunction
};

Unit unit_from(const BPtr& b, const FunctorPtr& f, const Realization& rf);
Unit unit(const BPtr& b, const FunctorPtr& f);

// Pointwise classification of a transformation: mono/epi/iso hold exactly when
// they hold at every object; rank and dims are summed over objects.
MapClassification classify_nat(const NatTrans& t);

std::string classification_label(const MapClassification& c); // iso | epi-only | mono-only | neither

struct FixVerdict {
    MapClassification cls;
    bool in_fix = false;
    std::string label;
};

FixVerdict fix_epsilon(const BPtr& b, const ModulePtr& v);
FixVerdict fix_eta(const BPtr& b, const FunctorPtr& f);

AuditReport fix_membership_module(const BPtr& b, const ModulePtr& v);
AuditReport fix_membership_functor(const BPtr& b, const FunctorPtr& f);

// dim Hom(|F|, V) = dim Nat(F, Y(V)), the explicit currying bijection, and the
// inverse round trip.
AuditReport adjunction_dim_check(const BPtr& b, const FunctorPtr& f, const ModulePtr& v);

// epsilon_{|F|} . |eta_F| = id_{|F|}   and   Y(epsilon_V) . eta_{Y(V)} = id_{Y(V)}.
AuditReport triangle_audit(const BPtr& b, const FunctorPtr& f, const ModulePtr& v);

// Right-S-stable complement of the invariants (A/I)^I inside A/I, found by solving
// for a right-S-linear projection onto the invariants; the solver zeroes free
// variables, so the result is deterministic. nullopt when the system is unsolvable.
std::optional<Subspace> s_complement(const LeftIdeal& i);

// W <= A/I such that multiplication W (x) S -> A/I is bijective (a free right-S
// basis witness), searched greedily from the unit class, the standard basis, and
// pairwise sums. nullopt when no witness is found within that candidate list.
std::optional<Subspace> s_freeness(const LeftIdeal& i);

// Split mono in the module category: a left inverse that is itself a module map.
bool has_left_inverse(const ModuleMap& m);

struct SingleObjectBudget {
    int functor_samples = 8;
    int functor_summands = 2; // representable sum size used to sample functors
    std::uint64_t seed = 0;
};

// Audit of the one-object subcategory {A/I} over the given probe modules:
//   1. image of epsilon_V equals the submodule generated by V^I, and epsilon_V is
//      epi exactly when that submodule is all of V;
//   2. when a right-S complement of the invariants exists, eta is monic on all
//      sampled functors;
//   3. when A/I is certified simple: epsilon_V is monic on every probe, and the
//      density systems over a free S-basis are solvable;
//   4. when A/I is certified simple: eta is an isomorphism on all sampled
//      functors, and Fix membership of each probe coincides with V = A V^I;
//   5. whenever eta is pointwise monic and epsilon_{|F|} is split monic, eta is
//      epic (checked on the sampled functors).
AuditReport single_object_audit(const LeftIdeal& i, const std::vector<ModulePtr>& probes,
                                const SingleObjectBudget& budget);

} // namespace yoneda
