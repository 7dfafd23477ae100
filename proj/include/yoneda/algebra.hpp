#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yoneda/matrix.hpp"
#include "yoneda/report.hpp"

namespace yoneda {

struct Algebra;
struct AlgebraModule;
using AlgebraPtr = std::shared_ptr<const Algebra>;
using ModulePtr = std::shared_ptr<const AlgebraModule>;

// Finite-dimensional associative unital algebra, given by structure constants on a
// fixed basis e_0..e_{n-1}:  e_i * e_j = sum_l c(i,j,l) e_l.
struct Algebra {
    int dim = 0;
    std::vector<Scalar> structure; // c(i,j,l) at ((i*dim)+j)*dim+l
    Vec unit;

    const Field& field() const { return field_; }
    const FieldSpec& field_spec() const { return field_.spec(); }

    const Scalar& c(int i, int j, int l) const {
        return structure[(std::size_t(i) * dim + j) * dim + l];
    }

    Vec basis_vec(int i) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;  // y -> x*y on coordinates
    Matrix right_mult(const Vec& x) const; // y -> y*x on coordinates

    bool equals(const Algebra& other) const;

    explicit Algebra(Field f) : field_(std::move(f)) {}

private:
    Field field_;
};

// Shape-checks and canonicalizes entries; axioms are checked by validate_algebra.
AlgebraPtr make_algebra(FieldSpec fs, int dim, std::vector<Scalar> structure, Vec unit);

// Left module given by one action matrix per algebra basis element.
struct AlgebraModule {
    AlgebraPtr algebra;
    int dim = 0;
    std::vector<Matrix> action;

    const Field& field() const { return algebra->field(); }
    Matrix act(const Vec& element) const; // sum_i element_i * action[i]
};

ModulePtr make_module(AlgebraPtr a, int dim, std::vector<Matrix> action);
ModulePtr regular_module(const AlgebraPtr& a);
ModulePtr zero_module(const AlgebraPtr& a);
bool modules_equal(const AlgebraModule& x, const AlgebraModule& y);

AuditReport validate_algebra(const Algebra& a);
AuditReport validate_module(const AlgebraModule& v);

// Left ideal, stored with the generators it came from and the closed canonical basis.
struct LeftIdeal {
    AlgebraPtr algebra;
    std::vector<Vec> generators;
    Subspace basis;

    int dim() const { return basis.dim(); }
};

LeftIdeal left_ideal_closure(const AlgebraPtr& a, std::vector<Vec> generators);
LeftIdeal zero_ideal(const AlgebraPtr& a);
bool ideals_equal(const LeftIdeal& x, const LeftIdeal& y);

// A/I with its quotient coordinates and the class of 1.
struct CyclicModule {
    ModulePtr module;
    QuotientSpace quotient;
    Vec unit_class;
};

CyclicModule cyclic_module(const LeftIdeal& i);

// Linear map between modules over the same algebra, expected to intertwine the actions.
struct ModuleMap {
    ModulePtr source;
    ModulePtr target;
    Matrix matrix; // target.dim x source.dim
};

// First algebra basis index where the map fails to intertwine, or nullopt if it does.
std::optional<int> intertwining_defect(const ModuleMap& f);
ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f); // g after f

struct MapClassification {
    int rank = 0;
    int source_dim = 0;
    int target_dim = 0;
    bool mono = false;
    bool epi = false;
    bool iso = false;
};

MapClassification classify_matrix(const Field& k, const Matrix& m);

// Basis of Hom_A(source, target), canonically ordered (RREF of the vectorized
// intertwining-solution space, row-major vectorization).
struct HomBasis {
    ModulePtr source;
    ModulePtr target;
    std::vector<ModuleMap> basis;
    Subspace space; // vectorized solution space

    int dim() const { return int(basis.size()); }
    Vec coords(const Matrix& map_matrix) const; // throws if not in the space
};

HomBasis hom_space(const ModulePtr& v, const ModulePtr& w);

// V^I = {v : I v = 0}. Also asserts dim V^I == dim Hom_A(A/I, V) (the two are
// canonically isomorphic; a mismatch is an internal error).
Subspace invariant_subspace(const ModulePtr& v, const LeftIdeal& i);

// Smallest action-stable subspace containing the given vectors.
Subspace generated_submodule(const ModulePtr& v, const std::vector<Vec>& vectors);

// N_A(I) = {a : I a <= I}; contains I and the unit.
Subspace normalizer(const LeftIdeal& i);

// Eigenring S = N_A(I)/I with representatives, plus the anti-isomorphism data
// s = a+I  |->  phi_s in End_A(A/I), phi_s(b+I) = ba+I.
struct Eigenring {
    AlgebraPtr s;
    Subspace normalizer_space;
    QuotientSpace n_mod_i;          // coordinates of N -> coordinates of S
    Matrix reps;                    // s.dim rows, each an element of A representing a basis class
    CyclicModule cyclic;            // A/I
    std::vector<ModuleMap> phi;     // phi for each S basis class
    AuditReport report;
};

Eigenring eigenring(const LeftIdeal& i);

// Right multiplication by a normalizer element descends to A/I; matrix of x+I -> x*rep+I.
Matrix right_action_on_cyclic(const CyclicModule& c, const Vec& rep);

struct SubmoduleResult {
    ModulePtr module;
    ModuleMap inclusion;
    Subspace subspace;
};
SubmoduleResult submodule_module(const ModulePtr& v, const Subspace& s);

struct QuotientModuleResult {
    ModulePtr module;
    ModuleMap projection;
    QuotientSpace quotient;
};
QuotientModuleResult quotient_module(const ModulePtr& v, const Subspace& s);

ModulePtr direct_sum_module(const ModulePtr& x, const ModulePtr& y);

// --- simplicity ---------------------------------------------------------------

struct SimplicityBudget {
    long long max_exhaustive = 1 << 20; // cap on p^dim for the exhaustive spin
    int random_probes = 16;
    int singular_samples = 16;
    std::int64_t prime_search_limit = 100;
    int reduction_attempts = 3;
    std::uint64_t seed = 0;
};

struct SimplicityVerdict {
    enum class Kind { Simple, NotSimple, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Vec> witness;  // generates a proper nonzero submodule (absent for dim 0)
    std::string certificate;
    long long spins = 0;                          // vectors spun exhaustively
    std::optional<std::int64_t> reduction_prime;  // set when certified via mod-p reduction
};

// Exhaustive over F_p when p^dim fits the budget (spin one representative per scalar
// line). Over Q: probe-driven NotSimple detection, Simple only via a mod-p reduction
// certificate, Unknown otherwise.
SimplicityVerdict is_simple(const ModulePtr& v, const SimplicityBudget& budget);

std::string simplicity_name(SimplicityVerdict::Kind k);

} // namespace yoneda
