#pragma once

#include <string>
#include <vector>

#include "yoneda/subcategory.hpp"
#include "yoneda/weight.hpp"

namespace yoneda {

// Field tag used in instance files and on the command line: "q" or "fp:<p>".
std::string field_spec_tag(const FieldSpec& fs);
FieldSpec parse_field_spec(const std::string& tag);

// A ground-truth fact about an instance, re-derivable by the engine. `key` is a
// colon-separated selector (see check_expected_facts for the full list), `value`
// is the expected result, and `provenance` records where the value came from so a
// mismatch points straight at the derivation to re-check.
struct ExpectedFact {
    std::string key;
    Json value;
    std::string provenance;
};

struct NamedModule {
    std::string name;
    ModulePtr module;
};

struct NamedIdeal {
    std::string name;
    LeftIdeal ideal;
};

// Either a flat family (pairwise comaximal ideals) or a block family; exactly one
// of `ideals` / `blocks` is populated, by name reference into the ideal table.
struct NamedFamily {
    std::string name;
    bool is_block = false;
    std::vector<std::string> ideals;
    std::vector<std::vector<std::string>> blocks;
};

struct NamedFunctor {
    std::string name;
    FunctorPtr functor;
};

// One fully validated problem instance: an algebra plus named satellite objects.
// The subcategory is built over the ideal table in order (one object per ideal)
// and is what every functor and counit-style fact refers to.
struct Instance {
    std::string name;
    AlgebraPtr algebra;
    std::vector<NamedModule> modules;
    std::vector<NamedIdeal> ideals;
    std::vector<NamedFamily> families;
    std::vector<NamedFunctor> functors;
    std::vector<ExpectedFact> expected;

    // Built once at load; null when the ideal table is empty.
    BPtr subcategory;

    const NamedModule* find_module(const std::string& name) const;
    const NamedIdeal* find_ideal(const std::string& name) const;
    const NamedFamily* find_family(const std::string& name) const;
    const NamedFunctor* find_functor(const std::string& name) const;
};

// The subcategory over all named ideals in table order; throws ValidationError
// when the instance has no ideals.
BPtr instance_subcategory(const Instance& inst);

// Materialize a named family. Flat accessor rejects block families and vice versa.
IdealFamily flat_family(const Instance& inst, const NamedFamily& fam);
BlockFamily block_family(const Instance& inst, const NamedFamily& fam);

// Validates names, cross-references, and every algebraic axiom (algebra
// associativity/unit, module axioms, functor identity/composition). Failures
// throw ValidationError naming the offending entity and axiom.
Instance instance_from_json(const Json& j);

// Reads and parses the file, then defers to instance_from_json. Parse errors
// throw ValidationError with the parser's message.
Instance load_instance(const std::string& path);

// Deterministic export; instance_from_json(instance_to_json(i)) re-exports to
// byte-identical JSON.
Json instance_to_json(const Instance& inst);

// Recomputes every expected fact and compares. One check per fact, named
// "fact-<key>", with expected/computed/provenance in the check data. Unknown
// fact keys or dangling references throw ValidationError.
//
// Supported keys (M = module name, I = ideal name, F = family name):
//   algebra_dim                 module_dim:M            ideal_dim:I
//   quotient_dim:I              eigenring_dim:I         normalizer_dim:I
//   simplicity:M                s_complement_dim:I      s_freeness_rank:I
//   invariant_dim:I:M           hom_dim:M:M             counit_label:M
//   weight:F:M                  weight_sum_dim:F:M      genweight:F:M
//   genweight_piece_dims:F:M    power_block_dims:I
AuditReport check_expected_facts(const Instance& inst);

}  // namespace yoneda
