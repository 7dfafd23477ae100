#include "yoneda/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yoneda/adjunction.hpp"
#include "yoneda/corpus.hpp"
#include "yoneda/errors.hpp"
#include "yoneda/instance.hpp"
#include "yoneda/sampling.hpp"
#include "yoneda/weight.hpp"

namespace yoneda {
namespace {

constexpr const char* kCorpusPrefix = "corpus:";

Instance resolve_instance(const std::string& address) {
    if (address.rfind(kCorpusPrefix, 0) == 0)
        return corpus_instance(address.substr(std::string(kCorpusPrefix).size()));
    return load_instance(address);
}

template <typename Table>
Json name_list(const Table& table) {
    Json names = Json::array();
    for (const auto& entry : table) names.push_back(entry.name);
    return names;
}

template <typename Table>
std::string joined_names(const Table& table) {
    std::string s;
    for (const auto& entry : table) {
        if (!s.empty()) s += ", ";
        s += entry.name;
    }
    return s.empty() ? "<none>" : s;
}

// --probe resolution. An empty probe is allowed only when the table has exactly
// one candidate; the error message lists what is available.

const NamedIdeal& resolve_ideal(const Instance& inst, const std::string& probe,
                                const std::string& command) {
    if (probe.empty()) {
        require_input(inst.ideals.size() == 1,
                      command + ": pass --probe <ideal>; instance '" + inst.name + "' names " +
                          std::to_string(inst.ideals.size()) + " ideals (" +
                          joined_names(inst.ideals) + ")");
        return inst.ideals.front();
    }
    const NamedIdeal* ni = inst.find_ideal(probe);
    require_input(ni != nullptr, command + ": no ideal named '" + probe + "' in instance '" +
                                     inst.name + "' (ideals: " + joined_names(inst.ideals) + ")");
    return *ni;
}

const NamedModule& resolve_module(const Instance& inst, const std::string& probe,
                                  const std::string& command) {
    if (probe.empty()) {
        require_input(inst.modules.size() == 1,
                      command + ": pass --probe <module>; instance '" + inst.name + "' names " +
                          std::to_string(inst.modules.size()) + " modules (" +
                          joined_names(inst.modules) + ")");
        return inst.modules.front();
    }
    const NamedModule* nm = inst.find_module(probe);
    require_input(nm != nullptr, command + ": no module named '" + probe + "' in instance '" +
                                     inst.name + "' (modules: " + joined_names(inst.modules) + ")");
    return *nm;
}

// A probe that may name either a functor or a module (the module meaning Y(V)).
struct FunctorProbe {
    FunctorPtr functor;
    std::string name;
    std::string kind; // "functor" or "yoneda-of-module"
};

FunctorProbe resolve_functor_probe(const Instance& inst, const BPtr& b, const std::string& probe,
                                   const std::string& command) {
    if (probe.empty()) {
        if (inst.functors.size() == 1)
            return {inst.functors.front().functor, inst.functors.front().name, "functor"};
        if (inst.functors.empty() && inst.modules.size() == 1) {
            const NamedModule& nm = inst.modules.front();
            return {restricted_yoneda(b, nm.module).functor, nm.name, "yoneda-of-module"};
        }
        require_input(false, command + ": pass --probe <functor or module>; instance '" +
                                 inst.name + "' has functors (" + joined_names(inst.functors) +
                                 ") and modules (" + joined_names(inst.modules) + ")");
    }
    if (const NamedFunctor* nf = inst.find_functor(probe)) return {nf->functor, nf->name, "functor"};
    if (const NamedModule* nm = inst.find_module(probe))
        return {restricted_yoneda(b, nm->module).functor, nm->name, "yoneda-of-module"};
    require_input(false, command + ": no functor or module named '" + probe + "' in instance '" +
                             inst.name + "'");
    return {}; // unreachable
}

std::vector<ModulePtr> module_table(const Instance& inst) {
    std::vector<ModulePtr> out;
    out.reserve(inst.modules.size());
    for (const auto& m : inst.modules) out.push_back(m.module);
    return out;
}

Json classification_json(const MapClassification& c) {
    return Json{{"label", classification_label(c)}, {"rank", c.rank},
                {"source_dim", c.source_dim},      {"target_dim", c.target_dim}};
}

// ---------------------------------------------------------------------------
// command handlers

AuditReport cmd_validate(const Instance& inst) {
    AuditReport rep;
    rep.subject = "validate";
    rep.fact("field", field_spec_tag(inst.algebra->field_spec()));
    rep.fact("algebra_dim", inst.algebra->dim);
    rep.fact("modules", name_list(inst.modules));
    rep.fact("ideals", name_list(inst.ideals));
    rep.fact("families", name_list(inst.families));
    rep.fact("functors", name_list(inst.functors));
    rep.merge(validate_algebra(*inst.algebra), "algebra-");
    for (const auto& m : inst.modules) rep.merge(validate_module(*m.module), "module-" + m.name + "-");
    if (inst.subcategory) rep.merge(inst.subcategory->build_report, "subcategory-");
    for (const auto& f : inst.functors)
        rep.merge(validate_functor(*f.functor), "functor-" + f.name + "-");
    for (const auto& fam : inst.families) {
        const AuditReport fam_rep = fam.is_block ? check_family(block_family(inst, fam))
                                                 : check_family(flat_family(inst, fam));
        rep.merge(fam_rep, "family-" + fam.name + "-");
    }
    rep.merge(check_expected_facts(inst), "");
    return rep;
}

AuditReport cmd_eigenring(const Instance& inst, const std::string& probe) {
    const NamedIdeal& ni = resolve_ideal(inst, probe, "eigenring");
    Eigenring e = eigenring(ni.ideal);
    AuditReport rep = e.report;
    rep.subject = "eigenring";
    rep.fact("ideal", ni.name);
    rep.fact("ideal_dim", ni.ideal.dim());
    rep.fact("quotient_dim", e.cyclic.module->dim);
    rep.fact("normalizer_dim", e.normalizer_space.dim());
    rep.fact("eigenring_dim", e.s->dim);
    return rep;
}

AuditReport cmd_subcategory(const Instance& inst) {
    const BPtr b = instance_subcategory(inst);
    AuditReport rep = b->build_report;
    rep.subject = "subcategory";
    Json objects = Json::array();
    for (size_t s = 0; s < inst.ideals.size(); ++s)
        objects.push_back(Json{{"ideal", inst.ideals[s].name},
                               {"ideal_dim", b->ideals[s].dim()},
                               {"object_dim", b->objects[s].module->dim}});
    rep.fact("objects", std::move(objects));
    Json hom_dims = Json::array();
    for (int s = 0; s < b->size(); ++s) {
        Json row = Json::array();
        for (int t = 0; t < b->size(); ++t) row.push_back(b->homs[s][t].dim());
        hom_dims.push_back(std::move(row));
    }
    rep.fact("hom_dims", std::move(hom_dims));
    return rep;
}

AuditReport cmd_realize(const Instance& inst, const std::string& probe) {
    const BPtr b = instance_subcategory(inst);
    const FunctorProbe fp = resolve_functor_probe(inst, b, probe, "realize");
    const Realization r = realize(b, fp.functor);
    AuditReport rep;
    rep.subject = "realize";
    rep.fact("probe", fp.name);
    rep.fact("probe_kind", fp.kind);
    rep.fact("functor_dims", fp.functor->dims);
    Json blocks = Json::array();
    for (int s = 0; s < b->size(); ++s) blocks.push_back(r.block_dim(s));
    rep.fact("block_dims", std::move(blocks));
    rep.fact("ambient_dim", r.ambient);
    rep.fact("relation_dim", r.relations.dim());
    rep.fact("realization_dim", r.module->dim);
    rep.require(r.module->dim == r.ambient - r.relations.dim(), "quotient-dimension",
                "realization-dim-is-ambient-minus-relations",
                Json{{"ambient", r.ambient},
                     {"relations", r.relations.dim()},
                     {"realization", r.module->dim}});
    rep.merge(validate_module(*r.module), "module-");
    return rep;
}

AuditReport cmd_counit(const Instance& inst, const std::string& probe) {
    const BPtr b = instance_subcategory(inst);
    const NamedModule& nm = resolve_module(inst, probe, "counit");
    const Field& k = inst.algebra->field();
    const Counit c = counit(b, nm.module);

    AuditReport rep;
    rep.subject = "counit";
    rep.fact("module", nm.name);
    rep.fact("module_dim", nm.module->dim);
    rep.fact("realization_dim", c.real.module->dim);
    rep.fact("counit", classification_json(c.cls));
    rep.fact("in_fix_epsilon", c.cls.iso);

    // Image of epsilon versus the submodule generated by all the invariant
    // spaces, computed by two unrelated routes: column space of the descended
    // matrix on one side, action closure of the V^I bases on the other.
    std::vector<Vec> generators;
    Json invariant_dims = Json::object();
    for (size_t s = 0; s < inst.ideals.size(); ++s) {
        const Subspace inv = invariant_subspace(nm.module, inst.ideals[s].ideal);
        invariant_dims[inst.ideals[s].name] = inv.dim();
        for (int r = 0; r < inv.dim(); ++r) generators.push_back(inv.row(r));
    }
    rep.fact("invariant_dims", std::move(invariant_dims));
    const Subspace image = subspace_row_space(k, nm.module->dim, transpose(c.map.matrix));
    const Subspace span = generated_submodule(nm.module, generators);
    rep.fact("image_dim", image.dim());
    rep.require(image == span, "image-matches-invariant-span",
                "counit-image-is-generated-by-invariants",
                Json{{"image_dim", image.dim()}, {"span_dim", span.dim()}});
    rep.require(c.cls.epi == (span.dim() == nm.module->dim), "epi-iff-invariants-generate",
                "counit-epi-iff-invariants-generate",
                Json{{"epi", c.cls.epi}, {"span_dim", span.dim()}, {"module_dim", nm.module->dim}});
    return rep;
}

AuditReport cmd_unit(const Instance& inst, const std::string& probe) {
    const BPtr b = instance_subcategory(inst);
    const FunctorProbe fp = resolve_functor_probe(inst, b, probe, "unit");
    const Unit u = unit(b, fp.functor);

    AuditReport rep;
    rep.subject = "unit";
    rep.fact("probe", fp.name);
    rep.fact("probe_kind", fp.kind);
    rep.fact("functor_dims", fp.functor->dims);
    rep.fact("realization_dim", u.real.module->dim);
    Json comps = Json::array();
    for (size_t s = 0; s < u.component_cls.size(); ++s)
        comps.push_back(Json{{"object", inst.ideals[s].name},
                             {"classification", classification_json(u.component_cls[s])}});
    rep.fact("components", std::move(comps));
    rep.fact("unit", classification_json(u.cls));
    rep.fact("in_fix_eta", u.cls.iso);
    const auto defect = naturality_defect(u.eta);
    rep.require(!defect.has_value(), "unit-natural", "unit-is-a-natural-transformation",
                defect ? Json{{"object_pair", {(*defect)[0], (*defect)[1]}},
                              {"hom_basis_index", (*defect)[2]}}
                       : Json());
    return rep;
}

AuditReport cmd_fix(const Instance& inst, const std::string& probe) {
    const BPtr b = instance_subcategory(inst);
    // Module probes check Fix_epsilon membership, functor probes Fix_eta.
    if (!probe.empty()) {
        if (const NamedModule* nm = inst.find_module(probe)) {
            AuditReport rep = fix_membership_module(b, nm->module);
            rep.fact("probe", nm->name);
            rep.fact("probe_kind", "module");
            return rep;
        }
        if (const NamedFunctor* nf = inst.find_functor(probe)) {
            AuditReport rep = fix_membership_functor(b, nf->functor);
            rep.fact("probe", nf->name);
            rep.fact("probe_kind", "functor");
            return rep;
        }
        require_input(false, "fix: no module or functor named '" + probe + "' in instance '" +
                                 inst.name + "'");
    }
    if (inst.modules.size() == 1 && inst.functors.empty()) {
        AuditReport rep = fix_membership_module(b, inst.modules.front().module);
        rep.fact("probe", inst.modules.front().name);
        rep.fact("probe_kind", "module");
        return rep;
    }
    require_input(false, "fix: pass --probe <module or functor>; instance '" + inst.name +
                             "' has modules (" + joined_names(inst.modules) + ") and functors (" +
                             joined_names(inst.functors) + ")");
    return {}; // unreachable
}

AuditReport cmd_single_object(const Instance& inst, std::uint64_t seed, std::optional<int> count) {
    require_input(inst.ideals.size() == 1,
                  "single-object-audit: instance '" + inst.name +
                      "' must name exactly one ideal, found " + std::to_string(inst.ideals.size()));
    SingleObjectBudget budget;
    budget.seed = seed;
    if (count) budget.functor_samples = *count;
    AuditReport rep = single_object_audit(inst.ideals.front().ideal, module_table(inst), budget);
    rep.fact("ideal", inst.ideals.front().name);
    rep.fact("probe_modules", name_list(inst.modules));
    rep.fact("seed", seed);
    rep.fact("functor_samples", budget.functor_samples);
    return rep;
}

// One flat/block family by name, or a survey over a module probe.
AuditReport cmd_weight(const Instance& inst, const std::string& probe, std::uint64_t seed,
                       std::optional<int> count) {
    WeightAuditBudget budget;
    budget.seed = seed;
    if (count) {
        budget.functor_samples = *count;
        budget.closure_samples = *count;
    }

    auto run_family = [&](const NamedFamily& fam) {
        require_input(!fam.is_block,
                      "weight: family '" + fam.name + "' is a block family; use genweight");
        AuditReport rep = verify_weightfix(flat_family(inst, fam), module_table(inst), budget);
        rep.fact("family", fam.name);
        rep.fact("family_ideals", Json(fam.ideals));
        rep.fact("seed", seed);
        return rep;
    };

    if (probe.empty()) {
        const NamedFamily* flat = nullptr;
        int flats = 0;
        for (const auto& fam : inst.families)
            if (!fam.is_block) {
                flat = &fam;
                ++flats;
            }
        require_input(flats == 1, "weight: pass --probe <family or module>; instance '" +
                                      inst.name + "' names " + std::to_string(flats) +
                                      " flat families");
        return run_family(*flat);
    }
    if (const NamedFamily* fam = inst.find_family(probe)) return run_family(*fam);
    if (const NamedModule* nm = inst.find_module(probe)) {
        bool has_flat = false;
        for (const auto& fam : inst.families) has_flat = has_flat || !fam.is_block;
        require_input(has_flat, "weight: instance '" + inst.name + "' names no flat family");
        AuditReport rep;
        rep.subject = "weight";
        rep.fact("module", nm->name);
        rep.fact("module_dim", nm->module->dim);
        Json verdicts = Json::object();
        for (const auto& fam : inst.families) {
            if (fam.is_block) continue;
            const IdealFamily x = flat_family(inst, fam);
            const WeightDecomposition d = weight_decomposition(x, nm->module);
            Json piece_dims = Json::array();
            for (const auto& p : d.pieces) piece_dims.push_back(p.dim());
            const bool verdict = is_weight_module(x, nm->module);
            rep.fact("family-" + fam.name,
                     Json{{"ideals", Json(fam.ideals)},
                          {"piece_dims", std::move(piece_dims)},
                          {"sum_dim", d.sum.dim()},
                          {"is_direct", d.is_direct},
                          {"is_full", d.is_full},
                          {"weight", verdict}});
            verdicts[fam.name] = verdict;
            rep.require(d.is_direct, "family-" + fam.name + "-sum-direct",
                        "comaximal-invariants-sum-directly",
                        Json{{"sum_dim", d.sum.dim()}});
        }
        rep.fact("verdicts", std::move(verdicts));
        return rep;
    }
    require_input(false, "weight: no family or module named '" + probe + "' in instance '" +
                             inst.name + "'");
    return {}; // unreachable
}

AuditReport cmd_genweight(const Instance& inst, const std::string& probe, std::uint64_t seed,
                          std::optional<int> count) {
    WeightAuditBudget budget;
    budget.seed = seed;
    if (count) {
        budget.functor_samples = *count;
        budget.closure_samples = *count;
    }

    auto run_family = [&](const NamedFamily& fam) {
        require_input(fam.is_block,
                      "genweight: family '" + fam.name + "' is a flat family; use weight");
        AuditReport rep = verify_genfix(block_family(inst, fam), module_table(inst), budget);
        rep.fact("family", fam.name);
        rep.fact("family_blocks", Json(fam.blocks));
        rep.fact("seed", seed);
        return rep;
    };

    if (probe.empty()) {
        const NamedFamily* block = nullptr;
        int blocks = 0;
        for (const auto& fam : inst.families)
            if (fam.is_block) {
                block = &fam;
                ++blocks;
            }
        require_input(blocks == 1, "genweight: pass --probe <family or module>; instance '" +
                                       inst.name + "' names " + std::to_string(blocks) +
                                       " block families");
        return run_family(*block);
    }
    if (const NamedFamily* fam = inst.find_family(probe)) return run_family(*fam);
    if (const NamedModule* nm = inst.find_module(probe)) {
        // Survey: one verdict per named family, flat families graded as plain
        // weight modules, block families as generalized weight modules.
        AuditReport rep;
        rep.subject = "genweight";
        rep.fact("module", nm->name);
        rep.fact("module_dim", nm->module->dim);
        require_input(!inst.families.empty(),
                      "genweight: instance '" + inst.name + "' names no families");
        Json verdicts = Json::object();
        for (const auto& fam : inst.families) {
            Json piece_dims = Json::array();
            bool verdict = false;
            int sum_dim = 0;
            if (fam.is_block) {
                const BlockFamily xx = block_family(inst, fam);
                const WeightDecomposition d = generalized_weight_decomposition(xx, nm->module);
                for (const auto& p : d.pieces) piece_dims.push_back(p.dim());
                verdict = is_generalized_weight_module(xx, nm->module);
                sum_dim = d.sum.dim();
            } else {
                const IdealFamily x = flat_family(inst, fam);
                const WeightDecomposition d = weight_decomposition(x, nm->module);
                for (const auto& p : d.pieces) piece_dims.push_back(p.dim());
                verdict = is_weight_module(x, nm->module);
                sum_dim = d.sum.dim();
            }
            rep.fact("family-" + fam.name, Json{{"kind", fam.is_block ? "block" : "flat"},
                                                {"piece_dims", std::move(piece_dims)},
                                                {"sum_dim", sum_dim},
                                                {"verdict", verdict}});
            verdicts[fam.name] = verdict;
        }
        rep.fact("verdicts", std::move(verdicts));
        return rep;
    }
    require_input(false, "genweight: no family or module named '" + probe + "' in instance '" +
                             inst.name + "'");
    return {}; // unreachable
}

void emit_report(const AuditReport& rep, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    const std::string text = rep.to_json().dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        require_input(bool(f), "cannot open --out file '" + out_path + "'");
        f << text;
        f.flush();
        require_input(bool(f), "failed while writing --out file '" + out_path + "'");
    } else {
        out << text;
    }
    err << rep.subject << " [" << rep.instance << "]: " << rep.passed() << " passed, "
        << rep.failed() << " failed, " << rep.skipped() << " skipped\n";
    int shown = 0;
    for (const auto& c : rep.checks) {
        if (c.verdict != Verdict::Fail) continue;
        if (++shown > 8) {
            err << "  ... more failures in the report\n";
            break;
        }
        err << "  FAIL " << c.name << " [" << c.anchor << "]\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        CLI::App app{"audits for the restricted Yoneda adjunction over a finite-dimensional algebra"};
        app.require_subcommand(1);

        std::string address;
        std::string probe;
        std::string out_path;
        std::string field_tag;
        std::uint64_t seed = 0;
        std::optional<int> count;
        std::optional<int> max_dim;

        auto add_common = [&](CLI::App* c) {
            c->add_option("--out", out_path, "write the JSON report to this file instead of stdout");
            return c;
        };
        auto add_instance_cmd = [&](const std::string& name, const std::string& desc) {
            CLI::App* c = add_common(app.add_subcommand(name, desc));
            c->add_option("instance", address, "file path or corpus:<name>")->required();
            return c;
        };
        auto add_probe = [&](CLI::App* c, const std::string& desc) {
            c->add_option("--probe", probe, desc);
            return c;
        };
        auto add_seeded = [&](CLI::App* c) {
            c->add_option("--seed", seed, "rng seed (default 0)");
            c->add_option("--count", count, "sample count override");
            return c;
        };

        CLI::App* validate = add_instance_cmd(
            "validate", "re-check every axiom, family invariant, and expected fact");
        CLI::App* eig = add_probe(add_instance_cmd("eigenring", "eigenring N(I)/I of an ideal"),
                                  "ideal name (default: the sole ideal)");
        CLI::App* subcat = add_instance_cmd(
            "subcategory", "hom bases and composition table over the named ideals");
        CLI::App* realize_cmd = add_probe(
            add_instance_cmd("realize", "realization |F| of a functor (or Y(module))"),
            "functor or module name");
        CLI::App* counit_cmd = add_probe(
            add_instance_cmd("counit", "counit epsilon_V with classification and image checks"),
            "module name (default: the sole module)");
        CLI::App* unit_cmd = add_probe(
            add_instance_cmd("unit", "unit eta_F with per-object classifications"),
            "functor or module name");
        CLI::App* fix_cmd = add_probe(
            add_instance_cmd("fix", "Fix_epsilon / Fix_eta membership of a module or functor"),
            "module or functor name");
        CLI::App* soa = add_seeded(add_instance_cmd(
            "single-object-audit", "one-object subcategory audit over the named modules"));
        CLI::App* weight_cmd = add_seeded(add_probe(
            add_instance_cmd("weight", "weight-module audit of a flat family, or a module survey"),
            "flat family or module name"));
        CLI::App* genweight_cmd = add_seeded(add_probe(
            add_instance_cmd("genweight",
                             "generalized-weight audit of a block family, or a module survey"),
            "block family or module name"));

        auto add_fleet_cmd = [&](const std::string& name, const std::string& desc) {
            CLI::App* c = add_common(app.add_subcommand(name, desc));
            add_seeded(c);
            c->add_option("--max-dim", max_dim, "algebra dimension cap (default 8)");
            c->add_option("--field", field_tag, "fix the field: q or fp:<p> (default: alternate)");
            return c;
        };
        CLI::App* afleet = add_fleet_cmd(
            "adjunction-fleet", "dim Nat(F, Y(V)) = dim Hom(|F|, V) over random instances");
        CLI::App* tfleet =
            add_fleet_cmd("triangle-fleet", "both triangle identities over random instances");

        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("yoneda-lab");
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e, out, err);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e, out, err);
        } catch (const CLI::ParseError& e) {
            app.exit(e, out, err);
            return 2;
        }

        AuditReport rep;
        if (afleet->parsed() || tfleet->parsed()) {
            FleetBudget budget;
            if (count) budget.count = *count;
            if (max_dim) budget.max_algebra_dim = *max_dim;
            budget.seed = seed;
            if (!field_tag.empty()) budget.field = parse_field_spec(field_tag);
            rep = afleet->parsed() ? adjunction_fleet(budget) : triangle_fleet(budget);
        } else {
            const Instance inst = resolve_instance(address);
            if (validate->parsed()) rep = cmd_validate(inst);
            else if (eig->parsed()) rep = cmd_eigenring(inst, probe);
            else if (subcat->parsed()) rep = cmd_subcategory(inst);
            else if (realize_cmd->parsed()) rep = cmd_realize(inst, probe);
            else if (counit_cmd->parsed()) rep = cmd_counit(inst, probe);
            else if (unit_cmd->parsed()) rep = cmd_unit(inst, probe);
            else if (fix_cmd->parsed()) rep = cmd_fix(inst, probe);
            else if (soa->parsed()) rep = cmd_single_object(inst, seed, count);
            else if (weight_cmd->parsed()) rep = cmd_weight(inst, probe, seed, count);
            else if (genweight_cmd->parsed()) rep = cmd_genweight(inst, probe, seed, count);
            else internal_check(false, "run_cli: no subcommand dispatched");
            rep.instance = address;
        }

        emit_report(rep, out_path, out, err);
        return rep.failed() == 0 ? 0 : 1;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const InternalCheckError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace yoneda
