#include "yoneda/weight.hpp"

#include <string>

#include "yoneda/errors.hpp"
#include "yoneda/sampling.hpp"

namespace yoneda {

namespace {

std::string pair_tag(const std::string& head, int i, int j) {
    return head + "-" + std::to_string(i) + "-" + std::to_string(j);
}

}  // namespace

AuditReport check_family(const IdealFamily& x) {
    const Field& k = x.algebra->field();
    AuditReport rep;
    rep.subject = "ideal-family-check";
    Json dims = Json::array();
    for (const auto& i : x.ideals) {
        require_input(i.algebra == x.algebra, "check_family: ideal over a different algebra");
        dims.push_back(i.dim());
    }
    rep.fact("ideal_dims", std::move(dims));
    for (size_t i = 0; i < x.ideals.size(); ++i)
        for (size_t j = i + 1; j < x.ideals.size(); ++j) {
            Subspace sum = subspace_sum(k, x.ideals[i].basis, x.ideals[j].basis);
            rep.require(sum.dim() == x.algebra->dim,
                        pair_tag("pair", int(i), int(j)) + "-comaximal",
                        "distinct-ideals-comaximal",
                        Json{{"first", int(i)}, {"second", int(j)}, {"sum_dim", sum.dim()},
                             {"algebra_dim", x.algebra->dim}});
        }
    return rep;
}

AuditReport check_family(const BlockFamily& xx) {
    const Field& k = xx.algebra->field();
    AuditReport rep;
    rep.subject = "block-family-check";
    Json shape = Json::array();
    for (const auto& block : xx.blocks) {
        Json dims = Json::array();
        for (const auto& i : block) {
            require_input(i.algebra == xx.algebra,
                          "check_family: ideal over a different algebra");
            dims.push_back(i.dim());
        }
        shape.push_back(std::move(dims));
    }
    rep.fact("block_ideal_dims", std::move(shape));

    for (size_t b = 0; b < xx.blocks.size(); ++b) {
        const Block& block = xx.blocks[b];
        require_input(!block.empty(), "check_family: empty block");
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j) {
                bool directed = false;
                for (const auto& lower : block)
                    if (subspace_leq(k, lower.basis, block[i].basis) &&
                        subspace_leq(k, lower.basis, block[j].basis)) {
                        directed = true;
                        break;
                    }
                rep.require(directed,
                            "block-" + std::to_string(b) + "-" +
                                pair_tag("pair", int(i), int(j)) + "-directed",
                            "block-downward-directed",
                            Json{{"block", int(b)}, {"first", int(i)}, {"second", int(j)}});
            }
    }
    for (size_t b1 = 0; b1 < xx.blocks.size(); ++b1)
        for (size_t b2 = b1 + 1; b2 < xx.blocks.size(); ++b2)
            for (size_t i = 0; i < xx.blocks[b1].size(); ++i)
                for (size_t j = 0; j < xx.blocks[b2].size(); ++j) {
                    Subspace sum = subspace_sum(k, xx.blocks[b1][i].basis,
                                                xx.blocks[b2][j].basis);
                    rep.require(sum.dim() == xx.algebra->dim,
                                pair_tag("blocks", int(b1), int(b2)) + "-" +
                                    pair_tag("pair", int(i), int(j)) + "-comaximal",
                                "cross-block-comaximal",
                                Json{{"first_block", int(b1)}, {"second_block", int(b2)},
                                     {"first", int(i)}, {"second", int(j)},
                                     {"sum_dim", sum.dim()}});
                }
    return rep;
}

namespace {

WeightDecomposition assemble_decomposition(const Field& k, const ModulePtr& v,
                                           std::vector<Subspace> pieces) {
    WeightDecomposition d;
    d.module = v;
    d.pieces = std::move(pieces);
    d.sum = subspace_zero(v->dim);
    int total = 0;
    for (const Subspace& p : d.pieces) {
        d.sum = subspace_sum(k, d.sum, p);
        total += p.dim();
    }
    d.is_direct = d.sum.dim() == total;
    d.is_full = d.sum.dim() == v->dim;
    return d;
}

}  // namespace

WeightDecomposition weight_decomposition(const IdealFamily& x, const ModulePtr& v) {
    require_input(v->algebra == x.algebra,
                  "weight_decomposition: module over a different algebra");
    const Field& k = x.algebra->field();
    std::vector<Subspace> pieces;
    for (const auto& i : x.ideals) pieces.push_back(invariant_subspace(v, i));
    WeightDecomposition d = assemble_decomposition(k, v, std::move(pieces));
    internal_check(d.is_direct,
                   "weight_decomposition: comaximal weight spaces failed to sum directly");
    return d;
}

bool is_weight_module(const IdealFamily& x, const ModulePtr& v) {
    return weight_decomposition(x, v).is_full;
}

Subspace generalized_weight_space(const Block& block, const ModulePtr& v) {
    require_input(!block.empty(), "generalized_weight_space: empty block");
    const Field& k = v->algebra->field();
    Subspace total = subspace_zero(v->dim);
    std::vector<Subspace> spaces;
    for (const auto& i : block) {
        spaces.push_back(invariant_subspace(v, i));
        total = subspace_sum(k, total, spaces.back());
    }
    // Monotonicity: larger ideals have smaller invariants.
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = 0; j < block.size(); ++j)
            if (i != j && subspace_leq(k, block[j].basis, block[i].basis))
                internal_check(subspace_leq(k, spaces[i], spaces[j]),
                               "generalized_weight_space: invariants not monotone");
    return total;
}

WeightDecomposition generalized_weight_decomposition(const BlockFamily& xx,
                                                     const ModulePtr& v) {
    require_input(v->algebra == xx.algebra,
                  "generalized_weight_decomposition: module over a different algebra");
    const Field& k = xx.algebra->field();
    std::vector<Subspace> pieces;
    for (const auto& block : xx.blocks)
        pieces.push_back(generalized_weight_space(block, v));
    WeightDecomposition d = assemble_decomposition(k, v, std::move(pieces));
    internal_check(d.is_direct,
                   "generalized_weight_decomposition: cross-block sum failed to be direct");
    return d;
}

bool is_generalized_weight_module(const BlockFamily& xx, const ModulePtr& v) {
    return generalized_weight_decomposition(xx, v).is_full;
}

Block power_block(const AlgebraPtr& a, const std::vector<Vec>& generators) {
    Block block;
    block.push_back(left_ideal_closure(a, generators));
    for (;;) {
        const LeftIdeal& prev = block.back();
        const LeftIdeal& first = block.front();
        std::vector<Vec> products;
        for (int r = 0; r < first.dim(); ++r)
            for (int s = 0; s < prev.dim(); ++s)
                products.push_back(a->multiply(first.basis.row(r), prev.basis.row(s)));
        LeftIdeal next = left_ideal_closure(a, products);
        internal_check(subspace_leq(a->field(), next.basis, prev.basis),
                       "power_block: powers are not descending");
        if (ideals_equal(next, prev)) break;
        block.push_back(std::move(next));
    }
    return block;
}

namespace {

// Hom(A/I, V) as a module over End(A/I): basis actions are precompositions with
// the right-multiplication endomorphisms. Simplicity by exhaustive spin over a
// prime field: every nonzero vector must generate the whole space.
enum class HomSimplicity { Simple, NotSimple, TooLarge };

HomSimplicity hom_space_simple_over_endos(const BPtr& b, int object, const ModulePtr& v,
                                          long long max_exhaustive) {
    const Field& k = b->field();
    internal_check(k.is_prime_field(), "hom simplicity spin needs a prime field");
    const std::int64_t p = k.characteristic();

    Eigenring eig = eigenring(b->ideals[object]);
    HomBasis hom = hom_space(b->objects[object].module, v);
    const int h = hom.dim();
    if (h == 0) return HomSimplicity::NotSimple;  // the zero module is not simple

    std::vector<Matrix> actions;
    for (int s = 0; s < eig.s->dim; ++s) {
        Matrix r = right_action_on_cyclic(b->objects[object], eig.reps.row(s));
        Matrix act(h, h);
        for (int j = 0; j < h; ++j)
            act.set_col(j, hom.coords(mat_mul(k, hom.basis[j].matrix, r)));
        actions.push_back(std::move(act));
    }

    long long count = 1;
    for (int e = 0; e < h; ++e) {
        count *= p;
        if (count > max_exhaustive) return HomSimplicity::TooLarge;
    }
    Vec vec(static_cast<size_t>(h), Scalar(0));
    std::vector<std::int64_t> odo(static_cast<size_t>(h), 0);
    for (long long n = 1; n < count; ++n) {
        int pos = 0;
        while (true) {
            odo[pos] += 1;
            if (odo[pos] < p) break;
            odo[pos] = 0;
            ++pos;
        }
        for (int e = 0; e < h; ++e) vec[e] = Scalar(odo[e]);
        std::vector<Vec> orbit;
        for (const Matrix& act : actions) orbit.push_back(apply(k, act, vec));
        if (subspace_span(k, h, orbit).dim() != h) return HomSimplicity::NotSimple;
    }
    return HomSimplicity::Simple;
}

}  // namespace

AuditReport verify_weightfix(const IdealFamily& x, const std::vector<ModulePtr>& probes,
                             const WeightAuditBudget& budget) {
    const AlgebraPtr& a = x.algebra;
    const Field& k = a->field();
    AuditReport rep;
    rep.subject = "weight-fix-audit";
    rep.merge(check_family(x), "family-");

    BPtr b = build_subcategory(a, x.ideals);

    // Hypothesis: every object of the subcategory is itself a weight module.
    bool hypothesis = true;
    for (int s = 0; s < b->size(); ++s) {
        bool w = is_weight_module(x, b->objects[s].module);
        hypothesis = hypothesis && w;
        rep.require(w, "hypothesis-object-" + std::to_string(s),
                    "subcategory-objects-are-weight-modules",
                    Json{{"object", s}, {"quotient_dim", b->objects[s].module->dim}});
    }
    rep.fact("hypothesis_holds", hypothesis);
    const char* skip_reason = "equivalence hypothesis fails: some A/I is not a weight module";

    // (1) Fix_epsilon membership against the weight predicate, per probe.
    Json probe_facts = Json::array();
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        FixVerdict fv = fix_epsilon(b, v);
        WeightDecomposition d = weight_decomposition(x, v);
        probe_facts.push_back(Json{{"module_dim", v->dim},
                                   {"counit", fv.label},
                                   {"counit_epi", fv.cls.epi},
                                   {"is_weight_module", d.is_full},
                                   {"weight_sum_dim", d.sum.dim()}});
        if (hypothesis)
            rep.require(fv.in_fix == d.is_full, tag + "-fix-iff-weight",
                        "fix-epsilon-iff-weight-module",
                        Json{{"in_fix", fv.in_fix}, {"is_weight_module", d.is_full},
                             {"counit", fv.label}});
        else
            rep.skip(tag + "-fix-iff-weight", "fix-epsilon-iff-weight-module", skip_reason);
    }
    rep.fact("probes", std::move(probe_facts));

    // (2) eta iso on sampled functors.
    Rng rng(budget.seed);
    for (int t = 0; t < budget.functor_samples; ++t) {
        const std::string tag = "sample-" + std::to_string(t);
        FunctorPtr f = random_functor(rng, b, budget.functor_summands);
        if (!hypothesis) {
            rep.skip(tag + "-unit-iso", "weight-hypothesis-forces-unit-iso", skip_reason);
            continue;
        }
        Unit u = unit(b, f);
        rep.require(u.cls.iso, tag + "-unit-iso", "weight-hypothesis-forces-unit-iso",
                    Json{{"functor_dims", f->dims},
                         {"rank", u.cls.rank},
                         {"source_dim", u.cls.source_dim},
                         {"target_dim", u.cls.target_dim}});
    }

    // (3) closure under generated submodules and quotients.
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        if (!is_weight_module(x, v)) {
            rep.skip(tag + "-closure", "weight-modules-closed-under-sub-and-quotient",
                     "probe is not a weight module");
            continue;
        }
        bool closed = true;
        Json witness;
        for (int t = 0; t < budget.closure_samples && closed; ++t) {
            Subspace sub = generated_submodule(v, {rng.vector(k, v->dim)});
            if (!is_weight_module(x, submodule_module(v, sub).module)) {
                closed = false;
                witness = Json{{"kind", "submodule"}, {"trial", t}, {"sub_dim", sub.dim()}};
            } else if (!is_weight_module(x, quotient_module(v, sub).module)) {
                closed = false;
                witness = Json{{"kind", "quotient"}, {"trial", t}, {"sub_dim", sub.dim()}};
            }
        }
        rep.require(closed, tag + "-closure", "weight-modules-closed-under-sub-and-quotient",
                    witness);
    }

    // (4) simple probes with a nonzero weight space give simple hom modules over
    // the endomorphism algebra (finite fields only: the spin is exhaustive).
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        if (!hypothesis) {
            rep.skip(tag + "-hom-simple", "simple-probe-hom-is-simple-endo-module",
                     skip_reason);
            continue;
        }
        if (!k.is_prime_field()) {
            rep.skip(tag + "-hom-simple", "simple-probe-hom-is-simple-endo-module",
                     "exhaustive spin needs a prime field");
            continue;
        }
        SimplicityBudget sb;
        sb.seed = budget.seed;
        if (is_simple(v, sb).kind != SimplicityVerdict::Kind::Simple) {
            rep.skip(tag + "-hom-simple", "simple-probe-hom-is-simple-endo-module",
                     "probe not certified simple");
            continue;
        }
        bool any_nonzero = false;
        bool all_simple = true;
        Json witness;
        for (int s = 0; s < b->size(); ++s) {
            if (invariant_subspace(v, x.ideals[s]).dim() == 0) continue;
            any_nonzero = true;
            HomSimplicity hs = hom_space_simple_over_endos(b, s, v, 1 << 20);
            if (hs == HomSimplicity::TooLarge) {
                rep.skip(tag + "-hom-simple", "simple-probe-hom-is-simple-endo-module",
                         "spin budget exceeded");
                all_simple = false;
                break;
            }
            if (hs != HomSimplicity::Simple) {
                all_simple = false;
                witness = Json{{"ideal", s}};
                break;
            }
        }
        if (!any_nonzero)
            rep.skip(tag + "-hom-simple", "simple-probe-hom-is-simple-endo-module",
                     "probe has no nonzero weight space");
        else if (!witness.is_null() || all_simple)
            rep.require(all_simple, tag + "-hom-simple",
                        "simple-probe-hom-is-simple-endo-module", witness);
    }
    return rep;
}

AuditReport verify_genfix(const BlockFamily& xx, const std::vector<ModulePtr>& probes,
                          const WeightAuditBudget& budget) {
    const AlgebraPtr& a = xx.algebra;
    const Field& k = a->field();
    AuditReport rep;
    rep.subject = "generalized-weight-fix-audit";
    rep.merge(check_family(xx), "family-");

    std::vector<LeftIdeal> all_ideals;
    for (const auto& block : xx.blocks)
        for (const auto& i : block) {
            bool dup = false;
            for (const auto& prev : all_ideals) dup = dup || ideals_equal(prev, i);
            if (!dup) all_ideals.push_back(i);
        }
    BPtr b = build_subcategory(a, all_ideals);
    rep.fact("subcategory_objects", b->size());

    bool hypothesis = true;
    for (int s = 0; s < b->size(); ++s) {
        bool w = is_generalized_weight_module(xx, b->objects[s].module);
        hypothesis = hypothesis && w;
        rep.require(w, "hypothesis-object-" + std::to_string(s),
                    "subcategory-objects-are-generalized-weight-modules",
                    Json{{"object", s}, {"quotient_dim", b->objects[s].module->dim}});
    }
    rep.fact("hypothesis_holds", hypothesis);
    const char* skip_reason =
        "equivalence hypothesis fails: some A/I is not a generalized weight module";

    // (1) Fix_epsilon membership against the generalized weight predicate.
    Json probe_facts = Json::array();
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        FixVerdict fv = fix_epsilon(b, v);
        WeightDecomposition d = generalized_weight_decomposition(xx, v);
        probe_facts.push_back(Json{{"module_dim", v->dim},
                                   {"counit", fv.label},
                                   {"counit_epi", fv.cls.epi},
                                   {"is_generalized_weight_module", d.is_full},
                                   {"generalized_sum_dim", d.sum.dim()}});
        if (hypothesis)
            rep.require(fv.in_fix == d.is_full, tag + "-fix-iff-genweight",
                        "fix-epsilon-iff-generalized-weight-module",
                        Json{{"in_fix", fv.in_fix},
                             {"is_generalized_weight_module", d.is_full},
                             {"counit", fv.label}});
        else
            rep.skip(tag + "-fix-iff-genweight", "fix-epsilon-iff-generalized-weight-module",
                     skip_reason);
    }
    rep.fact("probes", std::move(probe_facts));

    // (2) the unit is an isomorphism at every Yoneda image.
    for (size_t p = 0; p < probes.size(); ++p) {
        const std::string tag = "probe-" + std::to_string(p);
        if (!hypothesis) {
            rep.skip(tag + "-unit-iso-at-yoneda", "unit-iso-on-yoneda-images", skip_reason);
            continue;
        }
        YonedaFunctor yv = restricted_yoneda(b, probes[p]);
        Unit u = unit(b, yv.functor);
        rep.require(u.cls.iso, tag + "-unit-iso-at-yoneda", "unit-iso-on-yoneda-images",
                    Json{{"module_dim", probes[p]->dim},
                         {"rank", u.cls.rank},
                         {"source_dim", u.cls.source_dim},
                         {"target_dim", u.cls.target_dim}});
    }

    // (3) closure under generated submodules and quotients.
    Rng rng(budget.seed);
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        if (!is_generalized_weight_module(xx, v)) {
            rep.skip(tag + "-closure",
                     "generalized-weight-modules-closed-under-sub-and-quotient",
                     "probe is not a generalized weight module");
            continue;
        }
        bool closed = true;
        Json witness;
        for (int t = 0; t < budget.closure_samples && closed; ++t) {
            Subspace sub = generated_submodule(v, {rng.vector(k, v->dim)});
            if (!is_generalized_weight_module(xx, submodule_module(v, sub).module)) {
                closed = false;
                witness = Json{{"kind", "submodule"}, {"trial", t}, {"sub_dim", sub.dim()}};
            } else if (!is_generalized_weight_module(xx, quotient_module(v, sub).module)) {
                closed = false;
                witness = Json{{"kind", "quotient"}, {"trial", t}, {"sub_dim", sub.dim()}};
            }
        }
        rep.require(closed, tag + "-closure",
                    "generalized-weight-modules-closed-under-sub-and-quotient", witness);
    }

    // (4) abelian-closure probes: pointwise kernels and cokernels of sampled
    // transformations between unit-fixed functors, each with its own verdict.
    for (int t = 0; t < budget.functor_samples; ++t) {
        const std::string tag = "sample-" + std::to_string(t);
        if (!hypothesis) {
            rep.skip(tag + "-kernel", "fix-eta-closed-under-kernels", skip_reason);
            rep.skip(tag + "-cokernel", "fix-eta-closed-under-cokernels", skip_reason);
            continue;
        }
        ModulePtr v1 = random_module(rng, a, 6);
        ModulePtr v2 = random_module(rng, a, 6);
        FunctorPtr f = restricted_yoneda(b, v1).functor;
        FunctorPtr g = restricted_yoneda(b, v2).functor;
        internal_check(unit(b, f).cls.iso && unit(b, g).cls.iso,
                       "verify_genfix: Yoneda images must be unit-fixed under the hypothesis");
        NatTrans theta = random_nat(rng, nat_space(f, g));
        FunctorPtr ker = functor_kernel(theta).functor;
        FunctorPtr coker = functor_cokernel(theta).functor;
        Unit uk = unit(b, ker);
        Unit uc = unit(b, coker);
        Json shape{{"source_dims", f->dims}, {"target_dims", g->dims}};
        rep.require(uk.cls.iso, tag + "-kernel", "fix-eta-closed-under-kernels",
                    Json{{"kernel_dims", ker->dims},
                         {"kernel_unit_rank", uk.cls.rank},
                         {"shape", shape}});
        rep.require(uc.cls.iso, tag + "-cokernel", "fix-eta-closed-under-cokernels",
                    Json{{"cokernel_dims", coker->dims},
                         {"cokernel_unit_rank", uc.cls.rank},
                         {"cokernel_unit_target_dim", uc.cls.target_dim},
                         {"shape", shape}});
    }
    return rep;
}

}  // namespace yoneda
