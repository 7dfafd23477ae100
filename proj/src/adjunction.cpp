#include "yoneda/adjunction.hpp"

#include <algorithm>

#include "yoneda/errors.hpp"
#include "yoneda/sampling.hpp"

namespace yoneda {

namespace {

Json json_matrix(const Field& k, const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(k.to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_classification(const MapClassification& c) {
    return Json{{"rank", c.rank},
                {"source_dim", c.source_dim},
                {"target_dim", c.target_dim},
                {"label", classification_label(c)}};
}

}  // namespace

Realization realize(const BPtr& b, const FunctorPtr& f) {
    require_input(f->base == b, "realize: functor is not over the given subcategory");
    const Field& k = b->field();
    const int m = b->size();

    Realization r;
    r.base = b;
    r.f = f;
    r.offsets.assign(m + 1, 0);
    for (int s = 0; s < m; ++s)
        r.offsets[s + 1] = r.offsets[s] + b->objects[s].module->dim * f->dims[s];
    r.ambient = r.offsets[m];

    // One relation g(x) (x) v_j - x (x) F(g)(v_j) per hom basis element g: s -> t,
    // basis vector x of i(s) and basis vector v_j of F(t).
    std::vector<Vec> rows;
    for (int s = 0; s < m; ++s) {
        const int dis = b->objects[s].module->dim;
        const int dfs = f->dims[s];
        for (int t = 0; t < m; ++t) {
            const int dft = f->dims[t];
            for (int h = 0; h < b->homs[s][t].dim(); ++h) {
                const Matrix& g = b->homs[s][t].basis[h].matrix;  // i(t) <- i(s)
                const Matrix& fk = f->maps[s][t][h];              // F(s) <- F(t)
                for (int x = 0; x < dis; ++x)
                    for (int j = 0; j < dft; ++j) {
                        Vec row(r.ambient, Scalar(0));
                        for (int y = 0; y < g.rows; ++y)
                            if (!g(y, x).is_zero()) {
                                const int idx = r.offsets[t] + y * dft + j;
                                row[idx] = k.add(row[idx], g(y, x));
                            }
                        for (int w = 0; w < dfs; ++w)
                            if (!fk(w, j).is_zero()) {
                                const int idx = r.offsets[s] + x * dfs + w;
                                row[idx] = k.sub(row[idx], fk(w, j));
                            }
                        rows.push_back(std::move(row));
                    }
            }
        }
    }
    r.relations = subspace_span(k, r.ambient, rows);
    r.quotient = quotient_of(k, r.ambient, r.relations);

    // Blockwise action rho_B (x) id on the ambient space.
    const int adim = b->algebra->dim;
    std::vector<Matrix> ambient_action;
    for (int e = 0; e < adim; ++e) {
        Matrix act(r.ambient, r.ambient);
        for (int s = 0; s < m; ++s) {
            const Matrix& rho = b->objects[s].module->action[e];
            const int dfs = f->dims[s];
            for (int y = 0; y < rho.rows; ++y)
                for (int x = 0; x < rho.cols; ++x) {
                    if (rho(y, x).is_zero()) continue;
                    for (int v = 0; v < dfs; ++v)
                        act(r.offsets[s] + y * dfs + v, r.offsets[s] + x * dfs + v) =
                            rho(y, x);
                }
        }
        ambient_action.push_back(std::move(act));
    }

    const Matrix rel_t = transpose(r.relations.basis);
    for (int e = 0; e < adim; ++e) {
        Matrix moved = mat_mul(k, ambient_action[e], rel_t);
        internal_check(is_zero_matrix(mat_mul(k, r.quotient.projection, moved)),
                       "realize: relation span is not stable under the action");
    }

    std::vector<Matrix> action;
    for (int e = 0; e < adim; ++e)
        action.push_back(mat_mul(k, r.quotient.projection,
                                 mat_mul(k, ambient_action[e], r.quotient.section)));
    r.module = make_module(b->algebra, r.quotient.dim(), std::move(action));
    internal_check(validate_module(*r.module).all_passed(),
                   "realize: induced action fails the module axioms");

    for (int s = 0; s < m; ++s) {
        Matrix kb(r.quotient.dim(), r.block_dim(s));
        for (int c = 0; c < r.block_dim(s); ++c)
            kb.set_col(c, r.quotient.projection.col(r.offsets[s] + c));
        r.kappa.push_back(std::move(kb));
    }
    return r;
}

ModuleMap realize_nat(const NatTrans& theta, const Realization& rf, const Realization& rg) {
    require_input(theta.source == rf.f && theta.target == rg.f,
                  "realize_nat: endpoints do not match the realizations");
    require_input(rf.base == rg.base, "realize_nat: realizations live over different bases");
    const Field& k = rf.base->field();
    const int m = rf.base->size();

    Matrix amb(rg.ambient, rf.ambient);
    for (int s = 0; s < m; ++s) {
        const int di = rf.base->objects[s].module->dim;
        const Matrix& th = theta.components[s];  // G(s) <- F(s)
        const int df = rf.f->dims[s];
        const int dg = rg.f->dims[s];
        for (int x = 0; x < di; ++x)
            for (int vg = 0; vg < dg; ++vg)
                for (int vf = 0; vf < df; ++vf)
                    if (!th(vg, vf).is_zero())
                        amb(rg.offsets[s] + x * dg + vg, rf.offsets[s] + x * df + vf) =
                            th(vg, vf);
    }
    Matrix moved = mat_mul(k, amb, transpose(rf.relations.basis));
    internal_check(is_zero_matrix(mat_mul(k, rg.quotient.projection, moved)),
                   "realize_nat: relations are not carried into relations");
    ModuleMap out{rf.module, rg.module,
                  mat_mul(k, rg.quotient.projection, mat_mul(k, amb, rf.quotient.section))};
    internal_check(!intertwining_defect(out), "realize_nat: induced map does not intertwine");
    return out;
}

namespace {

// Evaluation on the ambient of |Y(V)|: the block-s column (x, j) is phi_j(x) for
// the j-th canonical basis map phi_j: A/I_s -> V.
Matrix evaluation_on_ambient(const BPtr& b, const YonedaFunctor& yv, const Realization& ryv) {
    Matrix ev(yv.v->dim, ryv.ambient);
    for (int s = 0; s < b->size(); ++s) {
        const int di = b->objects[s].module->dim;
        const int df = yv.functor->dims[s];
        for (int x = 0; x < di; ++x)
            for (int j = 0; j < df; ++j)
                ev.set_col(ryv.offsets[s] + x * df + j,
                           yv.hom_bases[s].basis[j].matrix.col(x));
    }
    return ev;
}

}  // namespace

Counit counit_from(const BPtr& b, const YonedaFunctor& yv, const Realization& ryv) {
    require_input(ryv.f == yv.functor, "counit_from: realization is not of this Yoneda image");
    require_input(ryv.base == b, "counit_from: realization lives over a different base");
    const Field& k = b->field();

    Matrix ev = evaluation_on_ambient(b, yv, ryv);
    internal_check(is_zero_matrix(mat_mul(k, ev, transpose(ryv.relations.basis))),
                   "counit: evaluation does not kill the relations");

    Counit c{yv, ryv, ModuleMap{ryv.module, yv.v, mat_mul(k, ev, ryv.quotient.section)}, {}};
    internal_check(!intertwining_defect(c.map), "counit: evaluation does not intertwine");
    c.cls = classify_matrix(k, c.map.matrix);
    return c;
}

Counit counit(const BPtr& b, const ModulePtr& v) {
    YonedaFunctor yv = restricted_yoneda(b, v);
    Realization ryv = realize(b, yv.functor);
    return counit_from(b, yv, ryv);
}

Unit unit_from(const BPtr& b, const FunctorPtr& f, const Realization& rf) {
    require_input(rf.f == f, "unit_from: realization is not of this functor");
    require_input(rf.base == b, "unit_from: realization lives over a different base");
    const Field& k = b->field();
    const int m = b->size();

    Unit u;
    u.real = rf;
    u.y_real = restricted_yoneda(b, rf.module);

    std::vector<Matrix> comps;
    for (int s = 0; s < m; ++s) {
        const int di = b->objects[s].module->dim;
        const int df = f->dims[s];
        Matrix comp(u.y_real.functor->dims[s], df);
        for (int j = 0; j < df; ++j) {
            // x |-> kappa_s(x (x) v_j) as a module map A/I_s -> |F|.
            Matrix mm(rf.module->dim, di);
            for (int x = 0; x < di; ++x) mm.set_col(x, rf.kappa[s].col(x * df + j));
            comp.set_col(j, u.y_real.hom_bases[s].coords(mm));
        }
        u.component_cls.push_back(classify_matrix(k, comp));
        comps.push_back(std::move(comp));
    }
    u.eta = NatTrans{f, u.y_real.functor, std::move(comps)};
    internal_check(!naturality_defect(u.eta), "unit: transformation is not natural");
    u.cls = classify_nat(u.eta);
    return u;
}

Unit unit(const BPtr& b, const FunctorPtr& f) {
    Realization rf = realize(b, f);
    return unit_from(b, f, rf);
}

MapClassification classify_nat(const NatTrans& t) {
    const Field& k = t.source->base->field();
    MapClassification out;
    out.mono = true;
    out.epi = true;
    for (const Matrix& comp : t.components) {
        MapClassification c = classify_matrix(k, comp);
        out.rank += c.rank;
        out.source_dim += c.source_dim;
        out.target_dim += c.target_dim;
        out.mono = out.mono && c.mono;
        out.epi = out.epi && c.epi;
    }
    out.iso = out.mono && out.epi;
    return out;
}

std::string classification_label(const MapClassification& c) {
    if (c.iso) return "iso";
    if (c.mono) return "mono-only";
    if (c.epi) return "epi-only";
    return "neither";
}

FixVerdict fix_epsilon(const BPtr& b, const ModulePtr& v) {
    Counit c = counit(b, v);
    return FixVerdict{c.cls, c.cls.iso, classification_label(c.cls)};
}

FixVerdict fix_eta(const BPtr& b, const FunctorPtr& f) {
    Unit u = unit(b, f);
    return FixVerdict{u.cls, u.cls.iso, classification_label(u.cls)};
}

AuditReport fix_membership_module(const BPtr& b, const ModulePtr& v) {
    AuditReport rep;
    rep.subject = "fix-epsilon-membership";
    Counit c = counit(b, v);
    rep.fact("module_dim", v->dim);
    rep.fact("realization_dim", c.real.module->dim);
    rep.fact("counit", json_classification(c.cls));
    rep.fact("in_fix_epsilon", c.cls.iso);
    auto defect = intertwining_defect(c.map);
    rep.require(!defect.has_value(), "counit-is-module-map", "counit-intertwines-action",
                defect ? Json{{"algebra_basis_index", *defect}} : Json());
    return rep;
}

AuditReport fix_membership_functor(const BPtr& b, const FunctorPtr& f) {
    AuditReport rep;
    rep.subject = "fix-eta-membership";
    Unit u = unit(b, f);
    rep.fact("functor_dims", f->dims);
    rep.fact("realization_dim", u.real.module->dim);
    Json comps = Json::array();
    for (const auto& c : u.component_cls) comps.push_back(json_classification(c));
    rep.fact("unit_components", std::move(comps));
    rep.fact("unit", json_classification(u.cls));
    rep.fact("in_fix_eta", u.cls.iso);
    auto defect = naturality_defect(u.eta);
    rep.require(!defect.has_value(), "unit-is-natural", "unit-naturality",
                defect ? Json{{"source", (*defect)[0]},
                              {"target", (*defect)[1]},
                              {"hom_basis_index", (*defect)[2]}}
                       : Json());
    return rep;
}

AuditReport adjunction_dim_check(const BPtr& b, const FunctorPtr& f, const ModulePtr& v) {
    require_input(f->base == b, "adjunction_dim_check: functor is not over this subcategory");
    const Field& k = b->field();
    AuditReport rep;
    rep.subject = "adjunction-dim-check";

    Realization rf = realize(b, f);
    Unit u = unit_from(b, f, rf);
    YonedaFunctor yv = restricted_yoneda(b, v);
    HomBasis hom = hom_space(rf.module, v);
    NatBasis nat = nat_space(f, yv.functor);

    rep.fact("functor_dims", f->dims);
    rep.fact("module_dim", v->dim);
    rep.fact("realization_dim", rf.module->dim);
    rep.fact("hom_dim", hom.dim());
    rep.fact("nat_dim", nat.dim());

    rep.require(hom.dim() == nat.dim(), "hom-nat-dimensions",
                "realization-hom-dim-equals-nat-dim",
                Json{{"hom_dim", hom.dim()}, {"nat_dim", nat.dim()}});

    // Currying h |-> Y(h) . eta_F, one transformation per hom basis element.
    std::vector<NatTrans> curried;
    bool all_natural = true;
    Json natural_witness;
    for (int i = 0; i < hom.dim(); ++i) {
        NatTrans th = compose_nats(yoneda_on_map(u.y_real, yv, hom.basis[i]), u.eta);
        if (auto defect = naturality_defect(th); defect) {
            all_natural = false;
            if (natural_witness.is_null())
                natural_witness = Json{{"hom_basis_index", i},
                                       {"source", (*defect)[0]},
                                       {"target", (*defect)[1]},
                                       {"hom_basis_element", (*defect)[2]}};
        }
        curried.push_back(std::move(th));
    }
    rep.require(all_natural, "curried-maps-natural", "curried-map-is-natural", natural_witness);

    std::vector<Vec> curried_vecs;
    for (const NatTrans& th : curried) curried_vecs.push_back(vectorize_nat(th));
    Subspace curried_span = subspace_span(k, nat.space.ambient, curried_vecs);
    rep.require(curried_span == nat.space, "currying-bijection",
                "curried-basis-spans-nat-space",
                Json{{"curried_span_dim", curried_span.dim()}, {"nat_dim", nat.dim()}});

    // Uncurrying theta |-> (evaluation . (id (x) theta) on the ambient, descended).
    auto ambient_of = [&](const NatTrans& th) {
        Matrix n(v->dim, rf.ambient);
        for (int s = 0; s < b->size(); ++s) {
            const int di = b->objects[s].module->dim;
            const int df = f->dims[s];
            const Matrix& comp = th.components[s];  // hom coords <- F(s)
            for (int j = 0; j < df; ++j) {
                Matrix phi(v->dim, di);
                for (int r = 0; r < comp.rows; ++r) {
                    if (comp(r, j).is_zero()) continue;
                    phi = mat_add(k, phi,
                                  mat_scale(k, comp(r, j), yv.hom_bases[s].basis[r].matrix));
                }
                for (int x = 0; x < di; ++x)
                    n.set_col(rf.offsets[s] + x * df + j, phi.col(x));
            }
        }
        return n;
    };

    bool all_descend = true;
    Json descend_witness;
    std::vector<ModuleMap> uncurried;
    const Matrix rel_t = transpose(rf.relations.basis);
    for (int i = 0; i < nat.dim(); ++i) {
        Matrix amb = ambient_of(nat.basis[i]);
        if (!is_zero_matrix(mat_mul(k, amb, rel_t))) {
            all_descend = false;
            if (descend_witness.is_null()) descend_witness = Json{{"nat_basis_index", i}};
        }
        ModuleMap mp{rf.module, v, mat_mul(k, amb, rf.quotient.section)};
        if (auto defect = intertwining_defect(mp); defect) {
            all_descend = false;
            if (descend_witness.is_null())
                descend_witness =
                    Json{{"nat_basis_index", i}, {"algebra_basis_index", *defect}};
        }
        uncurried.push_back(std::move(mp));
    }
    rep.require(all_descend, "uncurried-maps-descend", "uncurried-map-kills-relations",
                descend_witness);

    // Round trips in both directions.
    bool roundtrip = all_descend;
    Json rt_witness;
    for (int i = 0; i < hom.dim() && roundtrip; ++i) {
        Matrix back = mat_mul(k, ambient_of(curried[i]), rf.quotient.section);
        if (!(back == hom.basis[i].matrix)) {
            roundtrip = false;
            rt_witness = Json{{"direction", "uncurry-curry"}, {"hom_basis_index", i}};
        }
    }
    for (int i = 0; i < nat.dim() && roundtrip; ++i) {
        NatTrans back =
            compose_nats(yoneda_on_map(u.y_real, yv, uncurried[i]), u.eta);
        if (!(vectorize_nat(back) == vectorize_nat(nat.basis[i]))) {
            roundtrip = false;
            rt_witness = Json{{"direction", "curry-uncurry"}, {"nat_basis_index", i}};
        }
    }
    rep.require(roundtrip, "currying-roundtrip", "uncurrying-inverts-currying", rt_witness);
    return rep;
}

AuditReport triangle_audit(const BPtr& b, const FunctorPtr& f, const ModulePtr& v) {
    require_input(f->base == b, "triangle_audit: functor is not over this subcategory");
    const Field& k = b->field();
    AuditReport rep;
    rep.subject = "triangle-identities";

    Realization rf = realize(b, f);
    Unit u = unit_from(b, f, rf);
    Realization ryl = realize(b, u.y_real.functor);
    Counit el = counit_from(b, u.y_real, ryl);
    ModuleMap comp1 = compose_maps(el.map, realize_nat(u.eta, rf, ryl));
    rep.fact("functor_dims", f->dims);
    rep.fact("module_dim", v->dim);
    rep.fact("realization_dim", rf.module->dim);
    rep.require(comp1.matrix == Matrix::identity(rf.module->dim),
                "triangle-counit-after-realized-unit",
                "counit-after-realized-unit-is-identity", json_matrix(k, comp1.matrix));

    YonedaFunctor yv = restricted_yoneda(b, v);
    Realization ryv = realize(b, yv.functor);
    Counit cv = counit_from(b, yv, ryv);
    Unit u2 = unit_from(b, yv.functor, ryv);
    NatTrans comp2 = compose_nats(yoneda_on_map(u2.y_real, yv, cv.map), u2.eta);
    bool ok = true;
    Json witness;
    for (int s = 0; s < b->size(); ++s)
        if (!(comp2.components[s] == Matrix::identity(yv.functor->dims[s]))) {
            ok = false;
            witness = Json{{"object", s}, {"component", json_matrix(k, comp2.components[s])}};
            break;
        }
    rep.require(ok, "triangle-yoneda-counit-after-unit",
                "yoneda-counit-after-unit-is-identity", witness);
    return rep;
}

std::optional<Subspace> s_complement(const LeftIdeal& i) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    if (i.dim() == a->dim) return subspace_zero(0);  // A/I = 0

    CyclicModule c = cyclic_module(i);
    const int n = c.module->dim;
    Subspace inv = invariant_subspace(c.module, i);  // (A/I)^I, = S inside A/I
    Eigenring eig = eigenring(i);

    std::vector<Matrix> right_actions;
    for (int s = 0; s < eig.s->dim; ++s)
        right_actions.push_back(right_action_on_cyclic(c, eig.reps.row(s)));

    // Unknown projection P: A/I -> A/I with image in the invariants, fixing the
    // invariants, commuting with every right S action. vec is row-major.
    QuotientSpace co = quotient_of(k, n, inv);
    const Matrix incl = transpose(inv.basis);  // n x s
    const Matrix id_n = Matrix::identity(n);

    std::vector<Vec> sys_rows;
    std::vector<Scalar> rhs;
    auto push_block = [&](const Matrix& block, const Vec& target) {
        for (int r = 0; r < block.rows; ++r) {
            sys_rows.push_back(block.row(r));
            rhs.push_back(target.empty() ? Scalar(0) : target[r]);
        }
    };
    // co.projection * P = 0
    push_block(tensor_product(k, co.projection, id_n), Vec());
    // P * incl = incl
    push_block(tensor_product(k, id_n, transpose(incl)), vectorize(incl));
    // P * R_s - R_s * P = 0
    for (const Matrix& rs : right_actions)
        push_block(mat_sub(k, tensor_product(k, id_n, transpose(rs)),
                           tensor_product(k, rs, id_n)),
                   Vec());

    Matrix sys(static_cast<int>(sys_rows.size()), n * n);
    Vec b(static_cast<size_t>(sys.rows), Scalar(0));
    for (int r = 0; r < sys.rows; ++r) {
        sys.set_row(r, sys_rows[r]);
        b[r] = rhs[r];
    }
    auto sol = solve(k, sys, b);
    if (!sol) return std::nullopt;

    Matrix p = unvectorize(*sol, n, n);
    internal_check(mat_mul(k, p, p) == p, "s_complement: solved projection is not idempotent");
    Subspace comp = kernel(k, p);
    internal_check(comp.dim() == n - inv.dim(),
                   "s_complement: complement has the wrong dimension");
    internal_check(subspace_sum(k, comp, inv).dim() == n,
                   "s_complement: complement does not span with the invariants");
    return comp;
}

std::optional<Subspace> s_freeness(const LeftIdeal& i) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    if (i.dim() == a->dim) return subspace_zero(0);  // A/I = 0 is free on no generators

    CyclicModule c = cyclic_module(i);
    const int n = c.module->dim;
    Eigenring eig = eigenring(i);
    const int sdim = eig.s->dim;
    if (n % sdim != 0) return std::nullopt;

    std::vector<Matrix> right_actions;
    for (int s = 0; s < sdim; ++s)
        right_actions.push_back(right_action_on_cyclic(c, eig.reps.row(s)));

    std::vector<Vec> candidates;
    candidates.push_back(c.unit_class);
    for (int j = 0; j < n; ++j) {
        Vec e(n, Scalar(0));
        e[j] = k.one();
        candidates.push_back(std::move(e));
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Vec e(n, Scalar(0));
            e[x] = k.one();
            e[y] = k.one();
            candidates.push_back(std::move(e));
        }

    Subspace cur = subspace_zero(n);
    std::vector<Vec> picked;
    for (const Vec& w : candidates) {
        if (cur.dim() == n) break;
        std::vector<Vec> grown;
        for (int r = 0; r < cur.dim(); ++r) grown.push_back(cur.row(r));
        for (const Matrix& rs : right_actions) grown.push_back(apply(k, rs, w));
        Subspace tentative = subspace_span(k, n, grown);
        if (tentative.dim() == cur.dim() + sdim) {
            cur = std::move(tentative);
            picked.push_back(w);
        }
    }
    if (cur.dim() != n) return std::nullopt;

    Subspace w_space = subspace_span(k, n, picked);
    // Freeness is a property of the span, so it must survive canonicalization.
    std::vector<Vec> orbit;
    for (int r = 0; r < w_space.dim(); ++r)
        for (const Matrix& rs : right_actions) orbit.push_back(apply(k, rs, w_space.row(r)));
    internal_check(subspace_span(k, n, orbit).dim() == n,
                   "s_freeness: canonical basis lost the spanning property");
    internal_check(w_space.dim() * sdim == n, "s_freeness: rank times S dimension is off");
    return w_space;
}

bool has_left_inverse(const ModuleMap& m) {
    const Field& k = m.source->field();
    const int sd = m.source->dim;
    const int td = m.target->dim;
    if (sd == 0) return true;

    // Unknown X: target -> source, X * m.matrix = id, X intertwining. vec row-major.
    const Matrix id_s = Matrix::identity(sd);
    std::vector<Matrix> blocks;
    std::vector<Vec> rhs_parts;
    blocks.push_back(tensor_product(k, id_s, transpose(m.matrix)));
    rhs_parts.push_back(vectorize(id_s));
    for (int e = 0; e < m.source->algebra->dim; ++e) {
        blocks.push_back(
            mat_sub(k, tensor_product(k, id_s, transpose(m.target->action[e])),
                    tensor_product(k, m.source->action[e], Matrix::identity(td))));
        rhs_parts.push_back(Vec(static_cast<size_t>(sd) * td, Scalar(0)));
    }
    int total_rows = 0;
    for (const Matrix& blk : blocks) total_rows += blk.rows;
    Matrix sys(total_rows, sd * td);
    Vec b(static_cast<size_t>(total_rows), Scalar(0));
    int row = 0;
    for (size_t part = 0; part < blocks.size(); ++part)
        for (int r = 0; r < blocks[part].rows; ++r, ++row) {
            sys.set_row(row, blocks[part].row(r));
            b[row] = rhs_parts[part][r];
        }
    return solve(k, sys, b).has_value();
}

AuditReport single_object_audit(const LeftIdeal& i, const std::vector<ModulePtr>& probes,
                                const SingleObjectBudget& budget) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    require_input(i.dim() < a->dim, "single_object_audit: the ideal must be proper");
    for (const auto& v : probes)
        require_input(v->algebra == a, "single_object_audit: probe over a different algebra");

    AuditReport rep;
    rep.subject = "single-object-audit";

    BPtr b = build_subcategory(a, {i});
    const CyclicModule& cyc = b->objects[0];

    SimplicityBudget sb;
    sb.seed = budget.seed;
    SimplicityVerdict simp = is_simple(cyc.module, sb);
    const bool simple = simp.kind == SimplicityVerdict::Kind::Simple;

    Eigenring eig = eigenring(i);
    auto comp = s_complement(i);
    auto free_w = s_freeness(i);

    rep.fact("algebra_dim", a->dim);
    rep.fact("ideal_dim", i.dim());
    rep.fact("quotient_dim", cyc.module->dim);
    rep.fact("eigenring_dim", eig.s->dim);
    rep.fact("simplicity", Json{{"verdict", simplicity_name(simp.kind)},
                                {"certificate", simp.certificate}});
    rep.fact("s_complement_exists", comp.has_value());
    rep.fact("s_freeness_rank", free_w ? Json(free_w->dim()) : Json());

    // Per-probe counit structure.
    for (size_t p = 0; p < probes.size(); ++p) {
        const ModulePtr& v = probes[p];
        const std::string tag = "probe-" + std::to_string(p);
        Counit cu = counit(b, v);

        std::vector<Vec> cols;
        for (int c = 0; c < cu.map.matrix.cols; ++c) cols.push_back(cu.map.matrix.col(c));
        Subspace image = subspace_span(k, v->dim, cols);

        Subspace inv = invariant_subspace(v, i);
        std::vector<Vec> inv_rows;
        for (int r = 0; r < inv.dim(); ++r) inv_rows.push_back(inv.row(r));
        Subspace gen = generated_submodule(v, inv_rows);

        rep.require(image == gen, tag + "-counit-image", "counit-image-is-invariant-generated",
                    Json{{"image_dim", image.dim()}, {"generated_dim", gen.dim()}});
        rep.require(cu.cls.epi == (gen.dim() == v->dim), tag + "-counit-epi-iff",
                    "counit-epi-iff-invariants-generate",
                    Json{{"epi", cu.cls.epi}, {"generated_dim", gen.dim()},
                         {"module_dim", v->dim}});

        if (simple) {
            rep.require(cu.cls.mono, tag + "-counit-monic",
                        "simple-quotient-forces-counit-monic", json_classification(cu.cls));
            rep.require(cu.cls.iso == (gen.dim() == v->dim), tag + "-fix-epsilon-iff",
                        "fix-epsilon-iff-invariants-generate",
                        Json{{"iso", cu.cls.iso}, {"generated_dim", gen.dim()},
                             {"module_dim", v->dim}});
        } else {
            rep.skip(tag + "-counit-monic", "simple-quotient-forces-counit-monic",
                     "quotient not certified simple");
            rep.skip(tag + "-fix-epsilon-iff", "fix-epsilon-iff-invariants-generate",
                     "quotient not certified simple");
        }
    }

    // Density of left multiplications over a free right-S basis.
    if (simple) {
        if (free_w) {
            const Subspace& w = *free_w;
            for (int target = 0; target < w.dim(); ++target) {
                Matrix sys(w.dim() * cyc.module->dim, a->dim);
                Vec rhs(static_cast<size_t>(sys.rows), Scalar(0));
                int row = 0;
                for (int j = 0; j < w.dim(); ++j) {
                    Matrix cond = mat_mul(k, cyc.quotient.projection,
                                          a->right_mult(apply(k, cyc.quotient.section, w.row(j))));
                    for (int r = 0; r < cond.rows; ++r, ++row) {
                        sys.set_row(row, cond.row(r));
                        if (j == target) rhs[row] = cyc.unit_class[r];
                    }
                }
                rep.require(solve(k, sys, rhs).has_value(),
                            "density-system-" + std::to_string(target),
                            "jacobson-density-systems-solvable",
                            Json{{"target_basis_index", target}});
            }
        } else {
            rep.skip("density-systems", "jacobson-density-systems-solvable",
                     "no free right-S basis found");
        }
    } else {
        rep.skip("density-systems", "jacobson-density-systems-solvable",
                 "quotient not certified simple");
    }

    // Sampled functors: unit behaviour under the structural hypotheses.
    Rng rng(budget.seed);
    for (int t = 0; t < budget.functor_samples; ++t) {
        const std::string tag = "sample-" + std::to_string(t);
        FunctorPtr f = random_functor(rng, b, budget.functor_summands);
        Unit u = unit(b, f);

        if (comp)
            rep.require(u.cls.mono, tag + "-unit-monic", "s-complement-forces-unit-monic",
                        Json{{"functor_dims", f->dims}, {"unit", json_classification(u.cls)}});
        else
            rep.skip(tag + "-unit-monic", "s-complement-forces-unit-monic",
                     "no right-S complement of the invariants");

        if (simple)
            rep.require(u.cls.iso, tag + "-unit-iso", "division-eigenring-forces-unit-iso",
                        Json{{"functor_dims", f->dims}, {"unit", json_classification(u.cls)}});
        else
            rep.skip(tag + "-unit-iso", "division-eigenring-forces-unit-iso",
                     "quotient not certified simple");

        Counit cl = counit(b, u.real.module);
        if (u.cls.mono && has_left_inverse(cl.map))
            rep.require(u.cls.epi, tag + "-unit-epic-under-split",
                        "split-monic-counit-forces-unit-epic",
                        Json{{"functor_dims", f->dims}, {"unit", json_classification(u.cls)}});
        else
            rep.skip(tag + "-unit-epic-under-split", "split-monic-counit-forces-unit-epic",
                     "hypotheses not satisfied on this sample");
    }
    return rep;
}

}  // namespace yoneda
