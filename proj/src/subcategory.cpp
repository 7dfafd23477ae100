#include "yoneda/subcategory.hpp"

#include <string>
#include <utility>

#include "yoneda/errors.hpp"

namespace yoneda {

namespace {

std::string pair_tag(int s, int t) {
    return "pair-" + std::to_string(s) + "-" + std::to_string(t);
}

// {a in A : I_s a <= I_t}, the carrier of maps A/I_s -> A/I_t under right
// multiplication. Contains I_t.
Subspace right_carrier(const LeftIdeal& i_s, const QuotientSpace& mod_t) {
    const AlgebraPtr& a = i_s.algebra;
    const Field& k = a->field();
    if (i_s.dim() == 0) return subspace_full(a->dim);
    Matrix stacked(i_s.dim() * mod_t.dim(), a->dim);
    int row = 0;
    for (int r = 0; r < i_s.dim(); ++r) {
        Matrix cond = mat_mul(k, mod_t.projection, a->left_mult(i_s.basis.row(r)));
        for (int cr = 0; cr < cond.rows; ++cr, ++row) stacked.set_row(row, cond.row(cr));
    }
    return kernel(k, stacked);
}

} // namespace

Vec SubcategoryB::compose_coords(int s, int t, int u, const Vec& g, const Vec& f) const {
    const Field& k = field();
    const int n_st = homs[s][t].dim();
    const int n_su = homs[s][u].dim();
    internal_check(int(f.size()) == n_st && int(g.size()) == homs[t][u].dim(),
                   "compose_coords: coordinate lengths do not match hom bases");
    Vec out(n_su, k.zero());
    const Matrix& table = comp[s][t][u];
    for (int kk = 0; kk < int(g.size()); ++kk)
        for (int j = 0; j < n_st; ++j) {
            Scalar w = k.mul(g[kk], f[j]);
            if (k.is_zero(w)) continue;
            for (int l = 0; l < n_su; ++l)
                out[l] = k.add(out[l], k.mul(w, table(kk * n_st + j, l)));
        }
    return out;
}

BPtr build_subcategory(const AlgebraPtr& a, std::vector<LeftIdeal> ideals) {
    const Field& k = a->field();
    for (const auto& i : ideals)
        require_input(i.algebra->equals(*a), "subcategory: ideal over a different algebra");
    for (std::size_t x = 0; x < ideals.size(); ++x)
        for (std::size_t y = x + 1; y < ideals.size(); ++y)
            require_input(!ideals_equal(ideals[x], ideals[y]),
                          "subcategory: duplicate ideals (objects must be distinct)");

    auto b = std::make_shared<SubcategoryB>();
    b->algebra = a;
    b->ideals = std::move(ideals);
    b->build_report.subject = "build_subcategory";

    const int m = int(b->ideals.size());
    for (const auto& i : b->ideals) b->objects.push_back(cyclic_module(i));

    b->homs.resize(m);
    for (int s = 0; s < m; ++s) {
        b->homs[s].reserve(m);
        for (int t = 0; t < m; ++t)
            b->homs[s].push_back(hom_space(b->objects[s].module, b->objects[t].module));
    }

    b->identities.resize(m);
    for (int s = 0; s < m; ++s)
        b->identities[s] = b->homs[s][s].coords(Matrix::identity(b->objects[s].module->dim));

    // composition constants
    b->comp.assign(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            b->comp[s][t].reserve(m);
            for (int u = 0; u < m; ++u) {
                const int n_st = b->homs[s][t].dim();
                const int n_tu = b->homs[t][u].dim();
                Matrix table(n_tu * n_st, b->homs[s][u].dim());
                for (int kk = 0; kk < n_tu; ++kk)
                    for (int j = 0; j < n_st; ++j) {
                        Matrix composite = mat_mul(k, b->homs[t][u].basis[kk].matrix,
                                                   b->homs[s][t].basis[j].matrix);
                        table.set_row(kk * n_st + j, b->homs[s][u].coords(composite));
                    }
                b->comp[s][t].push_back(std::move(table));
            }
        }

    // Hom(A/I_s, A/I_t) must be exactly the right-multiplication maps by classes of
    // {a : I_s a <= I_t} modulo I_t: same dimension, and the maps of a class basis
    // span the computed hom space.
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const LeftIdeal& i_s = b->ideals[s];
            const LeftIdeal& i_t = b->ideals[t];
            const CyclicModule& obj_t = b->objects[t];
            Subspace carrier = right_carrier(i_s, obj_t.quotient);
            internal_check(subspace_leq(k, i_t.basis, carrier),
                           "subcategory: carrier does not contain the target ideal");
            int expected = carrier.dim() - i_t.dim();
            int got = b->homs[s][t].dim();
            b->build_report.require(expected == got, pair_tag(s, t) + "-hom-dimension",
                                    "hom-dim-matches-right-carrier-quotient", Json(),
                                    Json{{"expected", expected}, {"got", got}});

            // pick carrier representatives independent modulo I_t
            Subspace seen = i_t.basis;
            std::vector<Vec> map_vecs;
            bool all_intertwine = true;
            for (int r = 0; r < carrier.dim(); ++r) {
                Vec rep = carrier.row(r);
                if (subspace_contains(k, seen, rep)) continue;
                seen = subspace_sum(k, seen, subspace_span(k, a->dim, {rep}));
                Matrix phi = mat_mul(k, mat_mul(k, obj_t.quotient.projection, a->right_mult(rep)),
                                     b->objects[s].quotient.section);
                ModuleMap as_map{b->objects[s].module, obj_t.module, phi};
                if (intertwining_defect(as_map).has_value()) all_intertwine = false;
                map_vecs.push_back(vectorize(phi));
            }
            Subspace span = subspace_span(k, obj_t.module->dim * b->objects[s].module->dim,
                                          map_vecs);
            bool same = all_intertwine && span == b->homs[s][t].space;
            b->build_report.require(same, pair_tag(s, t) + "-right-mult-span",
                                    "right-multiplication-classes-span-hom-space", Json(),
                                    Json{{"class_count", int(map_vecs.size())},
                                         {"hom_dim", got}});
        }

    // composition constants: associative on basis triples, unital against the
    // identity coordinates
    {
        bool assoc = true;
        Json witness;
        for (int s = 0; s < m && assoc; ++s)
            for (int t = 0; t < m && assoc; ++t)
                for (int u = 0; u < m && assoc; ++u)
                    for (int w = 0; w < m && assoc; ++w) {
                        const int n_st = b->homs[s][t].dim();
                        const int n_tu = b->homs[t][u].dim();
                        const int n_uw = b->homs[u][w].dim();
                        for (int j = 0; j < n_st && assoc; ++j)
                            for (int kk = 0; kk < n_tu && assoc; ++kk)
                                for (int l = 0; l < n_uw && assoc; ++l) {
                                    Vec ef(n_st, k.zero());
                                    ef[j] = k.one();
                                    Vec eg(n_tu, k.zero());
                                    eg[kk] = k.one();
                                    Vec eh(n_uw, k.zero());
                                    eh[l] = k.one();
                                    Vec gf = b->compose_coords(s, t, u, eg, ef);
                                    Vec left = b->compose_coords(s, u, w, eh, gf);
                                    Vec hg = b->compose_coords(t, u, w, eh, eg);
                                    Vec right = b->compose_coords(s, t, w, hg, ef);
                                    if (left != right) {
                                        assoc = false;
                                        witness = Json{{"objects", {s, t, u, w}},
                                                       {"basis", {j, kk, l}}};
                                    }
                                }
                    }
        b->build_report.require(assoc, "composition-associativity",
                                "composition-associative-on-basis", witness);

        bool unital = true;
        for (int s = 0; s < m && unital; ++s)
            for (int t = 0; t < m && unital; ++t) {
                const int n_st = b->homs[s][t].dim();
                for (int j = 0; j < n_st && unital; ++j) {
                    Vec ef(n_st, k.zero());
                    ef[j] = k.one();
                    if (b->compose_coords(s, t, t, b->identities[t], ef) != ef) unital = false;
                    if (b->compose_coords(s, s, t, ef, b->identities[s]) != ef) unital = false;
                }
            }
        b->build_report.require(unital, "composition-identities", "composition-unital");
    }

    b->build_report.fact("objects", m);
    {
        Json dims = Json::array();
        for (int s = 0; s < m; ++s) {
            Json row = Json::array();
            for (int t = 0; t < m; ++t) row.push_back(b->homs[s][t].dim());
            dims.push_back(row);
        }
        b->build_report.fact("hom_dims", dims);
    }
    return b;
}

Matrix FunctorRep::map_of(int s, int t, const Vec& coords) const {
    const Field& k = base->field();
    internal_check(int(coords.size()) == int(maps[s][t].size()),
                   "map_of: coordinate length does not match hom basis");
    Matrix out(dims[s], dims[t]);
    for (std::size_t kk = 0; kk < coords.size(); ++kk) {
        if (k.is_zero(coords[kk])) continue;
        out = mat_add(k, out, mat_scale(k, coords[kk], maps[s][t][kk]));
    }
    return out;
}

FunctorPtr make_functor(BPtr base, std::vector<int> dims,
                        std::vector<std::vector<std::vector<Matrix>>> maps) {
    require_input(base != nullptr, "functor: missing base subcategory");
    const int m = base->size();
    require_input(int(dims.size()) == m, "functor: one dimension per object required");
    for (int d : dims) require_input(d >= 0, "functor: dimensions must be nonnegative");
    require_input(int(maps.size()) == m, "functor: map table has wrong shape");
    for (int s = 0; s < m; ++s) {
        require_input(int(maps[s].size()) == m, "functor: map table has wrong shape");
        for (int t = 0; t < m; ++t) {
            require_input(int(maps[s][t].size()) == base->homs[s][t].dim(),
                          "functor: one matrix per hom basis element required");
            for (auto& mat : maps[s][t]) {
                require_input(mat.rows == dims[s] && mat.cols == dims[t],
                              "functor: matrix shape must be dims[source] x dims[target]");
                for (auto& e : mat.a) e = base->field().canon(e);
            }
        }
    }
    auto f = std::make_shared<FunctorRep>();
    f->base = std::move(base);
    f->dims = std::move(dims);
    f->maps = std::move(maps);
    return f;
}

AuditReport validate_functor(const FunctorRep& f) {
    AuditReport rep;
    rep.subject = "validate_functor";
    const Field& k = f.base->field();
    const int m = f.base->size();

    bool id_ok = true;
    Json id_witness;
    for (int s = 0; s < m && id_ok; ++s) {
        Matrix at_id = f.map_of(s, s, f.base->identities[s]);
        if (!(at_id == Matrix::identity(f.dims[s]))) {
            id_ok = false;
            id_witness = Json{{"object", s}};
        }
    }
    rep.require(id_ok, "identity-axiom", "functor-identity-axiom", id_witness);

    bool comp_ok = true;
    Json comp_witness;
    for (int s = 0; s < m && comp_ok; ++s)
        for (int t = 0; t < m && comp_ok; ++t)
            for (int u = 0; u < m && comp_ok; ++u) {
                const int n_st = f.base->homs[s][t].dim();
                const int n_tu = f.base->homs[t][u].dim();
                for (int j = 0; j < n_st && comp_ok; ++j)
                    for (int kk = 0; kk < n_tu && comp_ok; ++kk) {
                        Vec ef(n_st, k.zero());
                        ef[j] = k.one();
                        Vec eg(n_tu, k.zero());
                        eg[kk] = k.one();
                        Matrix lhs = f.map_of(s, u, f.base->compose_coords(s, t, u, eg, ef));
                        Matrix rhs = mat_mul(k, f.maps[s][t][j], f.maps[t][u][kk]);
                        if (!(lhs == rhs)) {
                            comp_ok = false;
                            comp_witness = Json{{"objects", {s, t, u}}, {"basis", {j, kk}}};
                        }
                    }
            }
    rep.require(comp_ok, "composition-axiom", "functor-composition-axiom", comp_witness);
    return rep;
}

FunctorPtr zero_functor(const BPtr& b) {
    const int m = b->size();
    std::vector<int> dims(m, 0);
    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            maps[s][t].assign(b->homs[s][t].dim(), Matrix(0, 0));
    return make_functor(b, std::move(dims), std::move(maps));
}

FunctorPtr representable_functor(const BPtr& b, int object) {
    require_input(object >= 0 && object < b->size(), "representable: no such object");
    const int m = b->size();
    std::vector<int> dims(m);
    for (int s = 0; s < m; ++s) dims[s] = b->homs[s][object].dim();
    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const int n_st = b->homs[s][t].dim();
            maps[s][t].reserve(n_st);
            for (int kk = 0; kk < n_st; ++kk) {
                // column j: coordinates of (basis_j: t -> object) after (basis_kk: s -> t)
                Matrix mat(dims[s], dims[t]);
                for (int j = 0; j < dims[t]; ++j)
                    mat.set_col(j, b->comp[s][t][object].row(j * n_st + kk));
                maps[s][t].push_back(std::move(mat));
            }
        }
    auto f = make_functor(b, std::move(dims), std::move(maps));
    internal_check(validate_functor(*f).all_passed(),
                   "representable: functor axioms failed");
    return f;
}

FunctorPtr functor_direct_sum(const FunctorPtr& x, const FunctorPtr& y) {
    require_input(x->base == y->base, "functor sum: different base subcategories");
    const BPtr& b = x->base;
    const int m = b->size();
    std::vector<int> dims(m);
    for (int s = 0; s < m; ++s) dims[s] = x->dims[s] + y->dims[s];
    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const int n_st = b->homs[s][t].dim();
            maps[s][t].reserve(n_st);
            for (int kk = 0; kk < n_st; ++kk) {
                Matrix mat(dims[s], dims[t]);
                const Matrix& xm = x->maps[s][t][kk];
                const Matrix& ym = y->maps[s][t][kk];
                for (int r = 0; r < xm.rows; ++r)
                    for (int c = 0; c < xm.cols; ++c) mat(r, c) = xm(r, c);
                for (int r = 0; r < ym.rows; ++r)
                    for (int c = 0; c < ym.cols; ++c)
                        mat(x->dims[s] + r, x->dims[t] + c) = ym(r, c);
                maps[s][t].push_back(std::move(mat));
            }
        }
    return make_functor(b, std::move(dims), std::move(maps));
}

bool functors_equal(const FunctorRep& x, const FunctorRep& y) {
    return x.base == y.base && x.dims == y.dims && x.maps == y.maps;
}

YonedaFunctor restricted_yoneda(const BPtr& b, const ModulePtr& v) {
    require_input(b->algebra->equals(*v->algebra), "yoneda: module over a different algebra");
    const Field& k = b->field();
    const int m = b->size();

    YonedaFunctor out;
    out.v = v;
    out.hom_bases.reserve(m);
    std::vector<int> dims(m);
    for (int s = 0; s < m; ++s) {
        out.hom_bases.push_back(hom_space(b->objects[s].module, v));
        dims[s] = out.hom_bases.back().dim();
    }

    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            const int n_st = b->homs[s][t].dim();
            maps[s][t].reserve(n_st);
            for (int kk = 0; kk < n_st; ++kk) {
                Matrix mat(dims[s], dims[t]);
                for (int j = 0; j < dims[t]; ++j) {
                    Matrix composite = mat_mul(k, out.hom_bases[t].basis[j].matrix,
                                               b->homs[s][t].basis[kk].matrix);
                    mat.set_col(j, out.hom_bases[s].coords(composite));
                }
                maps[s][t].push_back(std::move(mat));
            }
        }
    out.functor = make_functor(b, std::move(dims), std::move(maps));
    internal_check(validate_functor(*out.functor).all_passed(),
                   "yoneda: functor axioms failed");
    return out;
}

std::optional<std::array<int, 3>> naturality_defect(const NatTrans& t) {
    const BPtr& b = t.source->base;
    internal_check(b == t.target->base, "naturality_defect: mismatched bases");
    const Field& k = b->field();
    for (int s = 0; s < b->size(); ++s)
        for (int u = 0; u < b->size(); ++u)
            for (int kk = 0; kk < b->homs[s][u].dim(); ++kk) {
                Matrix lhs = mat_mul(k, t.components[s], t.source->maps[s][u][kk]);
                Matrix rhs = mat_mul(k, t.target->maps[s][u][kk], t.components[u]);
                if (!(lhs == rhs)) return std::array<int, 3>{s, u, kk};
            }
    return std::nullopt;
}

NatTrans identity_nat(const FunctorPtr& f) {
    NatTrans t;
    t.source = f;
    t.target = f;
    for (int d : f->dims) t.components.push_back(Matrix::identity(d));
    return t;
}

NatTrans compose_nats(const NatTrans& g, const NatTrans& f) {
    internal_check(g.source == f.target, "compose_nats: type mismatch");
    const Field& k = f.source->base->field();
    NatTrans t;
    t.source = f.source;
    t.target = g.target;
    for (std::size_t s = 0; s < f.components.size(); ++s)
        t.components.push_back(mat_mul(k, g.components[s], f.components[s]));
    return t;
}

NatTrans yoneda_on_map(const YonedaFunctor& yv, const YonedaFunctor& yw, const ModuleMap& h) {
    require_input(modules_equal(*h.source, *yv.v) && modules_equal(*h.target, *yw.v),
                  "yoneda_on_map: map endpoints do not match the functors");
    const BPtr& b = yv.functor->base;
    require_input(b == yw.functor->base, "yoneda_on_map: different base subcategories");
    const Field& k = b->field();
    NatTrans t;
    t.source = yv.functor;
    t.target = yw.functor;
    for (int s = 0; s < b->size(); ++s) {
        Matrix mat(yw.functor->dims[s], yv.functor->dims[s]);
        for (int j = 0; j < yv.functor->dims[s]; ++j) {
            Matrix composite = mat_mul(k, h.matrix, yv.hom_bases[s].basis[j].matrix);
            mat.set_col(j, yw.hom_bases[s].coords(composite));
        }
        t.components.push_back(std::move(mat));
    }
    internal_check(!naturality_defect(t).has_value(),
                   "yoneda_on_map: postcomposition is not natural");
    return t;
}

namespace {

std::vector<int> nat_offsets(const FunctorRep& f, const FunctorRep& g) {
    std::vector<int> off(f.dims.size() + 1, 0);
    for (std::size_t s = 0; s < f.dims.size(); ++s)
        off[s + 1] = off[s] + g.dims[s] * f.dims[s];
    return off;
}

} // namespace

Vec vectorize_nat(const NatTrans& t) {
    Vec out;
    for (const auto& c : t.components) {
        Vec v = vectorize(c);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

NatTrans nat_from_vector(const FunctorPtr& f, const FunctorPtr& g, const Vec& v) {
    auto off = nat_offsets(*f, *g);
    internal_check(int(v.size()) == off.back(), "nat_from_vector: wrong length");
    NatTrans t;
    t.source = f;
    t.target = g;
    for (std::size_t s = 0; s < f->dims.size(); ++s) {
        Vec block(v.begin() + off[s], v.begin() + off[s + 1]);
        t.components.push_back(unvectorize(block, g->dims[s], f->dims[s]));
    }
    return t;
}

Vec NatBasis::coords(const NatTrans& t) const {
    return coords_in_subspace(source->base->field(), space, vectorize_nat(t));
}

NatBasis nat_space(const FunctorPtr& f, const FunctorPtr& g) {
    require_input(f->base == g->base, "nat_space: different base subcategories");
    const BPtr& b = f->base;
    const Field& k = b->field();
    const int m = b->size();
    auto off = nat_offsets(*f, *g);
    const int unknowns = off.back();

    // one block row per (s, t, hom basis element): theta_s F(f_k) - G(f_k) theta_t = 0
    std::vector<Vec> rows;
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int kk = 0; kk < b->homs[s][t].dim(); ++kk) {
                // vec(theta_s Fk) = (I x Fk^T) vec(theta_s); vec(Gk theta_t) = (Gk x I) vec(theta_t)
                Matrix left = tensor_product(k, Matrix::identity(g->dims[s]),
                                             transpose(f->maps[s][t][kk]));
                Matrix right = tensor_product(k, g->maps[s][t][kk],
                                              Matrix::identity(f->dims[t]));
                for (int r = 0; r < left.rows; ++r) {
                    Vec row(unknowns, k.zero());
                    for (int c = 0; c < left.cols; ++c) row[off[s] + c] = left(r, c);
                    for (int c = 0; c < right.cols; ++c)
                        row[off[t] + c] = k.sub(row[off[t] + c], right(r, c));
                    rows.push_back(std::move(row));
                }
            }

    Matrix stacked(int(rows.size()), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) stacked.set_row(int(r), rows[r]);

    NatBasis out;
    out.source = f;
    out.target = g;
    out.space = kernel(k, stacked);
    for (int r = 0; r < out.space.dim(); ++r) {
        NatTrans t = nat_from_vector(f, g, out.space.row(r));
        internal_check(!naturality_defect(t).has_value(),
                       "nat_space: solution fails naturality");
        out.basis.push_back(std::move(t));
    }
    return out;
}

FunctorKernel functor_kernel(const NatTrans& t) {
    internal_check(!naturality_defect(t).has_value(), "functor_kernel: input not natural");
    const FunctorPtr& f = t.source;
    const BPtr& b = f->base;
    const Field& k = b->field();
    const int m = b->size();

    FunctorKernel out;
    out.kernels.reserve(m);
    std::vector<int> dims(m);
    for (int s = 0; s < m; ++s) {
        out.kernels.push_back(kernel(k, t.components[s]));
        dims[s] = out.kernels.back().dim();
    }

    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int u = 0; u < m; ++u) {
            const int n = b->homs[s][u].dim();
            maps[s][u].reserve(n);
            for (int kk = 0; kk < n; ++kk) {
                Matrix mat(dims[s], dims[u]);
                for (int j = 0; j < dims[u]; ++j) {
                    Vec moved = apply(k, f->maps[s][u][kk], out.kernels[u].row(j));
                    mat.set_col(j, coords_in_subspace(k, out.kernels[s], moved));
                }
                maps[s][u].push_back(std::move(mat));
            }
        }
    out.functor = make_functor(b, std::move(dims), std::move(maps));
    internal_check(validate_functor(*out.functor).all_passed(),
                   "functor_kernel: functor axioms failed");

    out.inclusion.source = out.functor;
    out.inclusion.target = f;
    for (int s = 0; s < m; ++s)
        out.inclusion.components.push_back(transpose(out.kernels[s].basis));
    internal_check(!naturality_defect(out.inclusion).has_value(),
                   "functor_kernel: inclusion is not natural");
    return out;
}

FunctorCokernel functor_cokernel(const NatTrans& t) {
    internal_check(!naturality_defect(t).has_value(), "functor_cokernel: input not natural");
    const FunctorPtr& g = t.target;
    const BPtr& b = g->base;
    const Field& k = b->field();
    const int m = b->size();

    FunctorCokernel out;
    out.quotients.reserve(m);
    std::vector<int> dims(m);
    for (int s = 0; s < m; ++s) {
        std::vector<Vec> cols;
        for (int j = 0; j < t.components[s].cols; ++j) cols.push_back(t.components[s].col(j));
        Subspace image = subspace_span(k, g->dims[s], cols);
        out.quotients.push_back(quotient_of(k, g->dims[s], image));
        dims[s] = out.quotients.back().dim();
    }

    std::vector<std::vector<std::vector<Matrix>>> maps(m, std::vector<std::vector<Matrix>>(m));
    for (int s = 0; s < m; ++s)
        for (int u = 0; u < m; ++u) {
            const int n = b->homs[s][u].dim();
            maps[s][u].reserve(n);
            for (int kk = 0; kk < n; ++kk)
                maps[s][u].push_back(mat_mul(k, out.quotients[s].projection,
                                             mat_mul(k, g->maps[s][u][kk],
                                                     out.quotients[u].section)));
        }
    out.functor = make_functor(b, std::move(dims), std::move(maps));
    internal_check(validate_functor(*out.functor).all_passed(),
                   "functor_cokernel: functor axioms failed");

    out.projection.source = g;
    out.projection.target = out.functor;
    for (int s = 0; s < m; ++s) out.projection.components.push_back(out.quotients[s].projection);
    internal_check(!naturality_defect(out.projection).has_value(),
                   "functor_cokernel: projection is not natural");
    return out;
}

} // namespace yoneda
