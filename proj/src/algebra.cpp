#include "yoneda/algebra.hpp"

namespace yoneda {

Vec Algebra::basis_vec(int i) const {
    Vec v(dim, Scalar(0));
    v[i] = 1;
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    const Field& k = field();
    Vec out(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = k.mul(x[i], y[j]);
            for (int l = 0; l < dim; ++l) {
                const Scalar& cc = c(i, j, l);
                if (!cc.is_zero()) out[l] = k.add(out[l], k.mul(f, cc));
            }
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& x) const {
    const Field& k = field();
    Matrix m(dim, dim); // m(l, j): coefficient of e_l in x * e_j
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            for (int l = 0; l < dim; ++l) {
                const Scalar& cc = c(i, j, l);
                if (!cc.is_zero()) m(l, j) = k.add(m(l, j), k.mul(x[i], cc));
            }
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    const Field& k = field();
    Matrix m(dim, dim); // m(l, i): coefficient of e_l in e_i * x
    for (int j = 0; j < dim; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < dim; ++i)
            for (int l = 0; l < dim; ++l) {
                const Scalar& cc = c(i, j, l);
                if (!cc.is_zero()) m(l, i) = k.add(m(l, i), k.mul(x[j], cc));
            }
    }
    return m;
}

bool Algebra::equals(const Algebra& other) const {
    return field_spec() == other.field_spec() && dim == other.dim &&
           structure == other.structure && unit == other.unit;
}

AlgebraPtr make_algebra(FieldSpec fs, int dim, std::vector<Scalar> structure, Vec unit) {
    require_input(dim >= 1, "algebra: dimension must be at least 1");
    require_input(structure.size() == std::size_t(dim) * dim * dim,
                  "algebra: structure constant array has wrong shape");
    require_input(unit.size() == std::size_t(dim), "algebra: unit vector has wrong length");
    auto a = std::make_shared<Algebra>(Field(fs));
    a->dim = dim;
    for (auto& x : structure) x = a->field().canon(x);
    for (auto& x : unit) x = a->field().canon(x);
    a->structure = std::move(structure);
    a->unit = std::move(unit);
    return a;
}

Matrix AlgebraModule::act(const Vec& element) const {
    const Field& k = field();
    Matrix out(dim, dim);
    for (int i = 0; i < algebra->dim; ++i) {
        if (element[i].is_zero()) continue;
        for (std::size_t t = 0; t < out.a.size(); ++t)
            if (!action[i].a[t].is_zero())
                out.a[t] = k.add(out.a[t], k.mul(element[i], action[i].a[t]));
    }
    return out;
}

ModulePtr make_module(AlgebraPtr a, int dim, std::vector<Matrix> action) {
    require_input(dim >= 0, "module: negative dimension");
    require_input(action.size() == std::size_t(a->dim),
                  "module: need one action matrix per algebra basis element");
    for (int i = 0; i < a->dim; ++i)
        require_input(action[i].rows == dim && action[i].cols == dim,
                      "module: action matrix " + std::to_string(i) + " has wrong shape");
    auto m = std::make_shared<AlgebraModule>();
    for (auto& mat : action)
        for (auto& x : mat.a) x = a->field().canon(x);
    m->algebra = std::move(a);
    m->dim = dim;
    m->action = std::move(action);
    return m;
}

ModulePtr regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> action;
    action.reserve(a->dim);
    for (int i = 0; i < a->dim; ++i) action.push_back(a->left_mult(a->basis_vec(i)));
    return make_module(a, a->dim, std::move(action));
}

ModulePtr zero_module(const AlgebraPtr& a) {
    return make_module(a, 0, std::vector<Matrix>(a->dim, Matrix(0, 0)));
}

bool modules_equal(const AlgebraModule& x, const AlgebraModule& y) {
    return x.algebra->equals(*y.algebra) && x.dim == y.dim && x.action == y.action;
}

AuditReport validate_algebra(const Algebra& a) {
    AuditReport rep;
    rep.subject = "validate_algebra";
    const Field& k = a.field();
    const int n = a.dim;
    rep.fact("dim", n);
    rep.fact("field", a.field_spec().describe());

    // (e_i e_j) e_l == e_i (e_j e_l), checked through the structure constants
    Json assoc_witness;
    bool assoc_ok = true;
    for (int i = 0; i < n && assoc_ok; ++i)
        for (int j = 0; j < n && assoc_ok; ++j)
            for (int l = 0; l < n && assoc_ok; ++l)
                for (int t = 0; t < n; ++t) {
                    Scalar lhs(0), rhs(0);
                    for (int m = 0; m < n; ++m) {
                        if (!a.c(i, j, m).is_zero() && !a.c(m, l, t).is_zero())
                            lhs = k.add(lhs, k.mul(a.c(i, j, m), a.c(m, l, t)));
                        if (!a.c(j, l, m).is_zero() && !a.c(i, m, t).is_zero())
                            rhs = k.add(rhs, k.mul(a.c(j, l, m), a.c(i, m, t)));
                    }
                    if (lhs != rhs) {
                        assoc_ok = false;
                        assoc_witness = Json{{"triple", {i, j, l}},
                                             {"component", t},
                                             {"lhs", k.to_string(lhs)},
                                             {"rhs", k.to_string(rhs)}};
                        break;
                    }
                }
    rep.require(assoc_ok, "associativity", "structure-constants-associative", assoc_witness);

    bool unit_ok = true;
    Json unit_witness;
    for (int j = 0; j < n && unit_ok; ++j) {
        Vec lv = a.multiply(a.unit, a.basis_vec(j));
        Vec rv = a.multiply(a.basis_vec(j), a.unit);
        Vec ej = a.basis_vec(j);
        if (lv != ej || rv != ej) {
            unit_ok = false;
            unit_witness = Json{{"basis_index", j},
                                {"left_ok", lv == ej},
                                {"right_ok", rv == ej}};
        }
    }
    rep.require(unit_ok, "unit law", "unit-two-sided", unit_witness);
    return rep;
}

AuditReport validate_module(const AlgebraModule& v) {
    AuditReport rep;
    rep.subject = "validate_module";
    const Algebra& a = *v.algebra;
    const Field& k = a.field();
    rep.fact("dim", v.dim);

    bool mult_ok = true;
    Json mult_witness;
    for (int i = 0; i < a.dim && mult_ok; ++i)
        for (int j = 0; j < a.dim && mult_ok; ++j) {
            Matrix lhs = mat_mul(k, v.action[i], v.action[j]);
            Matrix rhs(v.dim, v.dim);
            for (int l = 0; l < a.dim; ++l) {
                const Scalar& cc = a.c(i, j, l);
                if (cc.is_zero()) continue;
                rhs = mat_add(k, rhs, mat_scale(k, cc, v.action[l]));
            }
            if (lhs != rhs) {
                mult_ok = false;
                mult_witness = Json{{"pair", {i, j}}};
            }
        }
    rep.require(mult_ok, "action multiplicativity", "action-respects-structure", mult_witness);

    bool unit_ok = v.act(a.unit) == Matrix::identity(v.dim);
    rep.require(unit_ok, "unit acts as identity", "unit-acts-identically", Json());
    return rep;
}

LeftIdeal left_ideal_closure(const AlgebraPtr& a, std::vector<Vec> generators) {
    const Field& k = a->field();
    for (auto& g : generators) {
        require_input(g.size() == std::size_t(a->dim),
                      "ideal: generator has length " + std::to_string(g.size()) +
                          ", expected " + std::to_string(a->dim));
        for (auto& x : g) x = k.canon(x);
    }
    Subspace s = subspace_span(k, a->dim, generators);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> extra;
        for (int r = 0; r < s.dim(); ++r) {
            Vec b = s.basis.row(r);
            for (int i = 0; i < a->dim; ++i) {
                Vec w = a->multiply(a->basis_vec(i), b);
                if (!subspace_contains(k, s, w)) extra.push_back(std::move(w));
            }
        }
        if (!extra.empty()) {
            for (int r = 0; r < s.dim(); ++r) extra.push_back(s.basis.row(r));
            s = subspace_span(k, a->dim, extra);
            grew = true;
        }
    }
    return LeftIdeal{a, std::move(generators), std::move(s)};
}

LeftIdeal zero_ideal(const AlgebraPtr& a) { return left_ideal_closure(a, {}); }

bool ideals_equal(const LeftIdeal& x, const LeftIdeal& y) {
    return x.algebra->equals(*y.algebra) && x.basis == y.basis;
}

CyclicModule cyclic_module(const LeftIdeal& i) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    // paranoia: the stored basis must really be left-stable
    for (int r = 0; r < i.basis.dim(); ++r)
        for (int j = 0; j < a->dim; ++j)
            internal_check(
                subspace_contains(k, i.basis, a->multiply(a->basis_vec(j), i.basis.row(r))),
                "cyclic_module: ideal basis is not left-stable");

    QuotientSpace q = quotient_of(k, a->dim, i.basis);
    std::vector<Matrix> action;
    action.reserve(a->dim);
    for (int j = 0; j < a->dim; ++j)
        action.push_back(
            mat_mul(k, q.projection, mat_mul(k, a->left_mult(a->basis_vec(j)), q.section)));
    ModulePtr m = make_module(a, q.dim(), std::move(action));
    AuditReport rep = validate_module(*m);
    internal_check(rep.all_passed(), "cyclic_module: quotient action fails module axioms");
    Vec unit_class = apply(k, q.projection, a->unit);
    return CyclicModule{std::move(m), std::move(q), std::move(unit_class)};
}

std::optional<int> intertwining_defect(const ModuleMap& f) {
    const Field& k = f.source->field();
    internal_check(f.source->algebra->equals(*f.target->algebra),
                   "module map: source and target over different algebras");
    for (int i = 0; i < f.source->algebra->dim; ++i) {
        Matrix lhs = mat_mul(k, f.matrix, f.source->action[i]);
        Matrix rhs = mat_mul(k, f.target->action[i], f.matrix);
        if (lhs != rhs) return i;
    }
    return std::nullopt;
}

ModuleMap compose_maps(const ModuleMap& g, const ModuleMap& f) {
    internal_check(modules_equal(*g.source, *f.target), "compose_maps: type mismatch");
    return ModuleMap{f.source, g.target, mat_mul(f.source->field(), g.matrix, f.matrix)};
}

MapClassification classify_matrix(const Field& k, const Matrix& m) {
    MapClassification c;
    c.rank = rref(k, m).rank;
    c.source_dim = m.cols;
    c.target_dim = m.rows;
    c.mono = c.rank == c.source_dim;
    c.epi = c.rank == c.target_dim;
    c.iso = c.mono && c.epi;
    return c;
}

HomBasis hom_space(const ModulePtr& v, const ModulePtr& w) {
    internal_check(v->algebra->equals(*w->algebra), "hom_space: different algebras");
    const Field& k = v->field();
    const int n = v->algebra->dim;
    const int sv = v->dim, sw = w->dim;
    // unknown T (sw x sv), row-major vec; constraints T*rho_v(e_i) = rho_w(e_i)*T
    Matrix sys(n * sw * sv, sw * sv);
    Matrix iw = Matrix::identity(sw), iv = Matrix::identity(sv);
    for (int i = 0; i < n; ++i) {
        Matrix lhs = tensor_product(k, iw, transpose(v->action[i]));
        Matrix rhs = tensor_product(k, w->action[i], iv);
        Matrix block = mat_sub(k, lhs, rhs);
        for (int r = 0; r < block.rows; ++r)
            for (int c = 0; c < block.cols; ++c)
                sys(i * sw * sv + r, c) = block(r, c);
    }
    Subspace sol = kernel(k, sys);
    HomBasis hb;
    hb.source = v;
    hb.target = w;
    hb.space = sol;
    for (int r = 0; r < sol.dim(); ++r) {
        ModuleMap f{v, w, unvectorize(sol.basis.row(r), sw, sv)};
        internal_check(!intertwining_defect(f).has_value(),
                       "hom_space: solution fails to intertwine");
        hb.basis.push_back(std::move(f));
    }
    return hb;
}

Vec HomBasis::coords(const Matrix& map_matrix) const {
    const Field& k = source->field();
    return coords_in_subspace(k, space, vectorize(map_matrix));
}

Subspace invariant_subspace(const ModulePtr& v, const LeftIdeal& i) {
    const Field& k = v->field();
    internal_check(v->algebra->equals(*i.algebra), "invariant_subspace: different algebras");
    Subspace inv = subspace_full(v->dim);
    if (i.basis.dim() > 0) {
        Matrix stacked(i.basis.dim() * v->dim, v->dim);
        for (int r = 0; r < i.basis.dim(); ++r) {
            Matrix m = v->act(i.basis.row(r));
            for (int rr = 0; rr < v->dim; ++rr)
                for (int cc = 0; cc < v->dim; ++cc) stacked(r * v->dim + rr, cc) = m(rr, cc);
        }
        inv = kernel(k, stacked);
    }
    // dim V^I must agree with dim Hom_A(A/I, V); the natural map is phi -> phi(1+I)
    CyclicModule c = cyclic_module(i);
    HomBasis hb = hom_space(c.module, v);
    internal_check(hb.dim() == inv.dim(),
                   "invariant_subspace: dim V^I != dim Hom(A/I, V)");
    return inv;
}

Subspace generated_submodule(const ModulePtr& v, const std::vector<Vec>& vectors) {
    const Field& k = v->field();
    for (const auto& x : vectors)
        require_input(x.size() == std::size_t(v->dim), "generated_submodule: vector length mismatch");
    Subspace s = subspace_span(k, v->dim, vectors);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> extra;
        for (int r = 0; r < s.dim(); ++r) {
            Vec b = s.basis.row(r);
            for (int i = 0; i < v->algebra->dim; ++i) {
                Vec w = apply(k, v->action[i], b);
                if (!subspace_contains(k, s, w)) extra.push_back(std::move(w));
            }
        }
        if (!extra.empty()) {
            for (int r = 0; r < s.dim(); ++r) extra.push_back(s.basis.row(r));
            s = subspace_span(k, v->dim, extra);
            grew = true;
        }
    }
    return s;
}

Subspace normalizer(const LeftIdeal& i) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    QuotientSpace q = quotient_of(k, a->dim, i.basis);
    if (i.basis.dim() == 0) return subspace_full(a->dim);
    Matrix stacked(i.basis.dim() * q.dim(), a->dim);
    for (int r = 0; r < i.basis.dim(); ++r) {
        // condition on a: (b_r * a) mod I = 0
        Matrix m = mat_mul(k, q.projection, a->left_mult(i.basis.row(r)));
        for (int rr = 0; rr < q.dim(); ++rr)
            for (int cc = 0; cc < a->dim; ++cc) stacked(r * q.dim() + rr, cc) = m(rr, cc);
    }
    Subspace n = kernel(k, stacked);
    internal_check(subspace_leq(k, i.basis, n), "normalizer: does not contain the ideal");
    internal_check(subspace_contains(k, n, a->unit), "normalizer: does not contain the unit");
    return n;
}

Matrix right_action_on_cyclic(const CyclicModule& c, const Vec& rep) {
    const AlgebraPtr& a = c.module->algebra;
    const Field& k = a->field();
    return mat_mul(k, c.quotient.projection, mat_mul(k, a->right_mult(rep), c.quotient.section));
}

Eigenring eigenring(const LeftIdeal& i) {
    const AlgebraPtr& a = i.algebra;
    const Field& k = a->field();
    require_input(i.basis.dim() < a->dim,
                  "eigenring: the unit ideal has zero quotient; its eigenring is the zero ring");
    Eigenring e;
    e.report.subject = "eigenring";
    e.normalizer_space = normalizer(i);
    e.cyclic = cyclic_module(i);

    // coordinates of I inside N, then S = N/I in those coordinates
    std::vector<Vec> i_in_n;
    for (int r = 0; r < i.basis.dim(); ++r)
        i_in_n.push_back(coords_in_subspace(k, e.normalizer_space, i.basis.row(r)));
    Subspace i_sub = subspace_span(k, e.normalizer_space.dim(), i_in_n);
    e.n_mod_i = quotient_of(k, e.normalizer_space.dim(), i_sub);
    const int sdim = e.n_mod_i.dim();
    internal_check(sdim == e.normalizer_space.dim() - i.basis.dim(),
                   "eigenring: quotient dimension mismatch");

    // representatives in A coordinates
    e.reps = Matrix(sdim, a->dim);
    for (int j = 0; j < sdim; ++j) {
        Vec n_coords = e.n_mod_i.section.col(j);
        Vec rep(a->dim, Scalar(0));
        for (int l = 0; l < e.normalizer_space.dim(); ++l)
            if (!n_coords[l].is_zero())
                rep = vec_add(k, rep, vec_scale(k, n_coords[l], e.normalizer_space.basis.row(l)));
        e.reps.set_row(j, rep);
    }

    auto class_of = [&](const Vec& element_in_a) {
        // fails loudly (InternalCheckError) when the element is not in N
        Vec n_coords = coords_in_subspace(k, e.normalizer_space, element_in_a);
        return apply(k, e.n_mod_i.projection, n_coords);
    };

    // induced multiplication on classes
    std::vector<Scalar> structure(std::size_t(sdim) * sdim * sdim, Scalar(0));
    for (int x = 0; x < sdim; ++x)
        for (int y = 0; y < sdim; ++y) {
            Vec prod = a->multiply(e.reps.row(x), e.reps.row(y));
            Vec cls = class_of(prod);
            for (int l = 0; l < sdim; ++l)
                structure[(std::size_t(x) * sdim + y) * sdim + l] = cls[l];
        }
    Vec s_unit = class_of(a->unit);
    e.s = make_algebra(a->field_spec(), sdim, std::move(structure), s_unit);
    AuditReport algebra_rep = validate_algebra(*e.s);
    internal_check(algebra_rep.all_passed(), "eigenring: induced multiplication not an algebra");
    e.report.fact("normalizer_dim", e.normalizer_space.dim());
    e.report.fact("eigenring_dim", sdim);
    e.report.pass("induced multiplication well-defined", "eigenring-multiplication-closed");

    // phi_s(b+I) = b*s+I, one per basis class
    for (int j = 0; j < sdim; ++j) {
        ModuleMap f{e.cyclic.module, e.cyclic.module,
                    right_action_on_cyclic(e.cyclic, e.reps.row(j))};
        internal_check(!intertwining_defect(f).has_value(),
                       "eigenring: right multiplication is not A-linear on A/I");
        e.phi.push_back(std::move(f));
    }
    e.report.pass("right multiplications intertwine", "eigenring-phi-intertwines");

    // anti-homomorphism: phi_{xy} = phi_y . phi_x
    bool anti_ok = true;
    Json anti_witness;
    for (int x = 0; x < sdim && anti_ok; ++x)
        for (int y = 0; y < sdim; ++y) {
            Matrix lhs(e.cyclic.module->dim, e.cyclic.module->dim);
            for (int l = 0; l < sdim; ++l) {
                const Scalar& cc = e.s->c(x, y, l);
                if (!cc.is_zero()) lhs = mat_add(k, lhs, mat_scale(k, cc, e.phi[l].matrix));
            }
            Matrix rhs = mat_mul(k, e.phi[y].matrix, e.phi[x].matrix);
            if (lhs != rhs) {
                anti_ok = false;
                anti_witness = Json{{"pair", {x, y}}};
                break;
            }
        }
    internal_check(anti_ok, "eigenring: anti-homomorphism identity failed");
    e.report.pass("anti-homomorphism identity", "eigenring-anti-isomorphism");

    // linear bijectivity onto End_A(A/I)
    HomBasis end_basis = hom_space(e.cyclic.module, e.cyclic.module);
    bool dims_match = end_basis.dim() == sdim;
    Matrix coord_mat(end_basis.dim(), sdim);
    if (dims_match) {
        for (int j = 0; j < sdim; ++j) coord_mat.set_col(j, end_basis.coords(e.phi[j].matrix));
        dims_match = classify_matrix(k, coord_mat).iso;
    }
    internal_check(dims_match, "eigenring: class -> phi is not bijective onto End(A/I)");
    e.report.pass("classes biject onto End(A/I)", "eigenring-bijects-onto-endomorphisms",
                  Json{{"end_dim", end_basis.dim()}});
    return e;
}

SubmoduleResult submodule_module(const ModulePtr& v, const Subspace& s) {
    const Field& k = v->field();
    internal_check(s.ambient == v->dim, "submodule: ambient mismatch");
    std::vector<Matrix> action;
    for (int i = 0; i < v->algebra->dim; ++i) {
        Matrix m(s.dim(), s.dim());
        for (int c = 0; c < s.dim(); ++c) {
            Vec img = apply(k, v->action[i], s.basis.row(c));
            internal_check(subspace_contains(k, s, img), "submodule: subspace not action-stable");
            m.set_col(c, coords_in_subspace(k, s, img));
        }
        action.push_back(std::move(m));
    }
    ModulePtr sub = make_module(v->algebra, s.dim(), std::move(action));
    ModuleMap incl{sub, v, transpose(s.basis)};
    internal_check(!intertwining_defect(incl).has_value(), "submodule: inclusion not A-linear");
    return SubmoduleResult{std::move(sub), std::move(incl), s};
}

QuotientModuleResult quotient_module(const ModulePtr& v, const Subspace& s) {
    const Field& k = v->field();
    internal_check(s.ambient == v->dim, "quotient_module: ambient mismatch");
    for (int r = 0; r < s.dim(); ++r)
        for (int i = 0; i < v->algebra->dim; ++i)
            internal_check(subspace_contains(k, s, apply(k, v->action[i], s.basis.row(r))),
                           "quotient_module: subspace not action-stable");
    QuotientSpace q = quotient_of(k, v->dim, s);
    std::vector<Matrix> action;
    for (int i = 0; i < v->algebra->dim; ++i)
        action.push_back(mat_mul(k, q.projection, mat_mul(k, v->action[i], q.section)));
    ModulePtr quo = make_module(v->algebra, q.dim(), std::move(action));
    ModuleMap proj{v, quo, q.projection};
    internal_check(!intertwining_defect(proj).has_value(), "quotient_module: projection not A-linear");
    return QuotientModuleResult{std::move(quo), std::move(proj), std::move(q)};
}

ModulePtr direct_sum_module(const ModulePtr& x, const ModulePtr& y) {
    internal_check(x->algebra->equals(*y->algebra), "direct_sum: different algebras");
    std::vector<Matrix> action;
    for (int i = 0; i < x->algebra->dim; ++i) {
        Matrix m(x->dim + y->dim, x->dim + y->dim);
        for (int r = 0; r < x->dim; ++r)
            for (int c = 0; c < x->dim; ++c) m(r, c) = x->action[i](r, c);
        for (int r = 0; r < y->dim; ++r)
            for (int c = 0; c < y->dim; ++c) m(x->dim + r, x->dim + c) = y->action[i](r, c);
        action.push_back(std::move(m));
    }
    return make_module(x->algebra, x->dim + y->dim, std::move(action));
}

} // namespace yoneda
