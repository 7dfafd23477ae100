#include "yoneda/sampling.hpp"

#include "yoneda/adjunction.hpp"
#include "yoneda/corpus.hpp"
#include "yoneda/errors.hpp"
#include "yoneda/instance.hpp"

namespace yoneda {

Matrix random_invertible(Rng& rng, const Field& k, int n) {
    require_input(n >= 0, "random_invertible: negative size");
    if (n == 0) return Matrix(0, 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix m = rng.matrix(k, n, n);
        if (inverse(k, m)) return m;
    }
    return Matrix::identity(n);
}

AlgebraPtr change_basis(const AlgebraPtr& a, const Matrix& p) {
    const Field& k = a->field();
    require_input(p.rows == a->dim && p.cols == a->dim,
                  "change_basis: matrix shape does not match the algebra");
    auto q = inverse(k, p);
    require_input(q.has_value(), "change_basis: matrix is singular");
    const int n = a->dim;
    // New basis f_i = sum_a p(a,i) e_a, so f_i f_j expressed in the old basis is
    // multiply(p.col(i), p.col(j)), and old coordinates convert to new ones via q.
    std::vector<Scalar> structure(static_cast<size_t>(n) * n * n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = apply(k, *q, a->multiply(p.col(i), p.col(j)));
            for (int l = 0; l < n; ++l)
                structure[(static_cast<size_t>(i) * n + j) * n + l] = prod[l];
        }
    return make_algebra(a->field_spec(), n, std::move(structure), apply(k, *q, a->unit));
}

namespace {

AlgebraPtr base_algebra(Rng& rng, const FieldSpec& fs, int max_dim, bool allow_product) {
    Field k(fs);
    for (int attempt = 0; attempt < 32; ++attempt) {
        switch (rng.below(allow_product ? 5 : 4)) {
            case 0: {  // full matrix algebra
                int n = 1;
                while ((n + 1) * (n + 1) <= max_dim) ++n;
                n = static_cast<int>(rng.range(1, n));
                return make_matrix_full(fs, n);
            }
            case 1: {  // upper triangular
                int n = 1;
                while ((n + 1) * (n + 2) / 2 <= max_dim) ++n;
                n = static_cast<int>(rng.range(1, n));
                return make_upper_triangular(fs, n);
            }
            case 2: {  // truncated polynomial
                const int d = static_cast<int>(rng.range(1, std::min(max_dim, 4)));
                return make_truncated_polynomial(fs, rng.vector(k, d));
            }
            case 3: {  // cyclic group algebra
                const int m = static_cast<int>(rng.range(1, std::min(max_dim, 6)));
                return make_group_algebra_cyclic(fs, m);
            }
            default: {  // product of two smaller draws
                if (max_dim < 2) break;
                const int d1 = static_cast<int>(rng.range(1, max_dim - 1));
                return make_product_algebra(base_algebra(rng, fs, d1, false),
                                            base_algebra(rng, fs, max_dim - d1, false));
            }
        }
    }
    return make_truncated_polynomial(fs, Vec{Scalar(0)});  // k itself
}

}  // namespace

AlgebraPtr random_algebra(Rng& rng, FieldSpec fs, int max_dim) {
    require_input(max_dim >= 1, "random_algebra: max_dim must be >= 1");
    AlgebraPtr a = base_algebra(rng, fs, max_dim, true);
    Matrix p = random_invertible(rng, a->field(), a->dim);
    return change_basis(a, p);
}

std::vector<LeftIdeal> random_ideals(Rng& rng, const AlgebraPtr& a, int count,
                                     bool allow_unit) {
    require_input(count >= 0, "random_ideals: negative count");
    const Field& k = a->field();
    std::vector<LeftIdeal> picked;
    for (int attempt = 0; attempt < 8 * count && static_cast<int>(picked.size()) < count;
         ++attempt) {
        const int gens = 1 + static_cast<int>(rng.below(2));
        std::vector<Vec> g;
        for (int i = 0; i < gens; ++i) g.push_back(rng.vector(k, a->dim));
        LeftIdeal cand = left_ideal_closure(a, std::move(g));
        if (cand.dim() == 0) continue;
        if (cand.dim() == a->dim && !allow_unit) continue;
        bool dup = false;
        for (const auto& prev : picked) dup = dup || ideals_equal(prev, cand);
        if (dup) continue;
        picked.push_back(std::move(cand));
    }
    if (picked.empty() && count > 0) picked.push_back(zero_ideal(a));
    return picked;
}

ModulePtr random_module(Rng& rng, const AlgebraPtr& a, int max_dim) {
    require_input(max_dim >= 0, "random_module: negative max_dim");
    const Field& k = a->field();
    ModulePtr reg = regular_module(a);
    for (int attempt = 0; attempt < 32; ++attempt) {
        ModulePtr base = rng.coin() ? reg : direct_sum_module(reg, reg);
        const int nvec = 1 + static_cast<int>(rng.below(2));
        std::vector<Vec> vecs;
        for (int i = 0; i < nvec; ++i) vecs.push_back(rng.vector(k, base->dim));
        Subspace sub = generated_submodule(base, vecs);
        ModulePtr cand = rng.coin() ? submodule_module(base, sub).module
                                    : quotient_module(base, sub).module;
        if (cand->dim <= max_dim) return cand;
    }
    return zero_module(a);
}

FunctorPtr random_functor(Rng& rng, const BPtr& b, int summands, int max_total_dim) {
    require_input(summands >= 1, "random_functor: need at least one summand");
    const int m = static_cast<int>(b->objects.size());
    require_input(m >= 1, "random_functor: empty subcategory");
    auto random_sum = [&]() {
        FunctorPtr f = representable_functor(b, static_cast<int>(rng.below(m)));
        for (int i = 1; i < summands; ++i)
            f = functor_direct_sum(f, representable_functor(b, static_cast<int>(rng.below(m))));
        return f;
    };
    FunctorPtr fallback;
    for (int attempt = 0; attempt < 8; ++attempt) {
        FunctorPtr x = random_sum();
        FunctorPtr z = random_sum();
        NatTrans theta = random_nat(rng, nat_space(x, z));
        FunctorPtr cand = rng.coin() ? functor_kernel(theta).functor
                                     : functor_cokernel(theta).functor;
        int total = 0;
        for (int d : cand->dims) total += d;
        if (total <= max_total_dim) return cand;
        if (!fallback) fallback = cand;
    }
    return fallback ? fallback : zero_functor(b);
}

NatTrans random_nat(Rng& rng, const NatBasis& basis) {
    const Field& k = basis.source->base->algebra->field();
    Vec combo(static_cast<size_t>(basis.dim()), Scalar(0));
    for (auto& c : combo) c = rng.scalar(k);
    if (basis.dim() == 0) {
        // Only the zero transformation exists; build it with the right shapes.
        std::vector<Matrix> comps;
        const int m = static_cast<int>(basis.source->dims.size());
        for (int s = 0; s < m; ++s)
            comps.emplace_back(basis.target->dims[s], basis.source->dims[s]);
        return NatTrans{basis.source, basis.target, std::move(comps)};
    }
    Vec flat(static_cast<size_t>(basis.space.ambient), Scalar(0));
    for (int i = 0; i < basis.dim(); ++i) {
        const Vec row = basis.space.row(i);
        for (int j = 0; j < basis.space.ambient; ++j)
            flat[j] = k.add(flat[j], k.mul(combo[i], row[j]));
    }
    return nat_from_vector(basis.source, basis.target, flat);
}

namespace {

// Shared sweep skeleton: draw an instance, run the per-iteration audit, record
// one summarized check. The witness of a failing iteration is the list of
// failing sub-checks, so a single report line is enough to reproduce (the seed
// plus the iteration index pin the whole draw).
template <typename Audit>
AuditReport fleet_sweep(const char* subject, const char* anchor, const FleetBudget& budget,
                        Audit&& audit) {
    require_input(budget.count >= 1, std::string(subject) + ": count must be at least 1");
    require_input(budget.max_algebra_dim >= 1,
                  std::string(subject) + ": max algebra dimension must be at least 1");
    require_input(budget.max_ideals >= 1, std::string(subject) + ": need at least one ideal");
    require_input(budget.max_module_dim >= 0,
                  std::string(subject) + ": negative module dimension cap");

    AuditReport rep;
    rep.instance = "random-fleet";
    rep.subject = subject;
    rep.fact("count", budget.count);
    rep.fact("max_algebra_dim", budget.max_algebra_dim);
    rep.fact("max_ideals", budget.max_ideals);
    rep.fact("max_module_dim", budget.max_module_dim);
    rep.fact("seed", budget.seed);
    rep.fact("field", budget.field ? Json(field_spec_tag(*budget.field)) : Json("alternating"));

    Rng rng(budget.seed);
    int failures = 0;
    for (int t = 0; t < budget.count; ++t) {
        const FieldSpec fs = budget.field ? *budget.field
                             : (t % 2 == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(5));
        const AlgebraPtr a = random_algebra(rng, fs, budget.max_algebra_dim);
        const int want = 1 + static_cast<int>(rng.below(std::uint64_t(budget.max_ideals)));
        std::vector<LeftIdeal> ideals = random_ideals(rng, a, want);
        if (ideals.empty()) ideals.push_back(zero_ideal(a));
        const BPtr b = build_subcategory(a, std::move(ideals));
        const FunctorPtr f = random_functor(rng, b, budget.functor_summands);
        const ModulePtr v = random_module(rng, a, budget.max_module_dim);

        const AuditReport one = audit(b, f, v);
        Json data{{"field", field_spec_tag(fs)},
                  {"algebra_dim", a->dim},
                  {"ideals", int(b->ideals.size())},
                  {"functor_dims", f->dims},
                  {"module_dim", v->dim}};
        if (one.all_passed()) {
            rep.pass("instance-" + std::to_string(t), anchor, std::move(data));
        } else {
            ++failures;
            Json witness = Json::array();
            for (const auto& c : one.checks)
                if (c.verdict == Verdict::Fail) witness.push_back(c.to_json());
            rep.fail("instance-" + std::to_string(t), anchor, std::move(witness), std::move(data));
        }
    }
    rep.fact("failures", failures);
    return rep;
}

}  // namespace

AuditReport adjunction_fleet(const FleetBudget& budget) {
    return fleet_sweep("adjunction-fleet", "adjunction-dimension-identity", budget,
                       [](const BPtr& b, const FunctorPtr& f, const ModulePtr& v) {
                           return adjunction_dim_check(b, f, v);
                       });
}

AuditReport triangle_fleet(const FleetBudget& budget) {
    return fleet_sweep("triangle-fleet", "triangle-identities", budget,
                       [](const BPtr& b, const FunctorPtr& f, const ModulePtr& v) {
                           return triangle_audit(b, f, v);
                       });
}

}  // namespace yoneda
