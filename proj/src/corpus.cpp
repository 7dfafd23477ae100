#include "yoneda/corpus.hpp"

#include <initializer_list>

#include "yoneda/errors.hpp"

namespace yoneda {

namespace {

// Structure constant table with c(i,j,l) at ((i*dim)+j)*dim + l.
struct ConstTable {
    int dim;
    Vec c;
    explicit ConstTable(int d) : dim(d), c(static_cast<size_t>(d) * d * d, Scalar(0)) {}
    Scalar& at(int i, int j, int l) {
        return c[(static_cast<size_t>(i) * dim + j) * dim + l];
    }
};

}  // namespace

AlgebraPtr make_matrix_full(const FieldSpec& fs, int n) {
    require_input(n >= 1, "make_matrix_full: n must be >= 1");
    const int dim = n * n;
    ConstTable t(dim);
    // E_{ab} * E_{cd} = delta_{bc} E_{ad}
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (b == c) t.at(a * n + b, c * n + d, a * n + d) = Scalar(1);
    Vec unit(dim, Scalar(0));
    for (int a = 0; a < n; ++a) unit[a * n + a] = Scalar(1);
    return make_algebra(fs, dim, t.c, unit);
}

AlgebraPtr make_upper_triangular(const FieldSpec& fs, int n) {
    require_input(n >= 1, "make_upper_triangular: n must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) pairs.emplace_back(r, c);
    const int dim = static_cast<int>(pairs.size());
    auto index_of = [&](int r, int c) {
        for (int i = 0; i < dim; ++i)
            if (pairs[i].first == r && pairs[i].second == c) return i;
        internal_check(false, "make_upper_triangular: bad index");
        return -1;
    };
    ConstTable t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (b == c) t.at(i, j, index_of(a, d)) = Scalar(1);
        }
    Vec unit(dim, Scalar(0));
    for (int r = 0; r < n; ++r) unit[index_of(r, r)] = Scalar(1);
    return make_algebra(fs, dim, t.c, unit);
}

AlgebraPtr make_truncated_polynomial(const FieldSpec& fs, const Vec& low) {
    const int d = static_cast<int>(low.size());
    require_input(d >= 1, "make_truncated_polynomial: degree must be >= 1");
    Field k(fs);
    // Precompute the class of x^e for e < 2d - 1 by repeated reduction.
    std::vector<Vec> power(static_cast<size_t>(2 * d - 1), Vec(d, Scalar(0)));
    for (int e = 0; e < d; ++e) power[e][e] = k.one();
    for (int e = d; e < 2 * d - 1; ++e) {
        // x^e = x * x^{e-1}: shift up, then reduce the overflow via
        // x^d = sum_i low_i x^i.
        const Vec& prev = power[e - 1];
        Vec cur(d, Scalar(0));
        for (int i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
        const Scalar top = prev[d - 1];
        if (!k.is_zero(top))
            for (int i = 0; i < d; ++i)
                cur[i] = k.add(cur[i], k.mul(top, k.canon(low[i])));
        power[e] = cur;
    }
    ConstTable t(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) t.at(i, j, l) = power[i + j][l];
    Vec unit(d, Scalar(0));
    unit[0] = k.one();
    return make_algebra(fs, d, t.c, unit);
}

AlgebraPtr make_group_algebra_cyclic(const FieldSpec& fs, int m) {
    require_input(m >= 1, "make_group_algebra_cyclic: m must be >= 1");
    ConstTable t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t.at(i, j, (i + j) % m) = Scalar(1);
    Vec unit(m, Scalar(0));
    unit[0] = Scalar(1);
    return make_algebra(fs, m, t.c, unit);
}

AlgebraPtr make_product_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
    require_input(x->field_spec() == y->field_spec(),
                  "make_product_algebra: factors must share a field");
    const int dx = x->dim;
    const int dy = y->dim;
    const int dim = dx + dy;
    ConstTable t(dim);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dx; ++j)
            for (int l = 0; l < dx; ++l) t.at(i, j, l) = x->c(i, j, l);
    for (int i = 0; i < dy; ++i)
        for (int j = 0; j < dy; ++j)
            for (int l = 0; l < dy; ++l) t.at(dx + i, dx + j, dx + l) = y->c(i, j, l);
    Vec unit(dim, Scalar(0));
    for (int i = 0; i < dx; ++i) unit[i] = x->unit[i];
    for (int i = 0; i < dy; ++i) unit[dx + i] = y->unit[i];
    return make_algebra(x->field_spec(), dim, t.c, unit);
}

namespace {

Vec ints(const Field& k, std::initializer_list<long long> xs) {
    Vec v;
    v.reserve(xs.size());
    for (long long x : xs) v.push_back(k.canon(Scalar(x)));
    return v;
}

// Column-vector module k^n of M_n: each matrix unit acts as itself.
ModulePtr natural_module(const AlgebraPtr& a, int n) {
    std::vector<Matrix> action(static_cast<size_t>(a->dim), Matrix(n, n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) action[r * n + c](r, c) = Scalar(1);
    return make_module(a, n, std::move(action));
}

// One-dimensional module of upper_triangular(2) on which the idempotent at
// `idx` (0 = E11, 2 = E22) acts as 1 and everything else as 0.
ModulePtr t2_simple(const AlgebraPtr& a, int idx) {
    std::vector<Matrix> action(3, Matrix(1, 1));
    action[idx](0, 0) = Scalar(1);
    return make_module(a, 1, std::move(action));
}

void add_module(Instance& inst, const char* name, ModulePtr m) {
    inst.modules.push_back({name, std::move(m)});
}

void add_ideal(Instance& inst, const char* name, LeftIdeal i) {
    inst.ideals.push_back({name, std::move(i)});
}

void add_flat(Instance& inst, const char* name, std::vector<std::string> ideals) {
    inst.families.push_back({name, false, std::move(ideals), {}});
}

void add_blocks(Instance& inst, const char* name, std::vector<std::vector<std::string>> blocks) {
    inst.families.push_back({name, true, {}, std::move(blocks)});
}

void expect(Instance& inst, const char* key, Json value, const char* provenance) {
    inst.expected.push_back({key, std::move(value), provenance});
}

// Builds the subcategory and re-derives every expected fact. A mismatch here
// means the hand derivation and the engine disagree, which is a defect in one
// of them, never in user input.
Instance finish(Instance inst) {
    if (!inst.ideals.empty()) {
        std::vector<LeftIdeal> table;
        for (const auto& i : inst.ideals) table.push_back(i.ideal);
        inst.subcategory = build_subcategory(inst.algebra, std::move(table));
    }
    const AuditReport rep = check_expected_facts(inst);
    for (const auto& c : rep.checks)
        internal_check(c.verdict != Verdict::Fail, "corpus '" + inst.name +
                                                       "': expected fact failed: " + c.name +
                                                       ", data " + c.data.dump());
    return inst;
}

Instance matrix_full_2_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    inst.algebra = make_matrix_full(fs, 2);
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "column", left_ideal_closure(a, {a->basis_vec(3)}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "natural", natural_module(a, 2));
    add_module(inst, "a_mod_column", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "column_only", {"column"});
    expect(inst, "algebra_dim", 4, "2x2 matrix units E11, E12, E21, E22");
    expect(inst, "ideal_dim:column", 2, "A*E22 = span{E12, E22}");
    expect(inst, "quotient_dim:column", 2, "4 - 2");
    expect(inst, "normalizer_dim:column", 3, "I*a in I forces a21 = 0");
    expect(inst, "eigenring_dim:column", 1, "N(I) = {a21 = 0} has dim 3, minus dim I");
    expect(inst, "module_dim:natural", 2, "column vectors");
    expect(inst, "invariant_dim:column:natural", 1,
           "E12 v = E22 v = 0 forces v in span{e1}");
    expect(inst, "invariant_dim:column:regular", 2,
           "E12 a = E22 a = 0 iff the second row of a vanishes");
    expect(inst, "simplicity:natural", "Simple", "k^2 has no proper invariant line under M_2");
    expect(inst, "simplicity:a_mod_column", "Simple", "A/I is isomorphic to the natural module");
    expect(inst, "hom_dim:natural:natural", 1, "endomorphisms commuting with all of M_2 are scalars");
    expect(inst, "counit_label:natural", "iso",
           "A * span{e1} = k^2 gives epi; realization has matching dimension");
    expect(inst, "counit_label:regular", "iso",
           "A * {zero second row} = A gives epi; dim identity forces iso");
    expect(inst, "counit_label:zero", "iso", "zero to zero");
    return inst;
}

Instance matrix_full_3_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    inst.algebra = make_matrix_full(fs, 3);
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "column", left_ideal_closure(a, {a->basis_vec(8)}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "natural", natural_module(a, 3));
    add_module(inst, "a_mod_column", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "zero", zero_module(a));
    expect(inst, "algebra_dim", 9, "3x3 matrix units");
    expect(inst, "ideal_dim:column", 3, "A*E33 = span{E13, E23, E33}");
    expect(inst, "quotient_dim:column", 6, "9 - 3");
    expect(inst, "normalizer_dim:column", 7, "I*a in I forces a31 = a32 = 0");
    expect(inst, "eigenring_dim:column", 4, "dim N(I) - dim I = 7 - 3; S is a copy of M_2");
    expect(inst, "invariant_dim:column:natural", 2,
           "Ei3 v = 0 forces v3 = 0, leaving span{e1, e2}");
    expect(inst, "invariant_dim:column:regular", 6, "Ei3 a = 0 iff the third row of a vanishes");
    expect(inst, "simplicity:a_mod_column", "NotSimple",
           "A/I is two copies of the natural module");
    expect(inst, "s_freeness_rank:column", Json(),
           "dim A/I = 6 is not a multiple of dim S = 4, so no free S-basis exists");
    return inst;
}

Instance upper_triangular_2_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    inst.algebra = make_upper_triangular(fs, 2);
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "top", left_ideal_closure(a, {a->basis_vec(0)}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "s1", t2_simple(a, 0));
    add_module(inst, "s2", t2_simple(a, 2));
    add_module(inst, "a_mod_top", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "zero", zero_module(a));
    expect(inst, "algebra_dim", 3, "basis E11, E12, E22");
    expect(inst, "ideal_dim:top", 1, "A*E11 = span{E11}: E12 E11 = E22 E11 = 0");
    expect(inst, "quotient_dim:top", 2, "3 - 1; classes of E12 and E22");
    expect(inst, "eigenring_dim:top", 1, "N(I) = span{E11, E22}, minus dim I");
    expect(inst, "simplicity:a_mod_top", "NotSimple",
           "the class of E12 spans a proper submodule of A/I");
    expect(inst, "s_complement_dim:top", 1, "A/I = S*(1+I) + span{class of E12}");
    expect(inst, "invariant_dim:top:s1", 0, "E11 acts as the identity on s1");
    expect(inst, "invariant_dim:top:s2", 1, "E11 acts as zero on s2");
    expect(inst, "invariant_dim:top:regular", 1, "E11 a = 0 iff a in span{E22}");
    expect(inst, "hom_dim:s1:s2", 0, "distinct one-dimensional characters");
    expect(inst, "hom_dim:s2:s1", 0, "distinct one-dimensional characters");
    expect(inst, "counit_label:s1", "mono-only",
           "Hom(A/I, s1) = s1^I = 0, so the realization is 0 and the counit is 0 -> s1");
    expect(inst, "counit_label:s2", "epi-only",
           "realization is A/I tensor s2^I of dim 2 mapping onto the 1-dim s2");
    expect(inst, "counit_label:regular", "mono-only",
           "image A*E22 = span{E12, E22} has dim 2 inside dim 3; realization has dim 2");
    return inst;
}

Instance truncated_poly_x2_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    const Field k((fs));
    inst.algebra = make_truncated_polynomial(fs, ints(k, {0, 0}));
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "m", left_ideal_closure(a, {a->basis_vec(1)}));
    add_ideal(inst, "m_sq", left_ideal_closure(a, {ints(k, {0, 0})}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "a_mod_m", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "radical", {"m"});
    add_blocks(inst, "m_powers", {{"m", "m_sq"}});
    expect(inst, "algebra_dim", 2, "k[x]/(x^2), basis 1, x");
    expect(inst, "ideal_dim:m", 1, "Ax = span{x}");
    expect(inst, "ideal_dim:m_sq", 0, "x^2 = 0");
    expect(inst, "quotient_dim:m", 1, "A/Ax");
    expect(inst, "eigenring_dim:m", 1, "commutative, so S = A/Ax");
    expect(inst, "invariant_dim:m:regular", 1, "x*a = 0 iff a in span{x}");
    expect(inst, "simplicity:a_mod_m", "Simple", "one-dimensional");
    expect(inst, "weight:radical:regular", false,
           "the x-annihilated line span{x} is a proper subspace");
    expect(inst, "weight_sum_dim:radical:regular", 1, "span{x}");
    expect(inst, "weight:radical:a_mod_m", true, "x acts as zero on A/Ax");
    expect(inst, "genweight:m_powers:regular", true,
           "x acts nilpotently, so the x^2-annihilator is everything");
    expect(inst, "genweight_piece_dims:m_powers:regular", Json::array({2}),
           "single block; V^{m_sq} = V");
    expect(inst, "power_block_dims:m", Json::array({1, 0}),
           "Ax = span{x}, then (Ax)^2 = 0 and the chain stabilizes");
    expect(inst, "quotient_dim:m_sq", 2, "A/0 = A");
    expect(inst, "invariant_dim:m_sq:regular", 2, "the zero ideal annihilates everything");
    expect(inst, "counit_label:regular", "iso",
           "A/0 = A is an object of the subcategory, which collapses the realization "
           "to A tensor_A V = V");
    expect(inst, "counit_label:a_mod_m", "iso",
           "A/0 = A is an object of the subcategory, which collapses the realization "
           "to A tensor_A V = V");
    return inst;
}

Instance truncated_poly_x2x1_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    const Field k((fs));
    inst.algebra = make_truncated_polynomial(fs, ints(k, {0, 0, 1}));
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "ax", left_ideal_closure(a, {a->basis_vec(1)}));
    add_ideal(inst, "ax_sq", left_ideal_closure(a, {a->basis_vec(2)}));
    add_ideal(inst, "ax_minus_1", left_ideal_closure(a, {ints(k, {-1, 1, 0})}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "a_mod_ax", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "a_mod_ax_sq", cyclic_module(inst.ideals[1].ideal).module);
    add_module(inst, "a_mod_ax_minus_1", cyclic_module(inst.ideals[2].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "maximal", {"ax", "ax_minus_1"});
    add_blocks(inst, "blocks", {{"ax", "ax_sq"}, {"ax_minus_1"}});
    expect(inst, "algebra_dim", 3, "k[x]/(x^2(x-1)), basis 1, x, x^2");
    expect(inst, "ideal_dim:ax", 2, "Ax = span{x, x^2}");
    expect(inst, "ideal_dim:ax_sq", 1, "Ax^2 = span{x^2}: x*x^2 = x^3 = x^2");
    expect(inst, "ideal_dim:ax_minus_1", 2, "A(x-1) = span{x-1, x^2-x}");
    expect(inst, "quotient_dim:ax", 1, "3 - 2");
    expect(inst, "quotient_dim:ax_sq", 2, "3 - 1");
    expect(inst, "quotient_dim:ax_minus_1", 1, "3 - 2");
    expect(inst, "eigenring_dim:ax", 1, "commutative, so S = A/I");
    expect(inst, "eigenring_dim:ax_sq", 2, "commutative, so S = A/I");
    expect(inst, "invariant_dim:ax:regular", 1, "x*a = 0 iff a in span{x - x^2}");
    expect(inst, "invariant_dim:ax_sq:regular", 2,
           "x^2*(c0 + c1 x + c2 x^2) = (c0+c1+c2) x^2, so the coefficient sum vanishes");
    expect(inst, "invariant_dim:ax_minus_1:regular", 1, "(x-1)*a = 0 iff a in span{x^2}");
    expect(inst, "hom_dim:a_mod_ax:a_mod_ax_sq", 1,
           "the x-annihilator of A/Ax^2 is span{class of x}");
    expect(inst, "hom_dim:a_mod_ax_sq:a_mod_ax", 1, "x acts as zero on A/Ax");
    expect(inst, "hom_dim:a_mod_ax:a_mod_ax_minus_1", 0, "supported at different points");
    expect(inst, "weight:maximal:regular", false, "1 + 1 = 2 < 3");
    expect(inst, "weight_sum_dim:maximal:regular", 2, "span{x - x^2} + span{x^2}");
    expect(inst, "genweight:blocks:regular", true, "2 + 1 = 3");
    expect(inst, "genweight_piece_dims:blocks:regular", Json::array({2, 1}),
           "x^2-annihilator has dim 2; (x-1)-annihilator has dim 1");
    expect(inst, "power_block_dims:ax", Json::array({2, 1}),
           "Ax, then Ax^2 = span{x^2}, which is idempotent under further powers");
    expect(inst, "weight:maximal:a_mod_ax", true, "x acts as zero");
    expect(inst, "genweight:blocks:a_mod_ax_sq", true, "x^2 kills A/Ax^2");
    expect(inst, "weight:maximal:a_mod_ax_sq", false,
           "only span{class of x} is x-annihilated and nothing is (x-1)-annihilated");
    return inst;
}

Instance split_idempotent_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    const Field k((fs));
    inst.algebra = make_truncated_polynomial(fs, ints(k, {0, 1}));
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "ax", left_ideal_closure(a, {a->basis_vec(1)}));
    add_ideal(inst, "ax_minus_1", left_ideal_closure(a, {ints(k, {-1, 1})}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "a_mod_ax", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "a_mod_ax_minus_1", cyclic_module(inst.ideals[1].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "maximal", {"ax", "ax_minus_1"});
    expect(inst, "algebra_dim", 2, "k[x]/(x^2-x), basis 1, x");
    expect(inst, "ideal_dim:ax", 1, "Ax = span{x}: x*x = x");
    expect(inst, "ideal_dim:ax_minus_1", 1, "A(x-1) = span{x-1}");
    expect(inst, "quotient_dim:ax", 1, "2 - 1");
    expect(inst, "quotient_dim:ax_minus_1", 1, "2 - 1");
    expect(inst, "eigenring_dim:ax", 1, "commutative, so S = A/I");
    expect(inst, "invariant_dim:ax:regular", 1, "x*(c0 + c1 x) = (c0+c1) x, so a in span{1-x}");
    expect(inst, "invariant_dim:ax_minus_1:regular", 1, "(x-1)*a = 0 iff a in span{x}");
    expect(inst, "weight:maximal:regular", true, "span{1-x} + span{x} = A");
    expect(inst, "weight_sum_dim:maximal:regular", 2, "1 + 1");
    expect(inst, "weight:maximal:a_mod_ax", true, "x acts as zero");
    expect(inst, "weight:maximal:a_mod_ax_minus_1", true, "x acts as one");
    expect(inst, "hom_dim:a_mod_ax:a_mod_ax_minus_1", 0, "x acts as 0 on one and 1 on the other");
    expect(inst, "hom_dim:a_mod_ax_minus_1:a_mod_ax", 0, "x acts as 0 on one and 1 on the other");
    expect(inst, "hom_dim:a_mod_ax:a_mod_ax", 1, "scalars");
    expect(inst, "simplicity:a_mod_ax", "Simple", "one-dimensional");
    expect(inst, "power_block_dims:ax", Json::array({1}),
           "x is idempotent, so Ax^2 = Ax and the chain stabilizes immediately");
    expect(inst, "counit_label:regular", "iso",
           "A = span{1-x} + span{x} is spanned by invariants of the two ideals");
    expect(inst, "counit_label:a_mod_ax", "iso", "one-dimensional fixed module");
    return inst;
}

Instance group_algebra_cyclic_3_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    const Field k((fs));
    inst.algebra = make_group_algebra_cyclic(fs, 3);
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "augmentation", left_ideal_closure(a, {ints(k, {-1, 1, 0})}));
    add_ideal(inst, "norm", left_ideal_closure(a, {ints(k, {1, 1, 1})}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "a_mod_augmentation", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "a_mod_norm", cyclic_module(inst.ideals[1].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "split", {"augmentation", "norm"});
    expect(inst, "algebra_dim", 3, "group algebra of C_3, basis 1, g, g^2");
    expect(inst, "ideal_dim:augmentation", 2, "span{g-1, g^2-g}");
    expect(inst, "ideal_dim:norm", 1, "span{1+g+g^2}; g*(1+g+g^2) = 1+g+g^2");
    expect(inst, "quotient_dim:augmentation", 1, "trivial module");
    expect(inst, "quotient_dim:norm", 2, "3 - 1");
    expect(inst, "eigenring_dim:augmentation", 1, "commutative, so S = A/I");
    expect(inst, "eigenring_dim:norm", 2, "commutative, so S = A/I");
    expect(inst, "invariant_dim:augmentation:regular", 1,
           "(g-1) a = 0 iff a is a multiple of the norm element");
    expect(inst, "invariant_dim:norm:regular", 2,
           "(1+g+g^2) a = (coefficient sum of a)(1+g+g^2)");
    expect(inst, "weight:split:regular", true, "1 + 2 = 3 over a field of characteristic 0");
    expect(inst, "weight_sum_dim:split:regular", 3, "norm line plus coefficient-sum-zero plane");
    expect(inst, "hom_dim:a_mod_augmentation:a_mod_norm", 0,
           "g acts on A/norm with the primitive cube roots as eigenvalues, so no fixed vectors");
    expect(inst, "counit_label:regular", "iso",
           "regular module is a weight module for the split family");
    return inst;
}

Instance group_algebra_cyclic_2_instance(const FieldSpec& fs, const char* name) {
    Instance inst;
    inst.name = name;
    const Field k((fs));
    inst.algebra = make_group_algebra_cyclic(fs, 2);
    const AlgebraPtr& a = inst.algebra;
    add_ideal(inst, "augmentation", left_ideal_closure(a, {ints(k, {-1, 1})}));
    add_ideal(inst, "norm", left_ideal_closure(a, {ints(k, {1, 1})}));
    add_module(inst, "regular", regular_module(a));
    add_module(inst, "a_mod_augmentation", cyclic_module(inst.ideals[0].ideal).module);
    add_module(inst, "a_mod_norm", cyclic_module(inst.ideals[1].ideal).module);
    add_module(inst, "zero", zero_module(a));
    add_flat(inst, "split", {"augmentation", "norm"});
    expect(inst, "algebra_dim", 2, "group algebra of C_2, basis 1, g");
    expect(inst, "ideal_dim:augmentation", 1, "span{g-1}");
    expect(inst, "ideal_dim:norm", 1, "span{1+g}");
    expect(inst, "quotient_dim:augmentation", 1, "trivial module");
    expect(inst, "quotient_dim:norm", 1, "sign module");
    expect(inst, "invariant_dim:augmentation:regular", 1, "(g-1)(1+g) = g^2-1 = 0");
    expect(inst, "invariant_dim:norm:regular", 1, "(1+g)(g-1) = g^2-1 = 0");
    expect(inst, "weight:split:regular", true,
           "1+g and g-1 are independent whenever 2 is invertible");
    expect(inst, "weight_sum_dim:split:regular", 2, "1 + 1");
    expect(inst, "hom_dim:a_mod_augmentation:a_mod_norm", 0,
           "g acts as 1 on one and as -1 on the other");
    expect(inst, "counit_label:regular", "iso",
           "regular module is a weight module for the split family");
    return inst;
}

struct CorpusEntry {
    const char* name;
    Instance (*build)();
};

constexpr CorpusEntry kCorpus[] = {
    {"matrix_full_2",
     [] { return matrix_full_2_instance(FieldSpec::rationals(), "matrix_full_2"); }},
    {"matrix_full_2_f2",
     [] { return matrix_full_2_instance(FieldSpec::prime_field(2), "matrix_full_2_f2"); }},
    {"matrix_full_3",
     [] { return matrix_full_3_instance(FieldSpec::rationals(), "matrix_full_3"); }},
    {"upper_triangular_2",
     [] { return upper_triangular_2_instance(FieldSpec::rationals(), "upper_triangular_2"); }},
    {"upper_triangular_2_f3",
     [] { return upper_triangular_2_instance(FieldSpec::prime_field(3), "upper_triangular_2_f3"); }},
    {"truncated_poly_x2",
     [] { return truncated_poly_x2_instance(FieldSpec::rationals(), "truncated_poly_x2"); }},
    {"truncated_poly_x2x1",
     [] { return truncated_poly_x2x1_instance(FieldSpec::rationals(), "truncated_poly_x2x1"); }},
    {"truncated_poly_x2x1_f3",
     [] {
         return truncated_poly_x2x1_instance(FieldSpec::prime_field(3), "truncated_poly_x2x1_f3");
     }},
    {"split_idempotent",
     [] { return split_idempotent_instance(FieldSpec::rationals(), "split_idempotent"); }},
    {"split_idempotent_f2",
     [] { return split_idempotent_instance(FieldSpec::prime_field(2), "split_idempotent_f2"); }},
    {"split_idempotent_f3",
     [] { return split_idempotent_instance(FieldSpec::prime_field(3), "split_idempotent_f3"); }},
    {"group_algebra_cyclic_3",
     [] { return group_algebra_cyclic_3_instance(FieldSpec::rationals(), "group_algebra_cyclic_3"); }},
    {"group_algebra_cyclic_2_f3",
     [] {
         return group_algebra_cyclic_2_instance(FieldSpec::prime_field(3),
                                                "group_algebra_cyclic_2_f3");
     }},
};

}  // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& e : kCorpus) names.emplace_back(e.name);
    return names;
}

Instance corpus_instance(const std::string& name) {
    for (const auto& e : kCorpus)
        if (name == e.name) return finish(e.build());
    std::string known;
    for (const auto& e : kCorpus) {
        if (!known.empty()) known += ", ";
        known += e.name;
    }
    require_input(false, "corpus: unknown instance '" + name + "'; known instances: " + known);
    return Instance{};
}

}  // namespace yoneda
