#pragma once

// Hand-built reference instances for tests. Construction here is deliberately
// first-principles (explicit product tables, test-local arithmetic) so the library's
// own builders can be checked against them.

#include <vector>

#include "yoneda/algebra.hpp"

namespace fixtures {

using namespace yoneda;

// Full matrix algebra M_n, basis E_{ij} at index i*n+j, E_{ij} E_{kl} = [j==k] E_{il}.
inline AlgebraPtr matrix_algebra(FieldSpec fs, int n) {
    int d = n * n;
    std::vector<Scalar> c(std::size_t(d) * d * d, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) {
                        int a = i * n + j, b = k * n + l, t = i * n + l;
                        c[(std::size_t(a) * d + b) * d + t] = 1;
                    }
    Vec unit(d, Scalar(0));
    for (int i = 0; i < n; ++i) unit[i * n + i] = 1;
    return make_algebra(fs, d, std::move(c), std::move(unit));
}

// Upper-triangular 2x2 matrices, basis (E11, E12, E22).
inline AlgebraPtr upper_triangular2(FieldSpec fs) {
    // product table by hand: rows/cols in basis order, entries as basis vectors
    //   E11*E11=E11  E11*E12=E12  E11*E22=0
    //   E12*E11=0    E12*E12=0    E12*E22=E12
    //   E22*E11=0    E22*E12=0    E22*E22=E22
    std::vector<Scalar> c(27, Scalar(0));
    auto set = [&](int i, int j, int l) { c[(std::size_t(i) * 3 + j) * 3 + l] = 1; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 2, 1);
    set(2, 2, 2);
    return make_algebra(fs, 3, std::move(c), Vec{Scalar(1), Scalar(0), Scalar(1)});
}

// k[x]/(f) for a monic relation f = x^d - (r_0 + r_1 x + ... + r_{d-1} x^{d-1});
// pass the low coefficients r. Basis 1, x, ..., x^{d-1}.
inline AlgebraPtr truncated_polynomial(FieldSpec fs, const std::vector<long long>& low) {
    int d = int(low.size());
    // powers x^0..x^{2d-2} reduced: x^d = sum r_i x^i, computed by shifting
    std::vector<std::vector<Scalar>> pw(2 * d - 1, std::vector<Scalar>(d, Scalar(0)));
    for (int i = 0; i < d; ++i) pw[i][i] = 1;
    for (int e = d; e <= 2 * d - 2; ++e) {
        // x^e = x * x^{e-1}
        std::vector<Scalar> shifted(d + 1, Scalar(0));
        for (int i = 0; i < d; ++i) shifted[i + 1] = pw[e - 1][i];
        for (int i = 0; i < d; ++i) pw[e][i] = shifted[i];
        if (!shifted[d].is_zero())
            for (int i = 0; i < d; ++i) pw[e][i] += shifted[d] * Scalar(low[i]);
    }
    std::vector<Scalar> c(std::size_t(d) * d * d, Scalar(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) c[(std::size_t(i) * d + j) * d + l] = pw[i + j][l];
    Vec unit(d, Scalar(0));
    unit[0] = 1;
    return make_algebra(fs, d, std::move(c), std::move(unit));
}

// Column action of M_2 on k^2: each E_{ij} acts as itself.
inline ModulePtr m2_natural(const AlgebraPtr& m2) {
    std::vector<Matrix> action(4, Matrix(2, 2));
    action[0](0, 0) = 1; // E11
    action[1](0, 1) = 1; // E12
    action[2](1, 0) = 1; // E21
    action[3](1, 1) = 1; // E22
    return make_module(m2, 2, std::move(action));
}

// One-dimensional modules of the upper-triangular algebra: E11 or E22 acts as 1.
inline ModulePtr t2_simple_top(const AlgebraPtr& t2) {
    std::vector<Matrix> action(3, Matrix(1, 1));
    action[0](0, 0) = 1;
    return make_module(t2, 1, std::move(action));
}

inline ModulePtr t2_simple_bottom(const AlgebraPtr& t2) {
    std::vector<Matrix> action(3, Matrix(1, 1));
    action[2](0, 0) = 1;
    return make_module(t2, 1, std::move(action));
}

// Test-local multiplication straight off the structure constants (plain rational
// arithmetic, no Field involvement); used by closure oracles.
inline Vec raw_multiply(const Algebra& a, const Vec& x, const Vec& y) {
    Vec out(a.dim, Scalar(0));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!x[i].is_zero() && !y[j].is_zero())
                for (int l = 0; l < a.dim; ++l) out[l] += x[i] * y[j] * a.c(i, j, l);
    return out;
}

inline Matrix stack_rows(const std::vector<Vec>& rows, int width) {
    Matrix m(int(rows.size()), width);
    for (int i = 0; i < int(rows.size()); ++i) m.set_row(i, rows[i]);
    return m;
}

} // namespace fixtures
