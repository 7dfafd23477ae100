#pragma once

#include <optional>
#include <vector>

#include "yoneda/field.hpp"

namespace yoneda {

using Vec = std::vector<Scalar>;

// Dense row-major matrix. Vectorization of a matrix is always row-major:
// vec(M)[r*cols + c] = M(r,c). The Kronecker product below uses the matching
// composite index (i,j) -> i*colsN + j on columns and i*rowsN + j on rows, so
// vec(A*X*B) = kron(A, B^T) * vec(X).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Scalar(0)) {}

    Scalar& operator()(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const Scalar& operator()(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static Matrix identity(int n);
    static Matrix zero(int r, int c) { return Matrix(r, c); }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);
    void set_col(int c, const Vec& v);

    bool operator==(const Matrix&) const = default;
};

Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y);
Matrix mat_add(const Field& k, const Matrix& x, const Matrix& y);
Matrix mat_sub(const Field& k, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Field& k, const Scalar& c, const Matrix& x);
Matrix transpose(const Matrix& x);
bool is_zero_matrix(const Matrix& x);
Vec apply(const Field& k, const Matrix& m, const Vec& v); // m * v

Vec vec_add(const Field& k, const Vec& x, const Vec& y);
Vec vec_sub(const Field& k, const Vec& x, const Vec& y);
Vec vec_scale(const Field& k, const Scalar& c, const Vec& x);
bool is_zero_vec(const Vec& v);

// Row-major flattening and its inverse.
Vec vectorize(const Matrix& m);
Matrix unvectorize(const Vec& v, int rows, int cols);

struct RrefResult {
    Matrix mat;
    std::vector<int> pivots; // pivot column per pivot row, strictly increasing
    int rank = 0;
};

RrefResult rref(const Field& k, Matrix m);

// Canonical subspace of k^ambient: basis rows are in reduced row echelon form, so two
// equal subspaces have identical representations (and operator== is meaningful).
struct Subspace {
    int ambient = 0;
    Matrix basis;             // dim x ambient, RREF, no zero rows
    std::vector<int> pivots;  // pivot columns of basis

    int dim() const { return basis.rows; }
    Vec row(int r) const { return basis.row(r); }
    bool operator==(const Subspace&) const = default;
};

Subspace subspace_span(const Field& k, int ambient, const std::vector<Vec>& vectors);
Subspace subspace_row_space(const Field& k, int ambient, const Matrix& rows);
Subspace subspace_zero(int ambient);
Subspace subspace_full(int ambient);
Subspace subspace_sum(const Field& k, const Subspace& x, const Subspace& y);
bool subspace_contains(const Field& k, const Subspace& s, const Vec& v);
bool subspace_leq(const Field& k, const Subspace& x, const Subspace& y);

// Coordinates of v in the RREF basis (reads pivot positions); throws InternalCheckError
// if v is not in the subspace.
Vec coords_in_subspace(const Field& k, const Subspace& s, const Vec& v);

// Solution space of m*x = 0, returned as a canonical Subspace of k^cols.
Subspace kernel(const Field& k, const Matrix& m);

// Particular solution of m*x = b with all free variables set to zero; nullopt when
// the system is inconsistent.
std::optional<Vec> solve(const Field& k, const Matrix& m, const Vec& b);

// Two-sided inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Field& k, const Matrix& m);

Matrix tensor_product(const Field& k, const Matrix& m, const Matrix& n);

// k^ambient / killed, with a fixed linear section. The section picks the non-pivot
// coordinates of `killed` as representatives, so projection * section = identity and
// kernel(projection) = killed.
struct QuotientSpace {
    int ambient = 0;
    Subspace killed;
    Matrix projection; // dim x ambient
    Matrix section;    // ambient x dim

    int dim() const { return projection.rows; }
};

QuotientSpace quotient_of(const Field& k, int ambient, const Subspace& killed);

} // namespace yoneda
