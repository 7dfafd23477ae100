#include "yoneda/matrix.hpp"

namespace yoneda {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::row(int r) const {
    return Vec(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols);
}

Vec Matrix::col(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(int c, const Vec& v) {
    for (int r = 0; r < rows; ++r) (*this)(r, c) = v[r];
}

Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y) {
    internal_check(x.cols == y.rows, "mat_mul: shape mismatch");
    Matrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const Scalar& f = x(i, j);
            if (f.is_zero()) continue;
            for (int c = 0; c < y.cols; ++c) {
                const Scalar& g = y(j, c);
                if (g.is_zero()) continue;
                out(i, c) = k.add(out(i, c), k.mul(f, g));
            }
        }
    return out;
}

Matrix mat_add(const Field& k, const Matrix& x, const Matrix& y) {
    internal_check(x.rows == y.rows && x.cols == y.cols, "mat_add: shape mismatch");
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = k.add(x.a[i], y.a[i]);
    return out;
}

Matrix mat_sub(const Field& k, const Matrix& x, const Matrix& y) {
    internal_check(x.rows == y.rows && x.cols == y.cols, "mat_sub: shape mismatch");
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = k.sub(x.a[i], y.a[i]);
    return out;
}

Matrix mat_scale(const Field& k, const Scalar& c, const Matrix& x) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = k.mul(c, x.a[i]);
    return out;
}

Matrix transpose(const Matrix& x) {
    Matrix out(x.cols, x.rows);
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c) out(c, r) = x(r, c);
    return out;
}

bool is_zero_matrix(const Matrix& x) {
    for (const auto& v : x.a)
        if (!v.is_zero()) return false;
    return true;
}

Vec apply(const Field& k, const Matrix& m, const Vec& v) {
    internal_check(int(v.size()) == m.cols, "apply: shape mismatch");
    Vec out(m.rows, Scalar(0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            if (m(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] = k.add(out[r], k.mul(m(r, c), v[c]));
        }
    return out;
}

Vec vec_add(const Field& k, const Vec& x, const Vec& y) {
    internal_check(x.size() == y.size(), "vec_add: shape mismatch");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = k.add(x[i], y[i]);
    return out;
}

Vec vec_sub(const Field& k, const Vec& x, const Vec& y) {
    internal_check(x.size() == y.size(), "vec_sub: shape mismatch");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = k.sub(x[i], y[i]);
    return out;
}

Vec vec_scale(const Field& k, const Scalar& c, const Vec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = k.mul(c, x[i]);
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vectorize(const Matrix& m) { return m.a; }

Matrix unvectorize(const Vec& v, int rows, int cols) {
    internal_check(int(v.size()) == rows * cols, "unvectorize: shape mismatch");
    Matrix m(rows, cols);
    m.a = v;
    return m;
}

RrefResult rref(const Field& k, Matrix m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar piv_inv = k.inv(m(r, c));
        for (int j = c; j < m.cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = k.mul(piv_inv, m(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Scalar f = m(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < m.cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

Subspace subspace_row_space(const Field& k, int ambient, const Matrix& rows) {
    internal_check(rows.cols == ambient || rows.rows == 0, "subspace: ambient mismatch");
    Matrix padded = rows.rows == 0 ? Matrix(0, ambient) : rows;
    RrefResult r = rref(k, padded);
    Matrix basis(r.rank, ambient);
    for (int i = 0; i < r.rank; ++i)
        for (int c = 0; c < ambient; ++c) basis(i, c) = r.mat(i, c);
    return Subspace{ambient, std::move(basis), std::move(r.pivots)};
}

Subspace subspace_span(const Field& k, int ambient, const std::vector<Vec>& vectors) {
    Matrix m(int(vectors.size()), ambient);
    for (int i = 0; i < int(vectors.size()); ++i) {
        internal_check(int(vectors[i].size()) == ambient, "subspace: vector length mismatch");
        m.set_row(i, vectors[i]);
    }
    return subspace_row_space(k, ambient, m);
}

Subspace subspace_zero(int ambient) { return Subspace{ambient, Matrix(0, ambient), {}}; }

Subspace subspace_full(int ambient) {
    Subspace s{ambient, Matrix::identity(ambient), {}};
    for (int i = 0; i < ambient; ++i) s.pivots.push_back(i);
    return s;
}

Subspace subspace_sum(const Field& k, const Subspace& x, const Subspace& y) {
    internal_check(x.ambient == y.ambient, "subspace_sum: ambient mismatch");
    Matrix stacked(x.dim() + y.dim(), x.ambient);
    for (int i = 0; i < x.dim(); ++i) stacked.set_row(i, x.basis.row(i));
    for (int i = 0; i < y.dim(); ++i) stacked.set_row(x.dim() + i, y.basis.row(i));
    return subspace_row_space(k, x.ambient, stacked);
}

// Reduce v against the RREF basis; the remainder is zero exactly when v is in the span.
static Vec reduce_against(const Field& k, const Subspace& s, Vec v) {
    for (int i = 0; i < s.dim(); ++i) {
        const Scalar& f = v[s.pivots[i]];
        if (f.is_zero()) continue;
        Scalar c = f; // copy: v mutates below
        for (int j = 0; j < s.ambient; ++j) {
            const Scalar& b = s.basis(i, j);
            if (!b.is_zero()) v[j] = k.sub(v[j], k.mul(c, b));
        }
    }
    return v;
}

bool subspace_contains(const Field& k, const Subspace& s, const Vec& v) {
    internal_check(int(v.size()) == s.ambient, "subspace_contains: length mismatch");
    return is_zero_vec(reduce_against(k, s, v));
}

bool subspace_leq(const Field& k, const Subspace& x, const Subspace& y) {
    for (int i = 0; i < x.dim(); ++i)
        if (!subspace_contains(k, y, x.basis.row(i))) return false;
    return true;
}

Vec coords_in_subspace(const Field& k, const Subspace& s, const Vec& v) {
    Vec coords(s.dim());
    for (int i = 0; i < s.dim(); ++i) coords[i] = v[s.pivots[i]];
    Vec rebuilt(s.ambient, Scalar(0));
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.ambient; ++j)
            if (!s.basis(i, j).is_zero())
                rebuilt[j] = k.add(rebuilt[j], k.mul(coords[i], s.basis(i, j)));
    internal_check(rebuilt == v, "coords_in_subspace: vector not in subspace");
    return coords;
}

Subspace kernel(const Field& k, const Matrix& m) {
    RrefResult r = rref(k, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols, Scalar(0));
        v[f] = 1;
        for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = k.neg(r.mat(i, f));
        basis.push_back(std::move(v));
    }
    // re-reduce: the standard free-variable basis is not itself in RREF
    return subspace_span(k, m.cols, basis);
}

std::optional<Vec> solve(const Field& k, const Matrix& m, const Vec& b) {
    internal_check(int(b.size()) == m.rows, "solve: rhs length mismatch");
    Matrix aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug(r, c) = m(r, c);
        aug(r, m.cols) = b[r];
    }
    RrefResult r = rref(k, aug);
    for (int i = 0; i < r.rank; ++i)
        if (r.pivots[i] == m.cols) return std::nullopt;
    Vec x(m.cols, Scalar(0));
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.mat(i, m.cols);
    return x;
}

std::optional<Matrix> inverse(const Field& k, const Matrix& m) {
    internal_check(m.rows == m.cols, "inverse: matrix must be square");
    const int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = k.one();
    }
    RrefResult red = rref(k, aug);
    for (int i = 0; i < n; ++i)
        if (i >= red.rank || red.pivots[i] != i) return std::nullopt;
    Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = red.mat(r, n + c);
    return out;
}

Matrix tensor_product(const Field& k, const Matrix& m, const Matrix& n) {
    Matrix out(m.rows * n.rows, m.cols * n.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int kk = 0; kk < m.cols; ++kk) {
            const Scalar& f = m(i, kk);
            if (f.is_zero()) continue;
            for (int j = 0; j < n.rows; ++j)
                for (int l = 0; l < n.cols; ++l) {
                    const Scalar& g = n(j, l);
                    if (g.is_zero()) continue;
                    out(i * n.rows + j, kk * n.cols + l) = k.mul(f, g);
                }
        }
    return out;
}

QuotientSpace quotient_of(const Field& k, int ambient, const Subspace& killed) {
    internal_check(killed.ambient == ambient, "quotient_of: ambient mismatch");
    std::vector<bool> is_pivot(ambient, false);
    for (int c : killed.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    int q = int(free_cols.size());

    Matrix section(ambient, q);
    for (int j = 0; j < q; ++j) section(free_cols[j], j) = 1;

    // projection of e_c: reduce e_c modulo the killed subspace, read off free coords
    Matrix projection(q, ambient);
    for (int j = 0; j < q; ++j) projection(j, free_cols[j]) = 1;
    for (int i = 0; i < killed.dim(); ++i) {
        int pc = killed.pivots[i];
        for (int j = 0; j < q; ++j)
            projection(j, pc) = k.neg(killed.basis(i, free_cols[j]));
    }
    return QuotientSpace{ambient, killed, std::move(projection), std::move(section)};
}

} // namespace yoneda
