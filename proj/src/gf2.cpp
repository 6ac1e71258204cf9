#include "csurg/gf2.hpp"

namespace csurg {
namespace gf2 {

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    internal_assert(cols_ == o.rows_, "gf2: dimension mismatch in product");
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k)
            if (get(r, k))
                for (int c = 0; c < o.cols(); ++c)
                    if (o.get(k, c))
                        out.flip(r, c);
    return out;
}

bool Matrix::is_zero() const {
    for (auto word : w_)
        if (word)
            return false;
    return true;
}

std::vector<bool> Matrix::apply(const std::vector<bool>& v) const {
    internal_assert(static_cast<int>(v.size()) == cols_, "gf2: vector size mismatch");
    std::vector<bool> out(static_cast<std::size_t>(rows_), false);
    for (int c = 0; c < cols_; ++c)
        if (v[c])
            for (int r = 0; r < rows_; ++r)
                if (get(r, c))
                    out[r] = !out[r];
    return out;
}

int rank(Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        m.swap_rows(r, pivot);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        ++r;
    }
    return r;
}

std::vector<std::vector<bool>> nullspace(const Matrix& a) {
    int nr = a.rows(), nc = a.cols();
    Matrix m = a;
    std::vector<int> pivot_col_of_row;
    std::vector<int> col_pivot_row(nc, -1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (m.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        m.swap_rows(r, p);
        for (int i = 0; i < nr; ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        col_pivot_row[c] = r;
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::vector<std::vector<bool>> basis;
    for (int c = 0; c < nc; ++c) {
        if (col_pivot_row[c] >= 0)
            continue;
        std::vector<bool> v(static_cast<std::size_t>(nc), false);
        v[c] = true;
        for (int cc = 0; cc < nc; ++cc)
            if (col_pivot_row[cc] >= 0 && m.get(col_pivot_row[cc], c))
                v[cc] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<bool>> solve_in_span(const std::vector<std::vector<bool>>& span,
                                               const std::vector<bool>& target) {
    const int n = static_cast<int>(target.size());
    const int k = static_cast<int>(span.size());
    // Augmented system [span | target] solved by elimination on rows = coordinates.
    Matrix m(n, k + 1);
    for (int j = 0; j < k; ++j) {
        internal_assert(static_cast<int>(span[j].size()) == n, "gf2: span vector size mismatch");
        for (int i = 0; i < n; ++i)
            if (span[j][i])
                m.set(i, j, true);
    }
    for (int i = 0; i < n; ++i)
        if (target[i])
            m.set(i, k, true);

    std::vector<int> pivot_row_of_col(k, -1);
    int r = 0;
    for (int c = 0; c < k && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (m.get(i, c)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        m.swap_rows(r, p);
        for (int i = 0; i < n; ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        pivot_row_of_col[c] = r;
        ++r;
    }
    // Inconsistent iff some row has zero coefficients but a set target bit.
    for (int i = r; i < n; ++i)
        if (m.get(i, k))
            return std::nullopt;
    std::vector<bool> x(static_cast<std::size_t>(k), false);
    for (int c = 0; c < k; ++c)
        if (pivot_row_of_col[c] >= 0 && m.get(pivot_row_of_col[c], k))
            x[c] = true;
    // Free columns left at zero; verify.
    std::vector<bool> check(static_cast<std::size_t>(n), false);
    for (int c = 0; c < k; ++c)
        if (x[c])
            for (int i = 0; i < n; ++i)
                if (span[c][i])
                    check[i] = !check[i];
    if (check != target)
        return std::nullopt;
    return x;
}

bool in_span(const std::vector<std::vector<bool>>& span, const std::vector<bool>& target) {
    return solve_in_span(span, target).has_value();
}

int rank_of_vectors(const std::vector<std::vector<bool>>& vecs) {
    if (vecs.empty())
        return 0;
    Matrix m(static_cast<int>(vecs.size()), static_cast<int>(vecs[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (vecs[r][c])
                m.set(r, c, true);
    return rank(m);
}

}  // namespace gf2
}  // namespace csurg
