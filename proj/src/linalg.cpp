#include "loopmod/linalg.hpp"

namespace loopmod {

Matrix identity_matrix(size_t k) {
    Matrix m(k, Vec(k, FieldElem(0)));
    for (size_t i = 0; i < k; ++i) m[i][i] = FieldElem(1);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t rows = a.size();
    size_t inner = b.size();
    size_t cols = inner ? b[0].size() : 0;
    Matrix c(rows, Vec(cols, FieldElem(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (b[k][j].is_zero()) continue;
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

Matrix matscale(const Matrix& a, const FieldElem& s) {
    Matrix c = a;
    for (auto& row : c)
        for (auto& x : row) x *= s;
    return c;
}

FieldElem trace(const Matrix& a) {
    FieldElem t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

bool is_zero_matrix(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

size_t exact_rank(const Matrix& m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators per row and strip the row content: rank is
    // invariant under row scaling, and the shared factors would otherwise
    // dominate the fraction-free products.
    std::vector<std::vector<QPoly>> a(rows, std::vector<QPoly>(cols));
    for (size_t i = 0; i < rows; ++i) {
        QPoly lcm(Cyclo(1));
        for (size_t j = 0; j < cols; ++j) {
            const QPoly& d = m[i][j].den();
            lcm = QPoly::exact_div(lcm * d, QPoly::gcd(lcm, d));
        }
        QPoly content;
        for (size_t j = 0; j < cols; ++j) {
            a[i][j] = m[i][j].num() * QPoly::exact_div(lcm, m[i][j].den());
            if (!a[i][j].is_zero()) content = QPoly::gcd(content, a[i][j]);
        }
        if (content.degree() > 0)
            for (size_t j = 0; j < cols; ++j)
                if (!a[i][j].is_zero()) a[i][j] = QPoly::exact_div(a[i][j], content);
    }

    size_t rank = 0;
    QPoly prev_pivot(Cyclo(1));
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                QPoly t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                a[i][j] = QPoly::exact_div(t, prev_pivot);
            }
            a[i][col] = QPoly();
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Matrix& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[row], a[p]);
        FieldElem inv = a[row][col].inverse();
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldElem f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<Vec> nullspace(const Matrix& m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    Matrix a = m;
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, FieldElem(0));
        v[free_col] = FieldElem(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    Matrix aug(rows, Vec(cols + 1, FieldElem(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    Vec x(cols, FieldElem(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

}  // namespace loopmod
