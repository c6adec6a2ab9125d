#include "tvoa/linalg.hpp"

namespace tvoa {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows) throw scalar_error("matrix shape mismatch");
    Matrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.cols; ++j) {
                const Scalar& w = o.at(k, j);
                if (!w.is_zero()) r.at(i, j) += v * w;
            }
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (!(a[k] == o.a[k])) return false;
    return true;
}

namespace {

// Row echelon; returns rank, optionally accumulates determinant sign/value.
size_t echelon(Matrix& m, Scalar* detv) {
    size_t r = 0;
    if (detv) *detv = Scalar(1);
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m.at(p, c).is_zero()) ++p;
        if (p == m.rows) {
            if (detv) *detv = Scalar(0);
            continue;
        }
        if (p != r) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            if (detv) *detv = -(*detv);
        }
        Scalar piv = m.at(r, c);
        if (detv) *detv *= piv;
        for (size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) / piv;
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

size_t rank(Matrix m) { return echelon(m, nullptr); }

Scalar det(Matrix m) {
    if (m.rows != m.cols) throw scalar_error("det of non-square matrix");
    Scalar d;
    size_t r = echelon(m, &d);
    return r == m.rows ? d : Scalar(0);
}

bool solve(const Matrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x) {
    Matrix aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && aug.at(p, c).is_zero()) ++p;
        if (p == m.rows) continue;
        for (size_t j = 0; j <= m.cols; ++j) std::swap(aug.at(p, j), aug.at(r, j));
        Scalar piv = aug.at(r, c);
        for (size_t j = c; j <= m.cols; ++j) aug.at(r, j) /= piv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || aug.at(i, c).is_zero()) continue;
            Scalar f = aug.at(i, c);
            for (size_t j = c; j <= m.cols; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m.rows; ++i)
        if (!aug.at(i, m.cols).is_zero()) return false;
    x.assign(m.cols, Scalar(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = aug.at(k, m.cols);
    return true;
}

Matrix inverse(const Matrix& m) {
    if (m.rows != m.cols) throw scalar_error("inverse of non-square matrix");
    size_t n = m.rows;
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && aug.at(p, c).is_zero()) ++p;
        if (p == n) throw scalar_error("singular matrix");
        if (p != c)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(c, j));
        Scalar piv = aug.at(c, c);
        for (size_t j = 0; j < 2 * n; ++j) aug.at(c, j) /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || aug.at(i, c).is_zero()) continue;
            Scalar f = aug.at(i, c);
            for (size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(c, j);
        }
    }
    Matrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

}  // namespace tvoa
