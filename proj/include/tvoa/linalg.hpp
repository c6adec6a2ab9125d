#pragma once

// Small dense exact linear algebra over Scalar (Gaussian elimination with
// exact division).

#include "tvoa/scalar.hpp"

#include <vector>

namespace tvoa {

struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<Scalar> a;  // row major

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static Matrix identity(size_t n);
    Matrix operator*(const Matrix&) const;
    bool operator==(const Matrix&) const;
};

size_t rank(Matrix m);
Scalar det(Matrix m);
// Solves M x = b; returns false if no solution.
bool solve(const Matrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x);
// Inverse; throws scalar_error if singular.
Matrix inverse(const Matrix& m);

}  // namespace tvoa
