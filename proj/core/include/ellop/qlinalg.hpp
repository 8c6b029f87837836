#pragma once

#include "ellop/rational.hpp"

#include <cstddef>
#include <vector>

namespace ellop {

struct Rref;

// Dense exact matrix over Q; just enough linear algebra for cotangent
// normal forms, kernels and rank checks.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    static QMatrix from_rows(std::vector<std::vector<Rational>> rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Rational> row(std::size_t i) const;

    bool operator==(const QMatrix& other) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // M v
    QMatrix multiply(const QMatrix& other) const;

    Rref rref() const;

    // Basis of { v : M v = 0 }, one vector per free column, ascending.
    std::vector<std::vector<Rational>> kernel_basis() const;

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Row-reduced echelon data: nonzero rows only, each pivot entry 1.
struct Rref {
    QMatrix mat;
    std::vector<std::size_t> pivots;  // pivot column per row
    std::size_t rank = 0;
};

// Subtracts multiples of the RREF rows to zero out all pivot coordinates of v.
// The result is the canonical representative of v modulo the row space;
// it is the zero vector exactly when v lies in the row space.
std::vector<Rational> reduce_against_rref(const Rref& r, std::vector<Rational> v);

bool is_zero_vector(const std::vector<Rational>& v);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace ellop
