#include "ellop/qlinalg.hpp"

#include "ellop/errors.hpp"

namespace ellop {

QMatrix QMatrix::from_rows(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rational> QMatrix::row(std::size_t i) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw Error("matrix apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix multiply: size mismatch");
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

Rref QMatrix::rref() const {
    QMatrix work(*this);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && work.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(row, j));
        Rational inv = Rational(1) / work.at(row, col);
        for (std::size_t j = col; j < cols_; ++j) work.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || work.at(i, col) == 0) continue;
            Rational factor = work.at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                work.at(i, j) -= factor * work.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    Rref out;
    out.rank = pivots.size();
    out.pivots = std::move(pivots);
    out.mat = QMatrix(out.rank, cols_);
    for (std::size_t i = 0; i < out.rank; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.mat.at(i, j) = work.at(i, j);
    return out;
}

std::size_t QMatrix::rank() const { return rref().rank; }

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> reduce_against_rref(const Rref& r, std::vector<Rational> v) {
    if (r.mat.rows() > 0 && v.size() != r.mat.cols())
        throw Error("reduce_against_rref: size mismatch");
    for (std::size_t i = 0; i < r.rank; ++i) {
        const Rational& c = v[r.pivots[i]];
        if (c == 0) continue;
        Rational factor = c;  // pivot entry is 1
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * r.mat.at(i, j);
    }
    return v;
}

bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw Error("dot: size mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace ellop
