#pragma once

#include "jumploci/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jumploci {

using Vec = std::vector<Scalar>;

/// Dense matrix over the exact scalar field.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    QMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    /// Canonical kernel basis (one vector per free column, RREF back-substitution).
    std::vector<Vec> kernel_basis() const;
    /// Canonical basis of the row space: the nonzero rows of the RREF.
    std::vector<Vec> row_space_basis() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Solve M x = b exactly; nullopt when inconsistent.
std::optional<Vec> solve(const QMatrix& m, const Vec& b);

/// A linear subspace of a fixed coordinate space, held as an RREF row basis,
/// so equal subspaces compare equal componentwise.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vec>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    QMatrix basis_;
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);

} // namespace jumploci
