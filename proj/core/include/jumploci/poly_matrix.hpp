#pragma once

#include "jumploci/matrix.hpp"
#include "jumploci/polynomial.hpp"

#include <vector>

namespace jumploci {

/// Dense matrix of polynomials. Columns index the source module, rows the
/// target, so a matrix acts on coordinate column vectors.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool is_zero() const;

    QMatrix evaluate(const std::vector<Scalar>& point) const;
    PolyMatrix substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    static PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix from_scalar(const RingPtr& ring, const QMatrix& m);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;
};

inline constexpr std::size_t kMinorMatrixCap = 8;
inline constexpr std::size_t kMinorSizeCap = 6;

/// All m x m minors, enumerated over row/column subsets in lexicographic
/// index order, expanded by Laplace with memoization on (row-set, col-set).
/// Enforces the hard caps and throws SizeLimitError beyond them. The
/// degenerate conventions (m <= 0, m > min(rows, cols)) are handled by
/// minors_ideal, not here.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size);

} // namespace jumploci
