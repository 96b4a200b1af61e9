#include "jumploci/poly_matrix.hpp"

#include "jumploci/errors.hpp"

#include <cstdint>
#include <map>

namespace jumploci {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    a_.assign(rows_ * cols_, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "poly matrix mul");
    if (cols_ != o.rows_) throw ValidationError("poly matrix mul: dimension mismatch");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    }
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

QMatrix PolyMatrix::evaluate(const std::vector<Scalar>& point) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).evaluate(point);
    return r;
}

PolyMatrix PolyMatrix::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
    PolyMatrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).substitute(target, images);
    return r;
}

PolyMatrix PolyMatrix::block_diag(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "block diag");
    PolyMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

PolyMatrix PolyMatrix::from_scalar(const RingPtr& ring, const QMatrix& m) {
    PolyMatrix r(ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = Polynomial::constant(ring, m.at(i, j));
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

namespace {

// Determinant of the submatrix (rows, cols as bitmasks), Laplace along the
// first selected row, memoized across overlapping subproblems.
class MinorTable {
public:
    explicit MinorTable(const PolyMatrix& m) : m_(m) {}

    Polynomial det(std::uint32_t rows, std::uint32_t cols) {
        if (rows == 0) return Polynomial::constant(m_.ring(), Scalar(1));
        auto key = std::make_pair(rows, cols);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int r = first_bit(rows);
        std::uint32_t rest_rows = rows & ~(1u << r);
        Polynomial acc = Polynomial::zero(m_.ring());
        int sign = 1;
        for (std::uint32_t rem = cols; rem != 0;) {
            int c = first_bit(rem);
            rem &= ~(1u << c);
            const Polynomial& entry = m_.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            if (!entry.is_zero()) {
                Polynomial sub = det(rest_rows, cols & ~(1u << c));
                Polynomial piece = entry * sub;
                acc = (sign > 0) ? acc + piece : acc - piece;
            }
            sign = -sign;
        }
        memo_.emplace(key, acc);
        return acc;
    }

private:
    static int first_bit(std::uint32_t x) { return __builtin_ctz(x); }

    const PolyMatrix& m_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo_;
};

void subsets_of_size(std::size_t universe, std::size_t size,
                     std::vector<std::uint32_t>& out) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (auto i : idx) mask |= 1u << i;
        out.push_back(mask);
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == universe - size + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size) {
    if (size == 0 || size > std::min(m.rows(), m.cols()))
        throw ValidationError("minors: size out of range, caller handles conventions");
    if (m.rows() > kMinorMatrixCap || m.cols() > kMinorMatrixCap)
        throw SizeLimitError("minors: matrix larger than " + std::to_string(kMinorMatrixCap) +
                             "x" + std::to_string(kMinorMatrixCap));
    if (size > kMinorSizeCap)
        throw SizeLimitError("minors: minor size above cap " + std::to_string(kMinorSizeCap));

    std::vector<std::uint32_t> row_sets, col_sets;
    subsets_of_size(m.rows(), size, row_sets);
    subsets_of_size(m.cols(), size, col_sets);

    MinorTable table(m);
    std::vector<Polynomial> out;
    out.reserve(row_sets.size() * col_sets.size());
    for (auto rs : row_sets)
        for (auto cs : col_sets) out.push_back(table.det(rs, cs));
    return out;
}

} // namespace jumploci
