#include "jumploci/matrix.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec QMatrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec QMatrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix mul: dimension mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix add: dimension mismatch");
    QMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix sub: dimension mismatch");
    QMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Scalar& c) const {
    QMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

Vec QMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ValidationError("matrix apply: dimension mismatch");
    Vec r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
        // Pivot-first: take the first row with a nonzero entry in this column.
        std::size_t sel = pr;
        while (sel < rows_ && at(sel, pc).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pr) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pr, c));
        }
        Scalar inv = at(pr, pc).inverse();
        for (std::size_t c = pc; c < cols_; ++c) at(pr, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || at(r, pc).is_zero()) continue;
            Scalar f = at(r, pc);
            for (std::size_t c = pc; c < cols_; ++c) at(r, c) -= f * at(pr, c);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy(*this);
    return copy.rref().size();
}

std::vector<Vec> QMatrix::kernel_basis() const {
    QMatrix r(*this);
    auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> QMatrix::row_space_basis() const {
    QMatrix r(*this);
    auto pivots = r.rref();
    std::vector<Vec> basis;
    basis.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(i));
    return basis;
}

std::optional<Vec> solve(const QMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw ValidationError("solve: dimension mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Scalar(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
    return x;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    QMatrix m = QMatrix::from_rows(spanning, ambient);
    auto rows = m.row_space_basis();
    basis_ = QMatrix::from_rows(rows, ambient);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw ValidationError("subspace: ambient dimension mismatch");
    if (vec_is_zero(v)) return true;
    // Reduce v against the RREF basis rows.
    Vec w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && basis_.at(r, pivot).is_zero()) ++pivot;
        if (pivot == ambient_) continue;
        if (w[pivot].is_zero()) continue;
        Scalar f = w[pivot];
        for (std::size_t c = pivot; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t r = 0; r < o.basis_.rows(); ++r) {
        if (!contains(o.basis_.row(r))) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw ValidationError("subspace sum: ambient mismatch");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    for (std::size_t r = 0; r < o.basis_.rows(); ++r) rows.push_back(o.basis_.row(r));
    return Subspace(ambient_, rows);
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace jumploci
