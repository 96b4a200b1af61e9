#include "jumploci/free_complex.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <string>

namespace jumploci {

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks,
                         std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() + 1 != ranks_.size())
        throw ValidationError("complex: need one differential per adjacent degree pair");
    if (ranks_.empty() && !diffs_.empty())
        throw ValidationError("complex: differentials without degrees");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const auto& d = diffs_[k];
        require_same_ring(ring_, d.ring(), "complex");
        if (d.rows() != ranks_[k + 1] || d.cols() != ranks_[k])
            throw ValidationError("complex: differential at degree " +
                                  std::to_string(lo_ + static_cast<int>(k)) +
                                  " has wrong dimensions");
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        PolyMatrix composite = diffs_[k + 1] * diffs_[k];
        for (std::size_t r = 0; r < composite.rows(); ++r) {
            for (std::size_t c = 0; c < composite.cols(); ++c) {
                if (!composite.at(r, c).is_zero())
                    throw ValidationError(
                        "complex: d.d nonzero at degree " +
                        std::to_string(lo_ + static_cast<int>(k)) + ", entry (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
            }
        }
    }
}

std::size_t FreeComplex::rank(int degree) const {
    if (degree < lo_ || degree > hi()) return 0;
    return ranks_[static_cast<std::size_t>(degree - lo_)];
}

PolyMatrix FreeComplex::diff(int degree) const {
    if (degree >= lo_ && degree < hi())
        return diffs_[static_cast<std::size_t>(degree - lo_)];
    return PolyMatrix(ring_, rank(degree + 1), rank(degree));
}

FreeComplex FreeComplex::translate(const RationalPoint& p) const {
    if (p.size() != ring_->nvars())
        throw ValidationError("translate: point length does not match ring");
    std::vector<Polynomial> images;
    images.reserve(p.size());
    for (std::size_t v = 0; v < p.size(); ++v)
        images.push_back(Polynomial::variable(ring_, v) + Polynomial::constant(ring_, p[v]));
    std::vector<PolyMatrix> diffs;
    diffs.reserve(diffs_.size());
    for (const auto& d : diffs_) diffs.push_back(d.substitute(ring_, images));
    return FreeComplex(ring_, lo_, ranks_, std::move(diffs));
}

FreeComplex FreeComplex::shifted(int offset) const {
    return FreeComplex(ring_, lo_ + offset, ranks_, diffs_);
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    require_same_ring(a.ring_, b.ring_, "direct sum");
    if (a.ranks_.empty()) return b;
    if (b.ranks_.empty()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.hi(), b.hi());
    std::vector<std::size_t> ranks;
    for (int i = lo; i <= hi; ++i) ranks.push_back(a.rank(i) + b.rank(i));
    std::vector<PolyMatrix> diffs;
    for (int i = lo; i < hi; ++i) diffs.push_back(PolyMatrix::block_diag(a.diff(i), b.diff(i)));
    return FreeComplex(a.ring_, lo, std::move(ranks), std::move(diffs));
}

Ideal minors_ideal(const PolyMatrix& matrix, long size) {
    if (size <= 0) return Ideal::unit(matrix.ring());
    if (static_cast<std::size_t>(size) > std::min(matrix.rows(), matrix.cols()))
        return Ideal::zero(matrix.ring());
    return Ideal(matrix.ring(), minors(matrix, static_cast<std::size_t>(size)));
}

Ideal jump_ideal(const FreeComplex& c, int i, long k) {
    const long s = static_cast<long>(c.rank(i)) - k + 2;
    PolyMatrix din = c.diff(i - 1);
    PolyMatrix dout = c.diff(i);
    bool any = false;
    Ideal result = Ideal::unit(c.ring());
    // Splits with a <= 0 or b <= 0 contribute the unit ideal and drop out.
    for (long a = 1; a <= s - 1; ++a) {
        long b = s - a;
        Ideal term = ideal_sum(minors_ideal(din, a), minors_ideal(dout, b));
        if (term.is_unit()) continue;
        result = any ? ideal_intersect(result, term) : std::move(term);
        any = true;
    }
    return result;
}

Ideal jump_ideal_alt(const FreeComplex& c, int i, long k) {
    PolyMatrix block = PolyMatrix::block_diag(c.diff(i - 1), c.diff(i));
    return minors_ideal(block, static_cast<long>(c.rank(i)) - k + 1);
}

long fiber_cohomology_dim(const FreeComplex& c, const RationalPoint& p, int i) {
    QMatrix din = c.diff(i - 1).evaluate(p);
    QMatrix dout = c.diff(i).evaluate(p);
    return static_cast<long>(c.rank(i)) - static_cast<long>(din.rank()) -
           static_cast<long>(dout.rank());
}

bool jump_locus_contains(const FreeComplex& c, int i, long k, const RationalPoint& p) {
    Ideal j = jump_ideal(c, i, k);
    for (const auto& g : j.generators()) {
        if (!g.evaluate(p).is_zero()) return false;
    }
    return true;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace {

// Subsets of {0..g-1} of the given size, lexicographically ascending.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t g, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < g; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

FreeComplex koszul_family(std::size_t g) {
    if (g < 1) throw ValidationError("koszul family: need g >= 1");
    RingPtr ring = make_ring(g);
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i <= g; ++i) ranks.push_back(binomial(g, i));

    std::vector<PolyMatrix> diffs;
    for (std::size_t i = 0; i < g; ++i) {
        auto source = index_subsets(g, i);
        auto target = index_subsets(g, i + 1);
        PolyMatrix d(ring, target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            const auto& set = source[c];
            for (std::size_t v = 0; v < g; ++v) {
                if (std::find(set.begin(), set.end(), v) != set.end()) continue;
                std::vector<std::size_t> image(set);
                image.insert(std::upper_bound(image.begin(), image.end(), v), v);
                auto it = std::find(target.begin(), target.end(), image);
                std::size_t r = static_cast<std::size_t>(it - target.begin());
                // Wedge on the left: sign counts basis indices below v in the set.
                std::size_t below =
                    static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
                Scalar sign = (below % 2 == 0) ? Scalar(1) : Scalar(-1);
                d.at(r, c) = Polynomial::variable(ring, v) * sign;
            }
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

} // namespace jumploci
