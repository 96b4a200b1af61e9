#pragma once

#include "jumploci/ideal.hpp"
#include "jumploci/poly_matrix.hpp"

#include <vector>

namespace jumploci {

using RationalPoint = std::vector<Scalar>;

/// Bounded complex of free modules over a polynomial ring, given by the
/// differential matrices d^i (dimensions l_{i+1} x l_i, columns index the
/// source). Ranks are zero outside [lo, hi]; d^{i+1} d^i = 0 is checked
/// symbolically at construction.
class FreeComplex {
public:
    FreeComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks,
                std::vector<PolyMatrix> diffs);

    static FreeComplex empty(RingPtr ring) { return FreeComplex(std::move(ring), 0, {}, {}); }

    const RingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    std::size_t rank(int degree) const;
    /// d^i for any integer i; zero-sized matrices outside the support.
    PolyMatrix diff(int degree) const;

    FreeComplex translate(const RationalPoint& p) const;
    FreeComplex shifted(int offset) const;

    friend FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

private:
    RingPtr ring_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<PolyMatrix> diffs_; // diffs_[k] = d^{lo+k}
};

/// Determinantal ideal of m x m minors, with the degenerate conventions:
/// the unit ideal for m <= 0 and the zero ideal for m > min(rows, cols).
Ideal minors_ideal(const PolyMatrix& matrix, long size);

/// The degree-i jump ideal at level k: the intersection over all splits
/// a + b = l_i - k + 2 of I_a(d^{i-1}) + I_b(d^i). Splits with a negative
/// index contribute the unit ideal and are skipped.
Ideal jump_ideal(const FreeComplex& c, int i, long k);

/// Alternative jump ideal: the (l_i - k + 1)-minors of d^{i-1} (+) d^i
/// assembled block-diagonally, so the rank at a point is the sum of ranks.
Ideal jump_ideal_alt(const FreeComplex& c, int i, long k);

/// dim H^i of the fiber at p: l_i - rank d^{i-1}(p) - rank d^i(p).
long fiber_cohomology_dim(const FreeComplex& c, const RationalPoint& p, int i);

/// True iff every generator of jump_ideal(c, i, k) vanishes at p.
bool jump_locus_contains(const FreeComplex& c, int i, long k, const RationalPoint& p);

/// The rank-one parameter family on a g-torus: ranks binomial(g, i) and
/// differential wedge by x_1 e_1 + ... + x_g e_g over Q[x_1..x_g].
FreeComplex koszul_family(std::size_t g);

std::uint64_t binomial(std::size_t n, std::size_t k);

} // namespace jumploci
