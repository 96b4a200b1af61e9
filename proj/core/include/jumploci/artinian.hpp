#pragma once

#include "jumploci/ideal.hpp"
#include "jumploci/matrix.hpp"

#include <memory>
#include <vector>

namespace jumploci {

/// Elements of a finite-dimensional algebra are coordinate vectors in a fixed
/// basis whose first element is the unit.
using AElem = Vec;

/// Plain multiplication-table view of a finite-dimensional commutative algebra;
/// the minimal interface the module machinery needs. t[a][b] holds the
/// coordinates of e_a * e_b.
struct MulTable {
    std::size_t dim = 0;
    std::vector<std::vector<AElem>> t;

    AElem zero() const { return AElem(dim, Scalar(0)); }
    AElem one() const;
    AElem mul(const AElem& a, const AElem& b) const;
    /// Matrix of multiplication by `a` acting on coordinate columns.
    QMatrix mult_matrix(const AElem& a) const;
    Scalar residue(const AElem& a) const { return a[0]; }
    /// Restriction to the span of the first `dim_j` basis vectors; only valid
    /// when the complement of that span is an ideal (composition series use).
    MulTable truncated(std::size_t dim_j) const;
};

/// Artinian local algebra presented as a polynomial quotient. The basis is the
/// standard-monomial staircase sorted by degree then input order (unit first),
/// and the multiplication table is computed once at construction. Construction
/// rejects infinite-dimensional quotients and non-local algebras, naming the
/// non-nilpotent witness.
class ArtinianAlgebra {
public:
    static ArtinianAlgebra build(Ideal presentation);

    const Ideal& presentation() const { return presentation_; }
    const RingPtr& poly_ring() const { return presentation_.ring(); }
    std::size_t dim() const { return table_.dim; }
    std::size_t maximal_ideal_dim() const { return dim() - 1; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const MulTable& table() const { return table_; }

    AElem zero() const { return table_.zero(); }
    AElem one() const { return table_.one(); }
    AElem basis_elem(std::size_t idx) const;
    AElem mul(const AElem& a, const AElem& b) const { return table_.mul(a, b); }
    Scalar residue(const AElem& a) const { return a[0]; }
    bool is_elem_zero(const AElem& a) const { return vec_is_zero(a); }

    AElem from_polynomial(const Polynomial& p) const;
    Polynomial lift(const AElem& a) const;

    /// Evaluate a polynomial from any ring at algebra-element images.
    AElem eval_polynomial(const Polynomial& p, const std::vector<AElem>& images) const;

private:
    ArtinianAlgebra(Ideal presentation, std::vector<Monomial> basis, MulTable table)
        : presentation_(std::move(presentation)), basis_(std::move(basis)),
          table_(std::move(table)) {}

    std::size_t basis_index(const Monomial& m) const;

    Ideal presentation_;
    std::vector<Monomial> basis_;
    MulTable table_;
};

using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

/// A maximal chain of ideals m = m_0 > m_1 > ... > m_l = 0 with one-dimensional
/// steps, built by refining the m-adic filtration with standard-monomial basis
/// vectors in degree-then-input order. `flag` holds b_1..b_l with
/// m_{j-1} = m_j + <b_j>, so [1, b_1, ..., b_l] is a filtration-compatible
/// basis; `compat_table` is the multiplication table rewritten in that basis.
struct CompositionSeries {
    std::vector<Subspace> chain; // chain[j] = m_j as a subspace of the algebra
    std::vector<AElem> flag;     // canonical coordinates of b_1..b_l
    QMatrix from_compatible;     // compatible coords -> canonical coords
    QMatrix to_compatible;
    MulTable compat_table;

    std::size_t length() const { return flag.size(); }
};

CompositionSeries composition_series(const ArtinianAlgebra& algebra);

/// The standard probe algebras used by the random suites.
std::vector<AlgebraPtr> algebra_catalog();

} // namespace jumploci
