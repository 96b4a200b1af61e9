#pragma once

#include "jumploci/artinian.hpp"
#include "jumploci/map_spec.hpp"

#include <vector>

namespace jumploci {

/// Bounded complex of free modules over a finite-dimensional algebra, entries
/// given as algebra elements. Field expansion replaces every entry by its
/// multiplication matrix, turning each free rank-r module into an r*dim(A)
/// coordinate space (module coordinate major, algebra coordinate minor).
struct AComplex {
    MulTable table;
    int lo = 0;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<AElem>> diffs; // diffs[k]: rank(lo+k+1) x rank(lo+k), row-major

    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
    std::size_t rank(int degree) const;
    const AElem& entry(int degree, std::size_t r, std::size_t c) const;

    /// Field expansion of d^degree; zero-sized outside the support.
    QMatrix field_matrix(int degree) const;

    /// Differential applied to an element of M^degree (x) A in field coordinates.
    Vec apply(int degree, const Vec& v) const;

    void validate() const; // dimensions and d.d = 0 over the algebra
};

/// Module over a finite-dimensional algebra presented by its field dimension
/// and one action matrix per algebra basis element.
struct ArtinianModule {
    MulTable table;
    std::size_t dim = 0;
    std::vector<QMatrix> action; // action[mu]: dim x dim

    void validate() const; // unit acts as identity, actions respect the table
};

struct FreeCheck {
    bool free = false;
    std::size_t min_generators = 0; // dim of M / mM
};

/// Nakayama count: free iff dim(M) equals min_generators * dim(A).
FreeCheck is_free(const ArtinianModule& m);

/// Specialization of a polynomial complex along a map Spec(A) -> chart.
AComplex specialize_complex(const FreeComplex& c, const MapSpec& s);

/// The subquotient (span of numerator) / (span of denominator) of a free
/// module A^rank in field coordinates, with the induced algebra action.
/// Representatives are the numerator vectors kept by a pivot-first sweep
/// against the denominator, so the basis is canonical.
struct Subquotient {
    ArtinianModule module;
    std::vector<Vec> representatives; // in ambient field coordinates
    Subspace denominator;             // span of the denominator
    std::size_t ambient_rank = 0;

    /// Coordinates of an ambient vector in the representative basis modulo the
    /// denominator; nullopt when the vector is not in numerator + denominator.
    std::optional<Vec> coordinates(const Vec& v) const;
};

Subquotient subquotient(const MulTable& table, std::size_t ambient_rank,
                        const std::vector<Vec>& numerator, const std::vector<Vec>& denominator);

/// H^degree of the complex as a module with its induced action.
Subquotient module_cohomology(const AComplex& c, int degree);

/// The image of a matrix over A, as a module, for the rank / freeness checks.
Subquotient image_module(const MulTable& table, const std::vector<AElem>& entries,
                         std::size_t rows, std::size_t cols);

} // namespace jumploci
