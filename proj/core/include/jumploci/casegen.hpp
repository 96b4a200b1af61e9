#pragma once

#include "jumploci/json_io.hpp"
#include "jumploci/rng.hpp"

namespace jumploci {

/// Seeded generators for the verification suites. Complexes are assembled from
/// blocks that satisfy d.d = 0 by construction (pair blocks on two arbitrary
/// polynomials, single two-term blocks, acyclic identity summands), so every
/// draw is a valid input; algebras come from the fixed catalog.
namespace casegen {

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree);

/// Complex over Q[x,y], ranks capped at 3 per degree, entry degree <= 2.
FreeComplex random_complex(Rng& rng);

AlgebraPtr random_algebra(Rng& rng);

/// Map based at `base` with sparse small maximal-ideal coordinates.
MapSpec random_map(Rng& rng, const RingPtr& source, const AlgebraPtr& algebra,
                   const RationalPoint& base);

/// k is set to the fiber dimension most of the time; occasionally off by one
/// so the suite also exercises the precondition-skip path.
Prop21Case prop21_case(Rng& rng);

/// Hypothesis-satisfying by construction: sigma = B * C with inner rank c-1
/// and full residue rank on both factors.
LemmaImageCase lemma_image_case(Rng& rng);

PropMainCase prop_main_case(Rng& rng, std::size_t max_g);

BoundaryCase boundary_case(Rng& rng, std::size_t max_g);

/// Random ideal over a small ring, for canonicality tests.
Ideal random_ideal(Rng& rng);

/// A generating set for the same ideal: permuted, rescaled, one duplicate.
std::vector<Polynomial> shuffled_generators(Rng& rng, const Ideal& ideal);

} // namespace casegen

} // namespace jumploci
