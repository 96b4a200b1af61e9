#pragma once

#include "jumploci/artinian.hpp"
#include "jumploci/free_complex.hpp"

namespace jumploci {

/// A morphism Spec(A) -> affine chart, given by the images of the chart
/// coordinates in A. The set-theoretic image is the single point read off the
/// residues; the remaining coordinates of each image lie in the maximal ideal.
struct MapSpec {
    RingPtr source;
    AlgebraPtr target;
    RationalPoint point;       // point[v] = residue of images[v]
    std::vector<AElem> images; // one element of A per source variable
};

MapSpec make_map_spec(RingPtr source, AlgebraPtr target, std::vector<AElem> images);

/// The kernel of the induced ring map source -> A, computed by lifting the
/// images to polynomials and eliminating the algebra variables from the joint
/// ring.
Ideal comorphism_kernel(const MapSpec& s);

} // namespace jumploci
