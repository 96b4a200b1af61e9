#pragma once

#include "jumploci/amodule.hpp"

namespace jumploci {

/// Two-sided verdict for the schematic-image / free-cohomology equivalence.
/// The stratum precondition (fiber dimension at the point equals k) is checked
/// first; when it fails the case is a skip, not a counterexample.
struct Prop21Verdict {
    bool precondition_ok = false;
    long fiber_dim = 0;
    long k = 0;
    bool side_schematic = false; // jump ideal contained in ker(s*)
    bool side_free = false;      // H^i of the specialized complex free of rank k
    bool equivalent = false;
    std::size_t cohomology_field_dim = 0;
    FreeCheck freeness;
};

Prop21Verdict verify_prop21(const FreeComplex& c, const MapSpec& s, int i, long k);

/// Checks that a matrix over A whose c-minors vanish identically and whose
/// residue matrix has full (c-1)-rank has a free image of rank c-1.
struct LemmaImageVerdict {
    bool precondition_ok = false;
    bool minors_vanish = false;  // I_c(sigma) = 0 in A
    bool residue_full = false;   // I_{c-1}(sigma (x) k) = k
    std::size_t image_field_dim = 0;
    FreeCheck freeness;
    bool conclusion = false; // image free of rank exactly c-1
};

LemmaImageVerdict verify_lemma_image_free(const ArtinianAlgebra& a,
                                          const std::vector<AElem>& sigma, std::size_t rows,
                                          std::size_t cols, long c);

/// Determinant of a square matrix with entries in A (Laplace expansion).
AElem algebra_determinant(const MulTable& table, const std::vector<AElem>& entries,
                          std::size_t n);

} // namespace jumploci
