#pragma once

#include "jumploci/ideal.hpp"
#include "jumploci/matrix.hpp"

#include <vector>

namespace jumploci {

/// Cohomology-level cup-product data around a central degree i: the dimension
/// q of the degree-one direction space, the graded pieces H^{i-1}, H^i, H^{i+1}
/// of coefficients, the obstruction target, and the bilinear structure
/// constants. No symmetry is assumed on the obstruction pairing.
struct CupData {
    std::size_t q = 0;
    int i = 1;
    std::size_t h_before = 0; // dim H^{i-1}
    std::size_t h_mid = 0;    // dim H^i
    std::size_t h_after = 0;  // dim H^{i+1}
    std::size_t h_obstruction = 0;

    /// mu2[nu][mu]: obstruction coordinates of the pairing of directions nu, mu.
    std::vector<std::vector<Vec>> mu2;
    /// act_before[nu]: (h_mid x h_before) action of direction nu on H^{i-1}.
    std::vector<QMatrix> act_before;
    /// act_mid[nu]: (h_after x h_mid) action of direction nu on H^i.
    std::vector<QMatrix> act_mid;

    void validate() const;
};

/// Ideal of the quadratic cone in Q[x_1..x_q]: the obstruction components of
/// v -> mu2(v, v). Symmetric cancellation happens in the polynomial algebra,
/// so models whose pairing is alternating produce the zero ideal.
Ideal cone_ideal(const CupData& cup);

struct AnnihilatorResult {
    Subspace space;    // directions killing both graded pieces under the action
    Ideal linear_ideal; // linear forms vanishing on that subspace
};

/// The directions annihilating H^i and H^{i-1} simultaneously, with the linear
/// ideal cutting the subspace out (RREF-canonical generators).
AnnihilatorResult annihilator_subspace(const CupData& cup);

} // namespace jumploci
