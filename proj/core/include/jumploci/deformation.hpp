#pragma once

#include "jumploci/algebra_model.hpp"
#include "jumploci/amodule.hpp"
#include "jumploci/cup_data.hpp"
#include "jumploci/map_spec.hpp"

namespace jumploci {

/// Span of the first-order data of s: the rows a^{mu'} with
/// s*(x_nu) = point_nu + sum_mu' a^{mu'}_nu alpha_mu', as a subspace of the
/// direction space. Invariant under change of basis of the maximal ideal.
Subspace derivative_space(const MapSpec& s);

/// The family over A attached to (model, p, s): terms M^k (x) A and
/// differential sum_nu s*(x_nu) b_nu. Requires p on the cone and s based at p.
AComplex aomoto_family(const AlgebraModel& model, const RationalPoint& p, const MapSpec& s);

struct PropMainVerdict {
    bool precondition_ok = false; // p on the cone, s based at p
    long k = 0;                   // dim H^i of the fiber at p
    bool side_free = false;        // H^i over A free of rank k
    bool side_annihilated = false; // derivative space inside the annihilator
    bool equivalent = false;
    bool shadow_dim_ok = false;     // field dimension equals (l+1) * k
    bool shadow_surjective = false; // restriction onto fiber cohomology is onto
    bool closedness_checked = false; // exact basis-closedness check ran (p = 0)
    bool closedness_ok = false;
    std::size_t h_field_dim = 0;
    FreeCheck freeness;
};

PropMainVerdict verify_prop_main(const AlgebraModel& model, const RationalPoint& p,
                                 const MapSpec& s, int i);

/// Connecting map of the short exact sequence of quotient families along the
/// composition series of A, composed with fiber -> quotient-family inclusion:
/// one matrix H^{i-1}(fiber) -> H^i(fiber) per filtration step j.
struct BoundaryVerdict {
    QMatrix snake;        // computed by lift-differentiate-extract
    QMatrix cup_step;     // cup with the j-th step derivative row
    QMatrix cup_literal;  // cup with the raw coefficient row a^{j+1}
    bool matches_step = false;
    bool matches_literal = false;
    Vec step_row;    // the step derivative coefficients
    Vec literal_row; // a^{j+1} in the filtration-compatible basis
};

BoundaryVerdict verify_boundary_formula(const AlgebraModel& model, const RationalPoint& p,
                                        const MapSpec& s, std::size_t j, int i);

/// Bounded-depth comparison of the translated family's jump ideal against the
/// linear ideal of the annihilator subspace: equality modulo m_0^n for
/// n = 1..depth, via reduced Groebner bases.
struct LocalModelVerdict {
    bool precondition_ok = false;
    long fiber_dim = 0;
    std::vector<bool> equal_at_depth; // index n-1 <-> comparison mod m_0^n
    bool all_equal = false;
    Ideal jump;   // of the translated family
    Ideal linear; // of the annihilator subspace
};

LocalModelVerdict verify_local_model(const AlgebraModel& model, const RationalPoint& p, int i,
                                     long k, std::size_t depth);

/// Generators x^alpha with |alpha| = n, the n-th power of the origin ideal.
Ideal origin_power_ideal(const RingPtr& ring, std::size_t n);

} // namespace jumploci
