#pragma once

#include "jumploci/monomial.hpp"
#include "jumploci/polynomial.hpp"

#include <vector>

namespace jumploci {

/// Buchberger's algorithm with the coprime-lcm and chain criteria, S-pairs
/// processed smallest-lcm first with index tie-breaks. Returns the reduced
/// Groebner basis: monic, mutually reduced, sorted ascending by leading
/// monomial. The result is the canonical basis for the given order: any
/// generating set of the same ideal produces an identical sequence.
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order);

/// Remainder of full multivariate division of f by the (Groebner) basis.
/// Every term of the result is irreducible modulo the basis leading terms.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Leading monomial with respect to `order` (f must be nonzero).
const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order);

} // namespace jumploci
