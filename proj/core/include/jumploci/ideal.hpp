#pragma once

#include "jumploci/groebner.hpp"
#include "jumploci/polynomial.hpp"

#include <optional>
#include <vector>

namespace jumploci {

/// An ideal of a polynomial ring, frozen at construction: the reduced Groebner
/// basis for the ring's degrevlex order is computed once in the constructor and
/// the value is immutable afterwards, so sharing across threads is safe.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), order_(MonomialOrder::degrevlex(ring_->nvars())) {}
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }
    const MonomialOrder& order() const { return order_; }

    bool is_zero() const { return gb_.empty(); }
    bool is_unit() const;

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    /// True iff J is a subset of this ideal.
    bool contains(const Ideal& j) const;
    bool equals(const Ideal& j) const;

    /// Standard monomials (those outside the leading-term ideal), sorted by
    /// degree then input order; nullopt when the quotient is infinite-dimensional.
    std::optional<std::vector<Monomial>> standard_monomials() const;
    std::optional<std::size_t> quotient_dim() const;

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Exact intersection via one auxiliary variable and elimination.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// Intersect with the subring generated by the variables not in `drop`;
/// the result lives in the smaller ring (kept variables, original order).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);
Ideal eliminate_gens(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     const std::vector<std::size_t>& drop);

} // namespace jumploci
