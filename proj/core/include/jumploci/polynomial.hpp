#pragma once

#include "jumploci/monomial.hpp"
#include "jumploci/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jumploci {

/// A polynomial ring over the scalar field, identified by its ordered variable
/// names. Two rings are the same ring iff their variable lists are equal.
struct Ring {
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }
    friend bool operator==(const Ring& a, const Ring& b) { return a.vars == b.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
/// Ring with variables x1..xn.
RingPtr make_ring(std::size_t nvars, const std::string& stem = "x");

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Immutable multivariate polynomial; terms are kept sorted descending in the
/// ring's degrevlex order and never carry zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Normalizes arbitrary term lists: merges duplicates, drops zeros, sorts.
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial from_monomial(RingPtr ring, Monomial m, Scalar c = Scalar(1));

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial
    bool is_linear() const { return total_degree() <= 1; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Substitute images[v] for each variable v (images live in any one ring).
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace jumploci
