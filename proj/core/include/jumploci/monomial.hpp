#pragma once

#include <cstdint>
#include <vector>

namespace jumploci {

/// Exponent vector of fixed length (one slot per ring variable).
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const;
    std::uint64_t degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const; // *this / o, assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Monomial order: graded reverse lexicographic by default, or a two-block
/// elimination order (eliminated block dominates, degrevlex inside each block).
class MonomialOrder {
public:
    static MonomialOrder degrevlex(std::size_t nvars);
    /// Variables listed in `eliminated` are ranked above all others.
    static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated);

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::size_t nvars() const { return nvars_; }

private:
    MonomialOrder(std::size_t nvars, std::vector<std::vector<std::size_t>> blocks)
        : nvars_(nvars), blocks_(std::move(blocks)) {}

    std::size_t nvars_;
    std::vector<std::vector<std::size_t>> blocks_; // variable indices, ring order within block
};

/// Degree first, then lexicographic by exponents (x before y); the canonical
/// enumeration order for standard-monomial bases.
bool degree_then_input_less(const Monomial& a, const Monomial& b);

} // namespace jumploci
