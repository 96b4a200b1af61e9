#include "jumploci/monomial.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
    std::vector<std::size_t> all(nvars);
    for (std::size_t i = 0; i < nvars; ++i) all[i] = i;
    return MonomialOrder(nvars, {std::move(all)});
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars,
                                         const std::vector<std::size_t>& eliminated) {
    std::vector<bool> dropped(nvars, false);
    for (auto v : eliminated) {
        if (v >= nvars) throw ValidationError("elimination order: variable index out of range");
        dropped[v] = true;
    }
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < nvars; ++i) (dropped[i] ? first : second).push_back(i);
    return MonomialOrder(nvars, {std::move(first), std::move(second)});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& block : blocks_) {
        std::uint64_t da = 0, db = 0;
        for (auto v : block) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) return da < db ? -1 : 1;
        // Reverse lexicographic: scan from the block's last variable; the first
        // difference decides, smaller exponent meaning larger monomial.
        for (auto it = block.rbegin(); it != block.rend(); ++it) {
            std::uint32_t xa = a.e[*it], xb = b.e[*it];
            if (xa != xb) return xa > xb ? -1 : 1;
        }
    }
    return 0;
}

bool degree_then_input_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: earlier-variable-heavy monomials first (x^2 before xy before y^2).
    return a.e > b.e;
}

} // namespace jumploci
