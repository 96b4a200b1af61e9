#include "jumploci/ideal.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), order_(MonomialOrder::degrevlex(ring_->nvars())) {
    for (const auto& g : generators) {
        if (g.ring()) require_same_ring(ring_, g.ring(), "ideal");
    }
    gens_ = std::move(generators);
    gb_ = reduced_groebner(gens_, order_);
}

Ideal Ideal::unit(RingPtr ring) {
    std::vector<Polynomial> gens{Polynomial::constant(ring, Scalar(1))};
    return Ideal(std::move(ring), std::move(gens));
}

bool Ideal::is_unit() const {
    return gb_.size() == 1 && gb_[0].is_constant() && !gb_[0].is_zero();
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    require_same_ring(ring_, f.ring(), "normal form");
    return jumploci::normal_form(f, gb_, order_);
}

bool Ideal::contains(const Ideal& j) const {
    require_same_ring(ring_, j.ring_, "ideal containment");
    for (const auto& g : j.gens_) {
        if (!contains(g)) return false;
    }
    return true;
}

bool Ideal::equals(const Ideal& j) const {
    require_same_ring(ring_, j.ring_, "ideal equality");
    if (gb_.size() != j.gb_.size()) return false;
    for (std::size_t i = 0; i < gb_.size(); ++i) {
        if (gb_[i] != j.gb_[i]) return false;
    }
    return true;
}

std::optional<std::vector<Monomial>> Ideal::standard_monomials() const {
    const std::size_t n = ring_->nvars();
    if (is_unit()) return std::vector<Monomial>{};
    std::vector<Monomial> leads;
    leads.reserve(gb_.size());
    for (const auto& g : gb_) leads.push_back(leading_monomial(g, order_));

    // Finite iff every variable has a pure power among the leading monomials.
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& m : leads) {
            bool pure = m.e[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && m.e[w] > 0) pure = false;
            if (pure) {
                found = true;
                bound[v] = found && bound[v] ? std::min(bound[v], m.e[v]) : m.e[v];
            }
        }
        if (!found) return std::nullopt;
    }

    unsigned long long box = 1;
    for (std::size_t v = 0; v < n; ++v) {
        box *= bound[v] == 0 ? 1 : bound[v];
        if (box > 1000000ULL)
            throw SizeLimitError("standard monomials: staircase box too large");
    }

    std::vector<Monomial> out;
    Monomial cur(n);
    // Enumerate the box under the pure-power staircase, keep undivided monomials.
    while (true) {
        bool divided = false;
        for (const auto& m : leads) {
            if (m.divides(cur)) {
                divided = true;
                break;
            }
        }
        if (!divided) out.push_back(cur);
        std::size_t v = 0;
        while (v < n) {
            if (cur.e[v] + 1 < bound[v]) {
                ++cur.e[v];
                break;
            }
            cur.e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.begin(), out.end(), degree_then_input_less);
    return out;
}

std::optional<std::size_t> Ideal::quotient_dim() const {
    auto sm = standard_monomials();
    if (!sm) return std::nullopt;
    return sm->size();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// Auxiliary name guaranteed not to collide with the ring's variables.
std::string fresh_name(const Ring& ring) {
    std::string name = "_t";
    while (std::find(ring.vars.begin(), ring.vars.end(), name) != ring.vars.end()) name += "_";
    return name;
}

Monomial pad_monomial(const Monomial& m, std::size_t extra) {
    Monomial r(m.nvars() + extra);
    std::copy(m.e.begin(), m.e.end(), r.e.begin());
    return r;
}

Polynomial lift_to_extended(const Polynomial& p, const RingPtr& ext) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms())
        terms.push_back(Term{pad_monomial(t.mono, ext->nvars() - t.mono.nvars()), t.coeff});
    return Polynomial(ext, std::move(terms));
}

} // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersect");
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    const std::size_t n = a.ring()->nvars();
    std::vector<std::string> ext_vars = a.ring()->vars;
    ext_vars.push_back(fresh_name(*a.ring()));
    RingPtr ext = make_ring(std::move(ext_vars));
    Polynomial t = Polynomial::variable(ext, n);
    Polynomial one_minus_t = Polynomial::constant(ext, Scalar(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * lift_to_extended(f, ext));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift_to_extended(g, ext));
    Ideal dropped = eliminate_gens(ext, gens, {n});
    // The eliminated ring has the same variables as the inputs; rebuild on the
    // callers' ring object so downstream identity checks stay cheap.
    std::vector<Polynomial> back;
    for (const auto& f : dropped.generators()) {
        std::vector<Term> terms(f.terms().begin(), f.terms().end());
        back.push_back(Polynomial(a.ring(), std::move(terms)));
    }
    return Ideal(a.ring(), std::move(back));
}

Ideal eliminate_gens(const RingPtr& ring, const std::vector<Polynomial>& gens,
                     const std::vector<std::size_t>& drop) {
    const std::size_t n = ring->nvars();
    std::vector<bool> dropped(n, false);
    for (auto v : drop) {
        if (v >= n) throw ValidationError("eliminate: variable index out of range");
        dropped[v] = true;
    }
    MonomialOrder ord = MonomialOrder::elimination(n, drop);
    auto gb = reduced_groebner(gens, ord);

    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < n; ++v)
        if (!dropped[v]) kept.push_back(v);
    std::vector<std::string> kept_names;
    kept_names.reserve(kept.size());
    for (auto v : kept) kept_names.push_back(ring->vars[v]);
    RingPtr sub = make_ring(std::move(kept_names));

    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool pure = true;
        for (const auto& term : g.terms()) {
            for (std::size_t v = 0; v < n && pure; ++v)
                if (dropped[v] && term.mono.e[v] > 0) pure = false;
            if (!pure) break;
        }
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& term : g.terms()) {
            Monomial m(kept.size());
            for (std::size_t idx = 0; idx < kept.size(); ++idx) m.e[idx] = term.mono.e[kept[idx]];
            terms.push_back(Term{std::move(m), term.coeff});
        }
        out.push_back(Polynomial(sub, std::move(terms)));
    }
    return Ideal(sub, std::move(out));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
    return eliminate_gens(ideal.ring(), ideal.generators(), drop);
}

} // namespace jumploci
