#include "jumploci/groebner.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jumploci {

namespace {

struct AscendingBy {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

// Working form: terms ascending in the active order, leading term at rbegin.
using WPoly = std::map<Monomial, Scalar, AscendingBy>;

WPoly to_working(const Polynomial& p, const MonomialOrder& ord) {
    WPoly w{AscendingBy{&ord}};
    for (const auto& t : p.terms()) w.emplace(t.mono, t.coeff);
    return w;
}

Polynomial from_working(const RingPtr& ring, const WPoly& w) {
    std::vector<Term> terms;
    terms.reserve(w.size());
    for (const auto& [m, c] : w) terms.push_back(Term{m, c});
    return Polynomial(ring, std::move(terms));
}

void add_scaled(WPoly& dst, const WPoly& src, const Monomial& shift, const Scalar& factor,
                const MonomialOrder& ord) {
    for (const auto& [m, c] : src) {
        Monomial key = m * shift;
        Scalar v = c * factor;
        auto it = dst.find(key);
        if (it == dst.end()) {
            dst.emplace(std::move(key), std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
    (void)ord;
}

void make_monic(WPoly& w) {
    if (w.empty()) return;
    Scalar inv = w.rbegin()->second.inverse();
    if (inv.is_one()) return;
    for (auto& [m, c] : w) c *= inv;
}

// Full reduction: every term of the result is outside the leading-term ideal.
WPoly reduce_full(WPoly f, const std::vector<WPoly>& basis, const MonomialOrder& ord) {
    WPoly rem{AscendingBy{&ord}};
    while (!f.empty()) {
        const Monomial lead = f.rbegin()->first;
        const Scalar lead_c = f.rbegin()->second;
        bool divided = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            const Monomial& gm = g.rbegin()->first;
            if (!gm.divides(lead)) continue;
            Monomial q = lead.divide(gm);
            Scalar factor = -(lead_c / g.rbegin()->second);
            add_scaled(f, g, q, factor, ord);
            divided = true;
            break;
        }
        if (!divided) {
            rem.emplace(lead, lead_c);
            f.erase(std::prev(f.end()));
        }
    }
    return rem;
}

WPoly s_polynomial(const WPoly& f, const WPoly& g, const MonomialOrder& ord) {
    const Monomial& mf = f.rbegin()->first;
    const Monomial& mg = g.rbegin()->first;
    Monomial l = Monomial::lcm(mf, mg);
    WPoly s{AscendingBy{&ord}};
    add_scaled(s, f, l.divide(mf), f.rbegin()->second.inverse(), ord);
    add_scaled(s, g, l.divide(mg), -(g.rbegin()->second.inverse()), ord);
    return s;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

} // namespace

std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& generators,
                                         const MonomialOrder& order) {
    RingPtr ring;
    for (const auto& g : generators) {
        if (g.ring()) {
            if (!ring) ring = g.ring();
            require_same_ring(ring, g.ring(), "groebner");
        }
    }
    std::vector<WPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        WPoly w = to_working(g, order);
        make_monic(w);
        basis.push_back(std::move(w));
    }

    auto pair_key = [](std::size_t i, std::size_t j) {
        return std::make_pair(std::min(i, j), std::max(i, j));
    };
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].rbegin()->first, basis[j].rbegin()->first);
            queue.push_back(Pair{i, j, std::move(l)});
            pending.insert(pair_key(i, j));
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        // Normal strategy: smallest lcm in the order, ties by generator indices.
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            int c = order.compare(queue[k].lcm, queue[best].lcm);
            if (c < 0 || (c == 0 && std::make_pair(queue[k].i, queue[k].j) <
                                        std::make_pair(queue[best].i, queue[best].j)))
                best = k;
        }
        Pair p = std::move(queue[best]);
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
        pending.erase(pair_key(p.i, p.j));

        const Monomial& mi = basis[p.i].rbegin()->first;
        const Monomial& mj = basis[p.j].rbegin()->first;
        if (Monomial::coprime(mi, mj)) continue; // Buchberger's first criterion
        // Chain criterion: some other leading monomial divides the lcm and both
        // side pairs were already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].rbegin()->first.divides(p.lcm)) continue;
            if (!pending.count(pair_key(p.i, k)) && !pending.count(pair_key(p.j, k))) skip = true;
        }
        if (skip) continue;

        WPoly s = s_polynomial(basis[p.i], basis[p.j], order);
        WPoly h = reduce_full(std::move(s), basis, order);
        if (h.empty()) continue;
        make_monic(h);
        basis.push_back(std::move(h));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = basis[i].rbegin()->first;
            const Monomial& mj = basis[j].rbegin()->first;
            if (mj.divides(mi) && !(mi == mj && j > i)) keep[i] = false;
        }
    }
    std::vector<WPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // Autoreduce: fully reduce each element against the others.
    std::vector<WPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        WPoly r = reduce_full(minimal[i], others, order);
        if (!r.empty()) {
            make_monic(r);
            reduced.push_back(std::move(r));
        }
    }

    std::sort(reduced.begin(), reduced.end(), [&](const WPoly& a, const WPoly& b) {
        return order.less(a.rbegin()->first, b.rbegin()->first);
    });

    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (const auto& w : reduced) out.push_back(from_working(ring, w));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    if (f.is_zero()) return f;
    std::vector<WPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (!g.is_zero()) b.push_back(to_working(g, order));
    }
    WPoly r = reduce_full(to_working(f, order), b, order);
    return from_working(f.ring(), r);
}

const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw ValidationError("leading monomial of zero polynomial");
    const auto& terms = f.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (order.less(terms[best].mono, terms[i].mono)) best = i;
    }
    return terms[best].mono;
}

} // namespace jumploci
