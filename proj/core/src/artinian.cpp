#include "jumploci/artinian.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

AElem MulTable::one() const {
    AElem v(dim, Scalar(0));
    v[0] = Scalar(1);
    return v;
}

AElem MulTable::mul(const AElem& a, const AElem& b) const {
    AElem out(dim, Scalar(0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            const AElem& cell = t[i][j];
            for (std::size_t k = 0; k < dim; ++k) {
                if (!cell[k].is_zero()) out[k] += f * cell[k];
            }
        }
    }
    return out;
}

QMatrix MulTable::mult_matrix(const AElem& a) const {
    QMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            const AElem& cell = t[i][j];
            for (std::size_t k = 0; k < dim; ++k) {
                if (!cell[k].is_zero()) m.at(k, j) += a[i] * cell[k];
            }
        }
    }
    return m;
}

MulTable MulTable::truncated(std::size_t dim_j) const {
    MulTable out;
    out.dim = dim_j;
    out.t.assign(dim_j, std::vector<AElem>(dim_j));
    for (std::size_t a = 0; a < dim_j; ++a) {
        for (std::size_t b = 0; b < dim_j; ++b) {
            AElem cell(t[a][b].begin(), t[a][b].begin() + static_cast<std::ptrdiff_t>(dim_j));
            out.t[a][b] = std::move(cell);
        }
    }
    return out;
}

namespace {

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

} // namespace

ArtinianAlgebra ArtinianAlgebra::build(Ideal presentation) {
    auto sm = presentation.standard_monomials();
    if (!sm)
        throw ValidationError("algebra: quotient is not finite-dimensional");
    if (sm->empty())
        throw ValidationError("algebra: quotient is the zero ring");
    std::vector<Monomial> basis = *sm; // sorted by degree then input order
    if (!basis[0].is_one())
        throw ValidationError("algebra: basis has no unit");
    const std::size_t dim = basis.size();
    const RingPtr& ring = presentation.ring();

    // Local iff every variable is nilpotent; iterated normal-form powers
    // up to exponent dim+1 decide this exactly.
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Polynomial power = presentation.normal_form(Polynomial::variable(ring, v));
        bool nilpotent = power.is_zero();
        for (std::size_t e = 1; e <= dim && !nilpotent; ++e) {
            power = presentation.normal_form(power * Polynomial::variable(ring, v));
            nilpotent = power.is_zero();
        }
        if (!nilpotent)
            throw ValidationError("algebra: not local, variable " + ring->vars[v] +
                                  " is not nilpotent");
    }

    std::map<Monomial, std::size_t, LexLess> index;
    for (std::size_t i = 0; i < dim; ++i) index.emplace(basis[i], i);

    MulTable table;
    table.dim = dim;
    table.t.assign(dim, std::vector<AElem>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            Polynomial prod = presentation.normal_form(
                Polynomial::from_monomial(ring, basis[a] * basis[b]));
            AElem coords(dim, Scalar(0));
            for (const auto& term : prod.terms()) {
                auto it = index.find(term.mono);
                if (it == index.end())
                    throw ValidationError("algebra: normal form left the staircase");
                coords[it->second] = term.coeff;
            }
            table.t[a][b] = coords;
            table.t[b][a] = std::move(coords);
        }
    }

    // Exhaustive associativity spot-check; dimensions here are single digits.
    auto unit_vec = [dim](std::size_t idx) {
        AElem v(dim, Scalar(0));
        v[idx] = Scalar(1);
        return v;
    };
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t c = 0; c < dim; ++c) {
                AElem left = table.mul(table.t[a][b], unit_vec(c));
                AElem right = table.mul(unit_vec(a), table.t[b][c]);
                if (left != right)
                    throw ValidationError("algebra: multiplication table is not associative");
            }
        }
    }

    return ArtinianAlgebra(std::move(presentation), std::move(basis), std::move(table));
}

AElem ArtinianAlgebra::basis_elem(std::size_t idx) const {
    AElem v(dim(), Scalar(0));
    v[idx] = Scalar(1);
    return v;
}

std::size_t ArtinianAlgebra::basis_index(const Monomial& m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == m) return i;
    throw ValidationError("algebra: monomial outside the staircase");
}

AElem ArtinianAlgebra::from_polynomial(const Polynomial& p) const {
    Polynomial nf = presentation_.normal_form(p);
    AElem coords(dim(), Scalar(0));
    for (const auto& term : nf.terms()) coords[basis_index(term.mono)] = term.coeff;
    return coords;
}

Polynomial ArtinianAlgebra::lift(const AElem& a) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!a[i].is_zero()) terms.push_back(Term{basis_[i], a[i]});
    }
    return Polynomial(poly_ring(), std::move(terms));
}

AElem ArtinianAlgebra::eval_polynomial(const Polynomial& p,
                                       const std::vector<AElem>& images) const {
    if (images.size() != p.ring()->nvars())
        throw ValidationError("algebra evaluate: image count mismatch");
    AElem total = zero();
    for (const auto& term : p.terms()) {
        AElem v = one();
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::uint32_t e = 0; e < term.mono.e[i]; ++e) v = mul(v, images[i]);
        }
        total = vec_add(total, vec_scale(v, term.coeff));
    }
    return total;
}

CompositionSeries composition_series(const ArtinianAlgebra& algebra) {
    const std::size_t dim = algebra.dim();
    const std::size_t l = dim - 1;
    const MulTable& table = algebra.table();

    // m-adic filtration m, m^2, ..., 0 as coordinate subspaces.
    std::vector<Vec> m_rows;
    for (std::size_t i = 1; i < dim; ++i) m_rows.push_back(algebra.basis_elem(i));
    std::vector<Subspace> adic{Subspace(dim, m_rows)};
    while (adic.back().dim() > 0) {
        const Subspace& cur = adic.back();
        std::vector<Vec> next_rows;
        for (std::size_t mu = 1; mu < dim; ++mu) {
            for (std::size_t r = 0; r < cur.basis().rows(); ++r) {
                next_rows.push_back(table.mul(algebra.basis_elem(mu), cur.basis().row(r)));
            }
        }
        Subspace next(dim, next_rows);
        if (next.dim() >= cur.dim())
            throw ValidationError("composition series: filtration does not descend");
        adic.push_back(std::move(next));
    }

    CompositionSeries series;
    series.chain.push_back(adic[0]);
    for (std::size_t t = 0; t + 1 < adic.size(); ++t) {
        const Subspace& upper = adic[t];
        const Subspace& lower = adic[t + 1];
        // Candidates to peel off, standard basis vectors first in canonical
        // order, RREF rows of the layer as a completion fallback.
        std::vector<Vec> candidates;
        for (std::size_t i = 1; i < dim; ++i) candidates.push_back(algebra.basis_elem(i));
        for (std::size_t r = 0; r < upper.basis().rows(); ++r)
            candidates.push_back(upper.basis().row(r));

        std::vector<Vec> picks;
        Subspace acc = lower;
        for (const auto& cand : candidates) {
            if (picks.size() == upper.dim() - lower.dim()) break;
            if (!upper.contains(cand) || acc.contains(cand)) continue;
            picks.push_back(cand);
            acc = acc.sum(Subspace(dim, {cand}));
        }
        if (picks.size() != upper.dim() - lower.dim())
            throw ValidationError("composition series: could not complete a layer");

        // Peeling u_1 first: intermediate subspaces keep the later picks.
        for (std::size_t s = 1; s <= picks.size(); ++s) {
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < lower.basis().rows(); ++r)
                rows.push_back(lower.basis().row(r));
            for (std::size_t r = s; r < picks.size(); ++r) rows.push_back(picks[r]);
            series.chain.push_back(Subspace(dim, rows));
            series.flag.push_back(picks[s - 1]);
        }
    }

    if (series.flag.size() != l || series.chain.size() != l + 1)
        throw ValidationError("composition series: wrong length");

    // Ideal property of every chain member (automatic between m^t and m^{t+1},
    // verified anyway) and one-dimensional quotients.
    for (std::size_t j = 0; j < series.chain.size(); ++j) {
        const Subspace& ideal = series.chain[j];
        if (ideal.dim() != l - j)
            throw ValidationError("composition series: quotient step is not one-dimensional");
        for (std::size_t mu = 1; mu < dim; ++mu) {
            for (std::size_t r = 0; r < ideal.basis().rows(); ++r) {
                if (!ideal.contains(table.mul(algebra.basis_elem(mu), ideal.basis().row(r))))
                    throw ValidationError("composition series: chain member is not an ideal");
            }
        }
    }

    // Change of basis to [1, b_1, ..., b_l].
    QMatrix C(dim, dim);
    C.at(0, 0) = Scalar(1);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t r = 0; r < dim; ++r) C.at(r, j + 1) = series.flag[j][r];
    series.from_compatible = C;

    QMatrix aug(dim, 2 * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) aug.at(r, c) = C.at(r, c);
        aug.at(r, dim + r) = Scalar(1);
    }
    auto pivots = aug.rref();
    // The identity block keeps the total rank at dim; invertibility of the
    // flag needs the pivots to sit exactly in the left block.
    for (std::size_t r = 0; r < dim; ++r)
        if (r >= pivots.size() || pivots[r] != r)
            throw ValidationError("composition series: flag basis is singular");
    QMatrix Cinv(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) Cinv.at(r, c) = aug.at(r, dim + c);
    series.to_compatible = Cinv;

    series.compat_table.dim = dim;
    series.compat_table.t.assign(dim, std::vector<AElem>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            AElem prod = table.mul(C.col(a), C.col(b));
            series.compat_table.t[a][b] = Cinv.apply(prod);
        }
    }
    return series;
}

std::vector<AlgebraPtr> algebra_catalog() {
    auto quotient = [](std::vector<std::string> vars,
                       const std::vector<std::vector<std::pair<std::vector<std::uint32_t>, long>>>&
                           gens) {
        RingPtr ring = make_ring(std::move(vars));
        std::vector<Polynomial> ps;
        for (const auto& g : gens) {
            std::vector<Term> terms;
            for (const auto& [exps, coeff] : g)
                terms.push_back(Term{Monomial(exps), Scalar(coeff)});
            ps.push_back(Polynomial(ring, std::move(terms)));
        }
        return std::make_shared<const ArtinianAlgebra>(
            ArtinianAlgebra::build(Ideal(ring, std::move(ps))));
    };

    std::vector<AlgebraPtr> out;
    // k[e]/(e^2)
    out.push_back(quotient({"e"}, {{{{2}, 1}}}));
    // k[e]/(e^3)
    out.push_back(quotient({"e"}, {{{{3}, 1}}}));
    // k[u,v]/(u^2, uv, v^2)
    out.push_back(quotient({"u", "v"}, {{{{2, 0}, 1}}, {{{1, 1}, 1}}, {{{0, 2}, 1}}}));
    // k[u,v]/(u,v)^3
    out.push_back(quotient({"u", "v"},
                           {{{{3, 0}, 1}}, {{{2, 1}, 1}}, {{{1, 2}, 1}}, {{{0, 3}, 1}}}));
    return out;
}

} // namespace jumploci
