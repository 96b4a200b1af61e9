#include "jumploci/casegen.hpp"

namespace jumploci {
namespace casegen {

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree) {
    const std::size_t n = ring->nvars();
    std::vector<Term> terms;
    // Walk all monomials of degree <= max_degree, keeping each with chance 1/3.
    std::vector<std::uint32_t> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
        if (var == n) {
            if (rng.chance(1, 3)) {
                Scalar c = rng.small_rational();
                if (!c.is_zero()) terms.push_back(Term{Monomial(exps), c});
            }
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, max_degree);
    return Polynomial(ring, std::move(terms));
}

FreeComplex random_complex(Rng& rng) {
    RingPtr ring = make_ring({"x", "y"});
    FreeComplex total = FreeComplex::empty(ring);
    const std::size_t blocks = 1 + rng.below(3);
    for (std::size_t b = 0; b < blocks; ++b) {
        int offset = static_cast<int>(rng.range(-1, 1));
        FreeComplex block = FreeComplex::empty(ring);
        switch (rng.below(3)) {
            case 0: {
                // Pair block: 0 -> R -> R^2 -> R -> 0 on two polynomials.
                Polynomial f = random_polynomial(rng, ring, 2);
                Polynomial g = random_polynomial(rng, ring, 2);
                PolyMatrix d0(ring, 2, 1), d1(ring, 1, 2);
                d0.at(0, 0) = f;
                d0.at(1, 0) = g;
                d1.at(0, 0) = -g;
                d1.at(0, 1) = f;
                block = FreeComplex(ring, 0, {1, 2, 1}, {d0, d1});
                break;
            }
            case 1: {
                // Two-term block with a random matrix.
                std::size_t rows = 1 + rng.below(2);
                std::size_t cols = 1 + rng.below(2);
                PolyMatrix d(ring, rows, cols);
                for (std::size_t r = 0; r < rows; ++r)
                    for (std::size_t c = 0; c < cols; ++c)
                        d.at(r, c) = random_polynomial(rng, ring, 2);
                block = FreeComplex(ring, 0, {cols, rows}, {d});
                break;
            }
            default: {
                // Acyclic identity summand.
                PolyMatrix d(ring, 1, 1);
                d.at(0, 0) = Polynomial::constant(ring, Scalar(1));
                block = FreeComplex(ring, 0, {1, 1}, {d});
                break;
            }
        }
        FreeComplex candidate = direct_sum(total, block.shifted(offset));
        bool capped = false;
        for (int i = candidate.lo(); i <= candidate.hi(); ++i)
            if (candidate.rank(i) > 3) capped = true;
        if (!capped) total = std::move(candidate);
    }
    if (total.ranks().empty()) {
        PolyMatrix d(ring, 1, 1);
        d.at(0, 0) = Polynomial::variable(ring, 0);
        total = FreeComplex(ring, 0, {1, 1}, {d});
    }
    return total;
}

AlgebraPtr random_algebra(Rng& rng) {
    static const std::vector<AlgebraPtr> catalog = algebra_catalog();
    return catalog[rng.below(catalog.size())];
}

MapSpec random_map(Rng& rng, const RingPtr& source, const AlgebraPtr& algebra,
                   const RationalPoint& base) {
    std::vector<AElem> images;
    for (std::size_t v = 0; v < source->nvars(); ++v) {
        AElem img(algebra->dim(), Scalar(0));
        img[0] = base[v];
        for (std::size_t mu = 1; mu < algebra->dim(); ++mu) {
            if (rng.chance(1, 2)) img[mu] = Scalar(rng.range(-2, 2));
        }
        images.push_back(std::move(img));
    }
    return make_map_spec(source, algebra, std::move(images));
}

Prop21Case prop21_case(Rng& rng) {
    FreeComplex complex = random_complex(rng);
    AlgebraPtr algebra = random_algebra(rng);
    RationalPoint p = rng.point(complex.ring()->nvars());
    MapSpec map = random_map(rng, complex.ring(), algebra, p);
    int i = static_cast<int>(rng.range(complex.lo(), complex.hi()));
    long k = fiber_cohomology_dim(complex, p, i);
    if (rng.chance(1, 8)) k += 1; // exercise the precondition-skip path
    return Prop21Case{std::move(complex), std::move(algebra), std::move(map), i, k};
}

LemmaImageCase lemma_image_case(Rng& rng) {
    AlgebraPtr algebra = random_algebra(rng);
    const std::size_t dim = algebra->dim();
    std::size_t rows = 1 + rng.below(3);
    std::size_t cols = 1 + rng.below(3);
    long c = 1 + static_cast<long>(rng.below(std::min(rows, cols) + 1));
    const std::size_t inner = static_cast<std::size_t>(c - 1);

    auto random_m_part = [&](AElem& e) {
        for (std::size_t mu = 1; mu < dim; ++mu)
            if (rng.chance(1, 3)) e[mu] = Scalar(rng.range(-2, 2));
    };
    // B: rows x inner with an identity block on top, C: inner x cols with an
    // identity block on the left; both perturbed inside the maximal ideal.
    std::vector<AElem> bm(rows * inner, AElem(dim, Scalar(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t cc = 0; cc < inner; ++cc) {
            AElem& e = bm[r * inner + cc];
            if (r == cc) e[0] = Scalar(1);
            else if (r >= inner && rng.chance(1, 2)) e[0] = Scalar(rng.range(-1, 1));
            random_m_part(e);
        }
    }
    std::vector<AElem> cm(inner * cols, AElem(dim, Scalar(0)));
    for (std::size_t r = 0; r < inner; ++r) {
        for (std::size_t cc = 0; cc < cols; ++cc) {
            AElem& e = cm[r * cols + cc];
            if (r == cc) e[0] = Scalar(1);
            else if (cc >= inner && rng.chance(1, 2)) e[0] = Scalar(rng.range(-1, 1));
            random_m_part(e);
        }
    }
    std::vector<AElem> sigma(rows * cols, AElem(dim, Scalar(0)));
    const MulTable& table = algebra->table();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t cc = 0; cc < cols; ++cc) {
            AElem acc(dim, Scalar(0));
            for (std::size_t m = 0; m < inner; ++m)
                acc = vec_add(acc, table.mul(bm[r * inner + m], cm[m * cols + cc]));
            sigma[r * cols + cc] = std::move(acc);
        }
    }
    return LemmaImageCase{std::move(algebra), std::move(sigma), rows, cols, c};
}

PropMainCase prop_main_case(Rng& rng, std::size_t max_g) {
    std::size_t g = 1 + rng.below(max_g);
    RationalPoint p(g, Scalar(0));
    if (rng.chance(1, 4)) p = rng.point(g);
    AlgebraPtr algebra = random_algebra(rng);
    MapSpec map = random_map(rng, make_ring(g), algebra, p);
    int i = static_cast<int>(rng.below(g + 1));
    return PropMainCase{g, std::move(p), std::move(algebra), std::move(map), i};
}

BoundaryCase boundary_case(Rng& rng, std::size_t max_g) {
    std::size_t g = 1 + rng.below(max_g);
    RationalPoint p(g, Scalar(0));
    if (rng.chance(1, 4)) p = rng.point(g);
    AlgebraPtr algebra = random_algebra(rng);
    MapSpec map = random_map(rng, make_ring(g), algebra, p);
    std::size_t j = rng.below(algebra->maximal_ideal_dim());
    int i = 1 + static_cast<int>(rng.below(g));
    return BoundaryCase{g, std::move(p), std::move(algebra), std::move(map), j, i};
}

Ideal random_ideal(Rng& rng) {
    std::size_t nvars = 2 + rng.below(2);
    RingPtr ring = nvars == 2 ? make_ring({"x", "y"}) : make_ring({"x", "y", "z"});
    std::size_t count = 2 + rng.below(3);
    std::vector<Polynomial> gens;
    for (std::size_t g = 0; g < count; ++g)
        gens.push_back(random_polynomial(rng, ring, 1 + static_cast<std::uint32_t>(rng.below(3))));
    return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> shuffled_generators(Rng& rng, const Ideal& ideal) {
    std::vector<Polynomial> gens = ideal.generators();
    // Fisher-Yates with the suite PRNG.
    for (std::size_t i = gens.size(); i > 1; --i) {
        std::size_t j = rng.below(i);
        std::swap(gens[i - 1], gens[j]);
    }
    for (auto& g : gens) {
        Scalar c(rng.range(1, 3), rng.chance(1, 2) ? 2 : 1);
        if (rng.chance(1, 2)) c = -c;
        g = g * c;
    }
    if (!gens.empty() && rng.chance(1, 2)) gens.push_back(gens[rng.below(gens.size())]);
    return gens;
}

} // namespace casegen
} // namespace jumploci
