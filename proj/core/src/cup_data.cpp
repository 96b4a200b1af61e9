#include "jumploci/cup_data.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

void CupData::validate() const {
    if (mu2.size() != q) throw ValidationError("cup data: mu2 first index must run over q");
    for (const auto& row : mu2) {
        if (row.size() != q) throw ValidationError("cup data: mu2 second index must run over q");
        for (const auto& v : row)
            if (v.size() != h_obstruction)
                throw ValidationError("cup data: mu2 entry has wrong obstruction dimension");
    }
    if (act_before.size() != q || act_mid.size() != q)
        throw ValidationError("cup data: one action matrix per direction");
    for (const auto& m : act_before)
        if (m.rows() != h_mid || m.cols() != h_before)
            throw ValidationError("cup data: act_before has wrong shape");
    for (const auto& m : act_mid)
        if (m.rows() != h_after || m.cols() != h_mid)
            throw ValidationError("cup data: act_mid has wrong shape");
}

Ideal cone_ideal(const CupData& cup) {
    cup.validate();
    RingPtr ring = make_ring(cup.q);
    std::vector<Polynomial> gens;
    for (std::size_t comp = 0; comp < cup.h_obstruction; ++comp) {
        std::vector<Term> terms;
        for (std::size_t nu = 0; nu < cup.q; ++nu) {
            for (std::size_t mu = 0; mu < cup.q; ++mu) {
                const Scalar& c = cup.mu2[nu][mu][comp];
                if (c.is_zero()) continue;
                Monomial m(cup.q);
                ++m.e[nu];
                ++m.e[mu];
                terms.push_back(Term{std::move(m), c});
            }
        }
        Polynomial p(ring, std::move(terms));
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return Ideal(ring, std::move(gens));
}

AnnihilatorResult annihilator_subspace(const CupData& cup) {
    cup.validate();
    // One linear constraint per (source basis vector, target coordinate).
    std::vector<Vec> rows;
    auto add_constraints = [&](const std::vector<QMatrix>& act, std::size_t src, std::size_t dst) {
        for (std::size_t t = 0; t < src; ++t) {
            for (std::size_t u = 0; u < dst; ++u) {
                Vec row(cup.q, Scalar(0));
                bool nonzero = false;
                for (std::size_t nu = 0; nu < cup.q; ++nu) {
                    row[nu] = act[nu].at(u, t);
                    nonzero = nonzero || !row[nu].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    };
    add_constraints(cup.act_mid, cup.h_mid, cup.h_after);
    add_constraints(cup.act_before, cup.h_before, cup.h_mid);

    QMatrix constraints = QMatrix::from_rows(rows, cup.q);
    Subspace space(cup.q, constraints.kernel_basis());

    RingPtr ring = make_ring(cup.q);
    std::vector<Polynomial> gens;
    for (const auto& row : constraints.row_space_basis()) {
        std::vector<Term> terms;
        for (std::size_t nu = 0; nu < cup.q; ++nu) {
            if (row[nu].is_zero()) continue;
            Monomial m(cup.q);
            m.e[nu] = 1;
            terms.push_back(Term{std::move(m), row[nu]});
        }
        gens.push_back(Polynomial(ring, std::move(terms)));
    }
    return AnnihilatorResult{std::move(space), Ideal(ring, std::move(gens))};
}

} // namespace jumploci
