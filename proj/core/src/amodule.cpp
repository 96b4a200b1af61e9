#include "jumploci/amodule.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

std::size_t AComplex::rank(int degree) const {
    if (degree < lo || degree > hi()) return 0;
    return ranks[static_cast<std::size_t>(degree - lo)];
}

const AElem& AComplex::entry(int degree, std::size_t r, std::size_t c) const {
    const auto& d = diffs[static_cast<std::size_t>(degree - lo)];
    return d[r * rank(degree) + c];
}

QMatrix AComplex::field_matrix(int degree) const {
    const std::size_t src = rank(degree);
    const std::size_t dst = rank(degree + 1);
    const std::size_t n = table.dim;
    QMatrix m(dst * n, src * n);
    if (degree < lo || degree >= hi()) return m;
    for (std::size_t r = 0; r < dst; ++r) {
        for (std::size_t c = 0; c < src; ++c) {
            QMatrix block = table.mult_matrix(entry(degree, r, c));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(r * n + i, c * n + j) = block.at(i, j);
        }
    }
    return m;
}

Vec AComplex::apply(int degree, const Vec& v) const {
    return field_matrix(degree).apply(v);
}

void AComplex::validate() const {
    if (!ranks.empty() && diffs.size() + 1 != ranks.size())
        throw ValidationError("A-complex: wrong differential count");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k].size() != ranks[k + 1] * ranks[k])
            throw ValidationError("A-complex: differential has wrong shape");
        for (const auto& e : diffs[k])
            if (e.size() != table.dim)
                throw ValidationError("A-complex: entry has wrong coordinate length");
    }
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
        // d.d = 0 with algebra arithmetic.
        const std::size_t a = ranks[k], b = ranks[k + 1], c = ranks[k + 2];
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t j = 0; j < a; ++j) {
                AElem acc = table.zero();
                for (std::size_t m = 0; m < b; ++m) {
                    acc = vec_add(acc, table.mul(diffs[k + 1][i * b + m], diffs[k][m * a + j]));
                }
                if (!vec_is_zero(acc))
                    throw ValidationError("A-complex: composite differential is nonzero");
            }
        }
    }
}

void ArtinianModule::validate() const {
    const std::size_t n = table.dim;
    if (action.size() != n) throw ValidationError("module: one action matrix per basis element");
    if (!(action[0] == QMatrix::identity(dim)))
        throw ValidationError("module: unit does not act as identity");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            QMatrix lhs = action[a] * action[b];
            QMatrix rhs(dim, dim);
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& coeff = table.t[a][b][k];
                if (!coeff.is_zero()) rhs = rhs + action[k].scaled(coeff);
            }
            if (!(lhs == rhs))
                throw ValidationError("module: action does not respect the multiplication table");
        }
    }
}

FreeCheck is_free(const ArtinianModule& m) {
    std::vector<Vec> span;
    for (std::size_t mu = 1; mu < m.table.dim; ++mu) {
        for (std::size_t c = 0; c < m.dim; ++c) span.push_back(m.action[mu].col(c));
    }
    Subspace mM(m.dim, span);
    FreeCheck out;
    out.min_generators = m.dim - mM.dim();
    out.free = (m.dim == out.min_generators * m.table.dim);
    return out;
}

AComplex specialize_complex(const FreeComplex& c, const MapSpec& s) {
    require_same_ring(c.ring(), s.source, "specialize");
    AComplex out;
    out.table = s.target->table();
    out.lo = c.lo();
    out.ranks = c.ranks();
    for (int i = c.lo(); i < c.hi(); ++i) {
        PolyMatrix d = c.diff(i);
        std::vector<AElem> entries;
        entries.reserve(d.rows() * d.cols());
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t cc = 0; cc < d.cols(); ++cc)
                entries.push_back(s.target->eval_polynomial(d.at(r, cc), s.images));
        out.diffs.push_back(std::move(entries));
    }
    out.validate();
    return out;
}

std::optional<Vec> Subquotient::coordinates(const Vec& v) const {
    const std::size_t amb = v.size();
    const std::size_t h = representatives.size();
    const std::size_t dd = denominator.dim();
    QMatrix cols(amb, h + dd);
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t r = 0; r < amb; ++r) cols.at(r, c) = representatives[c][r];
    for (std::size_t c = 0; c < dd; ++c)
        for (std::size_t r = 0; r < amb; ++r) cols.at(r, h + c) = denominator.basis().at(c, r);
    auto x = solve(cols, v);
    if (!x) return std::nullopt;
    return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
}

Subquotient subquotient(const MulTable& table, std::size_t ambient_rank,
                        const std::vector<Vec>& numerator, const std::vector<Vec>& denominator) {
    const std::size_t amb = ambient_rank * table.dim;
    Subspace denom(amb, denominator);

    std::vector<Vec> reps;
    Subspace acc = denom;
    for (const auto& v : numerator) {
        if (acc.contains(v)) continue;
        reps.push_back(v);
        acc = acc.sum(Subspace(amb, {v}));
    }
    const std::size_t h = reps.size();

    // Solve against [reps | denom basis] once per action application.
    const std::size_t denom_dim = denom.dim();
    QMatrix basis_cols(amb, h + denom_dim);
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t r = 0; r < amb; ++r) basis_cols.at(r, c) = reps[c][r];
    for (std::size_t c = 0; c < denom_dim; ++c)
        for (std::size_t r = 0; r < amb; ++r)
            basis_cols.at(r, h + c) = denom.basis().at(c, r);

    auto express = [&](const Vec& v) -> std::optional<Vec> {
        auto x = solve(basis_cols, v);
        if (!x) return std::nullopt;
        return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
    };

    // Blockwise multiplication by each algebra basis element.
    auto act_elem = [&](std::size_t mu, const Vec& v) {
        AElem emu(table.dim, Scalar(0));
        emu[mu] = Scalar(1);
        Vec out(amb, Scalar(0));
        for (std::size_t block = 0; block < ambient_rank; ++block) {
            AElem piece(v.begin() + static_cast<std::ptrdiff_t>(block * table.dim),
                        v.begin() + static_cast<std::ptrdiff_t>((block + 1) * table.dim));
            AElem prod = table.mul(emu, piece);
            for (std::size_t k = 0; k < table.dim; ++k) out[block * table.dim + k] = prod[k];
        }
        return out;
    };

    Subquotient out;
    out.ambient_rank = ambient_rank;
    out.denominator = std::move(denom);
    out.representatives = reps;
    out.module.table = table;
    out.module.dim = h;
    out.module.action.reserve(table.dim);
    for (std::size_t mu = 0; mu < table.dim; ++mu) {
        QMatrix a(h, h);
        for (std::size_t c = 0; c < h; ++c) {
            Vec image = act_elem(mu, reps[c]);
            auto coords = express(image);
            if (!coords)
                throw ValidationError("subquotient: action leaves the numerator span");
            for (std::size_t r = 0; r < h; ++r) a.at(r, c) = (*coords)[r];
        }
        out.module.action.push_back(std::move(a));
    }
    out.module.validate();
    return out;
}

Subquotient module_cohomology(const AComplex& c, int degree) {
    QMatrix d_out = c.field_matrix(degree);
    QMatrix d_in = c.field_matrix(degree - 1);
    std::vector<Vec> kernel = d_out.kernel_basis();
    // Canonical image basis: row space of the transpose.
    std::vector<Vec> image = d_in.transpose().row_space_basis();
    return subquotient(c.table, c.rank(degree), kernel, image);
}

Subquotient image_module(const MulTable& table, const std::vector<AElem>& entries,
                         std::size_t rows, std::size_t cols) {
    const std::size_t n = table.dim;
    QMatrix expanded(rows * n, cols * n);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            QMatrix block = table.mult_matrix(entries[r * cols + c]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    expanded.at(r * n + i, c * n + j) = block.at(i, j);
        }
    }
    std::vector<Vec> span = expanded.transpose().row_space_basis();
    return subquotient(table, rows, span, {});
}

} // namespace jumploci
