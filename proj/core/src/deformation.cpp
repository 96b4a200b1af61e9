#include "jumploci/deformation.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

Subspace derivative_space(const MapSpec& s) {
    const std::size_t q = s.source->nvars();
    const std::size_t dim = s.target->dim();
    std::vector<Vec> rows;
    for (std::size_t mu = 1; mu < dim; ++mu) {
        Vec row(q, Scalar(0));
        for (std::size_t nu = 0; nu < q; ++nu) row[nu] = s.images[nu][mu];
        rows.push_back(std::move(row));
    }
    return Subspace(q, rows);
}

namespace {

void require_based_at(const MapSpec& s, const RationalPoint& p) {
    if (s.point.size() != p.size())
        throw ValidationError("deformation: point dimension mismatch");
    for (std::size_t v = 0; v < p.size(); ++v)
        if (!(s.point[v] == p[v]))
            throw ValidationError("deformation: map is not based at the given point");
}

// Family over an explicit multiplication table, with images already expressed
// in that table's basis. Shared by the canonical-basis and the
// filtration-compatible pipelines.
AComplex family_over_table(const AlgebraModel& model, const MulTable& table,
                           const std::vector<AElem>& images) {
    AComplex out;
    out.table = table;
    out.lo = 0;
    for (int k = 0; k <= model.top(); ++k) out.ranks.push_back(model.dim(k));
    for (int k = 0; k < model.top(); ++k) {
        const std::size_t rows = model.dim(k + 1), cols = model.dim(k);
        std::vector<AElem> entries(rows * cols, AElem(table.dim, Scalar(0)));
        for (std::size_t nu = 0; nu < model.q(); ++nu) {
            QMatrix b = model.action(nu, k);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    if (b.at(r, c).is_zero()) continue;
                    entries[r * cols + c] =
                        vec_add(entries[r * cols + c], vec_scale(images[nu], b.at(r, c)));
                }
            }
        }
        out.diffs.push_back(std::move(entries));
    }
    out.validate();
    return out;
}

} // namespace

AComplex aomoto_family(const AlgebraModel& model, const RationalPoint& p, const MapSpec& s) {
    if (s.source->nvars() != model.q())
        throw ValidationError("family: direction count mismatch");
    require_based_at(s, p);
    if (!model.on_cone(p)) throw ValidationError("family: base point is off the cone");
    return family_over_table(model, s.target->table(), s.images);
}

PropMainVerdict verify_prop_main(const AlgebraModel& model, const RationalPoint& p,
                                 const MapSpec& s, int i) {
    PropMainVerdict v;
    require_based_at(s, p);
    v.precondition_ok = model.on_cone(p);
    if (!v.precondition_ok) return v;

    FiberDecomposition fiber = fiber_decomposition(model, p, i);
    v.k = static_cast<long>(fiber.h_dim());
    const std::size_t dim_a = s.target->dim();

    AComplex family = aomoto_family(model, p, s);
    Subquotient h = module_cohomology(family, i);
    v.h_field_dim = h.module.dim;
    v.freeness = is_free(h.module);
    v.side_free = v.freeness.free && v.freeness.min_generators == static_cast<std::size_t>(v.k);

    CupData cup = fiber_cup_data(model, p, i);
    AnnihilatorResult ann = annihilator_subspace(cup);
    v.side_annihilated = ann.space.contains(derivative_space(s));
    v.equivalent = (v.side_free == v.side_annihilated);

    v.shadow_dim_ok = (v.h_field_dim == dim_a * static_cast<std::size_t>(v.k));

    // Restriction onto the fiber: residue of each representative, surjective
    // iff the residues together with the fiber image span the fiber kernel.
    std::vector<Vec> residues;
    for (const auto& rep : h.representatives) {
        Vec res(model.dim(i), Scalar(0));
        for (std::size_t block = 0; block < model.dim(i); ++block)
            res[block] = rep[block * dim_a];
        residues.push_back(std::move(res));
    }
    Subspace span = fiber.image;
    if (!residues.empty()) span = span.sum(Subspace(model.dim(i), residues));
    v.shadow_surjective = span.contains(fiber.kernel);

    bool at_origin = vec_is_zero(p);
    v.closedness_checked = at_origin;
    if (at_origin) {
        v.closedness_ok = true;
        QMatrix d = family.field_matrix(i);
        for (const auto& xi : fiber.reps) {
            for (std::size_t mu = 0; mu < dim_a && v.closedness_ok; ++mu) {
                Vec elem(model.dim(i) * dim_a, Scalar(0));
                for (std::size_t block = 0; block < model.dim(i); ++block)
                    elem[block * dim_a + mu] = xi[block];
                if (!vec_is_zero(d.apply(elem))) v.closedness_ok = false;
            }
        }
    }
    return v;
}

BoundaryVerdict verify_boundary_formula(const AlgebraModel& model, const RationalPoint& p,
                                        const MapSpec& s, std::size_t j, int i) {
    require_based_at(s, p);
    if (!model.on_cone(p)) throw ValidationError("boundary: base point is off the cone");
    CompositionSeries series = composition_series(*s.target);
    const std::size_t l = series.length();
    if (j >= l) throw ValidationError("boundary: filtration index out of range");

    // Everything below runs in the filtration-compatible basis.
    std::vector<AElem> images;
    images.reserve(s.images.size());
    for (const auto& img : s.images) images.push_back(series.to_compatible.apply(img));

    const MulTable table_jp1 = series.compat_table.truncated(j + 2); // A / m_{j+1}
    const MulTable table_j = series.compat_table.truncated(j + 1);   // A / m_j
    auto truncate = [](const std::vector<AElem>& imgs, std::size_t d) {
        std::vector<AElem> out;
        out.reserve(imgs.size());
        for (const auto& img : imgs)
            out.push_back(AElem(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(d)));
        return out;
    };
    AComplex quotient_jp1 = family_over_table(model, table_jp1, truncate(images, j + 2));
    AComplex quotient_j = family_over_table(model, table_j, truncate(images, j + 1));

    FiberDecomposition before = fiber_decomposition(model, p, i - 1);
    FiberDecomposition mid = fiber_decomposition(model, p, i);
    const std::size_t h_before = before.h_dim();
    const std::size_t h_mid = mid.h_dim();
    const std::size_t m_before = model.dim(i - 1);
    const std::size_t m_mid = model.dim(i);

    BoundaryVerdict v;
    v.snake = QMatrix(h_mid, h_before);

    QMatrix d_j = quotient_j.field_matrix(i - 1);
    QMatrix d_jp1 = quotient_jp1.field_matrix(i - 1);
    for (std::size_t t = 0; t < h_before; ++t) {
        const Vec& zeta = before.reps[t];
        // zeta placed on the class of alpha_j inside the j-th quotient family.
        Vec in_quot(m_before * (j + 1), Scalar(0));
        for (std::size_t block = 0; block < m_before; ++block)
            in_quot[block * (j + 1) + j] = zeta[block];
        if (!vec_is_zero(d_j.apply(in_quot)))
            throw ValidationError("boundary: inclusion image is not closed");

        // Lift, differentiate, and read off the new filtration coordinate.
        Vec lift(m_before * (j + 2), Scalar(0));
        for (std::size_t block = 0; block < m_before; ++block)
            lift[block * (j + 2) + j] = zeta[block];
        Vec dw = d_jp1.apply(lift);
        Vec u(m_mid, Scalar(0));
        for (std::size_t block = 0; block < m_mid; ++block) {
            for (std::size_t c = 0; c + 1 < j + 2; ++c) {
                if (!dw[block * (j + 2) + c].is_zero())
                    throw ValidationError("boundary: differential does not land in the socle");
            }
            u[block] = dw[block * (j + 2) + (j + 1)];
        }
        Vec cls = mid.class_of(u);
        for (std::size_t r = 0; r < h_mid; ++r) v.snake.at(r, t) = cls[r];
    }

    // Step derivative row: the coefficient of the new filtration generator in
    // s*(x_nu) * b_j; at j = 0 this is the literal first-order row.
    v.step_row.assign(model.q(), Scalar(0));
    v.literal_row.assign(model.q(), Scalar(0));
    AElem alpha_j(series.compat_table.dim, Scalar(0));
    alpha_j[j] = Scalar(1);
    for (std::size_t nu = 0; nu < model.q(); ++nu) {
        AElem prod = series.compat_table.mul(images[nu], alpha_j);
        v.step_row[nu] = prod[j + 1];
        v.literal_row[nu] = images[nu][j + 1];
    }

    auto cup_matrix = [&](const Vec& row) {
        QMatrix m(h_mid, h_before);
        for (std::size_t t = 0; t < h_before; ++t) {
            Vec w(m_mid, Scalar(0));
            for (std::size_t nu = 0; nu < model.q(); ++nu) {
                if (row[nu].is_zero()) continue;
                w = vec_add(w, vec_scale(model.action(nu, i - 1).apply(before.reps[t]), row[nu]));
            }
            Vec cls = mid.class_of(w);
            for (std::size_t r = 0; r < h_mid; ++r) m.at(r, t) = cls[r];
        }
        return m;
    };
    v.cup_step = cup_matrix(v.step_row);
    v.cup_literal = cup_matrix(v.literal_row);
    v.matches_step = (v.snake == v.cup_step);
    v.matches_literal = (v.snake == v.cup_literal);
    return v;
}

Ideal origin_power_ideal(const RingPtr& ring, std::size_t n) {
    std::vector<Polynomial> gens;
    std::vector<std::uint32_t> exps(ring->nvars(), 0);
    auto rec = [&](auto&& self, std::size_t var, std::size_t remaining) -> void {
        if (var + 1 == ring->nvars()) {
            exps[var] = static_cast<std::uint32_t>(remaining);
            gens.push_back(Polynomial::from_monomial(ring, Monomial(exps)));
            return;
        }
        for (std::size_t e = 0; e <= remaining; ++e) {
            exps[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, remaining - e);
        }
    };
    if (ring->nvars() == 0) return Ideal::zero(ring);
    rec(rec, 0, n);
    return Ideal(ring, std::move(gens));
}

LocalModelVerdict verify_local_model(const AlgebraModel& model, const RationalPoint& p, int i,
                                     long k, std::size_t depth) {
    LocalModelVerdict v{false, 0, {}, false, Ideal::zero(make_ring(model.q())),
                        Ideal::zero(make_ring(model.q()))};
    FiberDecomposition fiber = fiber_decomposition(model, p, i);
    v.fiber_dim = static_cast<long>(fiber.h_dim());
    v.precondition_ok = (v.fiber_dim == k) && model.on_cone(p);
    if (!v.precondition_ok) return v;

    FreeComplex family = model.family().translate(p);
    v.jump = jump_ideal(family, i, k);

    CupData cup = fiber_cup_data(model, p, i);
    v.linear = annihilator_subspace(cup).linear_ideal;

    v.all_equal = true;
    for (std::size_t n = 1; n <= depth; ++n) {
        Ideal power = origin_power_ideal(family.ring(), n);
        bool equal = ideal_sum(v.jump, power).equals(ideal_sum(v.linear, power));
        v.equal_at_depth.push_back(equal);
        v.all_equal = v.all_equal && equal;
    }
    return v;
}

} // namespace jumploci
