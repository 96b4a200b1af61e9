#include "jumploci/verify_artinian.hpp"

#include "jumploci/errors.hpp"

namespace jumploci {

Prop21Verdict verify_prop21(const FreeComplex& c, const MapSpec& s, int i, long k) {
    Prop21Verdict v;
    v.k = k;
    v.fiber_dim = fiber_cohomology_dim(c, s.point, i);
    v.precondition_ok = (v.fiber_dim == k);
    if (!v.precondition_ok) return v;

    Ideal kernel = comorphism_kernel(s);
    Ideal jump = jump_ideal(c, i, k);
    v.side_schematic = kernel.contains(jump);

    AComplex ac = specialize_complex(c, s);
    Subquotient h = module_cohomology(ac, i);
    v.cohomology_field_dim = h.module.dim;
    v.freeness = is_free(h.module);
    v.side_free = v.freeness.free && v.freeness.min_generators == static_cast<std::size_t>(k);
    v.equivalent = (v.side_schematic == v.side_free);
    return v;
}

AElem algebra_determinant(const MulTable& table, const std::vector<AElem>& entries,
                          std::size_t n) {
    if (n == 0) return table.one();
    if (n == 1) return entries[0];
    AElem acc = table.zero();
    // Expand along the first row; n stays tiny here.
    for (std::size_t c = 0; c < n; ++c) {
        if (vec_is_zero(entries[c])) continue;
        std::vector<AElem> sub;
        sub.reserve((n - 1) * (n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                sub.push_back(entries[r * n + cc]);
            }
        }
        AElem term = table.mul(entries[c], algebra_determinant(table, sub, n - 1));
        acc = (c % 2 == 0) ? vec_add(acc, term) : vec_sub(acc, term);
    }
    return acc;
}

namespace {

std::vector<std::vector<std::size_t>> combos(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// All c x c minors of an A-matrix vanish identically.
bool minors_vanish(const MulTable& table, const std::vector<AElem>& sigma, std::size_t rows,
                   std::size_t cols, std::size_t c) {
    if (c > rows || c > cols) return true; // no minors of that size
    for (const auto& rs : combos(rows, c)) {
        for (const auto& cs : combos(cols, c)) {
            std::vector<AElem> sub;
            sub.reserve(c * c);
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < c; ++j) sub.push_back(sigma[rs[i] * cols + cs[j]]);
            if (!vec_is_zero(algebra_determinant(table, sub, c))) return false;
        }
    }
    return true;
}

} // namespace

LemmaImageVerdict verify_lemma_image_free(const ArtinianAlgebra& a,
                                          const std::vector<AElem>& sigma, std::size_t rows,
                                          std::size_t cols, long c) {
    if (sigma.size() != rows * cols)
        throw ValidationError("lemma image: matrix shape mismatch");
    LemmaImageVerdict v;
    if (c < 1) throw ValidationError("lemma image: c must be positive");

    v.minors_vanish = minors_vanish(a.table(), sigma, rows, cols, static_cast<std::size_t>(c));

    // Residue matrix rank at least c-1, i.e. I_{c-1} of the residue is the field.
    QMatrix residue(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t cc = 0; cc < cols; ++cc) residue.at(r, cc) = a.residue(sigma[r * cols + cc]);
    v.residue_full = (c - 1 <= 0) || residue.rank() >= static_cast<std::size_t>(c - 1);

    v.precondition_ok = v.minors_vanish && v.residue_full;
    if (!v.precondition_ok) return v;

    Subquotient image = image_module(a.table(), sigma, rows, cols);
    v.image_field_dim = image.module.dim;
    v.freeness = is_free(image.module);
    v.conclusion = v.freeness.free && v.freeness.min_generators == static_cast<std::size_t>(c - 1);
    return v;
}

} // namespace jumploci
