#include "jumploci/algebra_model.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

namespace {

std::vector<std::vector<std::size_t>> index_subsets(std::size_t g, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < g; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

AlgebraModel AlgebraModel::exterior(std::size_t g) {
    if (g < 1) throw ValidationError("exterior model: need g >= 1");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i <= g; ++i) dims.push_back(binomial(g, i));

    std::vector<std::vector<QMatrix>> action(g);
    for (std::size_t nu = 0; nu < g; ++nu) {
        for (std::size_t k = 0; k < g; ++k) {
            auto source = index_subsets(g, k);
            auto target = index_subsets(g, k + 1);
            QMatrix b(target.size(), source.size());
            for (std::size_t c = 0; c < source.size(); ++c) {
                const auto& set = source[c];
                if (std::find(set.begin(), set.end(), nu) != set.end()) continue;
                std::vector<std::size_t> image(set);
                image.insert(std::upper_bound(image.begin(), image.end(), nu), nu);
                auto it = std::find(target.begin(), target.end(), image);
                std::size_t r = static_cast<std::size_t>(it - target.begin());
                std::size_t below = static_cast<std::size_t>(
                    std::lower_bound(set.begin(), set.end(), nu) - set.begin());
                b.at(r, c) = (below % 2 == 0) ? Scalar(1) : Scalar(-1);
            }
            action[nu].push_back(std::move(b));
        }
    }
    return from_action(std::move(dims), std::move(action), true);
}

AlgebraModel AlgebraModel::from_action(std::vector<std::size_t> dims,
                                       std::vector<std::vector<QMatrix>> action,
                                       bool self_acting) {
    if (dims.empty()) throw ValidationError("model: empty grading");
    const std::size_t q = action.size();
    for (const auto& per_nu : action) {
        if (per_nu.size() + 1 != dims.size())
            throw ValidationError("model: one action matrix per adjacent degree pair");
        for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
            if (per_nu[k].rows() != dims[k + 1] || per_nu[k].cols() != dims[k])
                throw ValidationError("model: action matrix shape mismatch");
        }
    }
    if (self_acting && (dims[0] != 1 || dims.size() < 2 || dims[1] != q))
        throw ValidationError("model: self-acting models need M^0 = k and M^1 = directions");

    // Square-zero identity: all anticommutators vanish, degree by degree.
    for (std::size_t nu = 0; nu < q; ++nu) {
        for (std::size_t mu = nu; mu < q; ++mu) {
            for (std::size_t k = 0; k + 2 < dims.size(); ++k) {
                QMatrix anti = action[nu][k + 1] * action[mu][k] + action[mu][k + 1] * action[nu][k];
                if (!anti.is_zero())
                    throw ValidationError("model: generic differential does not square to zero");
            }
        }
    }
    return AlgebraModel(q, std::move(dims), std::move(action), self_acting);
}

std::size_t AlgebraModel::dim(int degree) const {
    if (degree < 0 || degree > top()) return 0;
    return dims_[static_cast<std::size_t>(degree)];
}

QMatrix AlgebraModel::action(std::size_t nu, int degree) const {
    if (degree >= 0 && degree < top()) return b_[nu][static_cast<std::size_t>(degree)];
    return QMatrix(dim(degree + 1), dim(degree));
}

QMatrix AlgebraModel::fiber_diff(const RationalPoint& p, int degree) const {
    if (p.size() != q_) throw ValidationError("model: point length mismatch");
    QMatrix d(dim(degree + 1), dim(degree));
    for (std::size_t nu = 0; nu < q_; ++nu) {
        if (p[nu].is_zero()) continue;
        d = d + action(nu, degree).scaled(p[nu]);
    }
    return d;
}

bool AlgebraModel::on_cone(const RationalPoint& p) const {
    for (int k = 0; k + 2 <= top(); ++k) {
        if (!(fiber_diff(p, k + 1) * fiber_diff(p, k)).is_zero()) return false;
    }
    return true;
}

FreeComplex AlgebraModel::family() const {
    RingPtr ring = make_ring(q_);
    std::vector<PolyMatrix> diffs;
    for (int k = 0; k < top(); ++k) {
        PolyMatrix d(ring, dim(k + 1), dim(k));
        for (std::size_t nu = 0; nu < q_; ++nu) {
            QMatrix b = action(nu, k);
            Polynomial x = Polynomial::variable(ring, nu);
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    if (b.at(r, c).is_zero()) continue;
                    d.at(r, c) = d.at(r, c) + x * b.at(r, c);
                }
            }
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex(ring, 0, dims_, std::move(diffs));
}

Vec FiberDecomposition::class_of(const Vec& v) const {
    const std::size_t h = reps.size();
    QMatrix cols(ambient, h + image.dim());
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t r = 0; r < ambient; ++r) cols.at(r, c) = reps[c][r];
    for (std::size_t c = 0; c < image.dim(); ++c)
        for (std::size_t r = 0; r < ambient; ++r) cols.at(r, h + c) = image.basis().at(c, r);
    auto x = solve(cols, v);
    if (!x) throw ValidationError("fiber class: vector is not closed");
    return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
}

Vec FiberDecomposition::project_class(const Vec& v) const {
    const std::size_t h = reps.size();
    QMatrix cols(ambient, h + image.dim() + complement.size());
    std::size_t cc = 0;
    for (std::size_t c = 0; c < h; ++c, ++cc)
        for (std::size_t r = 0; r < ambient; ++r) cols.at(r, cc) = reps[c][r];
    for (std::size_t c = 0; c < image.dim(); ++c, ++cc)
        for (std::size_t r = 0; r < ambient; ++r) cols.at(r, cc) = image.basis().at(c, r);
    for (std::size_t c = 0; c < complement.size(); ++c, ++cc)
        for (std::size_t r = 0; r < ambient; ++r) cols.at(r, cc) = complement[c][r];
    auto x = solve(cols, v);
    if (!x) throw ValidationError("fiber projection: splitting is not a basis");
    return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
}

FiberDecomposition fiber_decomposition(const AlgebraModel& model, const RationalPoint& p,
                                       int degree) {
    FiberDecomposition out;
    out.ambient = model.dim(degree);
    QMatrix d_out = model.fiber_diff(p, degree);
    QMatrix d_in = model.fiber_diff(p, degree - 1);

    std::vector<Vec> ker = d_out.kernel_basis();
    std::vector<Vec> im = d_in.transpose().row_space_basis();
    out.kernel = Subspace(out.ambient, ker);
    out.image = Subspace(out.ambient, im);

    Subspace acc = out.image;
    for (const auto& v : ker) {
        if (acc.contains(v)) continue;
        out.reps.push_back(v);
        acc = acc.sum(Subspace(out.ambient, {v}));
    }
    // Complete the kernel to the ambient space with standard basis vectors.
    Subspace full = out.kernel;
    for (std::size_t t = 0; t < out.ambient && full.dim() < out.ambient; ++t) {
        Vec e(out.ambient, Scalar(0));
        e[t] = Scalar(1);
        if (full.contains(e)) continue;
        out.complement.push_back(e);
        full = full.sum(Subspace(out.ambient, {e}));
    }
    return out;
}

CupData fiber_cup_data(const AlgebraModel& model, const RationalPoint& p, int i) {
    FiberDecomposition before = fiber_decomposition(model, p, i - 1);
    FiberDecomposition mid = fiber_decomposition(model, p, i);
    FiberDecomposition after = fiber_decomposition(model, p, i + 1);

    CupData cup;
    cup.q = model.q();
    cup.i = i;
    cup.h_before = before.h_dim();
    cup.h_mid = mid.h_dim();
    cup.h_after = after.h_dim();

    auto act_matrices = [&](const FiberDecomposition& src, const FiberDecomposition& dst,
                            int degree) {
        std::vector<QMatrix> out;
        for (std::size_t nu = 0; nu < model.q(); ++nu) {
            QMatrix m(dst.h_dim(), src.h_dim());
            for (std::size_t t = 0; t < src.h_dim(); ++t) {
                Vec w = model.action(nu, degree).apply(src.reps[t]);
                Vec cls = dst.class_of(w);
                for (std::size_t r = 0; r < dst.h_dim(); ++r) m.at(r, t) = cls[r];
            }
            out.push_back(std::move(m));
        }
        return out;
    };
    cup.act_before = act_matrices(before, mid, i - 1);
    cup.act_mid = act_matrices(mid, after, i);

    // Obstruction pairing for self-acting models: pair directions through
    // degree one and project onto the degree-two block of the fixed splitting.
    if (model.self_acting() && model.top() >= 2) {
        FiberDecomposition deg2 = fiber_decomposition(model, p, 2);
        cup.h_obstruction = deg2.h_dim();
        cup.mu2.assign(model.q(), std::vector<Vec>(model.q()));
        for (std::size_t nu = 0; nu < model.q(); ++nu) {
            for (std::size_t mu = 0; mu < model.q(); ++mu) {
                Vec e_mu(model.dim(1), Scalar(0));
                e_mu[mu] = Scalar(1);
                Vec w = model.action(nu, 1).apply(e_mu);
                cup.mu2[nu][mu] = deg2.project_class(w);
            }
        }
    } else {
        cup.h_obstruction = 0;
        cup.mu2.assign(model.q(), std::vector<Vec>(model.q(), Vec{}));
    }
    cup.validate();
    return cup;
}

} // namespace jumploci
