#include "jumploci/map_spec.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

MapSpec make_map_spec(RingPtr source, AlgebraPtr target, std::vector<AElem> images) {
    if (images.size() != source->nvars())
        throw ValidationError("map spec: one image per source variable required");
    RationalPoint point;
    point.reserve(images.size());
    for (const auto& img : images) {
        if (img.size() != target->dim())
            throw ValidationError("map spec: image coordinate length does not match algebra");
        point.push_back(target->residue(img));
    }
    return MapSpec{std::move(source), std::move(target), std::move(point), std::move(images)};
}

Ideal comorphism_kernel(const MapSpec& s) {
    const std::size_t nx = s.source->nvars();
    const RingPtr& yring = s.target->poly_ring();
    const std::size_t ny = yring->nvars();

    // Joint ring: chart coordinates first, then decorated algebra variables
    // (decoration avoids clashes like a chart and an algebra both using "x").
    std::vector<std::string> names = s.source->vars;
    for (const auto& y : yring->vars) {
        std::string candidate = y;
        while (std::find(names.begin(), names.end(), candidate) != names.end())
            candidate += "_";
        names.push_back(candidate);
    }
    RingPtr joint = make_ring(std::move(names));

    auto lift_y = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(nx + ny);
            for (std::size_t v = 0; v < ny; ++v) m.e[nx + v] = t.mono.e[v];
            terms.push_back(Term{std::move(m), t.coeff});
        }
        return Polynomial(joint, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < nx; ++v) {
        Polynomial image = lift_y(s.target->lift(s.images[v]));
        gens.push_back(Polynomial::variable(joint, v) - image);
    }
    for (const auto& rel : s.target->presentation().generators()) gens.push_back(lift_y(rel));

    std::vector<std::size_t> drop;
    for (std::size_t v = 0; v < ny; ++v) drop.push_back(nx + v);
    Ideal eliminated = eliminate_gens(joint, gens, drop);

    // Rebuild on the caller's ring object.
    std::vector<Polynomial> out;
    for (const auto& f : eliminated.generators()) {
        std::vector<Term> terms(f.terms().begin(), f.terms().end());
        out.push_back(Polynomial(s.source, std::move(terms)));
    }
    return Ideal(s.source, std::move(out));
}

} // namespace jumploci
