#include "jumploci/json_io.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

std::size_t need_uint(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

long need_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

} // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_real()) return s.re().get_str();
    return Json::array({s.re().get_str(), s.im().get_str()});
}

Scalar scalar_from_json(const Json& j, FieldMode mode, const std::string& path) {
    try {
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
        if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
            if (mode != FieldMode::GaussianRational)
                fail(path, "imaginary coefficients need --field qi");
            Scalar re = Scalar::parse(j[0].get<std::string>());
            Scalar im = Scalar::parse(j[1].get<std::string>());
            return Scalar(re.re(), im.re());
        }
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
    fail(path, "expected a rational string");
}

Json polynomial_to_json(const Polynomial& p, bool with_ring) {
    Json out = Json::object();
    if (with_ring) out["ring"] = p.ring()->vars;
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term = Json::object();
        term["c"] = scalar_to_json(t.coeff);
        term["e"] = t.mono.e;
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

RingPtr ring_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of variable names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
        names.push_back(j[i].get<std::string>());
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = i + 1; k < names.size(); ++k)
            if (names[i] == names[k]) fail(path, "duplicate variable name " + names[i]);
    return make_ring(std::move(names));
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring, FieldMode mode,
                                const std::string& path) {
    if (!j.is_object()) fail(path, "expected a polynomial object");
    if (j.contains("ring")) {
        RingPtr own = ring_from_json(j["ring"], path + ".ring");
        if (!same_ring(own, ring)) fail(path + ".ring", "ring does not match the enclosing ring");
    }
    const Json& terms = need(j, "terms", path);
    if (!terms.is_array()) fail(path + ".terms", "expected an array");
    std::vector<Term> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string tpath = path + ".terms[" + std::to_string(t) + "]";
        const Json& term = terms[t];
        Scalar c = scalar_from_json(need(term, "c", tpath), mode, tpath + ".c");
        const Json& exps = need(term, "e", tpath);
        if (!exps.is_array() || exps.size() != ring->nvars())
            fail(tpath + ".e", "expected " + std::to_string(ring->nvars()) + " exponents");
        Monomial m(ring->nvars());
        for (std::size_t v = 0; v < exps.size(); ++v)
            m.e[v] = static_cast<std::uint32_t>(
                need_uint(exps[v], tpath + ".e[" + std::to_string(v) + "]"));
        out.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial(ring, std::move(out));
}

Json ideal_to_json(const Ideal& i) {
    Json out = Json::object();
    out["ring"] = i.ring()->vars;
    Json gens = Json::array();
    for (const auto& g : i.generators()) gens.push_back(polynomial_to_json(g, false));
    out["gens"] = std::move(gens);
    Json gb = Json::array();
    for (const auto& g : i.groebner()) gb.push_back(polynomial_to_json(g, false));
    out["reduced_gb"] = std::move(gb);
    return out;
}

Ideal ideal_from_json(const Json& j, FieldMode mode, const std::string& path) {
    RingPtr ring = ring_from_json(need(j, "ring", path), path + ".ring");
    const Json& gens = need(j, "gens", path);
    if (!gens.is_array()) fail(path + ".gens", "expected an array");
    std::vector<Polynomial> ps;
    for (std::size_t g = 0; g < gens.size(); ++g)
        ps.push_back(
            polynomial_from_json(gens[g], ring, mode, path + ".gens[" + std::to_string(g) + "]"));
    return Ideal(ring, std::move(ps));
}

Json complex_to_json(const FreeComplex& c) {
    Json out = Json::object();
    out["ring"] = c.ring()->vars;
    out["lo"] = c.lo();
    out["hi"] = c.hi();
    out["ranks"] = c.ranks();
    Json diffs = Json::object();
    for (int i = c.lo(); i < c.hi(); ++i) {
        PolyMatrix d = c.diff(i);
        Json rows = Json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t cc = 0; cc < d.cols(); ++cc)
                row.push_back(polynomial_to_json(d.at(r, cc), false));
            rows.push_back(std::move(row));
        }
        diffs[std::to_string(i)] = std::move(rows);
    }
    out["diff"] = std::move(diffs);
    return out;
}

FreeComplex complex_from_json(const Json& j, FieldMode mode, const std::string& path) {
    RingPtr ring = ring_from_json(need(j, "ring", path), path + ".ring");
    long lo = need_int(need(j, "lo", path), path + ".lo");
    long hi = need_int(need(j, "hi", path), path + ".hi");
    const Json& ranks_json = need(j, "ranks", path);
    if (!ranks_json.is_array()) fail(path + ".ranks", "expected an array");
    if (hi < lo - 1) fail(path + ".hi", "hi below lo-1");
    if (static_cast<long>(ranks_json.size()) != hi - lo + 1)
        fail(path + ".ranks", "rank count must be hi - lo + 1");
    std::vector<std::size_t> ranks;
    for (std::size_t r = 0; r < ranks_json.size(); ++r)
        ranks.push_back(need_uint(ranks_json[r], path + ".ranks[" + std::to_string(r) + "]"));

    std::vector<PolyMatrix> diffs;
    const Json empty_obj = Json::object();
    const Json& diff = j.contains("diff") ? j["diff"] : empty_obj;
    for (long i = lo; i < hi; ++i) {
        std::string key = std::to_string(i);
        std::string dpath = path + ".diff." + key;
        std::size_t rows = ranks[static_cast<std::size_t>(i - lo + 1)];
        std::size_t cols = ranks[static_cast<std::size_t>(i - lo)];
        PolyMatrix m(ring, rows, cols);
        if (diff.contains(key)) {
            const Json& rows_json = diff[key];
            if (!rows_json.is_array() || rows_json.size() != rows)
                fail(dpath, "expected " + std::to_string(rows) + " rows");
            for (std::size_t r = 0; r < rows; ++r) {
                const Json& row = rows_json[r];
                std::string rpath = dpath + "[" + std::to_string(r) + "]";
                if (!row.is_array() || row.size() != cols)
                    fail(rpath, "expected " + std::to_string(cols) + " entries");
                for (std::size_t c = 0; c < cols; ++c)
                    m.at(r, c) = polynomial_from_json(row[c], ring, mode,
                                                      rpath + "[" + std::to_string(c) + "]");
            }
        } else if (rows * cols != 0) {
            fail(dpath, "missing differential");
        }
        diffs.push_back(std::move(m));
    }
    try {
        return FreeComplex(ring, static_cast<int>(lo), std::move(ranks), std::move(diffs));
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

Json algebra_to_json(const ArtinianAlgebra& a) {
    Json out = Json::object();
    out["vars"] = a.poly_ring()->vars;
    Json rel = Json::array();
    for (const auto& g : a.presentation().generators()) rel.push_back(polynomial_to_json(g, false));
    out["rel"] = std::move(rel);
    return out;
}

AlgebraPtr algebra_from_json(const Json& j, FieldMode mode, const std::string& path) {
    RingPtr ring = ring_from_json(need(j, "vars", path), path + ".vars");
    const Json& rel = need(j, "rel", path);
    if (!rel.is_array()) fail(path + ".rel", "expected an array");
    std::vector<Polynomial> ps;
    for (std::size_t g = 0; g < rel.size(); ++g)
        ps.push_back(
            polynomial_from_json(rel[g], ring, mode, path + ".rel[" + std::to_string(g) + "]"));
    try {
        return std::make_shared<const ArtinianAlgebra>(
            ArtinianAlgebra::build(Ideal(ring, std::move(ps))));
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

Json point_to_json(const RationalPoint& p) {
    Json out = Json::array();
    for (const auto& c : p) out.push_back(scalar_to_json(c));
    return out;
}

RationalPoint point_from_json(const Json& j, FieldMode mode, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rationals");
    RationalPoint p;
    for (std::size_t v = 0; v < j.size(); ++v)
        p.push_back(scalar_from_json(j[v], mode, path + "[" + std::to_string(v) + "]"));
    return p;
}

RationalPoint parse_point_string(const std::string& text, FieldMode mode) {
    (void)mode;
    RationalPoint p;
    std::string cur;
    auto flush = [&]() {
        std::string trimmed;
        for (char ch : cur)
            if (ch != ' ' && ch != '\t') trimmed += ch;
        if (trimmed.empty()) throw ParseError("point: empty coordinate");
        p.push_back(Scalar::parse(trimmed));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else {
            cur += ch;
        }
    }
    if (!text.empty()) flush();
    return p;
}

Json map_spec_to_json(const MapSpec& s) {
    Json out = Json::object();
    out["point"] = point_to_json(s.point);
    Json images = Json::array();
    for (const auto& img : s.images) {
        Json coords = Json::array();
        for (const auto& c : img) coords.push_back(scalar_to_json(c));
        images.push_back(std::move(coords));
    }
    out["images"] = std::move(images);
    return out;
}

MapSpec map_spec_from_json(const Json& j, RingPtr source, AlgebraPtr target, FieldMode mode,
                           const std::string& path) {
    const Json& images_json = need(j, "images", path);
    if (!images_json.is_array() || images_json.size() != source->nvars())
        fail(path + ".images", "expected one image per chart variable");
    std::vector<AElem> images;
    for (std::size_t v = 0; v < images_json.size(); ++v) {
        std::string ipath = path + ".images[" + std::to_string(v) + "]";
        const Json& coords = images_json[v];
        if (!coords.is_array() || coords.size() != target->dim())
            fail(ipath, "expected " + std::to_string(target->dim()) + " coordinates");
        AElem img;
        for (std::size_t c = 0; c < coords.size(); ++c)
            img.push_back(scalar_from_json(coords[c], mode, ipath + "[" + std::to_string(c) + "]"));
        images.push_back(std::move(img));
    }
    MapSpec s = make_map_spec(std::move(source), std::move(target), std::move(images));
    if (j.contains("point")) {
        RationalPoint declared = point_from_json(j["point"], mode, path + ".point");
        if (declared.size() != s.point.size()) fail(path + ".point", "wrong point length");
        for (std::size_t v = 0; v < declared.size(); ++v)
            if (!(declared[v] == s.point[v]))
                fail(path + ".point",
                     "declared point disagrees with the residues of the images");
    }
    return s;
}

Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json subspace_to_json(const Subspace& s) {
    Json out = Json::object();
    out["ambient"] = s.ambient_dim();
    out["basis"] = matrix_to_json(s.basis());
    return out;
}

Json cup_to_json(const CupData& cup) {
    Json out = Json::object();
    out["q"] = cup.q;
    out["i"] = cup.i;
    Json dims = Json::object();
    dims["before"] = cup.h_before;
    dims["mid"] = cup.h_mid;
    dims["after"] = cup.h_after;
    dims["obstruction"] = cup.h_obstruction;
    out["dims"] = std::move(dims);
    Json mu2 = Json::array();
    for (const auto& row : cup.mu2) {
        Json jrow = Json::array();
        for (const auto& v : row) {
            Json coords = Json::array();
            for (const auto& c : v) coords.push_back(scalar_to_json(c));
            jrow.push_back(std::move(coords));
        }
        mu2.push_back(std::move(jrow));
    }
    out["mu2"] = std::move(mu2);
    Json before = Json::array();
    for (const auto& m : cup.act_before) before.push_back(matrix_to_json(m));
    out["act_before"] = std::move(before);
    Json mid = Json::array();
    for (const auto& m : cup.act_mid) mid.push_back(matrix_to_json(m));
    out["act_mid"] = std::move(mid);
    return out;
}

namespace {

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, FieldMode mode,
                         const std::string& path) {
    if (!j.is_array() || j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != cols)
            fail(rpath, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar_from_json(row[c], mode, rpath + "[" + std::to_string(c) + "]");
    }
    return m;
}

} // namespace

CupData cup_from_json(const Json& j, FieldMode mode, const std::string& path) {
    CupData cup;
    cup.q = need_uint(need(j, "q", path), path + ".q");
    cup.i = static_cast<int>(need_int(need(j, "i", path), path + ".i"));
    const Json& dims = need(j, "dims", path);
    cup.h_before = need_uint(need(dims, "before", path + ".dims"), path + ".dims.before");
    cup.h_mid = need_uint(need(dims, "mid", path + ".dims"), path + ".dims.mid");
    cup.h_after = need_uint(need(dims, "after", path + ".dims"), path + ".dims.after");
    cup.h_obstruction =
        need_uint(need(dims, "obstruction", path + ".dims"), path + ".dims.obstruction");

    const Json& mu2 = need(j, "mu2", path);
    if (!mu2.is_array() || mu2.size() != cup.q) fail(path + ".mu2", "expected q rows");
    for (std::size_t nu = 0; nu < cup.q; ++nu) {
        const Json& row = mu2[nu];
        std::string rpath = path + ".mu2[" + std::to_string(nu) + "]";
        if (!row.is_array() || row.size() != cup.q) fail(rpath, "expected q entries");
        std::vector<Vec> out_row;
        for (std::size_t mu = 0; mu < cup.q; ++mu) {
            const Json& coords = row[mu];
            std::string cpath = rpath + "[" + std::to_string(mu) + "]";
            if (!coords.is_array() || coords.size() != cup.h_obstruction)
                fail(cpath, "expected obstruction-dimension coordinates");
            Vec v;
            for (std::size_t c = 0; c < coords.size(); ++c)
                v.push_back(scalar_from_json(coords[c], mode, cpath + "[" + std::to_string(c) + "]"));
            out_row.push_back(std::move(v));
        }
        cup.mu2.push_back(std::move(out_row));
    }

    const Json& before = need(j, "act_before", path);
    if (!before.is_array() || before.size() != cup.q)
        fail(path + ".act_before", "expected q matrices");
    for (std::size_t nu = 0; nu < cup.q; ++nu)
        cup.act_before.push_back(matrix_from_json(before[nu], cup.h_mid, cup.h_before, mode,
                                                  path + ".act_before[" + std::to_string(nu) + "]"));
    const Json& mid = need(j, "act_mid", path);
    if (!mid.is_array() || mid.size() != cup.q) fail(path + ".act_mid", "expected q matrices");
    for (std::size_t nu = 0; nu < cup.q; ++nu)
        cup.act_mid.push_back(matrix_from_json(mid[nu], cup.h_after, cup.h_mid, mode,
                                               path + ".act_mid[" + std::to_string(nu) + "]"));
    cup.validate();
    return cup;
}

// ---- case files ----

CaseFile case_from_json(const Json& j, FieldMode mode) {
    std::string kind;
    if (j.contains("kind") && j["kind"].is_string()) kind = j["kind"].get<std::string>();
    if (kind.empty()) fail("case.kind", "missing case kind");

    if (kind == "jump-ideal") {
        JumpIdealCase c{complex_from_json(need(j, "complex", "case"), mode, "case.complex"),
                        static_cast<int>(need_int(need(j, "i", "case"), "case.i")),
                        need_int(need(j, "k", "case"), "case.k"),
                        j.contains("alt") && j["alt"].is_boolean() && j["alt"].get<bool>()};
        return c;
    }
    if (kind == "prop21") {
        FreeComplex complex = complex_from_json(need(j, "complex", "case"), mode, "case.complex");
        AlgebraPtr algebra = algebra_from_json(need(j, "algebra", "case"), mode, "case.algebra");
        MapSpec map = map_spec_from_json(need(j, "map", "case"), complex.ring(), algebra, mode,
                                         "case.map");
        return Prop21Case{std::move(complex), std::move(algebra), std::move(map),
                          static_cast<int>(need_int(need(j, "i", "case"), "case.i")),
                          need_int(need(j, "k", "case"), "case.k")};
    }
    if (kind == "lemma-image") {
        AlgebraPtr algebra = algebra_from_json(need(j, "algebra", "case"), mode, "case.algebra");
        const Json& sig = need(j, "sigma", "case");
        if (!sig.is_array() || sig.empty()) fail("case.sigma", "expected a non-empty matrix");
        std::size_t rows = sig.size();
        if (!sig[0].is_array() || sig[0].empty()) fail("case.sigma[0]", "expected a matrix row");
        std::size_t cols = sig[0].size();
        std::vector<AElem> entries;
        for (std::size_t r = 0; r < rows; ++r) {
            std::string rpath = "case.sigma[" + std::to_string(r) + "]";
            if (!sig[r].is_array() || sig[r].size() != cols) fail(rpath, "ragged matrix");
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& coords = sig[r][c];
                std::string cpath = rpath + "[" + std::to_string(c) + "]";
                if (!coords.is_array() || coords.size() != algebra->dim())
                    fail(cpath, "expected algebra coordinates");
                AElem e;
                for (std::size_t x = 0; x < coords.size(); ++x)
                    e.push_back(
                        scalar_from_json(coords[x], mode, cpath + "[" + std::to_string(x) + "]"));
                entries.push_back(std::move(e));
            }
        }
        return LemmaImageCase{std::move(algebra), std::move(entries), rows, cols,
                              need_int(need(j, "c", "case"), "case.c")};
    }
    if (kind == "prop-main" || kind == "boundary") {
        const Json& model = need(j, "model", "case");
        std::string type = need(model, "type", "case.model").get<std::string>();
        if (type != "exterior") fail("case.model.type", "only exterior models are file-loadable");
        std::size_t g = need_uint(need(model, "g", "case.model"), "case.model.g");
        RationalPoint p = point_from_json(need(j, "p", "case"), mode, "case.p");
        if (p.size() != g) fail("case.p", "expected g coordinates");
        AlgebraPtr algebra = algebra_from_json(need(j, "algebra", "case"), mode, "case.algebra");
        MapSpec map =
            map_spec_from_json(need(j, "map", "case"), make_ring(g), algebra, mode, "case.map");
        int i = static_cast<int>(need_int(need(j, "i", "case"), "case.i"));
        if (kind == "prop-main") return PropMainCase{g, std::move(p), std::move(algebra), std::move(map), i};
        std::size_t jj = need_uint(need(j, "j", "case"), "case.j");
        return BoundaryCase{g, std::move(p), std::move(algebra), std::move(map), jj, i};
    }
    if (kind == "thm-linear") {
        std::size_t g = need_uint(need(j, "g", "case"), "case.g");
        RationalPoint p = point_from_json(need(j, "point", "case"), mode, "case.point");
        if (p.size() != g) fail("case.point", "expected g coordinates");
        return LocalModelCase{g, std::move(p),
                              static_cast<int>(need_int(need(j, "i", "case"), "case.i")),
                              need_int(need(j, "k", "case"), "case.k"),
                              j.contains("depth")
                                  ? need_uint(j["depth"], "case.depth")
                                  : std::size_t{4}};
    }
    if (kind == "cone") return ConeCase{cup_from_json(need(j, "cup", "case"), mode, "case.cup")};
    if (kind == "annihilator")
        return AnnihilatorCase{cup_from_json(need(j, "cup", "case"), mode, "case.cup")};
    fail("case.kind", "unknown kind \"" + kind + "\"");
}

Json case_to_json(const CaseFile& c) {
    Json out = Json::object();
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, JumpIdealCase>) {
                out["kind"] = "jump-ideal";
                out["complex"] = complex_to_json(v.complex);
                out["i"] = v.i;
                out["k"] = v.k;
                out["alt"] = v.alt;
            } else if constexpr (std::is_same_v<T, Prop21Case>) {
                out["kind"] = "prop21";
                out["complex"] = complex_to_json(v.complex);
                out["algebra"] = algebra_to_json(*v.algebra);
                out["map"] = map_spec_to_json(v.map);
                out["i"] = v.i;
                out["k"] = v.k;
            } else if constexpr (std::is_same_v<T, LemmaImageCase>) {
                out["kind"] = "lemma-image";
                out["algebra"] = algebra_to_json(*v.algebra);
                Json rows = Json::array();
                for (std::size_t r = 0; r < v.rows; ++r) {
                    Json row = Json::array();
                    for (std::size_t cc = 0; cc < v.cols; ++cc) {
                        Json coords = Json::array();
                        for (const auto& x : v.sigma[r * v.cols + cc])
                            coords.push_back(scalar_to_json(x));
                        row.push_back(std::move(coords));
                    }
                    rows.push_back(std::move(row));
                }
                out["sigma"] = std::move(rows);
                out["c"] = v.c;
            } else if constexpr (std::is_same_v<T, PropMainCase>) {
                out["kind"] = "prop-main";
                out["model"] = Json{{"type", "exterior"}, {"g", v.g}};
                out["p"] = point_to_json(v.p);
                out["algebra"] = algebra_to_json(*v.algebra);
                out["map"] = map_spec_to_json(v.map);
                out["i"] = v.i;
            } else if constexpr (std::is_same_v<T, BoundaryCase>) {
                out["kind"] = "boundary";
                out["model"] = Json{{"type", "exterior"}, {"g", v.g}};
                out["p"] = point_to_json(v.p);
                out["algebra"] = algebra_to_json(*v.algebra);
                out["map"] = map_spec_to_json(v.map);
                out["j"] = v.j;
                out["i"] = v.i;
            } else if constexpr (std::is_same_v<T, LocalModelCase>) {
                out["kind"] = "thm-linear";
                out["g"] = v.g;
                out["point"] = point_to_json(v.p);
                out["i"] = v.i;
                out["k"] = v.k;
                out["depth"] = v.depth;
            } else if constexpr (std::is_same_v<T, ConeCase>) {
                out["kind"] = "cone";
                out["cup"] = cup_to_json(v.cup);
            } else if constexpr (std::is_same_v<T, AnnihilatorCase>) {
                out["kind"] = "annihilator";
                out["cup"] = cup_to_json(v.cup);
            }
        },
        c);
    return out;
}

// ---- reports ----

Json prop21_report(const Prop21Case& c, const Prop21Verdict& v) {
    Json out = Json::object();
    out["case"] = case_to_json(CaseFile{c});
    out["precondition_ok"] = v.precondition_ok;
    out["fiber_dim"] = v.fiber_dim;
    if (v.precondition_ok) {
        out["side_i"] = v.side_schematic;
        out["side_ii"] = v.side_free;
        out["equivalent"] = v.equivalent;
        Json witness = Json::object();
        witness["cohomology_field_dim"] = v.cohomology_field_dim;
        witness["min_generators"] = v.freeness.min_generators;
        witness["free"] = v.freeness.free;
        out["witness"] = std::move(witness);
    }
    return out;
}

Json lemma_image_report(const LemmaImageCase& c, const LemmaImageVerdict& v) {
    Json out = Json::object();
    out["case"] = case_to_json(CaseFile{c});
    out["precondition_ok"] = v.precondition_ok;
    out["minors_vanish"] = v.minors_vanish;
    out["residue_full"] = v.residue_full;
    if (v.precondition_ok) {
        out["image_field_dim"] = v.image_field_dim;
        out["image_free"] = v.freeness.free;
        out["image_rank"] = v.freeness.min_generators;
        out["conclusion"] = v.conclusion;
    }
    return out;
}

Json prop_main_report(const PropMainCase& c, const PropMainVerdict& v) {
    Json out = Json::object();
    out["case"] = case_to_json(CaseFile{c});
    out["precondition_ok"] = v.precondition_ok;
    out["k"] = v.k;
    if (v.precondition_ok) {
        out["side_i"] = v.side_free;
        out["side_ii"] = v.side_annihilated;
        out["equivalent"] = v.equivalent;
        out["shadow_dim_ok"] = v.shadow_dim_ok;
        out["shadow_surjective"] = v.shadow_surjective;
        out["closedness_checked"] = v.closedness_checked;
        out["closedness_ok"] = v.closedness_ok;
        Json witness = Json::object();
        witness["cohomology_field_dim"] = v.h_field_dim;
        witness["min_generators"] = v.freeness.min_generators;
        witness["free"] = v.freeness.free;
        out["witness"] = std::move(witness);
    }
    return out;
}

Json boundary_report(const BoundaryCase& c, const BoundaryVerdict& v) {
    Json out = Json::object();
    out["case"] = case_to_json(CaseFile{c});
    out["snake"] = matrix_to_json(v.snake);
    out["cup_step"] = matrix_to_json(v.cup_step);
    out["cup_literal"] = matrix_to_json(v.cup_literal);
    out["matches_step"] = v.matches_step;
    out["matches_literal"] = v.matches_literal;
    Json rows = Json::object();
    Json step = Json::array();
    for (const auto& s : v.step_row) step.push_back(scalar_to_json(s));
    Json lit = Json::array();
    for (const auto& s : v.literal_row) lit.push_back(scalar_to_json(s));
    rows["step"] = std::move(step);
    rows["literal"] = std::move(lit);
    out["derivative_rows"] = std::move(rows);
    return out;
}

Json local_model_report(const LocalModelCase& c, const LocalModelVerdict& v) {
    Json out = Json::object();
    out["case"] = case_to_json(CaseFile{c});
    out["precondition_ok"] = v.precondition_ok;
    out["fiber_dim"] = v.fiber_dim;
    if (v.precondition_ok) {
        out["equal_at_depth"] = v.equal_at_depth;
        out["all_equal"] = v.all_equal;
        out["jump_ideal"] = ideal_to_json(v.jump);
        out["linear_ideal"] = ideal_to_json(v.linear);
    }
    return out;
}

} // namespace jumploci
