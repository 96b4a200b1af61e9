// jumploci: exact computation of cohomology jump ideals of free complexes and
// brute-force verification of their Artinian-local characterizations and the
// linear local model. JSON reports go to stdout, human summaries to stderr.
//
// Exit codes: 0 all checks pass, 1 mathematical counterexample, 2 input error,
// 3 size-limit error.

#include "jumploci/casegen.hpp"
#include "jumploci/deformation.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace jumploci;

namespace {

struct Options {
    FieldMode field = FieldMode::Rational;
    std::string out;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + std::string(e.what()));
    }
    return j;
}

void emit(const Options& opt, const Json& report) {
    std::string text = report.dump(2);
    text += "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out);
        if (!out) throw ParseError("cannot write " + opt.out);
        out << text;
    }
}

// Optional golden block: every leaf in `expected` must match the report.
bool matches_expected(const Json& expected, const Json& actual, std::string path,
                      std::string& mismatch) {
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.is_object() || !actual.contains(it.key())) {
                mismatch = path + "." + it.key() + " missing";
                return false;
            }
            if (!matches_expected(it.value(), actual[it.key()], path + "." + it.key(), mismatch))
                return false;
        }
        return true;
    }
    if (expected != actual) {
        mismatch = path + ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

struct CaseOutcome {
    Json report;
    bool counterexample = false;
    bool skipped = false;
    long skip_fiber_dim = 0;
};

CaseOutcome run_prop21(const Prop21Case& c) {
    Prop21Verdict v = verify_prop21(c.complex, c.map, c.i, c.k);
    CaseOutcome out{prop21_report(c, v)};
    out.counterexample = v.precondition_ok && !v.equivalent;
    out.skipped = !v.precondition_ok;
    out.skip_fiber_dim = v.fiber_dim;
    return out;
}

CaseOutcome run_lemma_image(const LemmaImageCase& c) {
    LemmaImageVerdict v = verify_lemma_image_free(*c.algebra, c.sigma, c.rows, c.cols, c.c);
    CaseOutcome out{lemma_image_report(c, v)};
    out.counterexample = v.precondition_ok && !v.conclusion;
    out.skipped = !v.precondition_ok;
    return out;
}

CaseOutcome run_prop_main(const PropMainCase& c) {
    AlgebraModel model = AlgebraModel::exterior(c.g);
    PropMainVerdict v = verify_prop_main(model, c.p, c.map, c.i);
    CaseOutcome out{prop_main_report(c, v)};
    bool shadow_ok = !v.side_free || (v.shadow_dim_ok && v.shadow_surjective);
    bool closed_ok = !(v.closedness_checked && v.side_annihilated) || v.closedness_ok;
    out.counterexample = v.precondition_ok && !(v.equivalent && shadow_ok && closed_ok);
    out.skipped = !v.precondition_ok;
    out.skip_fiber_dim = v.k;
    return out;
}

CaseOutcome run_boundary(const BoundaryCase& c) {
    AlgebraModel model = AlgebraModel::exterior(c.g);
    BoundaryVerdict v = verify_boundary_formula(model, c.p, c.map, c.j, c.i);
    CaseOutcome out{boundary_report(c, v)};
    out.counterexample = !v.matches_step;
    return out;
}

CaseOutcome run_local_model(const LocalModelCase& c) {
    AlgebraModel model = AlgebraModel::exterior(c.g);
    LocalModelVerdict v = verify_local_model(model, c.p, c.i, c.k, c.depth);
    CaseOutcome out{local_model_report(c, v)};
    out.counterexample = v.precondition_ok && !v.all_equal;
    out.skipped = !v.precondition_ok;
    out.skip_fiber_dim = v.fiber_dim;
    return out;
}

CaseOutcome run_case(const CaseFile& c) {
    return std::visit(
        [](const auto& v) -> CaseOutcome {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Prop21Case>) {
                return run_prop21(v);
            } else if constexpr (std::is_same_v<T, LemmaImageCase>) {
                return run_lemma_image(v);
            } else if constexpr (std::is_same_v<T, PropMainCase>) {
                return run_prop_main(v);
            } else if constexpr (std::is_same_v<T, BoundaryCase>) {
                return run_boundary(v);
            } else if constexpr (std::is_same_v<T, LocalModelCase>) {
                return run_local_model(v);
            } else if constexpr (std::is_same_v<T, JumpIdealCase>) {
                Ideal j = v.alt ? jump_ideal_alt(v.complex, v.i, v.k)
                                : jump_ideal(v.complex, v.i, v.k);
                return CaseOutcome{ideal_to_json(j)};
            } else if constexpr (std::is_same_v<T, ConeCase>) {
                return CaseOutcome{ideal_to_json(cone_ideal(v.cup))};
            } else {
                static_assert(std::is_same_v<T, AnnihilatorCase>);
                AnnihilatorResult ann = annihilator_subspace(v.cup);
                Json out = Json::object();
                out["subspace"] = subspace_to_json(ann.space);
                out["linear_ideal"] = ideal_to_json(ann.linear_ideal);
                return CaseOutcome{std::move(out)};
            }
        },
        c);
}

int finish_single(const Options& opt, const Json& case_json, CaseOutcome outcome) {
    if (case_json.is_object() && case_json.contains("expected")) {
        std::string mismatch;
        if (!matches_expected(case_json["expected"], outcome.report, "expected", mismatch)) {
            outcome.report["expected_mismatch"] = mismatch;
            outcome.counterexample = true;
        }
    }
    emit(opt, outcome.report);
    if (outcome.skipped) {
        std::cerr << "precondition skip (fiber dim " << outcome.skip_fiber_dim << ")\n";
    } else {
        std::cerr << (outcome.counterexample ? "FAIL\n" : "ok\n");
    }
    return outcome.counterexample ? 1 : 0;
}

using CaseMaker = CaseFile (*)(Rng&);

int run_suite(const Options& opt, const std::string& kind, std::uint64_t seed, std::size_t count,
              CaseMaker make) {
    auto start = std::chrono::steady_clock::now();
    Json cases = Json::array();
    std::size_t failed = 0, skipped = 0;
    Json failing = Json::array();
    Json skips = Json::array();
    for (std::size_t idx = 0; idx < count; ++idx) {
        Rng rng(Rng::derive(seed, idx));
        CaseFile c = make(rng);
        CaseOutcome outcome = run_case(c);
        outcome.report["index"] = idx;
        if (outcome.skipped) {
            ++skipped;
            Json skip = Json::object();
            skip["index"] = idx;
            skip["fiber_dim"] = outcome.skip_fiber_dim;
            skips.push_back(std::move(skip));
        } else if (outcome.counterexample) {
            ++failed;
            failing.push_back(idx);
        }
        cases.push_back(std::move(outcome.report));
    }
    Json report = Json::object();
    report["kind"] = kind;
    report["seed"] = seed;
    report["count"] = count;
    Json summary = Json::object();
    summary["checked"] = count - skipped;
    summary["passed"] = count - skipped - failed;
    summary["failed"] = failed;
    summary["precondition_skips"] = std::move(skips);
    summary["failing_indices"] = std::move(failing);
    report["summary"] = std::move(summary);
    report["cases"] = std::move(cases);
    emit(opt, report);

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << kind << ": " << count << " cases, " << (count - skipped - failed) << " passed, "
              << failed << " failed, " << skipped << " precondition skips (" << ms << " ms)\n";
    return failed > 0 ? 1 : 0;
}

CaseFile make_prop21(Rng& rng) { return casegen::prop21_case(rng); }
CaseFile make_lemma(Rng& rng) { return casegen::lemma_image_case(rng); }
CaseFile make_prop_main(Rng& rng) { return casegen::prop_main_case(rng, 3); }
CaseFile make_boundary(Rng& rng) { return casegen::boundary_case(rng, 3); }

int dispatch(int argc, char** argv) {
    CLI::App app{"exact cohomology jump loci toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string field = "q";
    app.add_option("--field", field, "coefficient field: q (rationals) or qi (gaussian)")
        ->check(CLI::IsMember({"q", "qi"}));
    app.add_option("--out,-o", opt.out, "write the JSON report to this file");

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    gb->fallthrough();
    std::string gb_file;
    gb->add_option("file", gb_file, "ideal JSON")->required();

    auto* jump = app.add_subcommand("jump-ideal", "jump ideal of a complex");
    jump->fallthrough();
    std::string jump_file;
    int jump_i = 0;
    long jump_k = 1;
    bool jump_alt = false;
    jump->add_option("file", jump_file, "complex JSON")->required();
    jump->add_option("--i", jump_i, "cohomological degree")->required();
    jump->add_option("--k", jump_k, "jump level")->required();
    jump->add_flag("--alt", jump_alt, "use the block-matrix variant");

    auto* fiber = app.add_subcommand("fiber-dims", "fiber cohomology dimensions at a point");
    fiber->fallthrough();
    std::string fiber_file, fiber_point;
    int fiber_i = 0;
    bool fiber_has_i = false;
    fiber->add_option("file", fiber_file, "complex JSON")->required();
    fiber->add_option("--point", fiber_point, "comma-separated rational coordinates")->required();
    auto* fiber_i_opt = fiber->add_option("--i", fiber_i, "single degree (defaults to all)");

    auto* koszul = app.add_subcommand("koszul", "emit the rank-one torus family");
    koszul->fallthrough();
    std::size_t koszul_g = 1;
    koszul->add_option("--g", koszul_g, "number of directions")->required();

    auto* cone = app.add_subcommand("cone", "quadratic cone ideal of cup data");
    cone->fallthrough();
    std::string cone_file;
    cone->add_option("file", cone_file, "cup-data JSON")->required();

    auto* ann = app.add_subcommand("annihilator", "annihilator subspace of cup data");
    ann->fallthrough();
    std::string ann_file;
    int ann_i = 0;
    ann->add_option("file", ann_file, "cup-data JSON")->required();
    auto* ann_i_opt = ann->add_option("--i", ann_i, "central degree (validated against the file)");

    auto* verify = app.add_subcommand("verify", "run a verifier on a case or a random suite");
    verify->fallthrough();
    verify->require_subcommand(1);
    std::string case_file;
    bool random = false;
    std::uint64_t seed = 0;
    std::size_t count = 50;
    std::size_t thm_g = 2;
    std::string thm_point;
    int thm_i = 1;
    long thm_k = 1;
    std::size_t depth = 4;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("file", case_file, "case JSON");
        sub->add_flag("--random", random, "generate seeded random cases");
        sub->add_option("--seed", seed, "suite seed");
        sub->add_option("--count", count, "number of cases");
    };
    auto* v21 = verify->add_subcommand("prop21", "schematic image vs free cohomology");
    add_common(v21);
    auto* vlem = verify->add_subcommand("lemma-image", "image freeness under vanishing minors");
    add_common(vlem);
    auto* vmain = verify->add_subcommand("prop-main", "freeness vs annihilators vs closedness");
    add_common(vmain);
    auto* vbound = verify->add_subcommand("boundary", "snake connecting map vs cup formula");
    add_common(vbound);
    auto* vlin = verify->add_subcommand("thm-linear", "jump ideal vs linear local model");
    vlin->fallthrough();
    vlin->add_option("file", case_file, "case JSON");
    vlin->add_option("--g", thm_g, "number of directions");
    vlin->add_option("--point", thm_point, "base point, comma-separated");
    vlin->add_option("--i", thm_i, "cohomological degree");
    vlin->add_option("--k", thm_k, "jump level");
    vlin->add_option("--depth", depth, "comparison depth");

    auto* suite = app.add_subcommand("suite", "random suite for one verifier");
    suite->fallthrough();
    std::string suite_kind;
    suite->add_option("kind", suite_kind, "prop21 | lemma-image | prop-main | boundary")
        ->required()
        ->check(CLI::IsMember({"prop21", "lemma-image", "prop-main", "boundary"}));
    suite->add_option("--seed", seed, "suite seed");
    suite->add_option("--count", count, "number of cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // command-line misuse is an input error
    }
    opt.field = (field == "qi") ? FieldMode::GaussianRational : FieldMode::Rational;
    fiber_has_i = fiber_i_opt->count() > 0;

    if (gb->parsed()) {
        Ideal i = ideal_from_json(load_json(gb_file), opt.field, "ideal");
        emit(opt, ideal_to_json(i));
        return 0;
    }
    if (jump->parsed()) {
        Json j = load_json(jump_file);
        FreeComplex c = j.contains("kind")
                            ? std::get<JumpIdealCase>(case_from_json(j, opt.field)).complex
                            : complex_from_json(j, opt.field, "complex");
        Ideal out = jump_alt ? jump_ideal_alt(c, jump_i, jump_k) : jump_ideal(c, jump_i, jump_k);
        emit(opt, ideal_to_json(out));
        return 0;
    }
    if (fiber->parsed()) {
        FreeComplex c = complex_from_json(load_json(fiber_file), opt.field, "complex");
        RationalPoint p = parse_point_string(fiber_point, opt.field);
        if (p.size() != c.ring()->nvars()) throw ParseError("point: wrong coordinate count");
        Json out = Json::object();
        out["point"] = point_to_json(p);
        if (fiber_has_i) {
            out["i"] = fiber_i;
            out["dim"] = fiber_cohomology_dim(c, p, fiber_i);
        } else {
            Json dims = Json::object();
            for (int i = c.lo(); i <= c.hi(); ++i)
                dims[std::to_string(i)] = fiber_cohomology_dim(c, p, i);
            out["dims"] = std::move(dims);
        }
        emit(opt, out);
        return 0;
    }
    if (koszul->parsed()) {
        emit(opt, complex_to_json(koszul_family(koszul_g)));
        return 0;
    }
    if (cone->parsed()) {
        Json j = load_json(cone_file);
        CupData cup = j.contains("kind") ? std::get<ConeCase>(case_from_json(j, opt.field)).cup
                                         : cup_from_json(j, opt.field, "cup");
        emit(opt, ideal_to_json(cone_ideal(cup)));
        return 0;
    }
    if (ann->parsed()) {
        Json j = load_json(ann_file);
        CupData cup = j.contains("kind")
                          ? std::get<AnnihilatorCase>(case_from_json(j, opt.field)).cup
                          : cup_from_json(j, opt.field, "cup");
        if (ann_i_opt->count() > 0 && ann_i != cup.i)
            throw ParseError("--i disagrees with the cup data");
        AnnihilatorResult result = annihilator_subspace(cup);
        Json out = Json::object();
        out["subspace"] = subspace_to_json(result.space);
        out["linear_ideal"] = ideal_to_json(result.linear_ideal);
        emit(opt, out);
        return 0;
    }

    auto run_verify = [&](const char* kind, CaseMaker make) -> int {
        if (random) return run_suite(opt, kind, seed, count, make);
        if (case_file.empty()) throw ParseError("need a case file or --random");
        Json j = load_json(case_file);
        if (!j.contains("kind") || j["kind"] != kind)
            throw ParseError(std::string("case.kind: expected \"") + kind + "\"");
        CaseFile c = case_from_json(j, opt.field);
        return finish_single(opt, j, run_case(c));
    };
    if (v21->parsed()) return run_verify("prop21", make_prop21);
    if (vlem->parsed()) return run_verify("lemma-image", make_lemma);
    if (vmain->parsed()) return run_verify("prop-main", make_prop_main);
    if (vbound->parsed()) return run_verify("boundary", make_boundary);
    if (vlin->parsed()) {
        if (!case_file.empty()) {
            Json j = load_json(case_file);
            if (!j.contains("kind") || j["kind"] != "thm-linear")
                throw ParseError("case.kind: expected \"thm-linear\"");
            CaseFile c = case_from_json(j, opt.field);
            return finish_single(opt, j, run_case(c));
        }
        RationalPoint p = thm_point.empty() ? RationalPoint(thm_g, Scalar(0))
                                            : parse_point_string(thm_point, opt.field);
        if (p.size() != thm_g) throw ParseError("point: expected g coordinates");
        LocalModelCase c{thm_g, std::move(p), thm_i, thm_k, depth};
        return finish_single(opt, Json::object(), run_local_model(c));
    }
    if (suite->parsed()) {
        CaseMaker make = nullptr;
        if (suite_kind == "prop21") {
            make = make_prop21;
        } else if (suite_kind == "lemma-image") {
            make = make_lemma;
        } else if (suite_kind == "prop-main") {
            make = make_prop_main;
        } else {
            make = make_boundary;
        }
        return run_suite(opt, suite_kind, seed, count, make);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
