#pragma once

#include "jumploci/cup_data.hpp"
#include "jumploci/deformation.hpp"
#include "jumploci/free_complex.hpp"
#include "jumploci/map_spec.hpp"
#include "jumploci/verify_artinian.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace jumploci {

using Json = nlohmann::ordered_json;

/// Input field mode: plain rationals, or the quadratic extension where
/// coefficients may carry an imaginary part (written as a ["re", "im"] pair).
enum class FieldMode { Rational, GaussianRational };

// ---- emission (canonical, deterministic) ----

Json scalar_to_json(const Scalar& s);
Json polynomial_to_json(const Polynomial& p, bool with_ring);
Json ideal_to_json(const Ideal& i);
Json complex_to_json(const FreeComplex& c);
Json algebra_to_json(const ArtinianAlgebra& a);
Json map_spec_to_json(const MapSpec& s);
Json cup_to_json(const CupData& cup);
Json point_to_json(const RationalPoint& p);
Json matrix_to_json(const QMatrix& m);
Json subspace_to_json(const Subspace& s);

// ---- parsing (throws ParseError with the JSON path of the first violation) ----

Scalar scalar_from_json(const Json& j, FieldMode mode, const std::string& path);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring, FieldMode mode,
                                const std::string& path);
RingPtr ring_from_json(const Json& j, const std::string& path);
Ideal ideal_from_json(const Json& j, FieldMode mode, const std::string& path);
FreeComplex complex_from_json(const Json& j, FieldMode mode, const std::string& path);
AlgebraPtr algebra_from_json(const Json& j, FieldMode mode, const std::string& path);
MapSpec map_spec_from_json(const Json& j, RingPtr source, AlgebraPtr target, FieldMode mode,
                           const std::string& path);
CupData cup_from_json(const Json& j, FieldMode mode, const std::string& path);
RationalPoint point_from_json(const Json& j, FieldMode mode, const std::string& path);
RationalPoint parse_point_string(const std::string& text, FieldMode mode);

// ---- case files ----

struct JumpIdealCase {
    FreeComplex complex;
    int i = 0;
    long k = 0;
    bool alt = false;
};

struct Prop21Case {
    FreeComplex complex;
    AlgebraPtr algebra;
    MapSpec map;
    int i = 0;
    long k = 0;
};

struct LemmaImageCase {
    AlgebraPtr algebra;
    std::vector<AElem> sigma;
    std::size_t rows = 0, cols = 0;
    long c = 0;
};

struct PropMainCase {
    std::size_t g = 1;
    RationalPoint p;
    AlgebraPtr algebra;
    MapSpec map;
    int i = 0;
};

struct BoundaryCase {
    std::size_t g = 1;
    RationalPoint p;
    AlgebraPtr algebra;
    MapSpec map;
    std::size_t j = 0;
    int i = 0;
};

struct LocalModelCase {
    std::size_t g = 1;
    RationalPoint p;
    int i = 0;
    long k = 0;
    std::size_t depth = 4;
};

struct ConeCase {
    CupData cup;
};

struct AnnihilatorCase {
    CupData cup;
};

using CaseFile = std::variant<JumpIdealCase, Prop21Case, LemmaImageCase, PropMainCase,
                              BoundaryCase, LocalModelCase, ConeCase, AnnihilatorCase>;

CaseFile case_from_json(const Json& j, FieldMode mode);
Json case_to_json(const CaseFile& c);

// ---- verdict reports ----

Json prop21_report(const Prop21Case& c, const Prop21Verdict& v);
Json lemma_image_report(const LemmaImageCase& c, const LemmaImageVerdict& v);
Json prop_main_report(const PropMainCase& c, const PropMainVerdict& v);
Json boundary_report(const BoundaryCase& c, const BoundaryVerdict& v);
Json local_model_report(const LocalModelCase& c, const LocalModelVerdict& v);

} // namespace jumploci
