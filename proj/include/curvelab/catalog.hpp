#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvelab/groups.hpp"
#include "curvelab/mpoly.hpp"

namespace curvelab {

enum class CurveId {
    Dgz,
    DualDgz,
    Fnm,
    Hermitian,
    Pellikaan,
    Fermat,
    AglPencil,
    DualAglPencil,
    Pgl3Pencil,
    PguPencil,
    SingerNet,
    SingerBig,
    TrianglePencil,
    Pgl2Pencil,
    Hemisystem,
};

/// Parameters for build_curve. q is required for all ids except pgu-pencil and
/// hermitian, which take n (with q = n^2 implied where relevant). Pencil ids
/// accept either a concrete lambda or lambda_symbolic to keep the pencil
/// parameter as the ring variable L.
struct CurveParams {
    uint32_t q = 0;
    uint32_t n = 0;
    uint32_t m = 0;
    std::optional<FieldElement> lambda;
    bool lambda_symbolic = false;
    std::optional<std::array<FieldElement, 3>> net;
};

/// A catalogued curve: the resolved polynomial plus the metadata used to build
/// it. The polynomial is homogeneous in (X, Y, Z) of expected_degree; this is
/// checked at construction.
struct CurveSpec {
    CurveId id;
    std::string name;
    CurveParams params;
    MultiPoly poly;
    int64_t expected_degree;
    std::string note;  // e.g. which field omega was taken in
};

CurveSpec build_curve(const FieldCtx& F, CurveId id, CurveParams params);

std::optional<CurveId> curve_id_from_string(const std::string& s);
std::string curve_id_name(CurveId id);
std::vector<std::pair<std::string, std::string>> catalog_list();

/// Primitive cube root of unity: in GF(q) when 3 | q-1, else in GF(q^2).
/// Requires p != 3 and the ambient field to contain it. Returns the element
/// and the subfield ("GF(q)" or "GF(q^2)") it was taken from.
std::pair<FieldElement, std::string> omega_in(const FieldCtx& F, uint32_t q);

/// Homogeneous coordinates (lambda : mu) with f = lambda * g1 + mu * g2, if
/// they exist. g1 and g2 must have equal degree and not be proportional.
std::optional<std::pair<FieldElement, FieldElement>> pencil_coordinates(const MultiPoly& f,
                                                                        const MultiPoly& g1,
                                                                        const MultiPoly& g2);

/// Searches diagonal projectivities diag(c, d, 1) with c, d in GF(p^E)^* for a
/// witness taking f to a scalar multiple of g. Degrees must match.
std::optional<Projectivity> projective_equivalence_witness(const MultiPoly& f, const MultiPoly& g,
                                                           uint32_t E);

}  // namespace curvelab
