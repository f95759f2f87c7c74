#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/groups.hpp"
#include "curvelab/mpoly.hpp"

namespace curvelab {

/// Point of PG(2, K) in normalized homogeneous coordinates: the first nonzero
/// coordinate (scanning X, Y, Z) is 1, so equality of coordinate triples is
/// equality of points.
struct PointPG2 {
    const FieldCtx* ctx;
    std::array<uint32_t, 3> c;

    static PointPG2 make(const FieldCtx& F, uint32_t x, uint32_t y, uint32_t z);
    static PointPG2 make(const FieldCtx& F, const std::array<uint32_t, 3>& v) {
        return make(F, v[0], v[1], v[2]);
    }
    bool operator==(const PointPG2& o) const { return ctx == o.ctx && c == o.c; }
    std::string to_string() const;
};

/// All points of PG(2, q') for the subfield of the given order; sub_order must
/// be p^k' with k' dividing the ambient degree.
std::vector<PointPG2> pg2_points(const FieldCtx& F, uint64_t sub_order);

/// Exhaustive count of the zeros of f among the points of PG(2, sub_order).
/// The polynomial must be lambda-free or lambda must be supplied. Workers
/// split the affine chart when threads > 1.
uint64_t count_points(const MultiPoly& f, uint64_t sub_order,
                      std::optional<FieldElement> lambda = std::nullopt, unsigned threads = 1);

struct TangentLine {
    MultiPoly line;  // normalized linear form
    uint32_t multiplicity;
};

struct SingularityReport {
    PointPG2 point;
    uint32_t multiplicity = 0;
    std::vector<TangentLine> tangents;
    /// True when the tangent cone split completely into linear factors over
    /// the ambient field (multiplicities then sum to the point multiplicity).
    bool cone_split = true;
};

/// Multiplicity and tangent cone of f at P: P is moved to (0:0:1), the minimal
/// total degree of the dehomogenized polynomial is the multiplicity, and the
/// linear factors of the initial form (found by exhaustive root search in the
/// ambient field) are the tangent lines, mapped back to global coordinates.
SingularityReport multiplicity_at(const MultiPoly& f, const PointPG2& P);

/// All points of PG(2, sub_order) where f and its three partials vanish, each
/// with its multiplicity report. The scan is scoped to the stated subfield.
std::vector<SingularityReport> singular_points(const MultiPoly& f, uint64_t sub_order,
                                               std::optional<FieldElement> lambda = std::nullopt);

/// I(P, line ∩ f): the line is parametrized through P and the root order of
/// the restricted univariate polynomial at P is returned.
uint64_t line_intersection_multiplicity(const MultiPoly& f, const MultiPoly& line,
                                        const PointPG2& P);

/// True when f is proportional to the product of the given lines with their
/// multiplicities. The multiplicities must sum to deg f.
bool verify_line_splitting(const MultiPoly& f, const std::vector<TangentLine>& lines);

/// Tangent line to f at a nonsingular point (gradient line), normalized.
MultiPoly tangent_at_nonsingular(const MultiPoly& f, const PointPG2& P);

}  // namespace curvelab
