#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/mpoly.hpp"

namespace curvelab {

using BigInt = boost::multiprecision::cpp_int;

/// A projectivity of PG(2, K), stored as an explicit 3x3 invertible matrix
/// over a FieldCtx. Matrices are kept as constructed; normalized() rescales so
/// the first nonzero entry in row-major order is 1, which makes equality of
/// normalized matrices the same as equality in PGL(3, K).
class Projectivity {
  public:
    Projectivity(const FieldCtx& ctx, std::array<uint32_t, 9> row_major, std::string label = "");

    const FieldCtx& ctx() const { return *ctx_; }
    const std::array<uint32_t, 9>& entries() const { return m_; }
    uint32_t entry(int i, int j) const { return m_[size_t(i) * 3 + j]; }
    const std::string& label() const { return label_; }

    FieldElement det() const;
    Projectivity operator*(const Projectivity& o) const;
    Projectivity inverse() const;
    Projectivity normalized() const;
    bool same_projectivity(const Projectivity& o) const;

    /// Image of a point (column vector), raw coordinates.
    std::array<uint32_t, 3> apply(const std::array<uint32_t, 3>& pt) const;
    /// f(A v): action on polynomials by linear substitution of the rows.
    MultiPoly act_on(const MultiPoly& f) const;

  private:
    const FieldCtx* ctx_;
    std::array<uint32_t, 9> m_;
    std::string label_;
};

enum class GroupTag {
    PGL3,
    PSL3,
    AGL2,
    DualAGL2,
    PGU3,
    Triangle,
    SingerNormalizer,
    Singer,
    PGL2Conic,
    HemisystemLinear,
};

/// Identifies one of the catalogued subgroups of PGL(3, q). For PGU3 the
/// parameter is n with q = n^2 implied; all other tags take q directly.
struct GroupId {
    GroupTag tag;
    uint32_t q = 0;
    uint32_t n = 0;

    static GroupId make(GroupTag tag, uint32_t q_or_n);
    static std::optional<GroupId> parse(const std::string& name, uint32_t q_or_n);
    std::string name() const;
    /// Field size the group is defined over (n^2 for PGU3).
    uint32_t field_q() const { return tag == GroupTag::PGU3 ? n * n : q; }
    void validate() const;
};

/// Generator list whose closure is the full group, over the given ambient
/// field. The ambient must contain GF(q) (GF(q^3) for the Singer groups,
/// GF(n^2) for PGU3).
std::vector<Projectivity> generators_for(const GroupId& id, const FieldCtx& ambient);

/// Breadth-first closure size under normalized-matrix multiplication, or
/// nullopt once it exceeds cap.
std::optional<uint64_t> closure_order(const std::vector<Projectivity>& gens, uint64_t cap);

/// Closed-form group order.
BigInt order_formula(const GroupId& id);

/// JSON text {group, q, n, matrices: [...]} with entries encoded as the
/// exponent i of g^i and -1 for zero.
std::string generators_json(const GroupId& id, const std::vector<Projectivity>& gens);

}  // namespace curvelab
