#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/gf.hpp"

namespace curvelab {

enum class Var : int { X = 0, Y = 1, Z = 2, L = 3 };

/// Exponent vector of one term: X^x Y^y Z^z L^l. The pencil parameter L
/// carries weight 0, so homogeneity and degrees are read off (x, y, z) only.
struct Mono {
    uint32_t x = 0, y = 0, z = 0, l = 0;

    int64_t xyz_degree() const { return int64_t(x) + y + z; }
    bool operator==(const Mono& o) const { return x == o.x && y == o.y && z == o.z && l == o.l; }
    Mono operator+(const Mono& o) const { return {x + o.x, y + o.y, z + o.z, l + o.l}; }
    bool divisible_by(const Mono& o) const {
        return x >= o.x && y >= o.y && z >= o.z && l >= o.l;
    }
    Mono operator-(const Mono& o) const { return {x - o.x, y - o.y, z - o.z, l - o.l}; }
};

/// Canonical term order: graded lexicographic on (X, Y, Z), ties broken by the
/// L-degree. The comparator sorts descending so map iteration starts at the
/// leading term.
struct MonoBefore {
    bool operator()(const Mono& a, const Mono& b) const {
        int64_t da = a.xyz_degree(), db = b.xyz_degree();
        if (da != db) return da > db;
        if (a.x != b.x) return a.x > b.x;
        if (a.y != b.y) return a.y > b.y;
        if (a.z != b.z) return a.z > b.z;
        return a.l > b.l;
    }
};

/// Sparse polynomial in X, Y, Z and the weight-0 pencil parameter L over a
/// fixed FieldCtx. Values are immutable in spirit: every operation returns a
/// fresh polynomial, and no zero coefficients are ever stored.
class MultiPoly {
  public:
    using TermMap = std::map<Mono, uint32_t, MonoBefore>;

    explicit MultiPoly(const FieldCtx& ctx) : ctx_(&ctx) {}

    static MultiPoly zero(const FieldCtx& ctx) { return MultiPoly(ctx); }
    static MultiPoly constant(const FieldCtx& ctx, const FieldElement& c);
    static MultiPoly monomial(const FieldCtx& ctx, const FieldElement& c, Mono m);
    static MultiPoly variable(const FieldCtx& ctx, Var v, uint32_t e = 1);

    const FieldCtx& ctx() const { return *ctx_; }
    const TermMap& terms() const { return t_; }
    size_t term_count() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    /// Total degree in (X, Y, Z); -1 for the zero polynomial.
    int64_t degree() const;
    bool is_homogeneous(int64_t* deg = nullptr) const;
    bool uses_lambda() const;
    FieldElement leading_coeff() const;
    Mono leading_mono() const;
    FieldElement coeff(const Mono& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const { return ctx_ == o.ctx_ && t_ == o.t_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(uint32_t e) const;
    MultiPoly scale(const FieldElement& c) const;
    /// Scales so the leading coefficient is 1 (projective normal form).
    MultiPoly normalized() const;

    FieldElement evaluate(const FieldElement& x, const FieldElement& y, const FieldElement& z,
                          std::optional<FieldElement> lambda = std::nullopt) const;

    MultiPoly partial_derivative(Var v) const;

    /// Substitutes X, Y, Z by the given polynomials; L passes through.
    MultiPoly compose(const MultiPoly& px, const MultiPoly& py, const MultiPoly& pz) const;
    /// f(A v): substitutes each variable by the linear form given by the
    /// corresponding row of the matrix (row-major, raw field values).
    MultiPoly substitute_linear(const std::array<uint32_t, 9>& a) const;

    /// Replaces L by a concrete value.
    MultiPoly bind_lambda(const FieldElement& lambda) const;
    /// Sets one of X, Y, Z to 1 (dehomogenization).
    MultiPoly set_var_one(Var v) const;
    /// Multiplies each term by Z^(target - xyz_degree); all terms must have
    /// degree at most target.
    MultiPoly homogenize(int64_t target) const;

    /// Applies x -> x^(p^e) to every coefficient.
    MultiPoly coefficient_frobenius(uint64_t e) const;

    std::string to_string() const;
    static MultiPoly parse(const FieldCtx& ctx, const std::string& s);

    // internal-use mutation during construction; keeps the no-zero invariant
    void add_term(Mono m, uint32_t raw_coeff);

  private:
    const FieldCtx* ctx_;
    TermMap t_;
};

/// Exact single-divisor division: returns q with num == q * den, or nullopt
/// when den does not divide num. Throws ZeroDivisor for den == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Inverse of f -> f^s for s = p^h: defined when every exponent is divisible
/// by s; coefficients are mapped through the inverse Frobenius.
std::optional<MultiPoly> qth_root(const MultiPoly& f, uint64_t s);

/// The scalar c != 0 with f == c * g, if any.
std::optional<FieldElement> proportional(const MultiPoly& f, const MultiPoly& g);

/// Determinant of the 3x3 Moore-type matrix with columns (T, T^(q^b), T^(q^a))
/// for T = X, Y, Z; a > b >= 1. With affine = true the Z row is replaced by
/// (1, 1, 1).
MultiPoly moore_determinant(const FieldCtx& ctx, uint64_t q, uint32_t a, uint32_t b,
                            bool affine = false);

}  // namespace curvelab
