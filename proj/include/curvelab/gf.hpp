#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/errors.hpp"

namespace curvelab {

class FieldCtx;

/// Immutable element of a finite field GF(p^k). The value is stored packed in
/// base p over the polynomial basis chosen by the owning FieldCtx; elements of
/// different contexts never mix.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldCtx* ctx, uint32_t raw) : ctx_(ctx), v_(raw) {}

    const FieldCtx* ctx() const { return ctx_; }
    uint32_t raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    /// Frobenius power a^(p^e).
    FieldElement frobenius(uint64_t e) const;

    bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    const FieldCtx* ctx_ = nullptr;
    uint32_t v_ = 0;
};

/// Optional table of preferred moduli, one line per field: "p k c_0 c_1 ... c_k"
/// in decimal with c_k = 1. When registered, field_create consults it before
/// falling back to the deterministic smallest irreducible.
struct ModulusTable {
    // key packs (p, k); value is the coefficient list c_0..c_k.
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>> entries;

    static ModulusTable parse(const std::string& text);
    const std::vector<uint32_t>* find(uint32_t p, uint32_t k) const;
};

/// A concrete finite field GF(p^k): prime p, extension degree k, and a monic
/// irreducible modulus of degree k over GF(p). Contexts are interned by
/// field_create and live for the whole process, so raw pointers to them are
/// stable. All operations are pure; a context is safe to share across threads.
///
/// Element encoding: an element with coefficients c_0..c_{k-1} over GF(p) is
/// the integer sum c_i * p^i. Fields with at most 2^22 elements carry exp/log
/// tables; larger fields (up to the 2^26 cap) fall back to coefficient
/// arithmetic.
class FieldCtx {
  public:
    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t order() const { return order_; }
    /// Modulus coefficients c_0..c_k, c_k = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string modulus_line() const;

    // -- raw operations on packed values --------------------------------
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frobenius(uint32_t a, uint64_t e) const;

    bool in_subfield(uint32_t a, uint32_t kprime) const;
    /// All elements of the subfield GF(p^kprime); kprime must divide k.
    std::vector<uint32_t> subfield_elements(uint32_t kprime) const;
    uint64_t mult_order(uint32_t a) const;
    /// Packed value of the canonical multiplicative generator.
    uint32_t generator_raw() const { return gen_; }
    /// Discrete log base the canonical generator; a must be nonzero.
    uint64_t dlog(uint32_t a) const;

    // -- element wrappers ------------------------------------------------
    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement element(uint32_t raw) const;
    /// Embedding of an integer through the prime subfield.
    FieldElement from_int(int64_t n) const;
    FieldElement generator() const { return {this, gen_}; }
    FieldElement gen_pow(uint64_t e) const { return {this, pow(gen_, e)}; }
    FieldElement from_coeffs(const std::vector<uint32_t>& c) const;
    std::vector<uint32_t> coeffs(uint32_t a) const;

    std::string to_string(uint32_t a) const;
    /// Parses "0" or "g^i".
    uint32_t parse_element(const std::string& s) const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

  private:
    FieldCtx() = default;
    friend const FieldCtx& field_create(uint32_t, uint32_t, std::optional<std::vector<uint32_t>>);

    void init(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
    uint32_t mul_nolut(uint32_t a, uint32_t b) const;
    uint32_t inv_nolut(uint32_t a) const;

    uint32_t p_ = 0, k_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> powp_;      // p^0 .. p^k
    std::vector<std::vector<uint32_t>> xk_red_;  // X^(k+j) mod modulus, j in [0,k)
    bool lut_ = false;
    std::vector<uint32_t> exp_;  // exp_[i] = g^i, i in [0, order-1)
    std::vector<uint32_t> log_;  // log_[v] for v != 0
    uint32_t gen_ = 0;
    std::vector<std::pair<uint64_t, int>> order_factors_;  // prime factorization of order-1
};

/// Interned field construction. Without an explicit modulus the
/// deterministically smallest monic irreducible of degree k over GF(p) is
/// chosen (smallest when coefficient vectors are read as base-p integers),
/// unless a registered modulus table has an entry for (p, k).
const FieldCtx& field_create(uint32_t p, uint32_t k,
                             std::optional<std::vector<uint32_t>> modulus = std::nullopt);

void set_modulus_table(ModulusTable table);
void clear_modulus_table();

/// Deterministic primitive element (smallest packed value of maximal
/// multiplicative order).
FieldElement primitive_element(const FieldCtx& ctx);

/// All e in GF(n^2) with e^n + e = u^(n+1), for u in GF(n^2); n = p^h. The
/// ambient field must contain GF(n^2). Exactly n solutions exist.
std::vector<FieldElement> hermitian_trace_solutions(const FieldCtx& ctx, const FieldElement& u,
                                                    uint32_t n);

bool is_prime_u32(uint32_t n);

}  // namespace curvelab
