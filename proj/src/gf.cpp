#include "curvelab/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace curvelab {

namespace {

constexpr uint64_t kOrderCap = 1ull << 26;
constexpr uint64_t kLutCap = 1ull << 22;

// ---- dense univariate arithmetic over GF(p), used only for modulus
// selection and the no-table fallback ---------------------------------------

using Upoly = std::vector<uint32_t>;  // coefficients, low degree first, trimmed

void utrim(Upoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Upoly umul(const Upoly& a, const Upoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Upoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    utrim(r);
    return r;
}

// remainder of a by monic b
Upoly umod(Upoly a, const Upoly& b, uint32_t p) {
    utrim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (size_t i = 0; i <= db; ++i) {
                uint64_t sub = uint64_t(c) * b[i] % p;
                uint32_t& t = a[shift + i];
                t = uint32_t((t + p - sub) % p);
            }
        a.pop_back();
        utrim(a);
    }
    return a;
}

Upoly umulmod(const Upoly& a, const Upoly& b, const Upoly& m, uint32_t p) {
    return umod(umul(a, b, p), m, p);
}

// X^(p^e) mod m by repeated p-th powering
Upoly xpowp(uint32_t e, const Upoly& m, uint32_t p) {
    Upoly x = {0, 1};
    x = umod(x, m, p);
    for (uint32_t i = 0; i < e; ++i) {
        // raise to the p-th power by square-and-multiply on the exponent p
        Upoly r = {1};
        Upoly base = x;
        uint32_t exp = p;
        while (exp) {
            if (exp & 1) r = umulmod(r, base, m, p);
            base = umulmod(base, base, m, p);
            exp >>= 1;
        }
        x = r;
    }
    return x;
}

Upoly ugcd(Upoly a, Upoly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) r = uint32_t(uint64_t(r) * base % p);
            base = uint32_t(uint64_t(base) * base % p);
            e >>= 1;
        }
        return r;
    };
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        // make b monic before use
        uint32_t lc = b.back();
        if (lc != 1) {
            uint32_t il = inv_mod_p(lc);
            for (auto& c : b) c = uint32_t(uint64_t(c) * il % p);
        }
        Upoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::pair<uint32_t, int>> factor_u32(uint32_t n) {
    std::vector<std::pair<uint32_t, int>> f;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) n /= d, ++e;
            f.push_back({d, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) n /= d, ++e;
            f.push_back({d, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

// degree-k monic polynomial irreducible over GF(p)?
bool irreducible(const Upoly& m, uint32_t p) {
    const uint32_t k = uint32_t(m.size() - 1);
    if (k == 1) return true;
    // X^(p^k) == X mod m
    Upoly xk = xpowp(k, m, p);
    Upoly x = umod(Upoly{0, 1}, m, p);
    if (xk != x) return false;
    // gcd(X^(p^(k/l)) - X, m) == 1 for each prime l | k
    for (auto [l, e] : factor_u32(k)) {
        (void)e;
        Upoly xd = xpowp(k / l, m, p);
        // xd - x
        Upoly diff = xd;
        diff.resize(std::max(diff.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
        utrim(diff);
        Upoly g = ugcd(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<FieldCtx>> fields;
    ModulusTable table;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- ModulusTable -----------------------------------------------------------

ModulusTable ModulusTable::parse(const std::string& text) {
    ModulusTable t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        uint32_t p, k;
        if (!(ls >> p >> k)) continue;
        std::vector<uint32_t> c;
        uint32_t v;
        while (ls >> v) c.push_back(v);
        if (c.size() != k + 1 || c.back() != 1)
            fail(Err::InvalidParameters, "modulus table line must list k+1 coefficients with c_k=1");
        t.entries.push_back({{p, k}, c});
    }
    return t;
}

const std::vector<uint32_t>* ModulusTable::find(uint32_t p, uint32_t k) const {
    for (const auto& e : entries)
        if (e.first.first == p && e.first.second == k) return &e.second;
    return nullptr;
}

void set_modulus_table(ModulusTable table) {
    std::lock_guard<std::mutex> lk(registry().mu);
    registry().table = std::move(table);
}

void clear_modulus_table() {
    std::lock_guard<std::mutex> lk(registry().mu);
    registry().table = ModulusTable{};
}

// ---- FieldCtx ---------------------------------------------------------------

void FieldCtx::init(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    p_ = p;
    k_ = k;
    modulus_ = std::move(modulus);
    order_ = 1;
    for (uint32_t i = 0; i < k; ++i) {
        order_ *= p;
        if (order_ > kOrderCap) fail(Err::InvalidParameters, "field order beyond the 2^26 cap");
    }
    powp_.resize(k + 1);
    powp_[0] = 1;
    for (uint32_t i = 1; i <= k; ++i) powp_[i] = powp_[i - 1] * p;

    // reduction rows: X^(k+j) mod modulus as k coefficients
    // X^k = -(c_0 + c_1 X + ... + c_{k-1} X^{k-1})
    std::vector<uint32_t> xk(k);
    for (uint32_t i = 0; i < k; ++i) xk[i] = (p - modulus_[i] % p) % p;
    xk_red_.assign(k, std::vector<uint32_t>(k, 0));
    xk_red_[0] = xk;
    for (uint32_t j = 1; j < k; ++j) {
        // multiply previous row by X and reduce
        const auto& prev = xk_red_[j - 1];
        std::vector<uint32_t> cur(k, 0);
        uint32_t carry = prev[k - 1];
        for (uint32_t i = k; i-- > 1;) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (carry)
            for (uint32_t i = 0; i < k; ++i)
                cur[i] = uint32_t((cur[i] + uint64_t(carry) * xk[i]) % p);
        xk_red_[j] = cur;
    }

    order_factors_ = factor_u64(order_ - 1);

    lut_ = order_ <= kLutCap;

    // find the canonical generator: smallest packed value of full order
    auto is_primitive = [&](uint32_t v) {
        if (v == 0) return false;
        if (order_ == 2) return v == 1;
        for (auto [l, e] : order_factors_) {
            (void)e;
            if (pow(v, (order_ - 1) / l) == 1) return false;
        }
        return true;
    };
    // pow() below works without tables; build tables after gen_ is known
    gen_ = 0;
    for (uint32_t v = 1; v < order_; ++v) {
        if (is_primitive(v)) {
            gen_ = v;
            break;
        }
    }
    if (order_ == 2) gen_ = 1;

    if (lut_) {
        exp_.resize(order_ - 1);
        log_.assign(order_, 0);
        uint32_t acc = 1;
        for (uint64_t i = 0; i + 1 < order_; ++i) {
            exp_[i] = acc;
            log_[acc] = uint32_t(i);
            acc = mul_nolut(acc, gen_);
        }
    }
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

uint32_t FieldCtx::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::mul_nolut(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t da[32], db[32];
    uint64_t prod[64] = {0};
    for (uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < k_; ++j) prod[i + j] += uint64_t(da[i]) * db[j];
    }
    // reduce degrees >= k
    for (uint32_t d = 2 * k_ - 2 + 1; d-- > k_;) {
        uint64_t c = prod[d] % p_;
        if (!c) continue;
        const auto& row = xk_red_[d - k_];
        for (uint32_t i = 0; i < k_; ++i) prod[i] += c * row[i];
        prod[d] = 0;
    }
    uint32_t r = 0, scale = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        r += uint32_t(prod[i] % p_) * scale;
        scale *= p_;
    }
    return r;
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (lut_ && !exp_.empty()) {
        uint64_t l = uint64_t(log_[a]) + log_[b];
        uint64_t n = order_ - 1;
        if (l >= n) l -= n;
        return exp_[l];
    }
    return mul_nolut(a, b);
}

uint32_t FieldCtx::inv_nolut(uint32_t a) const {
    // extended Euclid in GF(p)[X] against the modulus
    Upoly r0 = modulus_, r1 = coeffs(a);
    utrim(r1);
    Upoly t0 = {}, t1 = {1};
    auto inv_mod_p = [this](uint32_t x) {
        uint32_t r = 1, base = x, e = p_ - 2;
        while (e) {
            if (e & 1) r = uint32_t(uint64_t(r) * base % p_);
            base = uint32_t(uint64_t(base) * base % p_);
            e >>= 1;
        }
        return r;
    };
    while (!(r1.size() == 1)) {
        if (r1.empty()) fail(Err::DivisionByZero, "inverse of zero");
        // divide r0 by r1: quotient q, remainder r
        Upoly q;
        Upoly rem = r0;
        utrim(rem);
        uint32_t lc_inv = inv_mod_p(r1.back());
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint32_t c = uint32_t(uint64_t(rem.back()) * lc_inv % p_);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) {
                uint64_t sub = uint64_t(c) * r1[i] % p_;
                rem[shift + i] = uint32_t((rem[shift + i] + p_ - sub) % p_);
            }
            utrim(rem);
            if (rem.empty()) break;
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        Upoly qt = umul(q, t1, p_);
        Upoly nt = t0;
        nt.resize(std::max(nt.size(), qt.size()), 0);
        for (size_t i = 0; i < qt.size(); ++i) nt[i] = (nt[i] + p_ - qt[i]) % p_;
        utrim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r1 is a nonzero constant; scale t1 by its inverse
    uint32_t c = inv_mod_p(r1[0]);
    Upoly res = t1;
    for (auto& x : res) x = uint32_t(uint64_t(x) * c % p_);
    res = umod(res, modulus_, p_);
    res.resize(k_, 0);
    return from_coeffs(res).raw();
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
    if (lut_ && !exp_.empty()) {
        uint64_t n = order_ - 1;
        uint64_t l = log_[a];
        return exp_[(n - l) % n];
    }
    return inv_nolut(a);
}

uint32_t FieldCtx::div(uint32_t a, uint32_t b) const {
    if (b == 0) fail(Err::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t n = order_ - 1;
    if (lut_ && !exp_.empty()) {
        uint64_t l = log_[a] % n;
        return exp_[uint64_t((unsigned __int128)(l) * (e % n) % n)];
    }
    e %= n;  // a != 0, so a^n = 1
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t FieldCtx::frobenius(uint32_t a, uint64_t e) const {
    e %= k_;
    if (a == 0 || e == 0) return a;
    if (lut_ && !exp_.empty()) {
        uint64_t n = order_ - 1;
        // p^e mod n
        uint64_t pe = 1;
        for (uint64_t i = 0; i < e; ++i) pe = (unsigned __int128)(pe)*p_ % n;
        return exp_[uint64_t((unsigned __int128)(log_[a]) * pe % n)];
    }
    uint32_t r = a;
    for (uint64_t i = 0; i < e; ++i) r = pow(r, p_);
    return r;
}

bool FieldCtx::in_subfield(uint32_t a, uint32_t kprime) const {
    if (kprime == 0 || k_ % kprime != 0)
        fail(Err::NonDividingDegree, "subfield degree must divide the ambient degree");
    return frobenius(a, kprime) == a;
}

std::vector<uint32_t> FieldCtx::subfield_elements(uint32_t kprime) const {
    if (kprime == 0 || k_ % kprime != 0)
        fail(Err::NonDividingDegree, "subfield degree must divide the ambient degree");
    uint64_t sub = 1;
    for (uint32_t i = 0; i < kprime; ++i) sub *= p_;
    std::vector<uint32_t> out;
    out.reserve(sub);
    out.push_back(0);
    // nonzero part is the unique cyclic subgroup of order sub-1
    uint64_t step = (order_ - 1) / (sub - 1);
    uint32_t x = pow(gen_, step);
    uint32_t acc = 1;
    for (uint64_t i = 0; i + 1 < sub; ++i) {
        out.push_back(acc);
        acc = mul(acc, x);
    }
    std::sort(out.begin() + 1, out.end());
    return out;
}

uint64_t FieldCtx::mult_order(uint32_t a) const {
    if (a == 0) fail(Err::InvalidParameters, "zero has no multiplicative order");
    uint64_t o = order_ - 1;
    for (auto [l, e] : order_factors_)
        for (int i = 0; i < e && pow(a, o / l) == 1; ++i) o /= l;
    return o;
}

uint64_t FieldCtx::dlog(uint32_t a) const {
    if (a == 0) fail(Err::InvalidParameters, "discrete log of zero");
    if (lut_) return log_[a];
    uint32_t acc = 1;
    for (uint64_t i = 0; i < order_ - 1; ++i) {
        if (acc == a) return i;
        acc = mul(acc, gen_);
    }
    fail(Err::InvalidParameters, "discrete log not found");
}

FieldElement FieldCtx::element(uint32_t raw) const {
    if (raw >= order_) fail(Err::InvalidParameters, "element value out of range");
    return {this, raw};
}

FieldElement FieldCtx::from_int(int64_t n) const {
    int64_t m = n % int64_t(p_);
    if (m < 0) m += p_;
    return {this, uint32_t(m)};
}

FieldElement FieldCtx::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) fail(Err::InvalidParameters, "too many coefficients");
    uint32_t r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
    // the fold above multiplies by p each step, building sum c_i p^i
    return {this, r};
}

std::vector<uint32_t> FieldCtx::coeffs(uint32_t a) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

std::string FieldCtx::to_string(uint32_t a) const {
    if (a == 0) return "0";
    return "g^" + std::to_string(dlog(a));
}

uint32_t FieldCtx::parse_element(const std::string& s) const {
    if (s == "0") return 0;
    if (s.rfind("g^", 0) != 0) fail(Err::InvalidParameters, "bad element literal: " + s);
    uint64_t e = std::stoull(s.substr(2));
    return pow(gen_, e);
}

std::string FieldCtx::modulus_line() const {
    std::ostringstream os;
    os << p_ << ' ' << k_;
    for (auto c : modulus_) os << ' ' << c;
    return os.str();
}

// ---- factory ----------------------------------------------------------------

const FieldCtx& field_create(uint32_t p, uint32_t k, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime_u32(p)) fail(Err::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(Err::InvalidParameters, "extension degree must be at least 1");

    std::lock_guard<std::mutex> lk(registry().mu);

    std::vector<uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != k + 1 || mod.back() % p != 1)
            fail(Err::InvalidParameters, "modulus must be monic of degree k");
        for (auto& c : mod) c %= p;
        if (k > 1 && !irreducible(mod, p))
            fail(Err::ReducibleModulus, "supplied modulus is reducible");
    } else if (const auto* t = registry().table.find(p, k)) {
        mod = *t;
        for (auto& c : mod) c %= p;
        if (k > 1 && !irreducible(mod, p))
            fail(Err::ReducibleModulus, "modulus table entry is reducible");
    } else if (k == 1) {
        mod = {0, 1};  // X
    } else {
        // smallest monic irreducible of degree k, coefficients read as a
        // base-p integer
        uint64_t limit = 1;
        for (uint32_t i = 0; i < k; ++i) limit *= p;
        bool found = false;
        for (uint64_t v = 0; v < limit; ++v) {
            std::vector<uint32_t> cand(k + 1);
            uint64_t t2 = v;
            for (uint32_t i = 0; i < k; ++i) {
                cand[i] = uint32_t(t2 % p);
                t2 /= p;
            }
            cand[k] = 1;
            if (irreducible(cand, p)) {
                mod = cand;
                found = true;
                break;
            }
        }
        if (!found) fail(Err::InvalidParameters, "no irreducible modulus found");
    }

    auto key = std::make_tuple(p, k, mod);
    auto it = registry().fields.find(key);
    if (it != registry().fields.end()) return *it->second;

    std::unique_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->init(p, k, mod);
    auto [pos, inserted] = registry().fields.emplace(std::move(key), std::move(ctx));
    (void)inserted;
    return *pos->second;
}

// ---- FieldElement -----------------------------------------------------------

namespace {
const FieldCtx& same_ctx(const FieldElement& a, const FieldElement& b) {
    if (a.ctx() == nullptr || a.ctx() != b.ctx())
        fail(Err::ContextMismatch, "operands from different field contexts");
    return *a.ctx();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const auto& f = same_ctx(*this, o);
    return {&f, f.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    const auto& f = same_ctx(*this, o);
    return {&f, f.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    const auto& f = same_ctx(*this, o);
    return {&f, f.mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    const auto& f = same_ctx(*this, o);
    return {&f, f.div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {ctx_, ctx_->neg(v_)}; }
FieldElement FieldElement::inverse() const { return {ctx_, ctx_->inv(v_)}; }
FieldElement FieldElement::pow(uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
FieldElement FieldElement::frobenius(uint64_t e) const { return {ctx_, ctx_->frobenius(v_, e)}; }
std::string FieldElement::to_string() const { return ctx_ ? ctx_->to_string(v_) : "<null>"; }

FieldElement primitive_element(const FieldCtx& ctx) { return ctx.generator(); }

std::vector<FieldElement> hermitian_trace_solutions(const FieldCtx& ctx, const FieldElement& u,
                                                    uint32_t n) {
    if (u.ctx() != &ctx) fail(Err::ContextMismatch, "u from a different context");
    // n = p^h; the ambient field must contain GF(n^2)
    uint32_t h = 0;
    uint64_t t = n;
    while (t > 1) {
        if (t % ctx.p() != 0) fail(Err::InvalidParameters, "n must be a power of p");
        t /= ctx.p();
        ++h;
    }
    if (h == 0 || ctx.k() % (2 * h) != 0)
        fail(Err::FieldTooSmall, "ambient field does not contain GF(n^2)");
    if (!ctx.in_subfield(u.raw(), 2 * h))
        fail(Err::InvalidParameters, "u must lie in GF(n^2)");
    uint32_t rhs = ctx.pow(u.raw(), uint64_t(n) + 1);
    std::vector<FieldElement> out;
    for (uint32_t e : ctx.subfield_elements(2 * h)) {
        if (ctx.add(ctx.pow(e, n), e) == rhs) out.push_back({&ctx, e});
    }
    return out;
}

}  // namespace curvelab
