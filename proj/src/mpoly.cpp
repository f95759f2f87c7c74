#include "curvelab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace curvelab {

void MultiPoly::add_term(Mono m, uint32_t c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        uint32_t s = ctx_->add(it->second, c);
        if (s == 0)
            t_.erase(it);
        else
            it->second = s;
    }
}

MultiPoly MultiPoly::constant(const FieldCtx& ctx, const FieldElement& c) {
    MultiPoly f(ctx);
    if (c.ctx() != &ctx) fail(Err::ContextMismatch, "constant from a different context");
    f.add_term({}, c.raw());
    return f;
}

MultiPoly MultiPoly::monomial(const FieldCtx& ctx, const FieldElement& c, Mono m) {
    MultiPoly f(ctx);
    if (c.ctx() != &ctx) fail(Err::ContextMismatch, "coefficient from a different context");
    f.add_term(m, c.raw());
    return f;
}

MultiPoly MultiPoly::variable(const FieldCtx& ctx, Var v, uint32_t e) {
    Mono m;
    switch (v) {
        case Var::X: m.x = e; break;
        case Var::Y: m.y = e; break;
        case Var::Z: m.z = e; break;
        case Var::L: m.l = e; break;
    }
    MultiPoly f(ctx);
    f.add_term(m, 1);
    return f;
}

int64_t MultiPoly::degree() const {
    if (t_.empty()) return -1;
    return t_.begin()->first.xyz_degree();  // leading term has maximal degree
}

bool MultiPoly::is_homogeneous(int64_t* deg) const {
    if (t_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int64_t d = t_.begin()->first.xyz_degree();
    for (const auto& [m, c] : t_)
        if (m.xyz_degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

bool MultiPoly::uses_lambda() const {
    for (const auto& [m, c] : t_)
        if (m.l) return true;
    return false;
}

FieldElement MultiPoly::leading_coeff() const {
    if (t_.empty()) return ctx_->zero();
    return {ctx_, t_.begin()->second};
}

Mono MultiPoly::leading_mono() const {
    if (t_.empty()) fail(Err::InvalidParameters, "leading monomial of zero");
    return t_.begin()->first;
}

FieldElement MultiPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return {ctx_, it == t_.end() ? 0u : it->second};
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) fail(Err::ContextMismatch, "mixed-context polynomials");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) fail(Err::ContextMismatch, "mixed-context polynomials");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, ctx_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, ctx_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) fail(Err::ContextMismatch, "mixed-context polynomials");
    MultiPoly r(*ctx_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(m1 + m2, ctx_->mul(c1, c2));
    return r;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
    MultiPoly r = constant(*ctx_, ctx_->one());
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
    if (c.ctx() != ctx_) fail(Err::ContextMismatch, "scalar from a different context");
    MultiPoly r(*ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, ctx_->mul(v, c.raw()));
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (t_.empty()) return *this;
    return scale(leading_coeff().inverse());
}

FieldElement MultiPoly::evaluate(const FieldElement& x, const FieldElement& y,
                                 const FieldElement& z, std::optional<FieldElement> lambda) const {
    if (x.ctx() != ctx_ || y.ctx() != ctx_ || z.ctx() != ctx_)
        fail(Err::ContextMismatch, "point from a different context");
    uint32_t acc = 0;
    for (const auto& [m, c] : t_) {
        uint32_t t = c;
        if (m.x) t = ctx_->mul(t, ctx_->pow(x.raw(), m.x));
        if (m.y) t = ctx_->mul(t, ctx_->pow(y.raw(), m.y));
        if (m.z) t = ctx_->mul(t, ctx_->pow(z.raw(), m.z));
        if (m.l) {
            if (!lambda) fail(Err::MissingParameter, "polynomial uses L but no lambda given");
            t = ctx_->mul(t, ctx_->pow(lambda->raw(), m.l));
        }
        acc = ctx_->add(acc, t);
    }
    return {ctx_, acc};
}

MultiPoly MultiPoly::partial_derivative(Var v) const {
    if (v == Var::L) fail(Err::InvalidParameters, "no derivative in the pencil parameter");
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) {
        uint32_t e = v == Var::X ? m.x : v == Var::Y ? m.y : m.z;
        if (e == 0) continue;
        uint32_t fc = ctx_->mul(c, ctx_->from_int(int64_t(e % ctx_->p())).raw());
        if (fc == 0) continue;
        Mono d = m;
        if (v == Var::X)
            d.x -= 1;
        else if (v == Var::Y)
            d.y -= 1;
        else
            d.z -= 1;
        r.add_term(d, fc);
    }
    return r;
}

namespace {

// powers[e] of a base polynomial, computed on demand by ascending e
class PowerCache {
  public:
    explicit PowerCache(const MultiPoly& base) : pows_{MultiPoly::constant(base.ctx(), base.ctx().one()), base} {}

    const MultiPoly& get(uint32_t e) {
        while (pows_.size() <= e) pows_.push_back(pows_.back() * pows_[1]);
        return pows_[e];
    }

  private:
    std::vector<MultiPoly> pows_;
};

}  // namespace

MultiPoly MultiPoly::compose(const MultiPoly& px, const MultiPoly& py, const MultiPoly& pz) const {
    if (px.ctx_ != ctx_ || py.ctx_ != ctx_ || pz.ctx_ != ctx_)
        fail(Err::ContextMismatch, "substitution polynomials from a different context");
    PowerCache cx(px), cy(py), cz(pz);
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) {
        MultiPoly term = constant(*ctx_, FieldElement(ctx_, c));
        if (m.x) term = term * cx.get(m.x);
        if (m.y) term = term * cy.get(m.y);
        if (m.z) term = term * cz.get(m.z);
        if (m.l) term = term * variable(*ctx_, Var::L, m.l);
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::substitute_linear(const std::array<uint32_t, 9>& a) const {
    auto row = [&](int i) {
        MultiPoly f(*ctx_);
        f.add_term({1, 0, 0, 0}, a[size_t(i) * 3 + 0]);
        f.add_term({0, 1, 0, 0}, a[size_t(i) * 3 + 1]);
        f.add_term({0, 0, 1, 0}, a[size_t(i) * 3 + 2]);
        return f;
    };
    return compose(row(0), row(1), row(2));
}

MultiPoly MultiPoly::bind_lambda(const FieldElement& lambda) const {
    if (lambda.ctx() != ctx_) fail(Err::ContextMismatch, "lambda from a different context");
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) {
        Mono n = m;
        n.l = 0;
        r.add_term(n, m.l ? ctx_->mul(c, ctx_->pow(lambda.raw(), m.l)) : c);
    }
    return r;
}

MultiPoly MultiPoly::set_var_one(Var v) const {
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) {
        Mono n = m;
        switch (v) {
            case Var::X: n.x = 0; break;
            case Var::Y: n.y = 0; break;
            case Var::Z: n.z = 0; break;
            case Var::L: n.l = 0; break;
        }
        r.add_term(n, c);
    }
    return r;
}

MultiPoly MultiPoly::homogenize(int64_t target) const {
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) {
        int64_t d = m.xyz_degree();
        if (d > target) fail(Err::InvalidParameters, "term degree exceeds homogenization target");
        Mono n = m;
        n.z += uint32_t(target - d);
        r.add_term(n, c);
    }
    return r;
}

MultiPoly MultiPoly::coefficient_frobenius(uint64_t e) const {
    MultiPoly r(*ctx_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, ctx_->frobenius(c, e));
    return r;
}

std::string MultiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << ctx_->to_string(c);
        if (m.x) os << " X^" << m.x;
        if (m.y) os << " Y^" << m.y;
        if (m.z) os << " Z^" << m.z;
        if (m.l) os << " L^" << m.l;
    }
    return os.str();
}

MultiPoly MultiPoly::parse(const FieldCtx& ctx, const std::string& s) {
    MultiPoly r(ctx);
    std::istringstream in(s);
    std::string tok;
    uint32_t coeff = 0;
    Mono m;
    bool have_term = false;
    auto flush = [&]() {
        if (have_term) r.add_term(m, coeff);
        m = Mono{};
        coeff = 0;
        have_term = false;
    };
    while (in >> tok) {
        if (tok == "+") {
            flush();
        } else if (tok == "0" && !have_term) {
            // zero polynomial / zero summand
        } else if (tok.rfind("g^", 0) == 0) {
            flush();
            coeff = ctx.parse_element(tok);
            have_term = true;
        } else if (tok.size() > 2 && tok[1] == '^') {
            uint32_t e = uint32_t(std::stoul(tok.substr(2)));
            switch (tok[0]) {
                case 'X': m.x = e; break;
                case 'Y': m.y = e; break;
                case 'Z': m.z = e; break;
                case 'L': m.l = e; break;
                default: fail(Err::InvalidParameters, "bad variable in term: " + tok);
            }
        } else {
            fail(Err::InvalidParameters, "bad token in polynomial: " + tok);
        }
    }
    flush();
    return r;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) fail(Err::ZeroDivisor, "division by the zero polynomial");
    const FieldCtx& F = num.ctx();
    if (&F != &den.ctx()) fail(Err::ContextMismatch, "mixed-context division");
    MultiPoly q(F), r = num;
    const Mono dm = den.leading_mono();
    const uint32_t dc_inv = F.inv(den.leading_coeff().raw());
    while (!r.is_zero()) {
        Mono rm = r.leading_mono();
        if (!rm.divisible_by(dm)) return std::nullopt;
        uint32_t c = F.mul(r.leading_coeff().raw(), dc_inv);
        Mono sh = rm - dm;
        MultiPoly t = MultiPoly::monomial(F, FieldElement(&F, c), sh);
        q = q + t;
        r = r - t * den;
    }
    return q;
}

std::optional<MultiPoly> qth_root(const MultiPoly& f, uint64_t s) {
    const FieldCtx& F = f.ctx();
    // s must be a positive power of p
    uint64_t t = s;
    uint32_t h = 0;
    while (t > 1 && t % F.p() == 0) {
        t /= F.p();
        ++h;
    }
    if (t != 1 || h == 0) fail(Err::InvalidParameters, "root index must be a power of p");
    MultiPoly r(F);
    uint64_t inv_e = (F.k() - (h % F.k())) % F.k();
    for (const auto& [m, c] : f.terms()) {
        if (m.x % s || m.y % s || m.z % s || m.l % s) return std::nullopt;
        Mono n{uint32_t(m.x / s), uint32_t(m.y / s), uint32_t(m.z / s), uint32_t(m.l / s)};
        r.add_term(n, F.frobenius(c, inv_e));
    }
    return r;
}

std::optional<FieldElement> proportional(const MultiPoly& f, const MultiPoly& g) {
    const FieldCtx& F = f.ctx();
    if (&F != &g.ctx()) fail(Err::ContextMismatch, "mixed-context comparison");
    if (g.is_zero()) {
        if (f.is_zero()) return F.one();
        return std::nullopt;
    }
    if (f.is_zero() || f.term_count() != g.term_count()) return std::nullopt;
    std::optional<uint32_t> ratio;
    auto it = f.terms().begin();
    auto jt = g.terms().begin();
    for (; it != f.terms().end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return std::nullopt;
        uint32_t c = F.div(it->second, jt->second);
        if (!ratio)
            ratio = c;
        else if (*ratio != c)
            return std::nullopt;
    }
    return FieldElement(&F, *ratio);
}

MultiPoly moore_determinant(const FieldCtx& ctx, uint64_t q, uint32_t a, uint32_t b, bool affine) {
    if (!(a > b && b >= 1)) fail(Err::InvalidParameters, "moore determinant needs a > b >= 1");
    uint64_t qb = 1, qa = 1;
    for (uint32_t i = 0; i < b; ++i) qb *= q;
    for (uint32_t i = 0; i < a; ++i) qa *= q;
    auto entry = [&](Var v, uint64_t e) { return MultiPoly::variable(ctx, v, uint32_t(e)); };
    std::array<MultiPoly, 9> M = {
        entry(Var::X, 1), entry(Var::X, qb), entry(Var::X, qa),
        entry(Var::Y, 1), entry(Var::Y, qb), entry(Var::Y, qa),
        entry(Var::Z, 1), entry(Var::Z, qb), entry(Var::Z, qa),
    };
    if (affine) {
        MultiPoly one = MultiPoly::constant(ctx, ctx.one());
        M[6] = one;
        M[7] = one;
        M[8] = one;
    }
    auto det2 = [&](int i, int j, int k2, int l2) { return M[i] * M[l2] - M[j] * M[k2]; };
    return M[0] * det2(4, 5, 7, 8) - M[1] * det2(3, 5, 6, 8) + M[2] * det2(3, 4, 6, 7);
}

}  // namespace curvelab
