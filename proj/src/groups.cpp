#include "curvelab/groups.hpp"

#include <json.hpp>

#include <deque>
#include <unordered_set>

namespace curvelab {

// ---- Projectivity -----------------------------------------------------------

Projectivity::Projectivity(const FieldCtx& ctx, std::array<uint32_t, 9> row_major,
                           std::string label)
    : ctx_(&ctx), m_(row_major), label_(std::move(label)) {
    if (det().is_zero()) fail(Err::InvalidParameters, "singular matrix is not a projectivity");
}

FieldElement Projectivity::det() const {
    const FieldCtx& F = *ctx_;
    auto minor2 = [&](int a, int b, int c, int d) {
        return F.sub(F.mul(m_[size_t(a)], m_[size_t(d)]), F.mul(m_[size_t(b)], m_[size_t(c)]));
    };
    uint32_t d = F.mul(m_[0], minor2(4, 5, 7, 8));
    d = F.sub(d, F.mul(m_[1], minor2(3, 5, 6, 8)));
    d = F.add(d, F.mul(m_[2], minor2(3, 4, 6, 7)));
    return {&F, d};
}

Projectivity Projectivity::operator*(const Projectivity& o) const {
    if (ctx_ != o.ctx_) fail(Err::ContextMismatch, "mixed-context projectivities");
    const FieldCtx& F = *ctx_;
    std::array<uint32_t, 9> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint32_t s = 0;
            for (int k = 0; k < 3; ++k)
                s = F.add(s, F.mul(m_[size_t(i) * 3 + k], o.m_[size_t(k) * 3 + j]));
            c[size_t(i) * 3 + j] = s;
        }
    std::string lab = label_.empty() || o.label_.empty() ? label_ + o.label_ : label_ + "*" + o.label_;
    return {F, c, lab};
}

Projectivity Projectivity::inverse() const {
    const FieldCtx& F = *ctx_;
    uint32_t d = det().raw();
    uint32_t di = F.inv(d);
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return F.sub(F.mul(entry(r1, c1), entry(r2, c2)), F.mul(entry(r1, c2), entry(r2, c1)));
    };
    std::array<uint32_t, 9> inv{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv[size_t(i) * 3 + j] = F.mul(di, cof(j, i));
    return {F, inv, label_.empty() ? "" : label_ + "^-1"};
}

Projectivity Projectivity::normalized() const {
    const FieldCtx& F = *ctx_;
    for (uint32_t v : m_) {
        if (v != 0) {
            if (v == 1) return *this;
            uint32_t s = F.inv(v);
            std::array<uint32_t, 9> n{};
            for (int i = 0; i < 9; ++i) n[size_t(i)] = F.mul(m_[size_t(i)], s);
            return {F, n, label_};
        }
    }
    fail(Err::InvalidParameters, "zero matrix");
}

bool Projectivity::same_projectivity(const Projectivity& o) const {
    return ctx_ == o.ctx_ && normalized().entries() == o.normalized().entries();
}

std::array<uint32_t, 3> Projectivity::apply(const std::array<uint32_t, 3>& pt) const {
    const FieldCtx& F = *ctx_;
    std::array<uint32_t, 3> r{};
    for (int i = 0; i < 3; ++i) {
        uint32_t s = 0;
        for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(entry(i, j), pt[size_t(j)]));
        r[size_t(i)] = s;
    }
    return r;
}

MultiPoly Projectivity::act_on(const MultiPoly& f) const {
    if (&f.ctx() != ctx_) fail(Err::ContextMismatch, "polynomial from a different context");
    return f.substitute_linear(m_);
}

// ---- GroupId ----------------------------------------------------------------

GroupId GroupId::make(GroupTag tag, uint32_t q_or_n) {
    GroupId id;
    id.tag = tag;
    if (tag == GroupTag::PGU3) {
        id.n = q_or_n;
        id.q = q_or_n * q_or_n;
    } else {
        id.q = q_or_n;
    }
    id.validate();
    return id;
}

std::optional<GroupId> GroupId::parse(const std::string& name, uint32_t q_or_n) {
    static const std::pair<const char*, GroupTag> names[] = {
        {"pgl3", GroupTag::PGL3},
        {"psl3", GroupTag::PSL3},
        {"agl2", GroupTag::AGL2},
        {"dual-agl2", GroupTag::DualAGL2},
        {"pgu3", GroupTag::PGU3},
        {"triangle", GroupTag::Triangle},
        {"singer-normalizer", GroupTag::SingerNormalizer},
        {"singer", GroupTag::Singer},
        {"pgl2-conic", GroupTag::PGL2Conic},
        {"hemisystem-linear", GroupTag::HemisystemLinear},
    };
    for (auto& [nm, tag] : names)
        if (name == nm) return make(tag, q_or_n);
    return std::nullopt;
}

std::string GroupId::name() const {
    switch (tag) {
        case GroupTag::PGL3: return "pgl3";
        case GroupTag::PSL3: return "psl3";
        case GroupTag::AGL2: return "agl2";
        case GroupTag::DualAGL2: return "dual-agl2";
        case GroupTag::PGU3: return "pgu3";
        case GroupTag::Triangle: return "triangle";
        case GroupTag::SingerNormalizer: return "singer-normalizer";
        case GroupTag::Singer: return "singer";
        case GroupTag::PGL2Conic: return "pgl2-conic";
        case GroupTag::HemisystemLinear: return "hemisystem-linear";
    }
    return "?";
}

namespace {

// q = p^h with p prime, or 0 if not a prime power
std::pair<uint32_t, uint32_t> prime_power(uint32_t q) {
    if (q < 2) return {0, 0};
    uint32_t p = q;
    for (uint32_t d = 2; uint64_t(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t h = 0, t = q;
    while (t > 1) {
        if (t % p != 0) return {0, 0};
        t /= p;
        ++h;
    }
    return {p, h};
}

}  // namespace

void GroupId::validate() const {
    auto [p, h] = prime_power(field_q());
    if (p == 0) fail(Err::InvalidParameters, "group parameter must be a prime power");
    (void)h;
    if (tag == GroupTag::PGU3 && n < 2)
        fail(Err::InvalidParameters, "pgu3 needs n >= 2");
    if ((tag == GroupTag::PGL2Conic || tag == GroupTag::HemisystemLinear) && p == 2)
        fail(Err::InvalidParameters, name() + " needs odd q");
}

// ---- generators -------------------------------------------------------------

namespace {

struct FieldView {
    const FieldCtx& F;
    uint32_t q;        // subfield size the group is defined over
    uint32_t h;        // q = p^h
    uint32_t gq;       // generator of GF(q)^*
    std::vector<uint32_t> pbasis;  // GF(p)-basis of GF(q): 1, s, ..., s^(h-1)

    FieldView(const FieldCtx& f, uint32_t q_) : F(f), q(q_) {
        auto [p, hh] = prime_power(q);
        if (p != F.p()) fail(Err::InvalidParameters, "group subfield has wrong characteristic");
        h = hh;
        if (F.k() % h != 0) fail(Err::FieldTooSmall, "ambient field does not contain GF(q)");
        gq = F.pow(F.generator_raw(), (F.order() - 1) / (q - 1));
        uint32_t s = gq;
        pbasis.resize(h);
        uint32_t acc = 1;
        for (uint32_t i = 0; i < h; ++i) {
            pbasis[i] = acc;
            acc = F.mul(acc, s);
        }
    }
};

Projectivity mat(const FieldCtx& F, std::array<uint32_t, 9> m, std::string label) {
    return Projectivity(F, m, std::move(label));
}

Projectivity transvection(const FieldCtx& F, int i, int j, uint32_t t, const std::string& label) {
    std::array<uint32_t, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
    m[size_t(i) * 3 + j] = t;
    return mat(F, m, label);
}

// GL(2, q) block generators acting on (X, Y), Z fixed
void gl2_generators(const FieldView& V, std::vector<Projectivity>& out) {
    const FieldCtx& F = V.F;
    out.push_back(mat(F, {V.gq, 0, 0, 0, 1, 0, 0, 0, 1}, "gl2-diag"));
    out.push_back(mat(F, {0, 1, 0, 1, 0, 0, 0, 0, 1}, "gl2-swap"));
    for (uint32_t i = 0; i < V.h; ++i)
        out.push_back(transvection(F, 0, 1, V.pbasis[i], "gl2-shear" + std::to_string(i)));
}

std::vector<Projectivity> agl2_generators(const FieldView& V) {
    const FieldCtx& F = V.F;
    std::vector<Projectivity> g;
    for (uint32_t i = 0; i < V.h; ++i) {
        g.push_back(transvection(F, 0, 2, V.pbasis[i], "tx" + std::to_string(i)));
        g.push_back(transvection(F, 1, 2, V.pbasis[i], "ty" + std::to_string(i)));
    }
    gl2_generators(V, g);
    return g;
}

}  // namespace

std::vector<Projectivity> generators_for(const GroupId& id, const FieldCtx& ambient) {
    id.validate();
    const FieldCtx& F = ambient;
    const uint32_t q = id.field_q();

    switch (id.tag) {
        case GroupTag::PGL3: {
            FieldView V(F, q);
            std::vector<Projectivity> g;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j)
                        g.push_back(transvection(F, i, j, 1,
                                                 "e" + std::to_string(i) + std::to_string(j)));
            g.push_back(mat(F, {V.gq, 0, 0, 0, 1, 0, 0, 0, 1}, "diag-g"));
            return g;
        }
        case GroupTag::PSL3: {
            FieldView V(F, q);
            std::vector<Projectivity> g;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j)
                        for (uint32_t b = 0; b < V.h; ++b)
                            g.push_back(transvection(F, i, j, V.pbasis[b],
                                                     "e" + std::to_string(i) + std::to_string(j) +
                                                         "b" + std::to_string(b)));
            return g;
        }
        case GroupTag::AGL2: {
            FieldView V(F, q);
            return agl2_generators(V);
        }
        case GroupTag::DualAGL2: {
            FieldView V(F, q);
            // transpose-inverse images, moved to fix the point (1:0:0) by the
            // X <-> Z coordinate swap
            Projectivity S = mat(F, {0, 0, 1, 0, 1, 0, 1, 0, 0}, "s");
            std::vector<Projectivity> g;
            for (const auto& a : agl2_generators(V)) {
                auto ainv = a.inverse();
                std::array<uint32_t, 9> t{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) t[size_t(i) * 3 + j] = ainv.entry(j, i);
                g.push_back(S * mat(F, t, "d" + a.label()) * S);
            }
            return g;
        }
        case GroupTag::PGU3: {
            FieldView V(F, q);  // q = n^2
            const uint32_t n = id.n;
            std::vector<Projectivity> g;
            g.push_back(mat(F, {1, 0, 0, 0, 0, 1, 0, 1, 0}, "a1"));
            for (uint32_t u : F.subfield_elements(2 * prime_power(n).second)) {
                for (const auto& e : hermitian_trace_solutions(F, F.element(u), n)) {
                    uint32_t un = F.pow(u, n);
                    g.push_back(mat(F, {1, 0, u, un, 1, e.raw(), 0, 0, 1},
                                    "a2(" + F.to_string(u) + "," + e.to_string() + ")"));
                }
            }
            for (uint32_t i = 1; i < q; ++i) {
                uint32_t c = F.pow(V.gq, i);
                g.push_back(mat(F, {c, 0, 0, 0, F.pow(c, n + 1), 0, 0, 0, 1},
                                "a3(" + F.to_string(c) + ")"));
            }
            return g;
        }
        case GroupTag::Triangle: {
            FieldView V(F, q);
            return {
                mat(F, {V.gq, 0, 0, 0, 1, 0, 0, 0, 1}, "d1"),
                mat(F, {1, 0, 0, 0, V.gq, 0, 0, 0, 1}, "d2"),
                mat(F, {0, 1, 0, 0, 0, 1, 1, 0, 0}, "cycle"),
                mat(F, {0, 1, 0, 1, 0, 0, 0, 0, 1}, "swap"),
            };
        }
        case GroupTag::Singer:
        case GroupTag::SingerNormalizer: {
            auto [p, h] = prime_power(q);
            (void)p;
            if (F.k() % (3 * h) != 0)
                fail(Err::FieldTooSmall, "singer groups need GF(q^3) in the ambient field");
            uint64_t q3 = uint64_t(q) * q * q;
            uint32_t g3 = F.pow(F.generator_raw(), (F.order() - 1) / (q3 - 1));
            uint32_t b = F.pow(g3, q - 1);  // order q^2 + q + 1
            std::vector<Projectivity> g;
            g.push_back(mat(F, {b, 0, 0, 0, F.pow(b, uint64_t(q) * q + 1), 0, 0, 0, 1}, "sigma"));
            if (id.tag == GroupTag::SingerNormalizer)
                g.push_back(mat(F, {0, 1, 0, 0, 0, 1, 1, 0, 0}, "rho"));
            return g;
        }
        case GroupTag::PGL2Conic: {
            FieldView V(F, q);
            std::vector<Projectivity> g;
            g.push_back(mat(F, {0, 0, 1, 0, 1, 0, 1, 0, 0}, "tau"));
            for (uint32_t i = 0; i < V.h; ++i) {
                uint32_t a = V.pbasis[i];
                uint32_t a2 = F.mul(a, a);
                g.push_back(mat(F, {1, F.add(a, a), a2, 0, 1, a, 0, 0, 1},
                                "sigma" + std::to_string(i)));
            }
            uint32_t b = V.gq;
            g.push_back(mat(F, {F.mul(b, b), 0, 0, 0, b, 0, 0, 0, 1}, "delta"));
            return g;
        }
        case GroupTag::HemisystemLinear: {
            FieldView V(F, q);
            std::vector<Projectivity> g;
            for (uint32_t i = 0; i < V.h; ++i) {
                uint32_t a = V.pbasis[i];
                g.push_back(mat(F, {1, 0, a, 0, 1, a, 0, 0, 1}, "b1." + std::to_string(i)));
            }
            g.push_back(mat(F, {V.gq, 0, 0, 0, V.gq, 0, 0, 0, 1}, "b2"));
            g.push_back(mat(F, {0, 1, 0, 1, 0, 0, 0, 0, 1}, "b4"));
            return g;
        }
    }
    fail(Err::InvalidParameters, "unhandled group tag");
}

// ---- closure ----------------------------------------------------------------

namespace {
struct KeyHash {
    size_t operator()(const std::array<uint32_t, 9>& a) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t v : a) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};
}  // namespace

std::optional<uint64_t> closure_order(const std::vector<Projectivity>& gens, uint64_t cap) {
    if (gens.empty()) return 1;
    const FieldCtx& F = gens.front().ctx();
    std::array<uint32_t, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    std::unordered_set<std::array<uint32_t, 9>, KeyHash> seen;
    std::deque<Projectivity> work;
    Projectivity e(F, id, "");
    seen.insert(id);
    work.push_back(e);
    while (!work.empty()) {
        Projectivity cur = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            Projectivity next = (cur * g).normalized();
            if (seen.insert(next.entries()).second) {
                if (seen.size() > cap) return std::nullopt;
                work.push_back(next);
            }
        }
    }
    return seen.size();
}

BigInt order_formula(const GroupId& id) {
    id.validate();
    const BigInt q = id.q;
    const BigInt n = id.n;
    switch (id.tag) {
        case GroupTag::PGL3: return (q * q * q - 1) * q * q * q * (q * q - 1);
        case GroupTag::PSL3: {
            BigInt full = (q * q * q - 1) * q * q * q * (q * q - 1);
            return (id.q - 1) % 3 == 0 ? full / 3 : full;
        }
        case GroupTag::AGL2:
        case GroupTag::DualAGL2: return q * q * q * (q + 1) * (q - 1) * (q - 1);
        case GroupTag::PGU3: return n * n * n * (n * n * n + 1) * (n * n - 1);
        case GroupTag::Triangle: return 6 * (q - 1) * (q - 1);
        case GroupTag::SingerNormalizer: return 3 * (q * q + q + 1);
        case GroupTag::Singer: return q * q + q + 1;
        case GroupTag::PGL2Conic: return q * (q + 1) * (q - 1);
        case GroupTag::HemisystemLinear: return 2 * q * (q - 1);
    }
    fail(Err::InvalidParameters, "unhandled group tag");
}

std::string generators_json(const GroupId& id, const std::vector<Projectivity>& gens) {
    nlohmann::json j;
    j["group"] = id.name();
    j["q"] = id.q;
    if (id.tag == GroupTag::PGU3) j["n"] = id.n;
    auto arr = nlohmann::json::array();
    for (const auto& g : gens) {
        auto m = nlohmann::json::array();
        const FieldCtx& F = g.ctx();
        for (uint32_t v : g.entries()) m.push_back(v == 0 ? int64_t(-1) : int64_t(F.dlog(v)));
        arr.push_back({{"label", g.label()}, {"entries", m}});
    }
    j["matrices"] = arr;
    return j.dump();
}

}  // namespace curvelab
