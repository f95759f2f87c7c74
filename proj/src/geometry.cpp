#include "curvelab/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace curvelab {

namespace {

uint32_t subfield_degree_for(const FieldCtx& F, uint64_t sub_order) {
    uint64_t t = sub_order;
    uint32_t kp = 0;
    while (t > 1) {
        if (t % F.p() != 0) fail(Err::FieldTooSmall, "subfield order is not a power of p");
        t /= F.p();
        ++kp;
    }
    if (kp == 0 || F.k() % kp != 0)
        fail(Err::FieldTooSmall, "ambient field does not contain a subfield of that order");
    return kp;
}

MultiPoly bind_or_check(const MultiPoly& f, const std::optional<FieldElement>& lambda) {
    if (lambda) return f.bind_lambda(*lambda);
    if (f.uses_lambda()) fail(Err::MissingParameter, "polynomial uses L but no lambda given");
    return f;
}

}  // namespace

PointPG2 PointPG2::make(const FieldCtx& F, uint32_t x, uint32_t y, uint32_t z) {
    std::array<uint32_t, 3> c{x, y, z};
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (c[size_t(i)] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) fail(Err::InvalidParameters, "all-zero coordinate triple");
    uint32_t s = F.inv(c[size_t(lead)]);
    for (auto& v : c) v = F.mul(v, s);
    return PointPG2{&F, c};
}

std::string PointPG2::to_string() const {
    return "(" + ctx->to_string(c[0]) + ":" + ctx->to_string(c[1]) + ":" + ctx->to_string(c[2]) +
           ")";
}

std::vector<PointPG2> pg2_points(const FieldCtx& F, uint64_t sub_order) {
    uint32_t kp = subfield_degree_for(F, sub_order);
    auto S = F.subfield_elements(kp);
    std::vector<PointPG2> pts;
    pts.reserve(sub_order * sub_order + sub_order + 1);
    for (uint32_t x : S)
        for (uint32_t y : S) pts.push_back(PointPG2{&F, {x, y, 1}});
    for (uint32_t x : S) pts.push_back(PointPG2{&F, {x, 1, 0}});
    pts.push_back(PointPG2{&F, {1, 0, 0}});
    return pts;
}

uint64_t count_points(const MultiPoly& f0, uint64_t sub_order, std::optional<FieldElement> lambda,
                      unsigned threads) {
    const FieldCtx& F = f0.ctx();
    MultiPoly f = bind_or_check(f0, lambda);
    uint32_t kp = subfield_degree_for(F, sub_order);
    auto S = F.subfield_elements(kp);

    // chart z = 1: group f(X, Y, 1) by Y-degree, evaluate per x, Horner in y
    uint32_t max_b = 0;
    const MultiPoly fz1 = f.set_var_one(Var::Z);
    std::map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> by_y;  // b -> [(a, coeff)]
    for (const auto& [m, c] : fz1.terms()) {
        by_y[m.y].push_back({m.x, c});
        max_b = std::max(max_b, m.y);
    }

    std::atomic<uint64_t> count{0};
    auto work = [&](size_t lo, size_t hi) {
        std::vector<uint32_t> coef(max_b + 1);
        uint64_t local = 0;
        for (size_t xi = lo; xi < hi; ++xi) {
            uint32_t x = S[xi];
            std::fill(coef.begin(), coef.end(), 0);
            for (const auto& [b, terms] : by_y) {
                uint32_t s = 0;
                for (auto [a, c] : terms) s = F.add(s, a ? F.mul(c, F.pow(x, a)) : c);
                coef[b] = s;
            }
            for (uint32_t y : S) {
                uint32_t acc = 0;
                for (uint32_t b = max_b + 1; b-- > 0;) acc = F.add(F.mul(acc, y), coef[b]);
                local += acc == 0;
            }
        }
        count += local;
    };
    if (threads <= 1 || S.size() < 64) {
        work(0, S.size());
    } else {
        unsigned T = std::min<unsigned>(threads, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        size_t chunk = (S.size() + T - 1) / T;
        for (unsigned t = 0; t < T; ++t) {
            size_t lo = t * chunk, hi = std::min(S.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // chart z = 0, y = 1: univariate in x
    uint64_t tail = 0;
    {
        auto g = f.set_var_one(Var::Y);
        std::vector<std::pair<uint32_t, uint32_t>> ux;
        for (const auto& [m, c] : g.terms())
            if (m.z == 0) ux.push_back({m.x, c});
        for (uint32_t x : S) {
            uint32_t s = 0;
            for (auto [a, c] : ux) s = F.add(s, a ? F.mul(c, F.pow(x, a)) : c);
            tail += s == 0;
        }
    }
    // the point (1 : 0 : 0)
    {
        uint32_t s = 0;
        for (const auto& [m, c] : f.terms())
            if (m.y == 0 && m.z == 0) s = F.add(s, c);
        tail += s == 0;
    }
    return count.load() + tail;
}

SingularityReport multiplicity_at(const MultiPoly& f0, const PointPG2& P) {
    const FieldCtx& F = f0.ctx();
    if (P.ctx != &F) fail(Err::ContextMismatch, "point from a different context");
    MultiPoly f = bind_or_check(f0, std::nullopt);
    if (!f.evaluate(F.element(P.c[0]), F.element(P.c[1]), F.element(P.c[2])).is_zero())
        fail(Err::PointNotOnCurve, "multiplicity requested off the curve");

    // move P to (0:0:1): third column P, the other two columns complementary
    // standard basis vectors
    int lead = 0;
    while (P.c[size_t(lead)] == 0) ++lead;
    std::array<uint32_t, 9> T{};
    int cols[2], ci = 0;
    for (int i = 0; i < 3; ++i)
        if (i != lead) cols[ci++] = i;
    T[size_t(cols[0]) * 3 + 0] = 1;
    T[size_t(cols[1]) * 3 + 1] = 1;
    for (int i = 0; i < 3; ++i) T[size_t(i) * 3 + 2] = P.c[size_t(i)];
    Projectivity Tp(F, T, "to-origin");

    auto local = Tp.act_on(f).set_var_one(Var::Z);
    int64_t r = -1;
    for (const auto& [m, c] : local.terms()) {
        int64_t d = int64_t(m.x) + m.y;
        if (r < 0 || d < r) r = d;
    }
    SingularityReport rep{P, uint32_t(r), {}, true};

    // initial form h_r and its root structure u(t) = h_r(1, t)
    std::vector<uint32_t> u(size_t(r) + 1, 0);
    for (const auto& [m, c] : local.terms())
        if (int64_t(m.x) + m.y == r) u[m.y] = F.add(u[m.y], c);
    while (!u.empty() && u.back() == 0) u.pop_back();

    auto Tinv = Tp.inverse();
    auto global_line = [&](uint32_t alpha, uint32_t beta) {
        // local line alpha*X + beta*Y = 0 pulled back through T^{-1}
        MultiPoly ln(F);
        for (int j = 0; j < 3; ++j) {
            uint32_t cj = F.add(F.mul(alpha, Tinv.entry(0, j)), F.mul(beta, Tinv.entry(1, j)));
            Mono m;
            if (j == 0)
                m.x = 1;
            else if (j == 1)
                m.y = 1;
            else
                m.z = 1;
            ln.add_term(m, cj);
        }
        return ln.normalized();
    };

    uint32_t x_mult = uint32_t(r + 1 - int64_t(u.size()));
    if (x_mult > 0) rep.tangents.push_back({global_line(1, 0), x_mult});

    // deflate roots of u over the ambient field
    std::vector<uint32_t> poly = u;
    for (uint64_t t = 0; t < F.order() && poly.size() > 1; ++t) {
        uint32_t tv = uint32_t(t);
        // repeated synthetic division while tv stays a root
        uint32_t mult = 0;
        while (poly.size() > 1) {
            uint32_t acc = 0;
            std::vector<uint32_t> quot(poly.size() - 1);
            for (size_t i = poly.size(); i-- > 1;) {
                acc = F.add(F.mul(acc, tv), poly[i]);
                quot[i - 1] = acc;
            }
            uint32_t rem = F.add(F.mul(acc, tv), poly[0]);
            if (rem != 0) break;
            poly = quot;
            ++mult;
        }
        if (mult) rep.tangents.push_back({global_line(F.neg(tv), 1), mult});
    }
    if (poly.size() > 1) rep.cone_split = false;
    return rep;
}

std::vector<SingularityReport> singular_points(const MultiPoly& f0, uint64_t sub_order,
                                               std::optional<FieldElement> lambda) {
    const FieldCtx& F = f0.ctx();
    MultiPoly f = bind_or_check(f0, lambda);
    auto fx = f.partial_derivative(Var::X);
    auto fy = f.partial_derivative(Var::Y);
    auto fz = f.partial_derivative(Var::Z);
    std::vector<SingularityReport> out;
    for (const auto& P : pg2_points(F, sub_order)) {
        auto X = F.element(P.c[0]), Y = F.element(P.c[1]), Z = F.element(P.c[2]);
        if (!f.evaluate(X, Y, Z).is_zero()) continue;
        if (!fx.evaluate(X, Y, Z).is_zero()) continue;
        if (!fy.evaluate(X, Y, Z).is_zero()) continue;
        if (!fz.evaluate(X, Y, Z).is_zero()) continue;
        out.push_back(multiplicity_at(f, P));
    }
    return out;
}

uint64_t line_intersection_multiplicity(const MultiPoly& f0, const MultiPoly& line,
                                        const PointPG2& P) {
    const FieldCtx& F = f0.ctx();
    MultiPoly f = bind_or_check(f0, std::nullopt);
    int64_t ld;
    if (!line.is_homogeneous(&ld) || ld != 1 || line.uses_lambda())
        fail(Err::InvalidParameters, "line must be a linear form");
    auto at = [&](const std::array<uint32_t, 3>& v) {
        return line.evaluate(F.element(v[0]), F.element(v[1]), F.element(v[2])).raw();
    };
    if (at(P.c) != 0 ||
        !f.evaluate(F.element(P.c[0]), F.element(P.c[1]), F.element(P.c[2])).is_zero())
        fail(Err::PointNotOnBoth, "P must lie on the curve and on the line");

    // second point Q on the line, independent from P
    uint32_t a = line.coeff({1, 0, 0, 0}).raw(), b = line.coeff({0, 1, 0, 0}).raw(),
             c = line.coeff({0, 0, 1, 0}).raw();
    std::array<std::array<uint32_t, 3>, 3> cands;
    size_t nc = 0;
    if (a != 0) {
        cands[nc++] = {F.neg(b), a, 0};
        cands[nc++] = {F.neg(c), 0, a};
    } else if (b != 0) {
        cands[nc++] = {1, 0, 0};
        cands[nc++] = {0, F.neg(c), b};
    } else {
        cands[nc++] = {1, 0, 0};
        cands[nc++] = {0, 1, 0};
    }
    std::optional<PointPG2> Q;
    for (size_t i = 0; i < nc; ++i) {
        auto q = PointPG2::make(F, cands[i]);
        if (!(q == P)) {
            Q = q;
            break;
        }
    }
    if (!Q) fail(Err::InvalidParameters, "could not find a second point on the line");

    // restrict f to P + t Q as a univariate polynomial in t
    size_t dmax = size_t(f.degree());
    std::vector<std::vector<uint32_t>> powx(dmax + 1), powy(dmax + 1), powz(dmax + 1);
    auto lin_pows = [&](uint32_t p0, uint32_t q0, std::vector<std::vector<uint32_t>>& dst) {
        dst[0] = {1};
        for (size_t e = 1; e <= dmax; ++e) {
            const auto& prev = dst[e - 1];
            std::vector<uint32_t> cur(prev.size() + 1, 0);
            for (size_t i = 0; i < prev.size(); ++i) {
                cur[i] = F.add(cur[i], F.mul(prev[i], p0));
                cur[i + 1] = F.add(cur[i + 1], F.mul(prev[i], q0));
            }
            dst[e] = std::move(cur);
        }
    };
    lin_pows(P.c[0], Q->c[0], powx);
    lin_pows(P.c[1], Q->c[1], powy);
    lin_pows(P.c[2], Q->c[2], powz);

    std::vector<uint32_t> r(dmax + 1, 0);
    for (const auto& [m, cf] : f.terms()) {
        // convolve the three power polynomials
        std::vector<uint32_t> t1 = powx[m.x];
        auto mulv = [&](const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) {
            std::vector<uint32_t> w(u.size() + v.size() - 1, 0);
            for (size_t i = 0; i < u.size(); ++i) {
                if (!u[i]) continue;
                for (size_t j = 0; j < v.size(); ++j)
                    w[i + j] = F.add(w[i + j], F.mul(u[i], v[j]));
            }
            return w;
        };
        t1 = mulv(mulv(t1, powy[m.y]), powz[m.z]);
        for (size_t i = 0; i < t1.size(); ++i) r[i] = F.add(r[i], F.mul(t1[i], cf));
    }
    bool all_zero = std::all_of(r.begin(), r.end(), [](uint32_t v) { return v == 0; });
    if (all_zero) fail(Err::LineIsComponent, "restriction vanishes identically");
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return i;
    fail(Err::LineIsComponent, "unreachable");
}

bool verify_line_splitting(const MultiPoly& f, const std::vector<TangentLine>& lines) {
    const FieldCtx& F = f.ctx();
    int64_t total = 0;
    for (const auto& l : lines) total += l.multiplicity;
    if (total != f.degree()) fail(Err::DegreeMismatch, "line multiplicities must sum to deg f");
    MultiPoly prod = MultiPoly::constant(F, F.one());
    for (const auto& l : lines) prod = prod * l.line.pow(l.multiplicity);
    return proportional(f, prod).has_value();
}

MultiPoly tangent_at_nonsingular(const MultiPoly& f0, const PointPG2& P) {
    const FieldCtx& F = f0.ctx();
    MultiPoly f = bind_or_check(f0, std::nullopt);
    auto X = F.element(P.c[0]), Y = F.element(P.c[1]), Z = F.element(P.c[2]);
    if (!f.evaluate(X, Y, Z).is_zero()) fail(Err::PointNotOnCurve, "tangent requested off the curve");
    uint32_t gx = f.partial_derivative(Var::X).evaluate(X, Y, Z).raw();
    uint32_t gy = f.partial_derivative(Var::Y).evaluate(X, Y, Z).raw();
    uint32_t gz = f.partial_derivative(Var::Z).evaluate(X, Y, Z).raw();
    if (gx == 0 && gy == 0 && gz == 0)
        fail(Err::InvalidParameters, "point is singular; use multiplicity_at");
    MultiPoly ln(F);
    ln.add_term({1, 0, 0, 0}, gx);
    ln.add_term({0, 1, 0, 0}, gy);
    ln.add_term({0, 0, 1, 0}, gz);
    return ln.normalized();
}

}  // namespace curvelab
