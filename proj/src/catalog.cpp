#include "curvelab/catalog.hpp"

#include <numeric>

namespace curvelab {

namespace {

MultiPoly var(const FieldCtx& F, Var v, uint64_t e = 1) {
    return MultiPoly::variable(F, v, uint32_t(e));
}

// X^(q^a) - X
MultiPoly frob_diff(const FieldCtx& F, Var v, uint64_t qa) { return var(F, v, qa) - var(F, v); }

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

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

void require_subfield(const FieldCtx& F, uint32_t q, const char* what) {
    auto [p, h] = prime_power(q);
    if (p != F.p() || h == 0 || F.k() % h != 0)
        fail(Err::InvalidParameters, std::string(what) + ": ambient field does not contain GF(q)");
}

// the pencil parameter: L when symbolic, the constant otherwise
MultiPoly lambda_factor(const FieldCtx& F, const CurveParams& P) {
    if (P.lambda_symbolic) return var(F, Var::L);
    if (!P.lambda) fail(Err::MissingParameter, "pencil curve needs lambda (value or symbolic)");
    if (P.lambda->ctx() != &F) fail(Err::ContextMismatch, "lambda from a different context");
    return MultiPoly::constant(F, *P.lambda);
}

// numerator and denominator of the F_{n,m} affine equation
std::pair<MultiPoly, MultiPoly> fnm_fraction(const FieldCtx& F, uint64_t q, uint32_t n, uint32_t m) {
    auto num = frob_diff(F, Var::X, ipow(q, n)) * frob_diff(F, Var::Y, ipow(q, m)) -
               frob_diff(F, Var::Y, ipow(q, n)) * frob_diff(F, Var::X, ipow(q, m));
    auto den = frob_diff(F, Var::X, q * q) * frob_diff(F, Var::Y, q) -
               frob_diff(F, Var::Y, q * q) * frob_diff(F, Var::X, q);
    return {num, den};
}

MultiPoly fnm_poly(const FieldCtx& F, uint32_t q, uint32_t n, uint32_t m, int64_t target) {
    auto [num, den] = fnm_fraction(F, q, n, m);
    auto quot = divide_exact(num, den);
    if (!quot) fail(Err::InexactDivision, "F_{n,m} construction: denominator does not divide");
    return quot->homogenize(target);
}

MultiPoly hermitian_form(const FieldCtx& F, uint64_t n) {
    return var(F, Var::Y, n) * var(F, Var::Z) + var(F, Var::Y) * var(F, Var::Z, n) -
           var(F, Var::X, n + 1);
}

// product of the q+1 lines through (1:0:0): (Y^(q-1) - Z^(q-1)) Y Z
MultiPoly lines_through_x(const FieldCtx& F, uint32_t q) {
    return (var(F, Var::Y, q - 1) - var(F, Var::Z, q - 1)) * var(F, Var::Y) * var(F, Var::Z);
}

}  // namespace

std::pair<FieldElement, std::string> omega_in(const FieldCtx& F, uint32_t q) {
    if (F.p() == 3) fail(Err::InvalidParameters, "no primitive cube root of unity in char 3");
    uint32_t target_q = (q - 1) % 3 == 0 ? q : q * q;
    require_subfield(F, target_q, "omega");
    if ((target_q - 1) % 3 != 0) fail(Err::InvalidParameters, "no cube root of unity over GF(q^2)");
    uint64_t step = (F.order() - 1) / 3;
    FieldElement w{&F, F.pow(F.generator_raw(), step)};
    return {w, target_q == q ? "GF(q)" : "GF(q^2)"};
}

CurveSpec build_curve(const FieldCtx& F, CurveId id, CurveParams P) {
    const uint64_t q = P.q;
    auto fe = [&](int64_t v) { return F.from_int(v); };
    auto cpoly = [&](int64_t v) { return MultiPoly::constant(F, fe(v)); };

    MultiPoly poly(F);
    int64_t deg = 0;
    std::string note;

    switch (id) {
        case CurveId::Dgz:
        case CurveId::DualDgz:
        case CurveId::Fnm: {
            uint32_t nn = P.n, mm = P.m;
            if (id == CurveId::Dgz) nn = 3, mm = 1;
            if (id == CurveId::DualDgz) nn = 3, mm = 2;
            P.n = nn;
            P.m = mm;
            if (q < 2) fail(Err::InvalidParameters, "fnm needs q");
            require_subfield(F, P.q, "fnm");
            if (nn <= mm || mm < 1 || std::gcd(nn, mm) != 1)
                fail(Err::InvalidParameters, "fnm needs n > m >= 1 with gcd(n, m) = 1");
            deg = int64_t(ipow(q, nn)) + int64_t(ipow(q, mm)) - int64_t(q * q) - int64_t(q);
            if (deg < 1) fail(Err::InvalidParameters, "fnm is degenerate for (n, m) = (2, 1)");
            poly = fnm_poly(F, P.q, nn, mm, deg);
            break;
        }
        case CurveId::Hermitian: {
            if (P.n < 2) fail(Err::InvalidParameters, "hermitian needs n >= 2");
            require_subfield(F, P.n * P.n, "hermitian");
            deg = int64_t(P.n) + 1;
            poly = hermitian_form(F, P.n);
            break;
        }
        case CurveId::Pellikaan: {
            require_subfield(F, P.q, "pellikaan");
            deg = int64_t(q) + 2;
            poly = var(F, Var::X, q + 1) * var(F, Var::Y) + var(F, Var::Y, q + 1) * var(F, Var::Z) +
                   var(F, Var::Z, q + 1) * var(F, Var::X);
            break;
        }
        case CurveId::Fermat: {
            require_subfield(F, P.q, "fermat");
            deg = int64_t(q) - 1;
            poly = var(F, Var::X, q - 1) + var(F, Var::Y, q - 1) + var(F, Var::Z, q - 1);
            break;
        }
        case CurveId::AglPencil: {
            require_subfield(F, P.q, "agl-pencil");
            deg = int64_t(q) * q * q - int64_t(q) * q;
            auto dgz = fnm_poly(F, P.q, 3, 1, deg);
            poly = dgz - lambda_factor(F, P) * var(F, Var::Z, uint64_t(deg));
            break;
        }
        case CurveId::DualAglPencil: {
            require_subfield(F, P.q, "dual-agl-pencil");
            deg = int64_t(q) * q * q - int64_t(q) * q;
            auto dgz = fnm_poly(F, P.q, 3, 1, deg);
            auto moore = moore_determinant(F, q, 2, 1);
            auto quot = divide_exact(moore, lines_through_x(F, P.q));
            if (!quot) fail(Err::InexactDivision, "pencil of lines does not divide the Moore form");
            poly = dgz - lambda_factor(F, P) * quot->pow(P.q - 1);
            break;
        }
        case CurveId::Pgl3Pencil: {
            require_subfield(F, P.q, "pgl3-pencil");
            deg = int64_t(ipow(q, 4)) - int64_t(q);
            auto H = moore_determinant(F, q, 2, 1);
            auto GH = moore_determinant(F, q, 4, 2);
            auto G = divide_exact(GH, H);
            if (!G) fail(Err::InexactDivision, "rational-line form does not divide");
            poly = *G - lambda_factor(F, P) * H.pow(uint32_t(q) * (uint32_t(q) - 1));
            break;
        }
        case CurveId::PguPencil: {
            if (P.n < 2) fail(Err::InvalidParameters, "pgu-pencil needs n >= 2");
            P.q = P.n * P.n;
            require_subfield(F, P.q, "pgu-pencil");
            const uint64_t n = P.n;
            deg = int64_t(n * n * n) + 1;
            auto G = hermitian_form(F, n * n * n);
            auto Fh = hermitian_form(F, n);
            poly = G - lambda_factor(F, P) * Fh.pow(uint32_t(n * n - n + 1));
            break;
        }
        case CurveId::SingerNet: {
            require_subfield(F, P.q, "singer-net");
            if (!P.net) fail(Err::MissingParameter, "singer-net needs a (lambda:mu:tau) triple");
            bool all_zero = true;
            for (auto& c : *P.net) {
                if (c.ctx() != &F) fail(Err::ContextMismatch, "net triple from a different context");
                all_zero &= c.is_zero();
            }
            if (all_zero) fail(Err::InvalidParameters, "net triple must be non-trivial");
            deg = int64_t(q) + 2;
            poly = (var(F, Var::X, q + 1) * var(F, Var::Y)).scale((*P.net)[0]) +
                   (var(F, Var::Y, q + 1) * var(F, Var::Z)).scale((*P.net)[1]) +
                   (var(F, Var::Z, q + 1) * var(F, Var::X)).scale((*P.net)[2]);
            break;
        }
        case CurveId::SingerBig: {
            require_subfield(F, P.q, "singer-big");
            deg = 2 * int64_t(q) + 1;
            // oriented so the same Singer generator fixing the net fixes it
            poly = var(F, Var::X, q) * var(F, Var::Y, q + 1) +
                   var(F, Var::Y, q) * var(F, Var::Z, q + 1) +
                   var(F, Var::Z, q) * var(F, Var::X, q + 1);
            break;
        }
        case CurveId::TrianglePencil: {
            require_subfield(F, P.q, "triangle-pencil");
            deg = 2 * (int64_t(q) - 1);
            auto fermat = var(F, Var::X, q - 1) + var(F, Var::Y, q - 1) + var(F, Var::Z, q - 1);
            auto mixed = var(F, Var::X, q - 1) * var(F, Var::Y, q - 1) +
                         var(F, Var::Y, q - 1) * var(F, Var::Z, q - 1) +
                         var(F, Var::Z, q - 1) * var(F, Var::X, q - 1);
            poly = lambda_factor(F, P) * fermat.pow(2) + mixed;
            break;
        }
        case CurveId::Pgl2Pencil: {
            require_subfield(F, P.q, "pgl2-pencil");
            if (F.p() == 2) fail(Err::InvalidParameters, "pgl2-pencil needs odd q");
            deg = int64_t(q) + 1;
            auto half = fe(2).inverse();
            auto conic = var(F, Var::Y, 2) - var(F, Var::X) * var(F, Var::Z);
            poly = var(F, Var::Y, q + 1) -
                   (var(F, Var::X, q) * var(F, Var::Z) + var(F, Var::X) * var(F, Var::Z, q))
                       .scale(half) -
                   lambda_factor(F, P) * conic.pow(uint32_t(q + 1) / 2);
            note = "conic normalized to Y^2 - XZ";
            break;
        }
        case CurveId::Hemisystem: {
            require_subfield(F, P.q, "hemisystem");
            if (F.p() == 2) fail(Err::InvalidParameters, "hemisystem needs odd q");
            deg = 2 * int64_t(q);
            auto xy = var(F, Var::X) * var(F, Var::Y);
            poly = (var(F, Var::X) + var(F, Var::Y)).pow(uint32_t(q + 1)) * var(F, Var::Z, q - 1) -
                   cpoly(2) * (xy.pow(uint32_t(q)) + xy * var(F, Var::Z, 2 * q - 2)) -
                   lambda_factor(F, P) * (var(F, Var::X) - var(F, Var::Y)).pow(uint32_t(q + 1)) *
                       var(F, Var::Z, q - 1);
            break;
        }
    }

    int64_t actual = -1;
    if (!poly.is_homogeneous(&actual) || actual != deg)
        fail(Err::InvalidParameters, "catalog degree check failed for " + curve_id_name(id) +
                                         ": got " + std::to_string(actual) + ", expected " +
                                         std::to_string(deg));

    return CurveSpec{id, curve_id_name(id), P, poly, deg, note};
}

std::string curve_id_name(CurveId id) {
    switch (id) {
        case CurveId::Dgz: return "dgz";
        case CurveId::DualDgz: return "dual-dgz";
        case CurveId::Fnm: return "fnm";
        case CurveId::Hermitian: return "hermitian";
        case CurveId::Pellikaan: return "pellikaan";
        case CurveId::Fermat: return "fermat";
        case CurveId::AglPencil: return "agl-pencil";
        case CurveId::DualAglPencil: return "dual-agl-pencil";
        case CurveId::Pgl3Pencil: return "pgl3-pencil";
        case CurveId::PguPencil: return "pgu-pencil";
        case CurveId::SingerNet: return "singer-net";
        case CurveId::SingerBig: return "singer-big";
        case CurveId::TrianglePencil: return "triangle-pencil";
        case CurveId::Pgl2Pencil: return "pgl2-pencil";
        case CurveId::Hemisystem: return "hemisystem";
    }
    return "?";
}

std::optional<CurveId> curve_id_from_string(const std::string& s) {
    for (auto id : {CurveId::Dgz, CurveId::DualDgz, CurveId::Fnm, CurveId::Hermitian,
                    CurveId::Pellikaan, CurveId::Fermat, CurveId::AglPencil, CurveId::DualAglPencil,
                    CurveId::Pgl3Pencil, CurveId::PguPencil, CurveId::SingerNet, CurveId::SingerBig,
                    CurveId::TrianglePencil, CurveId::Pgl2Pencil, CurveId::Hemisystem})
        if (curve_id_name(id) == s) return id;
    return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> catalog_list() {
    return {
        {"dgz", "degree q^3-q^2 curve invariant under the full projective group"},
        {"dual-dgz", "degree q^3-q dual of the dgz curve"},
        {"fnm", "quotient family F_{n,m}; parameters n > m >= 1, gcd(n,m) = 1"},
        {"hermitian", "nonsingular degree n+1 unitary-invariant curve"},
        {"pellikaan", "X^(q+1)Y + Y^(q+1)Z + Z^(q+1)X"},
        {"fermat", "X^(q-1) + Y^(q-1) + Z^(q-1)"},
        {"agl-pencil", "line-stabilizer pencil through the dgz curve"},
        {"dual-agl-pencil", "point-stabilizer pencil through the dgz curve"},
        {"pgl3-pencil", "degree q^4-q pencil fixed by the full projective group"},
        {"pgu-pencil", "unitary pencil of degree n^3+1; parameter n"},
        {"singer-net", "net lambda X^(q+1)Y + mu Y^(q+1)Z + tau Z^(q+1)X"},
        {"singer-big", "degree 2q+1 curve fixed by the Singer normalizer"},
        {"triangle-pencil", "degree 2(q-1) pencil fixed by the triangle stabilizer"},
        {"pgl2-pencil", "degree q+1 pencil through the conic Y^2 - XZ (odd q)"},
        {"hemisystem", "degree 2q pencil with linear automorphism group of order 2q(q-1) (odd q)"},
    };
}

std::optional<std::pair<FieldElement, FieldElement>> pencil_coordinates(const MultiPoly& f,
                                                                        const MultiPoly& g1,
                                                                        const MultiPoly& g2) {
    const FieldCtx& F = f.ctx();
    if (&g1.ctx() != &F || &g2.ctx() != &F) fail(Err::ContextMismatch, "mixed contexts");
    int64_t d1, d2;
    if (!g1.is_homogeneous(&d1) || !g2.is_homogeneous(&d2) || d1 != d2 || g1.is_zero() ||
        g2.is_zero())
        fail(Err::DegreeMismatch, "pencil generators must be nonzero forms of equal degree");
    if (proportional(g1, g2)) fail(Err::DegreeMismatch, "pencil generators must not be proportional");

    // two-unknown linear solve over the union of monomials, then full check
    std::optional<std::pair<uint32_t, uint32_t>> sol;
    // find a monomial with g2 = 0, g1 != 0 (or solve a 2x2 system)
    for (const auto& [m0, a0] : g1.terms()) {
        uint32_t b0 = g2.coeff(m0).raw();
        uint32_t c0 = f.coeff(m0).raw();
        if (b0 == 0) {
            uint32_t lam = F.div(c0, a0);
            // find mu from a monomial with g2 != 0
            const auto& [m1, b1] = *g2.terms().begin();
            uint32_t a1 = g1.coeff(m1).raw();
            uint32_t c1 = f.coeff(m1).raw();
            uint32_t mu = F.div(F.sub(c1, F.mul(lam, a1)), b1);
            sol = {lam, mu};
            break;
        }
    }
    if (!sol) {
        // all monomials of g1 meet g2; pick two independent rows
        for (const auto& [m0, a0] : g1.terms()) {
            uint32_t b0 = g2.coeff(m0).raw();
            for (const auto& [m1, b1] : g2.terms()) {
                uint32_t a1 = g1.coeff(m1).raw();
                uint32_t det = F.sub(F.mul(a0, b1), F.mul(a1, b0));
                if (det == 0) continue;
                uint32_t c0 = f.coeff(m0).raw(), c1 = f.coeff(m1).raw();
                uint32_t lam = F.div(F.sub(F.mul(c0, b1), F.mul(c1, b0)), det);
                uint32_t mu = F.div(F.sub(F.mul(a0, c1), F.mul(a1, c0)), det);
                sol = {lam, mu};
                break;
            }
            if (sol) break;
        }
    }
    if (!sol) return std::nullopt;
    auto cand = g1.scale(FieldElement(&F, sol->first)) + g2.scale(FieldElement(&F, sol->second));
    if (cand != f) return std::nullopt;
    return std::make_pair(FieldElement(&F, sol->first), FieldElement(&F, sol->second));
}

std::optional<Projectivity> projective_equivalence_witness(const MultiPoly& f, const MultiPoly& g,
                                                           uint32_t E) {
    const FieldCtx& F = f.ctx();
    if (&g.ctx() != &F) fail(Err::ContextMismatch, "mixed contexts");
    int64_t df, dg;
    if (!f.is_homogeneous(&df) || !g.is_homogeneous(&dg) || df != dg)
        fail(Err::DegreeMismatch, "equivalence witness needs forms of equal degree");
    if (E == 0 || F.k() % E != 0) fail(Err::InvalidParameters, "E must divide the ambient degree");
    uint64_t sz = 1;
    for (uint32_t i = 0; i < E; ++i) sz *= F.p();
    if ((sz - 1) * (sz - 1) > 10'000'000ull)
        fail(Err::SearchSpaceExceeded, "diagonal search space too large");

    auto sub = F.subfield_elements(E);
    for (uint32_t c : sub) {
        if (c == 0) continue;
        for (uint32_t d : sub) {
            if (d == 0) continue;
            // diagonal substitution scales each term without expansion
            MultiPoly img(F);
            for (const auto& [m0, v] : f.terms()) {
                uint32_t s = F.mul(v, F.mul(F.pow(c, m0.x), F.pow(d, m0.y)));
                img.add_term(m0, s);
            }
            if (proportional(img, g))
                return Projectivity(F, {c, 0, 0, 0, d, 0, 0, 0, 1}, "diag-witness");
        }
    }
    return std::nullopt;
}

}  // namespace curvelab
