#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvelab/catalog.hpp"

using namespace curvelab;

namespace {
MultiPoly var(const FieldCtx& F, Var v, uint64_t e = 1) {
    return MultiPoly::variable(F, v, uint32_t(e));
}
MultiPoly frob_diff(const FieldCtx& F, Var v, uint64_t qa) { return var(F, v, qa) - var(F, v); }
}  // namespace

TEST_CASE("fnm quotients: degrees and exact re-multiplication") {
    for (uint32_t q : {2u, 3u}) {
        const auto& F = field_create(q, 1);
        for (auto [n, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {3, 2}}) {
            CurveParams P;
            P.q = q;
            P.n = n;
            P.m = m;
            auto spec = build_curve(F, CurveId::Fnm, P);
            uint64_t qn = 1, qm = 1;
            for (uint32_t i = 0; i < n; ++i) qn *= q;
            for (uint32_t i = 0; i < m; ++i) qm *= q;
            int64_t want = int64_t(qn) + int64_t(qm) - int64_t(q) * q - q;
            CHECK(spec.expected_degree == want);
            // re-multiplication oracle on the affine quotient
            auto num = frob_diff(F, Var::X, qn) * frob_diff(F, Var::Y, qm) -
                       frob_diff(F, Var::Y, qn) * frob_diff(F, Var::X, qm);
            auto den = frob_diff(F, Var::X, uint64_t(q) * q) * frob_diff(F, Var::Y, q) -
                       frob_diff(F, Var::Y, uint64_t(q) * q) * frob_diff(F, Var::X, q);
            auto affine = spec.poly.set_var_one(Var::Z);
            CHECK(affine * den == num);
        }
    }

    const auto& F2 = field_create(2, 1);
    CurveParams P;
    P.q = 2;
    CHECK(build_curve(F2, CurveId::Dgz, P).expected_degree == 4);
    CHECK(build_curve(F2, CurveId::DualDgz, P).expected_degree == 6);
    const auto& F3 = field_create(3, 1);
    P.q = 3;
    CHECK(build_curve(F3, CurveId::Dgz, P).expected_degree == 18);
    CHECK(build_curve(F3, CurveId::Dgz, P).poly.is_homogeneous());
}

TEST_CASE("fnm parameter validation") {
    const auto& F2 = field_create(2, 1);
    CurveParams P;
    P.q = 2;
    P.n = 4;
    P.m = 2;  // gcd 2
    CHECK_THROWS_AS(build_curve(F2, CurveId::Fnm, P), Error);
    P.n = 2;
    P.m = 1;  // degenerate quotient
    CHECK_THROWS_AS(build_curve(F2, CurveId::Fnm, P), Error);
}

TEST_CASE("catalog degrees across all ids") {
    const auto& F3 = field_create(3, 1);
    const auto& F4 = field_create(2, 2);
    const auto& F2 = field_create(2, 1);

    CurveParams q3;
    q3.q = 3;
    q3.lambda_symbolic = true;
    CHECK(build_curve(F3, CurveId::AglPencil, q3).expected_degree == 18);
    CHECK(build_curve(F3, CurveId::DualAglPencil, q3).expected_degree == 18);
    CHECK(build_curve(F3, CurveId::TrianglePencil, q3).expected_degree == 4);
    CHECK(build_curve(F3, CurveId::Pgl2Pencil, q3).expected_degree == 4);
    CHECK(build_curve(F3, CurveId::Hemisystem, q3).expected_degree == 6);
    CurveParams q2;
    q2.q = 2;
    q2.lambda_symbolic = true;
    CHECK(build_curve(F2, CurveId::Pgl3Pencil, q2).expected_degree == 14);
    CHECK(build_curve(F3, CurveId::Pgl3Pencil, q3).expected_degree == 78);

    CurveParams pn;
    pn.n = 2;
    pn.lambda_symbolic = true;
    auto pgu = build_curve(F4, CurveId::PguPencil, pn);
    CHECK(pgu.expected_degree == 9);
    CurveParams hn;
    hn.n = 2;
    CHECK(build_curve(F4, CurveId::Hermitian, hn).expected_degree == 3);

    CurveParams pq2;
    pq2.q = 2;
    CHECK(build_curve(F2, CurveId::Pellikaan, pq2).expected_degree == 4);
    CHECK(build_curve(F3, CurveId::Fermat, q3).expected_degree == 2);
    CHECK(build_curve(F3, CurveId::SingerBig, q3).expected_degree == 7);

    CurveParams net;
    net.q = 2;
    net.net = {{F2.one(), F2.one(), F2.one()}};
    auto pell = build_curve(F2, CurveId::SingerNet, net);
    CHECK(pell.poly == build_curve(F2, CurveId::Pellikaan, pq2).poly);
}

TEST_CASE("pgu pencil at lambda = 0 is the big hermitian form") {
    const auto& F4 = field_create(2, 2);
    CurveParams P;
    P.n = 2;
    P.lambda = F4.zero();
    auto c = build_curve(F4, CurveId::PguPencil, P);
    CHECK(c.poly == var(F4, Var::Y, 8) * var(F4, Var::Z) + var(F4, Var::Y) * var(F4, Var::Z, 8) -
                        var(F4, Var::X, 9));
}

TEST_CASE("hemisystem pencil factorizations") {
    for (uint32_t q : {3u, 5u}) {
        const auto& F = field_create(q, 1);
        auto minus_two = MultiPoly::constant(F, F.from_int(-2));

        CurveParams P1;
        P1.q = q;
        P1.lambda = F.one();
        auto at1 = build_curve(F, CurveId::Hemisystem, P1);
        auto fx = var(F, Var::X, q) - var(F, Var::X) * var(F, Var::Z, q - 1);
        auto fy = var(F, Var::Y, q) - var(F, Var::Y) * var(F, Var::Z, q - 1);
        CHECK(at1.poly == minus_two * fx * fy);

        CurveParams Pm1;
        Pm1.q = q;
        Pm1.lambda = -F.one();
        auto atm1 = build_curve(F, CurveId::Hemisystem, Pm1);
        auto comp1 = var(F, Var::Y) * var(F, Var::Z, q - 1) - var(F, Var::X, q);
        auto comp2 = var(F, Var::X) * var(F, Var::Z, q - 1) - var(F, Var::Y, q);
        CHECK(atm1.poly == minus_two * comp1 * comp2);
    }
}

TEST_CASE("moore form transforms by the determinant") {
    for (uint32_t q : {2u, 3u}) {
        const auto& F = field_create(q, 1);
        auto H = moore_determinant(F, q, 2, 1);
        uint64_t seed = 17 * q;
        auto next = [&]() {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            return uint32_t((seed >> 33) % q);
        };
        int done = 0;
        while (done < 5) {
            std::array<uint32_t, 9> A{};
            for (auto& v : A) v = next();
            try {
                Projectivity P(F, A);
                auto c = proportional(P.act_on(H), H);
                REQUIRE(c.has_value());
                CHECK(*c == P.det());
                ++done;
            } catch (const Error&) {
                // singular sample, draw again
            }
        }
    }
}

TEST_CASE("pencil coordinates") {
    const auto& F2 = field_create(2, 1);
    CurveParams P;
    P.q = 2;
    auto dgz = build_curve(F2, CurveId::Dgz, P).poly;
    auto zd = var(F2, Var::Z, 4);
    auto c1 = pencil_coordinates(dgz, dgz, zd);
    REQUIRE(c1.has_value());
    CHECK(c1->first == F2.one());
    CHECK(c1->second == F2.zero());

    auto c2 = pencil_coordinates(dgz + zd, dgz, zd);
    REQUIRE(c2.has_value());
    CHECK(c2->first == F2.one());
    CHECK(c2->second == F2.one());

    // a form outside the pencil
    CHECK_FALSE(pencil_coordinates(var(F2, Var::X, 4), dgz, zd).has_value());
    CHECK_THROWS_AS(pencil_coordinates(dgz, dgz, var(F2, Var::Z, 3)), Error);
}

TEST_CASE("diagonal equivalence witness: net member to pellikaan") {
    const auto& F16 = field_create(2, 4);
    const uint32_t q = 4;
    auto [w, where] = omega_in(F16, q);
    CHECK(where == "GF(q)");
    CHECK(F16.mult_order(w.raw()) == 3);

    CurveParams net;
    net.q = q;
    net.net = {{w, w * w, F16.one()}};
    auto member = build_curve(F16, CurveId::SingerNet, net).poly;
    CurveParams pq;
    pq.q = q;
    auto pell = build_curve(F16, CurveId::Pellikaan, pq).poly;

    auto wit = projective_equivalence_witness(member, pell, 2);
    REQUIRE(wit.has_value());
    auto img = wit->act_on(member);
    CHECK(proportional(img, pell).has_value());
    // witness constraints: d^(q+1) = omega, c^q d^(q+2) = 1
    uint32_t c = wit->entry(0, 0), d = wit->entry(1, 1);
    CHECK(F16.pow(d, q + 1) == w.raw());
    CHECK(F16.mul(F16.pow(c, q), F16.pow(d, q + 2)) == 1);

    auto self = projective_equivalence_witness(pell, pell, 1);
    REQUIRE(self.has_value());
    CHECK(proportional(self->act_on(pell), pell).has_value());
    CurveParams fq;
    fq.q = q;
    auto fermat = build_curve(F16, CurveId::Fermat, fq).poly;
    CHECK_THROWS_AS(projective_equivalence_witness(fermat, pell, 2), Error);  // degree mismatch
}

TEST_CASE("omega placement") {
    const auto& F4 = field_create(2, 2);
    auto [w2, where2] = omega_in(F4, 2);
    CHECK(where2 == "GF(q^2)");
    CHECK(F4.mult_order(w2.raw()) == 3);
    const auto& F3 = field_create(3, 1);
    CHECK_THROWS_AS(omega_in(F3, 3), Error);  // char 3
    const auto& F2 = field_create(2, 1);
    CHECK_THROWS_AS(omega_in(F2, 2), Error);  // ambient lacks GF(4)
}

TEST_CASE("odd-q-only catalog entries") {
    const auto& F2 = field_create(2, 1);
    CurveParams P;
    P.q = 2;
    P.lambda_symbolic = true;
    CHECK_THROWS_AS(build_curve(F2, CurveId::Pgl2Pencil, P), Error);
    CHECK_THROWS_AS(build_curve(F2, CurveId::Hemisystem, P), Error);
}

TEST_CASE("catalog listing and id parsing") {
    CHECK(catalog_list().size() == 15);
    CHECK(curve_id_from_string("pgu-pencil") == CurveId::PguPencil);
    CHECK_FALSE(curve_id_from_string("klein").has_value());
    for (auto& [name, desc] : catalog_list()) {
        CHECK(curve_id_from_string(name).has_value());
        CHECK_FALSE(desc.empty());
    }
}
