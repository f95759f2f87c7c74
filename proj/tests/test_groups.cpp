#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvelab/groups.hpp"

using namespace curvelab;

namespace {
uint64_t closure_of(GroupTag tag, uint32_t q_or_n, const FieldCtx& F, uint64_t cap = 2000000) {
    auto id = GroupId::make(tag, q_or_n);
    auto gens = generators_for(id, F);
    auto o = closure_order(gens, cap);
    REQUIRE(o.has_value());
    return *o;
}
}  // namespace

TEST_CASE("projectivity basics") {
    const auto& F4 = field_create(2, 2);
    Projectivity a(F4, {1, 1, 0, 0, 1, 0, 0, 0, 1}, "a");
    Projectivity b(F4, {0, 1, 0, 1, 0, 0, 0, 0, 1}, "b");
    CHECK((a * a.inverse()).same_projectivity(Projectivity(F4, {1, 0, 0, 0, 1, 0, 0, 0, 1})));
    CHECK_FALSE(a.same_projectivity(b));
    auto g = F4.generator();
    Projectivity scaled(F4, {g.raw(), g.raw(), 0, 0, g.raw(), 0, 0, 0, g.raw()});
    CHECK(scaled.same_projectivity(a));
    CHECK_THROWS_AS(Projectivity(F4, {1, 1, 0, 1, 1, 0, 0, 0, 1}), Error);  // singular
    auto pt = b.apply({1, 0, 0});
    CHECK(pt == std::array<uint32_t, 3>{0, 1, 0});
}

TEST_CASE("closure orders match the closed-form orders") {
    const auto& F2 = field_create(2, 1);
    const auto& F3 = field_create(3, 1);
    const auto& F8 = field_create(2, 3);
    const auto& F27 = field_create(3, 3);
    const auto& F4 = field_create(2, 2);

    CHECK(closure_of(GroupTag::PGL3, 2, F2) == 168);
    CHECK(order_formula(GroupId::make(GroupTag::PGL3, 2)) == 168);
    CHECK(closure_of(GroupTag::PGL3, 3, F3) == 5616);
    CHECK(order_formula(GroupId::make(GroupTag::PGL3, 3)) == 5616);

    // q not 1 mod 3: PSL3 = PGL3
    CHECK(closure_of(GroupTag::PSL3, 2, F2) == 168);
    CHECK(order_formula(GroupId::make(GroupTag::PSL3, 2)) == 168);
    // q = 4 is 1 mod 3: index 3
    CHECK(closure_of(GroupTag::PSL3, 4, F4, 100000) == 20160);
    CHECK(order_formula(GroupId::make(GroupTag::PSL3, 4)) == 20160);

    CHECK(closure_of(GroupTag::AGL2, 2, F2) == 24);
    CHECK(order_formula(GroupId::make(GroupTag::AGL2, 2)) == 24);
    CHECK(closure_of(GroupTag::AGL2, 3, F3) == 432);
    CHECK(closure_of(GroupTag::DualAGL2, 2, F2) == 24);
    CHECK(closure_of(GroupTag::DualAGL2, 3, F3) == 432);
    CHECK(order_formula(GroupId::make(GroupTag::DualAGL2, 3)) == 432);

    CHECK(closure_of(GroupTag::Triangle, 3, F3) == 24);  // 6(q-1)^2
    CHECK(order_formula(GroupId::make(GroupTag::Triangle, 3)) == 24);
    CHECK(closure_of(GroupTag::Triangle, 2, F2) == 6);

    CHECK(closure_of(GroupTag::Singer, 2, F8) == 7);
    CHECK(closure_of(GroupTag::SingerNormalizer, 2, F8) == 21);  // 3(q^2+q+1)
    CHECK(order_formula(GroupId::make(GroupTag::SingerNormalizer, 2)) == 21);
    CHECK(closure_of(GroupTag::Singer, 3, F27) == 13);
    CHECK(closure_of(GroupTag::SingerNormalizer, 3, F27) == 39);

    CHECK(closure_of(GroupTag::PGL2Conic, 3, F3) == 24);  // q(q+1)(q-1)
    CHECK(order_formula(GroupId::make(GroupTag::PGL2Conic, 3)) == 24);

    CHECK(closure_of(GroupTag::HemisystemLinear, 3, F3) == 12);  // 2q(q-1)
    CHECK(order_formula(GroupId::make(GroupTag::HemisystemLinear, 3)) == 12);
}

TEST_CASE("pgu3 closure disagrees with the printed stabilizer order") {
    const auto& F4 = field_create(2, 2);
    auto id = GroupId::make(GroupTag::PGU3, 2);
    auto gens = generators_for(id, F4);
    bool has_swap = false;
    for (const auto& g : gens)
        if (g.entries() == std::array<uint32_t, 9>{1, 0, 0, 0, 0, 1, 0, 1, 0}) has_swap = true;
    CHECK(has_swap);  // alpha_1 : (X,Y,Z) -> (X,Z,Y)

    auto o = closure_order(gens, 1000);
    REQUIRE(o.has_value());
    CHECK(*o == 216);  // n^3 (n^3+1)(n^2-1)
    CHECK(order_formula(id) == 216);
    // the weaker n^3(n^3+1)(n-1)^2 value does not match the closure
    CHECK(*o != 72);
}

TEST_CASE("singer generator structure") {
    const auto& F8 = field_create(2, 3);
    auto gens = generators_for(GroupId::make(GroupTag::Singer, 2), F8);
    REQUIRE(gens.size() == 1);
    const auto& sigma = gens[0];
    // sigma = diag(b, b^(q^2+1), 1) with b of order 7
    uint32_t b = sigma.entry(0, 0);
    CHECK(F8.mult_order(b) == 7);
    CHECK(sigma.entry(1, 1) == F8.pow(b, 5));
    CHECK(sigma.entry(2, 2) == 1);
    // order of sigma as a projectivity is q^2 + q + 1
    auto o = closure_order(gens, 100);
    CHECK(*o == 7);
}

TEST_CASE("every generator is invertible with inverse in the closure") {
    const auto& F3 = field_create(3, 1);
    for (auto tag : {GroupTag::PGL3, GroupTag::AGL2, GroupTag::DualAGL2, GroupTag::Triangle,
                     GroupTag::PGL2Conic, GroupTag::HemisystemLinear}) {
        auto gens = generators_for(GroupId::make(tag, 3), F3);
        for (const auto& g : gens) {
            CHECK_FALSE(g.det().is_zero());
            // BFS from the inverse must stay inside the closure: sizes agree
            auto with_inv = gens;
            with_inv.push_back(g.inverse());
            CHECK(*closure_order(gens, 2000000) == *closure_order(with_inv, 2000000));
        }
    }
}

TEST_CASE("group id validation and parsing") {
    CHECK_THROWS_AS(GroupId::make(GroupTag::PGL2Conic, 4), Error);        // even q
    CHECK_THROWS_AS(GroupId::make(GroupTag::HemisystemLinear, 2), Error); // even q
    CHECK_THROWS_AS(GroupId::make(GroupTag::PGL3, 6), Error);             // not a prime power
    auto id = GroupId::parse("pgu3", 2);
    REQUIRE(id.has_value());
    CHECK(id->field_q() == 4);
    CHECK_FALSE(GroupId::parse("nope", 2).has_value());
}

TEST_CASE("generator export json mentions all generators") {
    const auto& F8 = field_create(2, 3);
    auto id = GroupId::make(GroupTag::SingerNormalizer, 2);
    auto gens = generators_for(id, F8);
    auto js = generators_json(id, gens);
    CHECK(js.find("\"group\":\"singer-normalizer\"") != std::string::npos);
    CHECK(js.find("sigma") != std::string::npos);
    CHECK(js.find("rho") != std::string::npos);
}

TEST_CASE("ambient field too small") {
    const auto& F2 = field_create(2, 1);
    CHECK_THROWS_AS(generators_for(GroupId::make(GroupTag::Singer, 2), F2), Error);
    CHECK_THROWS_AS(generators_for(GroupId::make(GroupTag::PGU3, 2), F2), Error);
}
