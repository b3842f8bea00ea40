#include <doctest.h>

#include "helpers.hpp"
#include "lgb/ideal_families.hpp"
#include "lgb/linkage.hpp"

using namespace lgb;
using namespace testing;
using L = LadderInstance;

TEST_CASE("chains: examples")
{
    const auto mm13 = L::maxminors(1, 3);
    const auto c13 = build_chain(mm13, family_order(mm13));
    CHECK(c13.steps.empty());
    CHECK(c13.terminals.size() == 1);
    CHECK(c13.terminals_linear());
    CHECK(c13.connected());

    const auto mm23 = L::maxminors(2, 3);
    const auto c23 = build_chain(mm23, family_order(mm23));
    REQUIRE(c23.steps.size() == 2);
    CHECK(c23.steps[0].f == X(2, 3));
    CHECK(c23.steps[0].middle == L::maxminors(2, 2));
    CHECK(c23.steps[0].reduced == L::maxminors(1, 2));
    CHECK(c23.steps[1].instance == L::maxminors(2, 2));
    CHECK(c23.connected());
    CHECK(c23.terminals_linear());
    CHECK(c23.steps[0].a == MonomialIdeal(monos({"x[1,1]*x[2,2]"})));
    CHECK(c23.steps[0].b == MonomialIdeal(monos({"x[1,1]", "x[1,2]"})));

    const auto pf4 = L::pfaffian(4, {{1, 4}}, {2});
    const auto cp = build_chain(pf4, family_order(pf4));
    REQUIRE(cp.steps.size() == 1);
    CHECK(cp.steps[0].f == X(1, 4));
    CHECK(cp.steps[0].reduced == L::pfaffian(4, {{2, 3}}, {1}));
    CHECK(cp.steps[0].a.is_zero());
    CHECK(cp.steps[0].c == MonomialIdeal(monos({"x[1,4]*x[2,3]"})));
}

TEST_CASE("chain structure over the corpus")
{
    for (const auto& inst : corpus()) {
        CAPTURE(inst.key());
        const auto chain = build_chain(inst, family_order(inst));
        CHECK(chain.connected());
        CHECK(chain.terminals_linear());
        for (const auto& s : chain.steps) {
            CAPTURE(s.instance.key());
            CHECK(s.structure_ok());
            CHECK(s.ell == 1);
            CHECK(bdl(s.a, s.b, Monomial(s.f)).c == s.c);
            CHECK(s.f_outside_a);
            CHECK(chain.find_step(s.instance.key()) == &s);
        }
    }
}

TEST_CASE("Hilbert identity at a step")
{
    const auto mm23 = L::maxminors(2, 3);
    const auto order = family_order(mm23);
    const auto chain = build_chain(mm23, order);
    GroebnerOracle oracle(order, {});
    const auto r = verify_inid_step(chain.steps[0], oracle, 6);
    CHECK(r.ok());
    CHECK(r.monomial_identity);
    CHECK(r.oracle_identity);
    CHECK(r.c_in_initial);
    CHECK(r.h_c.size() == 7);
    CHECK(r.h_c[1] == 6);
    CHECK(r.h_c[2] == 21 - 3);

    LinkageStep bad = chain.steps[0];
    bad.f = X(1, 1);
    const auto rb = verify_inid_monomial(bad, 6);
    CHECK_FALSE(rb.precondition_ok);
    CHECK(rb.precondition_error.find("colon not stable") != std::string::npos);
    CHECK_FALSE(rb.ok());

    const auto term = terminal_report(L::pfaffian(5, {{1, 5}}, {1}));
    CHECK(term.terminal);
    CHECK(term.ok());
}

TEST_CASE("verify_family examples")
{
    const auto mm23 = L::maxminors(2, 3);
    const auto rep = verify_family(mm23, family_order(mm23));
    CHECK(rep.passed());
    CHECK(rep.dmax == 6);
    CHECK(rep.generator_count == 3);
    for (const char* id : {"a", "b", "c", "d", "e", "f", "g", "h"}) {
        REQUIRE(rep.check(id));
        CHECK(rep.check(id)->status == Status::Pass);
    }
    CHECK_FALSE(rep.assumptions.empty());

    const auto pf6 = L::pfaffian(6, {{1, 6}}, {2});
    const auto rp = verify_family(pf6, family_order(pf6));
    CHECK(rp.generator_count == 15);
    CHECK(rp.passed());

    const auto sym3 = L::symmetric(3, {{3, 3}}, {2});
    const auto rs = verify_family(sym3, family_order(sym3));
    CHECK(rs.passed());
    CHECK(rs.codimension == 3);
    CHECK(rs.height == 3);
}

TEST_CASE("budget exhaustion marks checks as skipped")
{
    const auto mm34 = L::maxminors(3, 4);
    VerifyOptions opts;
    opts.max_spairs = 1;
    const auto rep = verify_family(mm34, family_order(mm34), opts);
    CHECK_FALSE(rep.passed());
    CHECK(rep.budget_exhausted());
    CHECK(rep.check("a")->status == Status::Skipped);
    CHECK(rep.check("c")->status == Status::Pass);
}

TEST_CASE("verify over GF(32003)")
{
    VerifyOptions opts;
    opts.field = FieldSpec::prime(32003);
    const auto inst = L::onesided(3, 3, {{2, 1}, {3, 2}}, {2, 2});
    const auto rep = verify_family(inst, family_order(inst), opts);
    CHECK(rep.passed());
    CHECK(rep.field == FieldSpec::prime(32003));
}

TEST_CASE("localization maps")
{
    const auto inst = L::onesided(3, 3, {{3, 1}}, {2});
    const auto d = localization_maps(inst, {2, 2});
    CHECK(d.first == 0);
    CHECK(d.last == 0);
    CHECK(d.hat_points == std::vector<Cell>{{2, 2}});
    CHECK(d.r == std::vector<int>{1});

    // affected cell: x11 -> x11 + x12 x21 / x22
    const Fraction f11 = d.phi.image(X(1, 1));
    CHECK(f11.power == 1);
    CHECK(f11.num == P("x[1,1]*x[2,2] + x[1,2]*x[2,1]"));
    const Fraction g11 = d.psi.image(X(1, 1));
    CHECK(g11.num == P("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
    // row u and column v are untouched
    CHECK(d.phi.image(X(2, 1)) == Fraction{P("x[2,1]"), 0});
    CHECK(d.phi.image(X(3, 2)) == Fraction{P("x[3,2]"), 0});

    for (Var x : ladder_variables(inst)) {
        const Fraction back = d.psi.apply(d.phi.image(x));
        CHECK(back == Fraction{Poly::variable(x, Rational(1)), 0});
    }
}

TEST_CASE("localization outside the affected region")
{
    // pivot (1,3) lies in both regions, (3,4) only in the second
    const auto inst = L::onesided(3, 4, {{2, 1}, {3, 3}}, {2, 2});
    REQUIRE_FALSE(validate(inst));
    const auto d = localization_maps(inst, {1, 3});
    CHECK(d.first == 0);
    CHECK(d.last == 1);
    CHECK(d.phi.image(X(3, 4)).power == 1);
    const auto e = localization_maps(inst, {3, 4});
    CHECK(e.first == 1);
    CHECK(e.phi.image(X(1, 1)) == Fraction{P("x[1,1]"), 0});
}

TEST_CASE("localization errors")
{
    CHECK_THROWS_AS(localization_maps(L::onesided(3, 3, {{3, 1}}, {2}), {4, 1}), LocalizationError);
    CHECK_THROWS_AS(localization_maps(L::onesided(3, 3, {{3, 1}}, {1}), {2, 2}), LocalizationError);
    CHECK_THROWS_AS(localization_maps(L::maxminors(2, 3), {1, 1}), LocalizationError);
}

TEST_CASE("verify_localization")
{
    const auto r = verify_localization(L::onesided(3, 3, {{3, 1}}, {2}), {2, 2});
    CHECK(r.inverse_ok);
    CHECK(r.forward.size() == 9);
    for (const auto& [g, ok] : r.forward) CHECK_MESSAGE(ok, g);
    for (const auto& [g, ok] : r.backward) CHECK_MESSAGE(ok, g);
    CHECK(r.ok());
}
