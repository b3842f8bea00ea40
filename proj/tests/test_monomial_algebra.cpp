#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lgb/ideal_families.hpp"
#include "lgb/linkage.hpp"
#include "lgb/monomial_ideal.hpp"

using namespace lgb;
using namespace testing;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Var> vars4 = {X(1, 1), X(1, 2), X(2, 1), X(2, 2)};

std::vector<MonomialIdeal> corpus_ideals()
{
    std::vector<MonomialIdeal> out;
    for (const auto& inst : corpus()) {
        const auto chain = build_chain(inst, family_order(inst));
        out.push_back(initial_ideal(inst, family_order(inst), ladder_variables(inst)));
        for (const auto& s : chain.steps)
            for (const auto* a : {&s.a, &s.b, &s.c}) out.push_back(*a);
    }
    return out;
}

} // namespace

TEST_CASE("minimalize")
{
    CHECK(minimalize(monos({"x[1,1]", "x[1,1]*x[1,2]"})).generators() == monos({"x[1,1]"}));
    CHECK(minimalize({}).is_zero());
    const auto three = monos({"x[1,1]*x[2,2]", "x[1,1]*x[2,3]", "x[1,2]*x[2,3]"});
    CHECK(minimalize(three).size() == 3);
    CHECK(minimalize(three) == MonomialIdeal(three));
    CHECK(minimalize(monos({"x[1,1]", "x[1,1]"})).size() == 1);
    CHECK_THROWS(MonomialIdeal(monos({"x[3,3]"}), vars4));
}

TEST_CASE("membership, sum and colon")
{
    const MonomialIdeal a(monos({"x[1,1]*x[2,2]", "x[1,2]^2"}));
    CHECK(a.contains(M("x[1,1]*x[2,2]*x[2,1]")));
    CHECK_FALSE(a.contains(M("x[1,2]*x[2,2]")));
    CHECK(colon(a, M("x[1,1]")) == MonomialIdeal(monos({"x[2,2]", "x[1,2]^2"})));
    CHECK(sum(a, MonomialIdeal(monos({"x[1,2]"}))) == MonomialIdeal(monos({"x[1,1]*x[2,2]", "x[1,2]"})));
    CHECK(multiply(M("x[2,1]"), a).generators().size() == 2);
    CHECK(MonomialIdeal(monos({"x[1,2]"})).contains(a) == false);
    CHECK(MonomialIdeal(monos({"x[1,2]", "x[2,2]"})).contains(a));
}

TEST_CASE("colon_stable")
{
    CHECK(colon_stable(MonomialIdeal(monos({"x[1,1]*x[2,2]"})), M("x[2,3]")));
    CHECK_FALSE(colon_stable(MonomialIdeal(monos({"x[1,1]*x[1,2]"})), M("x[1,1]")));
    const auto z = LadderInstance::maxminors(2, 2);
    const MonomialIdeal a(initial_generators(z, family_order(LadderInstance::maxminors(2, 3))));
    CHECK(colon_stable(a, M("x[2,3]")));
}

TEST_CASE("bdl")
{
    const MonomialIdeal a(monos({"x[1,1]*x[2,2]"})), b(monos({"x[1,1]", "x[1,2]"}));
    const auto r = bdl(a, b, M("x[2,3]"));
    CHECK(r.c == MonomialIdeal(monos({"x[1,1]*x[2,2]", "x[1,1]*x[2,3]", "x[1,2]*x[2,3]"})));
    CHECK(r.degree == 1);
    CHECK_FALSE(r.degenerate);
    const auto one = bdl(a, b, Monomial());
    CHECK(one.degenerate);
    CHECK(one.c == b);
    CHECK(bdl(a, a, M("x[2,3]")).c == a);
    CHECK_THROWS_AS(bdl(MonomialIdeal(monos({"x[1,1]*x[2,3]"})), b, M("x[2,3]")), BdlError);
    CHECK_THROWS_AS(bdl(MonomialIdeal(monos({"x[2,2]"})), b, M("x[2,3]")), BdlError);
}

TEST_CASE("hilbert function examples")
{
    const MonomialIdeal zero({}, vars4);
    for (int d = 0; d <= 6; ++d) CHECK(hilbert_function_at(zero, d) == binom(d + 3, 3));
    const MonomialIdeal all(monos({"x[1,1]", "x[1,2]", "x[2,1]", "x[2,2]"}), vars4);
    CHECK(hilbert_function(all, 3) == std::vector<std::uint64_t>{1, 0, 0, 0});
    const MonomialIdeal one(monos({"x[1,1]*x[2,2]"}), vars4);
    CHECK(hilbert_function_at(one, 2) == 9);
    CHECK(hilbert_function_at(one, -1) == 0);
    CHECK(hilbert_function_brute(one, 2) == 9);
}

TEST_CASE("squarefree")
{
    CHECK(MonomialIdeal(monos({"x[1,1]*x[2,2]"})).is_squarefree());
    CHECK_FALSE(MonomialIdeal(monos({"x[1,1]^2"})).is_squarefree());
}

TEST_CASE("pivot recursion agrees with enumeration")
{
    int compared = 0;
    for (const auto& a : corpus_ideals()) {
        const auto h = hilbert_function(a, 6);
        for (int d = 0; d <= 6; ++d) CHECK(h[d] == hilbert_function_brute(a, d));
        ++compared;
    }
    CHECK(compared > 50);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> exp(0, 2), count(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Monomial> gens;
        for (int k = count(rng); k > 0; --k) {
            std::vector<Monomial::Entry> e;
            for (Var v : vars4)
                if (int x = exp(rng)) e.emplace_back(v, x);
            if (!e.empty()) gens.push_back(Monomial::from_entries(e));
        }
        const MonomialIdeal a(gens, vars4);
        for (int d = 0; d <= 6; ++d) CHECK(hilbert_function_at(a, d) == hilbert_function_brute(a, d));
    }
}

TEST_CASE("bdl additivity of the Hilbert function")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::vector<Var> vars = {X(1, 1), X(1, 2), X(1, 3), X(2, 1), X(2, 2), X(2, 3)};
    int used = 0;
    for (int trial = 0; trial < 200 && used < 40; ++trial) {
        // A avoids f = x[2,3]; B = A + random squarefree monomials
        std::vector<Monomial> ag, bg;
        for (int k = 0; k < 3; ++k) {
            std::vector<Monomial::Entry> e;
            for (std::size_t i = 0; i + 1 < vars.size(); ++i)
                if (bit(rng) && bit(rng)) e.emplace_back(vars[i], 1);
            if (!e.empty()) ag.push_back(Monomial::from_entries(e));
        }
        bg = ag;
        for (int k = 0; k < 2; ++k) {
            std::vector<Monomial::Entry> e;
            for (std::size_t i = 0; i + 1 < vars.size(); ++i)
                if (bit(rng)) e.emplace_back(vars[i], 1);
            if (!e.empty()) bg.push_back(Monomial::from_entries(e));
        }
        const MonomialIdeal a(ag, vars), b(bg, vars);
        const Monomial f(X(2, 3));
        if (!colon_stable(a, f) || !b.contains(a)) continue;
        const auto c = bdl(a, b, f).c.with_ambient(vars);
        const auto ha = hilbert_function(a, 6), hb = hilbert_function(b, 6), hc = hilbert_function(c, 6);
        for (int d = 0; d <= 6; ++d) {
            const std::int64_t prev_b = d > 0 ? std::int64_t(hb[d - 1]) : 0;
            const std::int64_t prev_a = d > 0 ? std::int64_t(ha[d - 1]) : 0;
            CHECK(std::int64_t(hc[d]) == prev_b + std::int64_t(ha[d]) - prev_a);
        }
        ++used;
    }
    CHECK(used >= 20);
}

TEST_CASE("disjoint support implies colon stability")
{
    const MonomialIdeal a(monos({"x[1,1]*x[1,2]", "x[2,1]^3"}));
    CHECK(colon_stable(a, M("x[2,2]^2*x[3,3]")));
}
