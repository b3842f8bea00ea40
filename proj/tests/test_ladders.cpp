#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "lgb/ladders.hpp"

using namespace lgb;
using namespace testing;
using L = LadderInstance;

namespace {

CellSet square(int lo, int hi)
{
    CellSet s;
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) s.emplace(i, j);
    return s;
}

std::string condition_of(const L& inst)
{
    auto d = validate(inst);
    return d ? d->condition : "";
}

int safe_height(const L& inst)
{
    return inst.family != Family::MaxMinors && inst.points.empty() ? 0 : height_formula(inst);
}

// conditions (1),(2) of a symmetric block ladder
bool is_block_ladder(const CellSet& s)
{
    for (const auto& [i, j] : s) {
        if (!s.count({j, i})) return false;
        for (const auto& [h, k] : s)
            if (i < h && j > k)
                for (Cell c : {Cell{i, k}, Cell{i, h}, Cell{h, j}, Cell{j, k}})
                    if (!s.count(c)) return false;
    }
    return true;
}

// one-sided: closed towards the top right
bool is_onesided_shape(const CellSet& s, int n)
{
    for (const auto& [i, j] : s)
        if ((i > 1 && !s.count({i - 1, j})) || (j < n && !s.count({i, j + 1}))) return false;
    return true;
}

// symmetric L+: closed towards the top left inside i <= j
bool is_symmetric_shape(const CellSet& s)
{
    for (const auto& [i, j] : s)
        if (i > j || (i > 1 && !s.count({i - 1, j})) || (j > i && !s.count({i, j - 1}))) return false;
    return true;
}

std::size_t t_sum(const L& inst) { return std::accumulate(inst.t.begin(), inst.t.end(), std::size_t{0}); }

} // namespace

TEST_CASE("family names")
{
    CHECK(parse_family("pfaffian") == Family::Pfaffian);
    CHECK(to_string(Family::OneSided) == "onesided");
    CHECK_THROWS_AS(parse_family("twosided"), OutOfScope);
    CHECK_THROWS_AS(parse_family("banana"), std::invalid_argument);
}

TEST_CASE("cells of full instances")
{
    CHECK(cells(L::pfaffian(4, {{1, 4}}, {2})) == square(1, 4));
    CHECK(cells(L::onesided(2, 3, {{2, 1}}, {2})).size() == 6);
    const auto sym = cells(L::symmetric(3, {{3, 3}}, {2}));
    CHECK(sym.size() == 6);
    for (const auto& [i, j] : sym) CHECK(i <= j);
    CHECK(ladder_variables(L::pfaffian(4, {{1, 4}}, {2})).size() == 6);
    CHECK(variable_count(L::maxminors(2, 3)) == 6);
}

TEST_CASE("validate")
{
    for (const auto& inst : corpus()) CHECK_MESSAGE(!validate(inst), inst.key());
    CHECK(condition_of(L::pfaffian(6, {{1, 4}, {1, 4}}, {2, 2})) == "coincident upper corners");
    CHECK(condition_of(L::onesided(4, 4, {{2, 1}, {2, 1}}, {2, 2})) == "coincident distinguished points");
    CHECK(!validate(L::onesided(4, 4, {{2, 1}, {4, 3}}, {2, 2})));
    CHECK(condition_of(L::pfaffian(4, {{1, 4}}, {2, 2})) == "size vector");
    CHECK(condition_of(L::pfaffian(4, {{3, 2}}, {1})) == "upper corner");
    CHECK(condition_of(L::pfaffian(6, {{2, 5}, {1, 6}}, {1, 1})) == "corner order");
    // nested blocks are allowed; normalization drops the implied one
    CHECK(!validate(L::pfaffian(6, {{1, 5}, {1, 6}}, {1, 1})));
    CHECK(normalize(L::pfaffian(6, {{1, 5}, {1, 6}}, {1, 1})) == L::pfaffian(6, {{1, 6}}, {1}));
    CHECK(condition_of(L::symmetric(3, {{3, 2}}, {1})) == "distinguished point");
    CHECK(!validate(L::symmetric(4, {{2, 3}, {3, 3}}, {1, 1})));
    CHECK(condition_of(L::symmetric(4, {{2, 2}, {3, 3}}, {1, 1})) == "point order");
    CHECK(condition_of(L::onesided(3, 3, {{2, 2}, {1, 3}}, {1, 1})) == "point order");
    CHECK(condition_of(L::onesided(3, 3, {{2, 1}, {3, 2}}, {1, 2})) == "size gap"); // Remark (2)
    CHECK(!condition_of(L::onesided(2, 3, {{2, 3}}, {2})).empty());             // Remark (1): t too large
    CHECK(condition_of(L::maxminors(0, 3)) == "matrix size");
    CHECK(condition_of(L::onesided(3, 3, {}, {})) == "no distinguished points");
    CHECK_THROWS_AS(require_valid(L::pfaffian(6, {{1, 4}, {1, 4}}, {2, 2})), InvalidLadder);
}

TEST_CASE("tilde and height examples")
{
    CHECK(tilde(L::pfaffian(4, {{1, 4}}, {2})) == square(2, 3));
    CHECK(height_formula(L::pfaffian(4, {{1, 4}}, {2})) == 1);
    CHECK(tilde(L::onesided(2, 3, {{2, 1}}, {2})) == CellSet{{1, 2}, {1, 3}});
    CHECK(height_formula(L::onesided(2, 3, {{2, 1}}, {2})) == 2);
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 5; ++n) CHECK(height_formula(L::maxminors(m, n)) == n - m + 1);
}

TEST_CASE("tilde with t = 1 is the ladder itself")
{
    const std::vector<L> ones = {
        L::pfaffian(6, {{1, 4}, {3, 6}}, {1, 1}),
        L::symmetric(4, {{2, 4}, {3, 3}}, {1, 1}),
        L::onesided(4, 4, {{2, 1}, {4, 3}}, {1, 1}),
        L::onesided(3, 4, {{3, 2}}, {1}),
    };
    for (const auto& inst : ones) {
        CHECK(tilde(inst) == cells(inst));
        CHECK(height_formula(inst) == int(variable_count(inst)));
        CHECK(is_terminal(inst));
        CHECK_FALSE(recursion_split(inst));
    }
}

TEST_CASE("tilde is a ladder of the same kind")
{
    for (const auto& inst : corpus()) {
        const CellSet t = tilde(inst);
        switch (inst.family) {
        case Family::Pfaffian: CHECK(is_block_ladder(t)); break;
        case Family::Symmetric: CHECK(is_symmetric_shape(t)); break;
        case Family::OneSided: CHECK(is_onesided_shape(t, inst.n)); break;
        case Family::MaxMinors: CHECK(t.size() == std::size_t(inst.n - inst.m + 1)); break;
        }
    }
}

TEST_CASE("split examples")
{
    auto mm = recursion_split(L::maxminors(2, 3));
    REQUIRE(mm);
    CHECK(mm->middle == L::maxminors(2, 2));
    CHECK(mm->reduced == L::maxminors(1, 2));
    CHECK(mm->shedding == Cell{2, 3});

    auto pf = recursion_split(L::pfaffian(4, {{1, 4}}, {2}));
    REQUIRE(pf);
    CHECK(pf->reduced_raw == L::pfaffian(4, {{2, 3}}, {1}));
    CHECK(pf->middle_raw == L::pfaffian(4, {{1, 3}, {2, 4}}, {2, 2}));
    CHECK(pf->shedding == Cell{1, 4});
    CHECK(pf->shedding_var() == X(1, 4));
    // both 3x3 blocks are too small for a 4-pfaffian: M is the zero ideal
    CHECK(pf->middle.points.empty());
    CHECK(pf->reduced == pf->reduced_raw);

    auto os = recursion_split(L::onesided(3, 3, {{2, 1}, {3, 2}}, {2, 2}));
    REQUIRE(os);
    CHECK(os->shedding == Cell{2, 1});
    CHECK(os->reduced == L::onesided(3, 3, {{1, 2}, {3, 2}}, {1, 2}));
    CHECK(os->middle_raw == L::onesided(3, 3, {{1, 1}, {2, 2}, {3, 2}}, {2, 2, 2}));
    CHECK(os->middle == L::onesided(3, 3, {{3, 2}}, {2}));

    auto sym = recursion_split(L::symmetric(3, {{3, 3}}, {2}));
    REQUIRE(sym);
    CHECK(sym->shedding == Cell{3, 3});
    CHECK(sym->reduced == L::symmetric(3, {{2, 2}}, {1}));
    CHECK(sym->middle == L::symmetric(3, {{2, 3}}, {2}));

    CHECK_FALSE(recursion_split(L::maxminors(1, 3)));
    CHECK_FALSE(recursion_split(L::pfaffian(5, {{1, 5}}, {1})));
}

TEST_CASE("split chooses the first region of maximal size")
{
    auto s = recursion_split(L::pfaffian(6, {{1, 4}, {3, 6}}, {2, 2}));
    REQUIRE(s);
    CHECK(s->region == 0);
    CHECK(s->shedding == Cell{1, 4});
}

TEST_CASE("normalization keeps the ideal data and drops empty regions")
{
    std::vector<std::string> notes;
    const auto n = normalize(L::pfaffian(4, {{1, 3}, {2, 4}}, {2, 2}), &notes);
    CHECK(n.points.empty());
    CHECK(notes.size() == 2);
    const auto kept = normalize(L::onesided(3, 3, {{1, 1}, {2, 2}, {3, 2}}, {2, 2, 2}));
    CHECK(kept == L::onesided(3, 3, {{3, 2}}, {2}));
    for (const auto& inst : corpus()) CHECK(normalize(inst) == inst);
}

TEST_CASE("split invariants over the corpus")
{
    std::vector<L> todo = corpus();
    std::set<std::string> seen;
    int splits = 0;
    while (!todo.empty()) {
        L inst = todo.back();
        todo.pop_back();
        if (!seen.insert(inst.key()).second) continue;
        auto s = recursion_split(inst);
        if (!s) continue;
        ++splits;
        CAPTURE(inst.key());
        const L norm = normalize(inst);
        CHECK(safe_height(norm) == safe_height(s->middle) + 1);
        if (inst.family != Family::MaxMinors) {
            // M is L minus the shedding cell (and its mirror for pfaffians)
            CellSet expect = cells(norm);
            expect.erase(s->shedding);
            if (inst.family == Family::Pfaffian) expect.erase({s->shedding.second, s->shedding.first});
            CHECK(cells(s->middle_raw) == expect);
            CHECK(cells(s->middle).size() <= expect.size());
            CHECK(cells(s->reduced).size() < cells(norm).size());
            CHECK(t_sum(s->reduced) < t_sum(norm) + 1);
        } else {
            CHECK(s->middle.n < inst.n);
        }
        for (const auto* part : {&s->reduced, &s->middle})
            if (part->family == Family::MaxMinors || !part->points.empty()) todo.push_back(*part);
    }
    CHECK(splits > 30);
}
