#include <doctest.h>

#include "helpers.hpp"
#include "lgb/matrix_vars.hpp"

using namespace lgb;
using namespace testing;

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

long double_factorial(int k) { return k <= 1 ? 1 : k * double_factorial(k - 2); }

} // namespace

TEST_CASE("entry resolution")
{
    const auto e = entry(MatrixShape::generic(2, 3), 2, 3);
    CHECK(e.sign == 1);
    CHECK(e.var == X(2, 3));
    CHECK(entry(MatrixShape::skew(4), 3, 3).is_zero());
    const auto s = entry(MatrixShape::skew(4), 4, 2);
    CHECK(s.sign == -1);
    CHECK(s.var == X(2, 4));
    CHECK(s.to_polynomial() == P("-x[2,4]"));
    CHECK(entry(MatrixShape::symmetric(3), 3, 1).to_polynomial() == P("x[1,3]"));
    CHECK_THROWS_AS(entry(MatrixShape::generic(2, 3), 3, 1), std::out_of_range);
    CHECK_THROWS_AS(entry(MatrixShape::skew(3), 0, 1), std::out_of_range);
}

TEST_CASE("minor examples")
{
    const auto g = MatrixShape::generic(3, 3);
    CHECK(minor(g, {1, 2}, {1, 2}) == P("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
    CHECK(minor(g, {2}, {3}) == P("x[2,3]"));
    CHECK(minor(MatrixShape::skew(3), {2}, {1}) == P("-x[1,2]"));
    CHECK(minor(MatrixShape::symmetric(3), {1, 2}, {2, 3}) == P("x[1,2]*x[2,3] - x[1,3]*x[2,2]"));
    CHECK_THROWS(minor(g, {1, 2}, {1}));
    CHECK_THROWS(minor(g, {2, 1}, {1, 2}));
    CHECK_THROWS(minor(g, {1, 4}, {1, 2}));
}

TEST_CASE("generic minors have t! terms")
{
    const auto g = MatrixShape::generic(4, 4);
    const long fact[] = {1, 1, 2, 6, 24};
    for (int t = 1; t <= 4; ++t)
        for (const auto& r : subsets_of_size(4, t))
            for (const auto& c : subsets_of_size(4, t)) CHECK(minor(g, r, c).size() == std::size_t(fact[t]));
}

TEST_CASE("transposed selections on symmetric and skew shapes")
{
    // symmetric: det(rows, cols) = det(cols, rows)
    const auto s = MatrixShape::symmetric(4);
    for (const auto& r : subsets_of_size(4, 2))
        for (const auto& c : subsets_of_size(4, 2)) CHECK(minor(s, r, c) == minor(s, c, r));
    // skew: det(rows, cols) = (-1)^t det(cols, rows)
    const auto k = MatrixShape::skew(4);
    for (const auto& r : subsets_of_size(4, 2))
        for (const auto& c : subsets_of_size(4, 2)) CHECK(minor(k, r, c) == minor(k, c, r));
    for (const auto& r : subsets_of_size(4, 3))
        for (const auto& c : subsets_of_size(4, 3)) CHECK(minor(k, r, c) == -minor(k, c, r));
}

TEST_CASE("pfaffian examples")
{
    const auto k = MatrixShape::skew(6);
    CHECK(pfaffian(k, {2, 5}) == P("x[2,5]"));
    CHECK(pfaffian(k, {1, 2, 3, 4}) == P("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]"));
    const Poly p6 = pfaffian(k, {1, 2, 3, 4, 5, 6});
    CHECK(p6.size() == 15);
    for (const auto& [m, c] : p6.terms()) CHECK((c == Rational(1) || c == Rational(-1)));
    CHECK_THROWS(pfaffian(k, {1, 2, 3}));
    CHECK_THROWS(pfaffian(k, {1, 1}));
    CHECK_THROWS(pfaffian(MatrixShape::generic(4, 4), {1, 2}));
}

TEST_CASE("pfaffian squared equals the skew determinant")
{
    const auto k = MatrixShape::skew(6);
    int checked = 0;
    for (int size : {2, 4, 6})
        for (const auto& s : subsets_of_size(6, size)) {
            const Poly pf = pfaffian(k, s);
            CHECK(pf * pf == minor(k, s, s));
            CHECK(long(pf.size()) == double_factorial(size - 1));
            ++checked;
        }
    CHECK(checked == 15 + 15 + 1);
}
