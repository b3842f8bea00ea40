#pragma once

#include <string>
#include <vector>

#include "lgb/ladders.hpp"
#include "lgb/polynomial.hpp"

namespace testing {

using lgb::Monomial;
using lgb::Var;
using Poly = lgb::Polynomial<lgb::Rational>;

inline Poly P(const std::string& s) { return lgb::parse_polynomial(s); }
inline Monomial M(const std::string& s) { return lgb::parse_monomial(s); }
inline Var X(int i, int j) { return lgb::make_var(i, j); }

inline std::vector<Monomial> monos(const std::vector<std::string>& ss)
{
    std::vector<Monomial> out;
    for (const auto& s : ss) out.push_back(M(s));
    return out;
}

// Desk-scale instances used across the suites and by the acceptance run.
inline std::vector<lgb::LadderInstance> corpus()
{
    using L = lgb::LadderInstance;
    return {
        L::maxminors(1, 3),
        L::maxminors(2, 2),
        L::maxminors(2, 3),
        L::maxminors(2, 4),
        L::maxminors(3, 4),
        L::pfaffian(4, {{1, 4}}, {2}),
        L::pfaffian(5, {{1, 5}}, {2}),
        L::pfaffian(6, {{1, 6}}, {2}),
        L::pfaffian(5, {{1, 4}, {2, 5}}, {2, 2}),
        L::pfaffian(6, {{1, 4}, {3, 6}}, {2, 2}),
        L::symmetric(3, {{3, 3}}, {2}),
        L::symmetric(4, {{2, 4}, {3, 3}}, {2, 2}),
        L::symmetric(4, {{3, 3}}, {2}),
        L::onesided(2, 3, {{2, 1}}, {2}),
        L::onesided(3, 3, {{2, 1}, {3, 2}}, {2, 2}),
        L::onesided(4, 4, {{4, 1}}, {2}),
        L::onesided(4, 4, {{3, 1}, {4, 2}}, {2, 2}),
        L::onesided(4, 4, {{2, 1}, {4, 3}}, {2, 2}),
    };
}

} // namespace testing
