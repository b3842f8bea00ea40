#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgb/polynomial.hpp"
#include "lgb/term_order.hpp"

namespace lgb {

/// Thrown when a configurable resource budget runs out.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Scalar>
std::pair<Monomial, Scalar> leading_term(const Polynomial<Scalar>& p, const TermOrder& order)
{
    if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (order.compare(ts[i].first, ts[best].first) > 0) best = i;
    return ts[best];
}

template <typename Scalar>
Monomial leading_monomial(const Polynomial<Scalar>& p, const TermOrder& order)
{
    return leading_term(p, order).first;
}

template <typename Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& p, const TermOrder& order)
{
    if (p.is_zero()) return p;
    return p.scaled(leading_term(p, order).second.inverse());
}

template <typename Scalar>
struct DivisionResult {
    Polynomial<Scalar> remainder;
    /// p = sum quotients[i] * divisors[i] + remainder.
    std::vector<Polynomial<Scalar>> quotients;
};

namespace detail {

template <typename Scalar>
using OrderedTerms = std::map<Monomial, Scalar, DescendingBy>;

template <typename Scalar>
void subtract_scaled(OrderedTerms<Scalar>& work, const Polynomial<Scalar>& g, const Scalar& c,
                     const Monomial& shift)
{
    for (const auto& [m, gc] : g.terms()) {
        Monomial mm = m * shift;
        auto [it, inserted] = work.try_emplace(std::move(mm), Scalar{});
        it->second -= gc * c;
        if (it->second.is_zero()) work.erase(it);
    }
}

} // namespace detail

/// Multivariate division. The top term is always reduced by the divisor of
/// smallest index whose leading monomial divides it; terms that no leading
/// monomial divides move to the remainder.
template <typename Scalar>
DivisionResult<Scalar> divide(const Polynomial<Scalar>& p, const std::vector<Polynomial<Scalar>>& divisors,
                              const TermOrder& order)
{
    DivisionResult<Scalar> res;
    res.quotients.resize(divisors.size());
    std::vector<std::pair<Monomial, Scalar>> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
        leads.push_back(leading_term(g, order));
    }

    detail::OrderedTerms<Scalar> work{DescendingBy{&order}};
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);

    std::vector<typename Polynomial<Scalar>::Term> rem;
    std::vector<std::vector<typename Polynomial<Scalar>::Term>> quot(divisors.size());
    while (!work.empty()) {
        auto top = work.begin();
        const Monomial m = top->first;
        const Scalar c = top->second;
        std::size_t k = 0;
        while (k < leads.size() && !leads[k].first.divides(m)) ++k;
        if (k == leads.size()) {
            rem.emplace_back(m, c);
            work.erase(top);
            continue;
        }
        const Scalar factor = c / leads[k].second;
        const Monomial shift = m / leads[k].first;
        quot[k].emplace_back(shift, factor);
        detail::subtract_scaled(work, divisors[k], factor, shift);
    }
    res.remainder = Polynomial<Scalar>::from_terms(std::move(rem));
    for (std::size_t k = 0; k < divisors.size(); ++k)
        res.quotients[k] = Polynomial<Scalar>::from_terms(std::move(quot[k]));
    return res;
}

template <typename Scalar>
Polynomial<Scalar> normal_form(const Polynomial<Scalar>& p, const std::vector<Polynomial<Scalar>>& divisors,
                               const TermOrder& order)
{
    if (divisors.empty()) return p;
    return divide(p, divisors, order).remainder;
}

template <typename Scalar>
Polynomial<Scalar> s_polynomial(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g, const TermOrder& order)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    auto [mf, cf] = leading_term(f, order);
    auto [mg, cg] = leading_term(g, order);
    const Monomial l = lcm(mf, mg);
    return f.scaled(cf.inverse(), l / mf) - g.scaled(cg.inverse(), l / mg);
}

struct BuchbergerOptions {
    /// Maximum number of S-pairs reduced before giving up (0 = unlimited).
    std::size_t max_spairs = 0;
};

struct BuchbergerStats {
    std::size_t pairs_reduced = 0;
    std::size_t pairs_skipped = 0;
};

namespace detail {

template <typename Scalar>
std::vector<Polynomial<Scalar>> interreduce(std::vector<Polynomial<Scalar>> basis, const TermOrder& order)
{
    // drop elements whose leading monomial is divisible by another one
    std::vector<Monomial> lm;
    for (auto& g : basis) {
        g = make_monic(g, order);
        lm.push_back(leading_monomial(g, order));
    }
    std::vector<Polynomial<Scalar>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !lm[j].divides(lm[i])) continue;
            // ties between equal leading monomials keep the lowest index
            redundant = !(lm[j] == lm[i]) || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail reduction
    std::vector<Polynomial<Scalar>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<Scalar>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto [m, c] = leading_term(minimal[i], order);
        Polynomial<Scalar> tail = minimal[i] - Polynomial<Scalar>(m, c);
        reduced.push_back(Polynomial<Scalar>(m, c) + normal_form(tail, others, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
        return order.compare(leading_monomial(a, order), leading_monomial(b, order)) > 0;
    });
    return reduced;
}

} // namespace detail

/// Reduced Groebner basis of the ideal generated by `generators`, sorted by
/// decreasing leading monomial. Uses the normal selection strategy, the
/// coprime-leading-monomial criterion and Buchberger's chain criterion.
template <typename Scalar>
std::vector<Polynomial<Scalar>> buchberger_reduced(const std::vector<Polynomial<Scalar>>& generators,
                                                   const TermOrder& order, const BuchbergerOptions& opts = {},
                                                   BuchbergerStats* stats = nullptr)
{
    std::vector<Polynomial<Scalar>> basis;
    std::vector<Monomial> lms;
    for (const auto& f : generators) {
        if (f.is_zero()) continue;
        basis.push_back(make_monic(f, order));
        lms.push_back(leading_monomial(basis.back(), order));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pending;
    // pair (i,j) with i<j is "treated" once removed from pending
    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::any_of(pending.begin(), pending.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
    };
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pending.push_back({i, j, lcm(lms[i], lms[j])});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    BuchbergerStats local;
    while (!pending.empty()) {
        // normal strategy: smallest lcm degree, then smallest lcm, then indices
        auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            auto c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        Pair p = *best;
        pending.erase(best);

        if (lms[p.i].coprime(lms[p.j])) {
            ++local.pairs_skipped;
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            chain = lms[k].divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
        }
        if (chain) {
            ++local.pairs_skipped;
            continue;
        }

        if (opts.max_spairs != 0 && local.pairs_reduced >= opts.max_spairs)
            throw BudgetExceeded("buchberger: S-pair budget of " + std::to_string(opts.max_spairs) + " exhausted");
        ++local.pairs_reduced;
        auto h = normal_form(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h, order));
        lms.push_back(leading_monomial(basis.back(), order));
        add_pairs_for(basis.size() - 1);
    }
    if (stats) *stats = local;
    return detail::interreduce(std::move(basis), order);
}

/// True iff G is monic, interreduced (leading and tail monomials) and every
/// S-pair reduces to zero modulo G.
template <typename Scalar>
bool is_reduced_groebner(const std::vector<Polynomial<Scalar>>& basis, const TermOrder& order)
{
    std::vector<std::pair<Monomial, Scalar>> lt;
    for (const auto& g : basis) {
        if (g.is_zero()) return false;
        lt.push_back(leading_term(g, order));
        if (!lt.back().second.is_one()) return false;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& [m, c] : basis[i].terms()) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (m == lt[i].first) {
                    if (j != i && lt[j].first.divides(m)) return false;
                } else if (lt[j].first.divides(m)) {
                    return false;
                }
            }
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (lt[i].first.coprime(lt[j].first)) continue;
            if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
        }
    return true;
}

/// Leading monomials of a basis.
template <typename Scalar>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<Scalar>>& basis, const TermOrder& order)
{
    std::vector<Monomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(leading_monomial(g, order));
    return out;
}

/// Monic copies of the nonzero input, deduplicated, sorted like buchberger_reduced.
template <typename Scalar>
std::vector<Polynomial<Scalar>> monic_sorted(const std::vector<Polynomial<Scalar>>& fs, const TermOrder& order)
{
    std::vector<Polynomial<Scalar>> out;
    for (const auto& f : fs)
        if (!f.is_zero()) out.push_back(make_monic(f, order));
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        auto c = order.compare(leading_monomial(a, order), leading_monomial(b, order));
        if (c != 0) return c > 0;
        return a.to_string() < b.to_string();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace lgb
