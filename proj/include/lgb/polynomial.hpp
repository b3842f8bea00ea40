#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgb/field.hpp"
#include "lgb/monomial.hpp"
#include "lgb/term_order.hpp"

namespace lgb {

/// Sparse multivariate polynomial over the exact field `Scalar`.
///
/// Terms are kept sorted by the canonical monomial comparison and no zero
/// coefficient is ever stored, so equal polynomials have identical
/// representations independently of any term order.
template <typename Scalar>
class Polynomial {
public:
    using Term = std::pair<Monomial, Scalar>;

    Polynomial() = default;
    Polynomial(const Monomial& m, const Scalar& c)
    {
        if (!c.is_zero()) terms_.emplace_back(m, c);
    }
    static Polynomial variable(Var v, const Scalar& one) { return Polynomial(Monomial(v), one); }
    static Polynomial from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Polynomial p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
            else p.terms_.push_back(std::move(t));
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    Scalar coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& a, const Monomial& b) { return a.first < b; });
        return (it != terms_.end() && it->first == m) ? it->second : Scalar{};
    }
    std::uint32_t degree() const
    {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }
    bool is_homogeneous() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.first.degree() == terms_.front().first.degree(); });
    }
    std::vector<Var> support() const
    {
        std::vector<Var> s;
        for (const auto& t : terms_)
            for (Var v : t.first.support()) s.push_back(v);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Term> out;
        out.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
        return from_terms(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c, const Monomial& m = {}) const
    {
        Polynomial r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
        if (!m.is_one())
            std::sort(r.terms_.begin(), r.terms_.end(),
                      [](const Term& a, const Term& b) { return a.first < b.first; });
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second))
                return false;
        return true;
    }

    /// Terms sorted in decreasing `order`.
    std::vector<Term> sorted_terms(const TermOrder& order) const
    {
        auto ts = terms_;
        std::sort(ts.begin(), ts.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
        return ts;
    }

    /// Canonical text `c*x[i,j]^e*... + ...`, terms in decreasing `order`.
    std::string to_string(const TermOrder& order) const { return render(sorted_terms(order)); }
    /// Same, with terms in decreasing canonical order.
    std::string to_string() const
    {
        std::vector<Term> ts(terms_.rbegin(), terms_.rend());
        return render(ts);
    }

private:
    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract)
    {
        Polynomial r;
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                Scalar c = subtract ? a.terms_[i].second - b.terms_[j].second
                                    : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        return r;
    }

    static std::string render(const std::vector<Term>& ts)
    {
        if (ts.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : ts) {
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            if (m.is_one()) s += cs;
            else if (cs == "1") s += m.to_string();
            else s += cs + "*" + m.to_string();
        }
        return s;
    }

    std::vector<Term> terms_;
};

/// Maps a rational polynomial into the field of `one`.
template <typename Scalar>
Polynomial<Scalar> embed(const Polynomial<Rational>& f, const Scalar& one)
{
    std::vector<typename Polynomial<Scalar>::Term> ts;
    ts.reserve(f.size());
    for (const auto& [m, c] : f.terms()) ts.emplace_back(m, embed(c, one));
    return Polynomial<Scalar>::from_terms(std::move(ts));
}

template <typename Scalar>
std::vector<Polynomial<Scalar>> embed(const std::vector<Polynomial<Rational>>& fs, const Scalar& one)
{
    std::vector<Polynomial<Scalar>> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(embed(f, one));
    return out;
}

/// Parses a monomial written as `x[i,j]^e*x[k,l]` (or `1`).
Monomial parse_monomial(const std::string& text);
/// Parses the canonical text form produced by Polynomial<Rational>::to_string.
Polynomial<Rational> parse_polynomial(const std::string& text);

} // namespace lgb
