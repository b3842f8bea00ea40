#include "lgb/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgb {

std::string var_name(Var v)
{
    if (var_row(v) == 0) return "y" + std::to_string(var_col(v));
    return "x[" + std::to_string(var_row(v)) + "," + std::to_string(var_col(v)) + "]";
}

Monomial::Monomial(Var v, std::uint32_t e)
{
    if (e != 0) {
        e_.emplace_back(v, e);
        deg_ = e;
    }
}

Monomial::Monomial(std::initializer_list<Entry> entries)
    : Monomial(from_entries(std::vector<Entry>(entries)))
{
}

Monomial Monomial::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (e == 0) continue;
        if (!m.e_.empty() && m.e_.back().first == v) m.e_.back().second += e;
        else m.e_.emplace_back(v, e);
        m.deg_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(Var v) const
{
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const Entry& a, Var b) { return a.first < b; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_squarefree() const
{
    return std::all_of(e_.begin(), e_.end(), [](const Entry& x) { return x.second == 1; });
}

std::vector<Var> Monomial::support() const
{
    std::vector<Var> s;
    s.reserve(e_.size());
    for (const auto& [v, e] : e_) s.push_back(v);
    return s;
}

bool Monomial::divides(const Monomial& other) const
{
    if (deg_ > other.deg_) return false;
    auto it = other.e_.begin();
    for (const auto& [v, e] : e_) {
        while (it != other.e_.end() && it->first < v) ++it;
        if (it == other.e_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    auto a = e_.begin();
    auto b = other.e_.begin();
    while (a != e_.end() && b != other.e_.end()) {
        if (a->first == b->first) return false;
        if (a->first < b->first) ++a;
        else ++b;
    }
    return true;
}

namespace {

template <typename Combine>
Monomial merge(const Monomial& a, const Monomial& b, Combine combine)
{
    std::vector<Monomial::Entry> out;
    const auto& x = a.entries();
    const auto& y = b.entries();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        Var v;
        std::uint32_t ea = 0, eb = 0;
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            v = x[i].first; ea = x[i++].second;
        } else if (i == x.size() || y[j].first < x[i].first) {
            v = y[j].first; eb = y[j++].second;
        } else {
            v = x[i].first; ea = x[i++].second; eb = y[j++].second;
        }
        if (auto e = combine(ea, eb); e != 0) out.emplace_back(v, e);
    }
    return Monomial::from_entries(std::move(out));
}

} // namespace

Monomial operator*(const Monomial& a, const Monomial& b)
{
    return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    return merge(a, b, [](std::uint32_t x, std::uint32_t y) {
        if (y > x) throw std::domain_error("Monomial: inexact division");
        return x - y;
    });
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); });
}

Monomial colon(const Monomial& a, const Monomial& b)
{
    return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return x > y ? x - y : 0u; });
}

std::string Monomial::to_string() const
{
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : e_) {
        if (!s.empty()) s += '*';
        s += var_name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& [v, e] : m.entries()) {
        h ^= (std::size_t(v) << 8) ^ e;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace lgb
