#include "lgb/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lgb {

namespace {

std::vector<Var> support_of(const std::vector<Monomial>& gens)
{
    std::vector<Var> s;
    for (const auto& g : gens)
        for (Var v : g.support()) s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<Monomial> minimal_subset(std::vector<Monomial> gens)
{
    // degree first so that any divisor of m precedes it
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& g : gens)
        if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); }))
            out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class HilbertRecursion {
public:
    explicit HilbertRecursion(int dmax) : dmax_(dmax) {}

    std::vector<std::uint64_t> run(std::vector<Monomial> gens, std::vector<Var> ambient)
    {
        std::vector<std::uint64_t> h(static_cast<std::size_t>(dmax_) + 1, 0);
        if (std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); })) return h;

        // linear generators cut the ambient ring
        std::vector<Monomial> rest;
        for (auto& g : gens) {
            if (g.degree() == 1) {
                Var x = g.entries().front().first;
                ambient.erase(std::remove(ambient.begin(), ambient.end(), x), ambient.end());
            } else {
                rest.push_back(std::move(g));
            }
        }
        gens = std::move(rest);

        if (gens.empty()) {
            const std::uint64_t v = ambient.size();
            for (int d = 0; d <= dmax_; ++d)
                h[static_cast<std::size_t>(d)] = v == 0 ? (d == 0 ? 1 : 0) : binomial(d + v - 1, v - 1);
            return h;
        }

        auto key = std::make_pair(gens, ambient);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::map<Var, int> freq;
        for (const auto& g : gens)
            for (const auto& [v, e] : g.entries()) ++freq[v];
        Var x = freq.begin()->first;
        int best = 0;
        for (const auto& [v, c] : freq)
            if (c > best) best = c, x = v;

        const Monomial xm(x);
        std::vector<Monomial> col, plus;
        for (const auto& g : gens) {
            col.push_back(g.contains(x) ? g / xm : g);
            if (!g.contains(x)) plus.push_back(g);
        }
        plus.push_back(xm);

        auto hc = run(minimal_subset(std::move(col)), ambient);
        auto hp = run(minimal_subset(std::move(plus)), ambient);
        for (int d = 0; d <= dmax_; ++d) {
            const auto i = static_cast<std::size_t>(d);
            h[i] = hp[i] + (d > 0 ? hc[i - 1] : 0);
        }
        memo_.emplace(std::move(key), h);
        return h;
    }

private:
    int dmax_;
    std::map<std::pair<std::vector<Monomial>, std::vector<Var>>, std::vector<std::uint64_t>> memo_;
};

} // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, std::vector<Var> ambient)
    : gens_(minimal_subset(std::move(gens)))
{
    auto supp = support_of(gens_);
    if (ambient.empty()) {
        ambient_ = std::move(supp);
        return;
    }
    std::sort(ambient.begin(), ambient.end());
    ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
    if (!std::includes(ambient.begin(), ambient.end(), supp.begin(), supp.end()))
        throw std::invalid_argument("MonomialIdeal: generators use variables outside the ambient ring");
    ambient_ = std::move(ambient);
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<Var> MonomialIdeal::support() const { return support_of(gens_); }

MonomialIdeal MonomialIdeal::with_ambient(std::vector<Var> ambient) const { return MonomialIdeal(gens_, std::move(ambient)); }

std::string MonomialIdeal::to_string() const
{
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) s += (k ? ", " : "") + gens_[k].to_string();
    return s + ")";
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<Var> ambient)
{
    return MonomialIdeal(std::move(gens), std::move(ambient));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f)
{
    std::vector<Monomial> out;
    for (const auto& g : a.generators()) out.push_back(colon(g, f));
    return MonomialIdeal(std::move(out), a.ambient());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    auto amb = a.ambient();
    amb.insert(amb.end(), b.ambient().begin(), b.ambient().end());
    return MonomialIdeal(std::move(gens), std::move(amb));
}

MonomialIdeal multiply(const Monomial& f, const MonomialIdeal& b)
{
    std::vector<Monomial> out;
    for (const auto& g : b.generators()) out.push_back(f * g);
    auto amb = b.ambient();
    for (Var v : f.support()) amb.push_back(v);
    return MonomialIdeal(std::move(out), std::move(amb));
}

bool colon_stable(const MonomialIdeal& a, const Monomial& f) { return colon(a, f) == a; }

BdlResult bdl(const MonomialIdeal& a, const MonomialIdeal& b, const Monomial& f)
{
    if (!colon_stable(a, f)) throw BdlError("bdl: A : f != A (colon not stable)");
    if (!b.contains(a)) throw BdlError("bdl: A is not contained in B");
    BdlResult r{sum(a, multiply(f, b)), f.degree(), f.is_one()};
    return r;
}

std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& a, int dmax)
{
    if (dmax < 0) return {};
    HilbertRecursion rec(dmax);
    return rec.run(a.generators(), a.ambient());
}

std::uint64_t hilbert_function_at(const MonomialIdeal& a, int d)
{
    if (d < 0) return 0;
    return hilbert_function(a, d).back();
}

std::uint64_t hilbert_function_brute(const MonomialIdeal& a, int d)
{
    if (d < 0) return 0;
    const auto& vars = a.ambient();
    std::uint64_t count = 0;
    std::vector<Monomial::Entry> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (left == 0) {
            if (!a.contains(Monomial::from_entries(cur))) ++count;
            return;
        }
        if (idx == vars.size()) return;
        for (int e = left; e >= 0; --e) {
            if (e > 0) cur.emplace_back(vars[idx], static_cast<std::uint32_t>(e));
            rec(idx + 1, left - e);
            if (e > 0) cur.pop_back();
        }
    };
    rec(0, d);
    return count;
}

} // namespace lgb
