#include "lgb/complexes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "lgb/groebner.hpp"

namespace lgb {

namespace {

using Mask = SimplicialComplex::Mask;

constexpr Mask bit(int i) { return Mask{1} << i; }

// Removes bit position idx, shifting higher bits down.
Mask compress(Mask m, int idx)
{
    const Mask low = m & (bit(idx) - 1);
    const Mask high = idx >= 63 ? 0 : (m >> (idx + 1)) << idx;
    return low | high;
}

std::vector<Var> without_vertex(const std::vector<Var>& vs, int idx)
{
    std::vector<Var> out = vs;
    out.erase(out.begin() + idx);
    return out;
}

} // namespace

void ComplexBudget::charge(std::size_t n)
{
    used += n;
    if (max_faces != 0 && used > max_faces)
        throw BudgetExceeded("complexes: face budget of " + std::to_string(max_faces) + " exhausted");
}

SimplicialComplex::SimplicialComplex(std::vector<Var> vertices, std::vector<Mask> facets)
    : vertices_(std::move(vertices))
{
    if (vertices_.size() > 64) throw std::invalid_argument("SimplicialComplex: at most 64 vertices");
    if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
        std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("SimplicialComplex: vertices must be sorted and distinct");
    const Mask all = vertices_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(vertices_.size())) - 1;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Mask f : facets) {
        if (f & ~all) throw std::invalid_argument("SimplicialComplex: facet uses unknown vertex");
        bool contained = std::any_of(facets.begin(), facets.end(), [&](Mask g) { return g != f && (f & g) == f; });
        if (!contained) facets_.push_back(f);
    }
}

SimplicialComplex SimplicialComplex::simplex(std::vector<Var> vertices)
{
    const auto n = static_cast<int>(vertices.size());
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    return SimplicialComplex(std::move(vertices), {all});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<Var> vertices)
{
    return SimplicialComplex(std::move(vertices), {0});
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Var> vertices, const std::vector<std::vector<Var>>& facets)
{
    std::sort(vertices.begin(), vertices.end());
    SimplicialComplex tmp(vertices, {});
    std::vector<Mask> ms;
    for (const auto& f : facets) {
        Mask m = 0;
        for (Var v : f) {
            int i = tmp.index_of(v);
            if (i < 0) throw std::invalid_argument("from_facets: vertex " + var_name(v) + " not in ground set");
            m |= bit(i);
        }
        ms.push_back(m);
    }
    return SimplicialComplex(std::move(vertices), std::move(ms));
}

int SimplicialComplex::index_of(Var v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

std::vector<std::vector<Var>> SimplicialComplex::facet_lists() const
{
    std::vector<std::vector<Var>> out;
    for (Mask f : facets_) {
        std::vector<Var> face;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (f & bit(static_cast<int>(i))) face.push_back(vertices_[i]);
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::has_face(const std::vector<Var>& face) const
{
    Mask m = 0;
    for (Var v : face) {
        int i = index_of(v);
        if (i < 0) return false;
        m |= bit(i);
    }
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return (m & f) == m; });
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (Mask f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](Mask f) { return std::popcount(f) == std::popcount(facets_.front()); });
}

std::string SimplicialComplex::key() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& f : facet_lists()) {
        os << (first ? "" : ",") << '[';
        for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
        os << ']';
        first = false;
    }
    os << "}/";
    for (std::size_t k = 0; k < vertices_.size(); ++k) os << (k ? " " : "") << vertices_[k];
    return os.str();
}

std::string SimplicialComplex::to_string() const
{
    if (is_void()) return "void";
    std::string s = "<";
    bool first = true;
    for (const auto& f : facet_lists()) {
        s += first ? "{" : ", {";
        for (std::size_t k = 0; k < f.size(); ++k) s += (k ? " " : "") + var_name(f[k]);
        s += "}";
        first = false;
    }
    return s + ">";
}

SimplicialComplex from_squarefree(const MonomialIdeal& a, ComplexBudget* budget)
{
    if (!a.is_squarefree()) throw std::invalid_argument("from_squarefree: ideal is not squarefree");
    const auto& vs = a.ambient();
    if (vs.size() > 64) throw std::invalid_argument("from_squarefree: at most 64 vertices");
    if (a.is_unit()) return SimplicialComplex(vs, {});

    SimplicialComplex ground(vs, {});
    std::vector<Mask> gens;
    for (const auto& g : a.generators()) {
        Mask m = 0;
        for (Var v : g.support()) m |= bit(ground.index_of(v));
        gens.push_back(m);
    }
    const int n = static_cast<int>(vs.size());
    auto independent = [&](Mask s) {
        return std::none_of(gens.begin(), gens.end(), [&](Mask g) { return (g & s) == g; });
    };

    std::vector<Mask> facets;
    std::function<void(int, Mask)> rec = [&](int i, Mask s) {
        if (i == n) {
            for (int v = 0; v < n; ++v)
                if (!(s & bit(v)) && independent(s | bit(v))) return; // not maximal
            if (budget) budget->charge(1);
            facets.push_back(s);
            return;
        }
        if (independent(s | bit(i))) rec(i + 1, s | bit(i));
        // excluding i only makes sense if i can be blocked later or already is
        rec(i + 1, s);
    };
    rec(0, 0);
    return SimplicialComplex(vs, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c)
{
    const auto& vs = c.vertices();
    const int n = static_cast<int>(vs.size());
    if (n > 24) throw std::invalid_argument("stanley_reisner_ideal: too many vertices for enumeration");
    auto is_face = [&](Mask m) {
        return std::any_of(c.facets().begin(), c.facets().end(), [&](Mask f) { return (m & f) == m; });
    };
    std::vector<Monomial> gens;
    for (Mask m = 0; m < bit(n); ++m) {
        if (is_face(m)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((m & bit(i)) && !is_face(m & ~bit(i))) minimal = false;
        if (!minimal) continue;
        std::vector<Monomial::Entry> es;
        for (int i = 0; i < n; ++i)
            if (m & bit(i)) es.emplace_back(vs[static_cast<std::size_t>(i)], 1);
        gens.push_back(Monomial::from_entries(std::move(es)));
    }
    return MonomialIdeal(std::move(gens), vs);
}

SimplicialComplex link(const SimplicialComplex& c, Var v)
{
    const int i = c.index_of(v);
    if (i < 0) return c;
    std::vector<Mask> fs;
    for (Mask f : c.facets())
        if (f & bit(i)) fs.push_back(compress(f & ~bit(i), i));
    return SimplicialComplex(without_vertex(c.vertices(), i), std::move(fs));
}

SimplicialComplex deletion(const SimplicialComplex& c, Var v)
{
    const int i = c.index_of(v);
    if (i < 0) return c;
    std::vector<Mask> fs;
    for (Mask f : c.facets()) fs.push_back(compress(f & ~bit(i), i));
    return SimplicialComplex(without_vertex(c.vertices(), i), std::move(fs));
}

ConeReduction remove_cone_points(const SimplicialComplex& c)
{
    if (c.is_void()) return {c, {}};
    Mask cone = ~Mask{0};
    for (Mask f : c.facets()) cone &= f;
    ConeReduction r{c, {}};
    for (int i = static_cast<int>(c.vertices().size()) - 1; i >= 0; --i) {
        if (!(cone & bit(i))) continue;
        r.removed.push_back(c.vertices()[static_cast<std::size_t>(i)]);
        r.complex = deletion(r.complex, c.vertices()[static_cast<std::size_t>(i)]);
    }
    std::reverse(r.removed.begin(), r.removed.end());
    return r;
}

bool operator==(const VDCertificate& a, const VDCertificate& b)
{
    if (a.kind != b.kind) return false;
    if (a.kind != VDCertificate::Kind::Node) return true;
    if (a.vertex != b.vertex || !a.link || !b.link || !a.deletion || !b.deletion) return false;
    return *a.link == *b.link && *a.deletion == *b.deletion;
}

bool check_shedding(const SimplicialComplex& c, Var v)
{
    if (!c.has_face({v})) return false;
    const auto lk = link(c, v);
    // a cone point: c is the cone over its link and deletion = link, which
    // we identify with c itself
    if (std::all_of(c.facets().begin(), c.facets().end(),
                    [&](SimplicialComplex::Mask f) { return f >> c.index_of(v) & 1; }))
        return lk.is_pure();
    const auto del = deletion(c, v);
    return lk.is_pure() && del.is_pure() && c.dim() == del.dim() && del.dim() == lk.dim() + 1;
}

namespace {

using CertPtr = std::shared_ptr<const VDCertificate>;

std::optional<VDCertificate::Kind> leaf_kind(const SimplicialComplex& c)
{
    if (c.is_void() || c.is_empty_complex()) return VDCertificate::Kind::Empty;
    if (c.is_simplex()) return VDCertificate::Kind::Simplex;
    return std::nullopt;
}

class VDSearch {
public:
    VDSearch(std::vector<Var> preferred, ComplexBudget* budget) : preferred_(std::move(preferred)), budget_(budget) {}

    CertPtr run(const SimplicialComplex& c)
    {
        if (budget_) budget_->charge(1);
        if (auto k = leaf_kind(c)) {
            auto leaf = std::make_shared<VDCertificate>();
            leaf->kind = *k;
            return leaf;
        }
        const SimplicialComplex r = remove_cone_points(c).complex;
        const std::string key = r.key();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<Var> order;
        for (Var v : preferred_)
            if (r.index_of(v) >= 0) order.push_back(v);
        for (Var v : r.vertices())
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);

        CertPtr found;
        for (Var v : order) {
            if (!check_shedding(r, v)) continue;
            auto lk = run(link(r, v));
            if (!lk) continue;
            auto del = run(deletion(r, v));
            if (!del) continue;
            auto node = std::make_shared<VDCertificate>();
            node->kind = VDCertificate::Kind::Node;
            node->vertex = v;
            node->link = lk;
            node->deletion = del;
            found = node;
            break;
        }
        if (!found) trace.push_back(r.to_string());
        memo_.emplace(key, found);
        return found;
    }

    std::vector<std::string> trace;

private:
    std::vector<Var> preferred_;
    ComplexBudget* budget_;
    std::map<std::string, CertPtr> memo_;
};

} // namespace

VDResult is_vertex_decomposable(const SimplicialComplex& c, const std::vector<Var>& preferred, ComplexBudget* budget)
{
    VDSearch search(preferred, budget);
    VDResult res;
    res.certificate = search.run(c);
    res.decomposable = res.certificate != nullptr;
    if (!res.decomposable) res.trace = std::move(search.trace);
    return res;
}

bool replay_certificate(const SimplicialComplex& c, const VDCertificate& cert, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg + " at " + c.to_string();
        return false;
    };
    switch (cert.kind) {
    case VDCertificate::Kind::Empty:
        if (c.is_void() || c.is_empty_complex()) return true;
        return fail("leaf 'empty' does not match");
    case VDCertificate::Kind::Simplex:
        if (c.is_simplex()) return true;
        return fail("leaf 'simplex' does not match");
    case VDCertificate::Kind::Node:
        break;
    }
    if (!cert.link || !cert.deletion) return fail("incomplete node");
    const SimplicialComplex r = remove_cone_points(c).complex;
    if (r.index_of(cert.vertex) < 0) return fail("vertex " + var_name(cert.vertex) + " not in the ground set");
    if (!check_shedding(r, cert.vertex)) return fail("vertex " + var_name(cert.vertex) + " is not a shedding vertex");
    return replay_certificate(link(r, cert.vertex), *cert.link, why) &&
           replay_certificate(deletion(r, cert.vertex), *cert.deletion, why);
}

} // namespace lgb
