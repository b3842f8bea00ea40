#include "lgb/ideal_families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "lgb/groebner.hpp"
#include "lgb/matrix_vars.hpp"

namespace lgb {

namespace {

void for_each_subset(int lo, int hi, int size, const std::function<void(const std::vector<int>&)>& fn)
{
    if (size < 0 || hi - lo + 1 < size) return;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int x = next; x <= hi - (size - static_cast<int>(cur.size())) + 1; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(lo);
}

class Collector {
public:
    void add(Polynomial<Rational> p, GeneratorProvenance prov)
    {
        if (p.is_zero()) return;
        if (!seen_.insert(p.to_string()).second) return;
        out_.polys.push_back(std::move(p));
        out_.provenance.push_back(std::move(prov));
    }
    GeneratorSet take() { return std::move(out_); }

private:
    std::set<std::string> seen_;
    GeneratorSet out_;
};

} // namespace

std::string GeneratorProvenance::to_string() const
{
    std::ostringstream os;
    auto list = [&](const std::vector<int>& v) {
        os << '{';
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
        os << '}';
    };
    os << "region " << region + 1 << ' ';
    list(rows);
    if (!cols.empty()) {
        os << 'x';
        list(cols);
    }
    return os.str();
}

GeneratorSet natural_generators(const LadderInstance& inst)
{
    Collector out;
    if (inst.family != Family::MaxMinors && inst.points.empty()) return out.take();
    require_valid(inst);
    const MatrixShape shape = inst.shape();

    if (inst.family == Family::MaxMinors) {
        if (inst.m > inst.n) return out.take();
        std::vector<int> rows(static_cast<std::size_t>(inst.m));
        for (int i = 0; i < inst.m; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
        for_each_subset(1, inst.n, inst.m, [&](const std::vector<int>& cols) {
            out.add(minor(shape, rows, cols), {0, rows, cols});
        });
        return out.take();
    }

    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [a, b] = inst.points[k];
        const int t = inst.t[k];
        switch (inst.family) {
        case Family::Pfaffian:
            for_each_subset(a, b, 2 * t, [&](const std::vector<int>& idx) {
                out.add(pfaffian(shape, idx), {k, idx, {}});
            });
            break;
        case Family::Symmetric:
            // rows and columns inside [1, w]; every entry must satisfy min <= v
            for_each_subset(1, b, t, [&](const std::vector<int>& rows) {
                for_each_subset(1, b, t, [&](const std::vector<int>& cols) {
                    for (int r : rows)
                        for (int c : cols)
                            if (std::min(r, c) > a) return;
                    out.add(minor(shape, rows, cols), {k, rows, cols});
                });
            });
            break;
        case Family::OneSided:
            for_each_subset(1, a, t, [&](const std::vector<int>& rows) {
                for_each_subset(b, inst.n, t, [&](const std::vector<int>& cols) {
                    out.add(minor(shape, rows, cols), {k, rows, cols});
                });
            });
            break;
        case Family::MaxMinors:
            break;
        }
    }
    return out.take();
}

std::vector<Monomial> initial_generators(const LadderInstance& inst, const TermOrder& order)
{
    std::vector<Monomial> lms;
    for (const auto& g : natural_generators(inst).polys) lms.push_back(leading_monomial(g, order));
    std::sort(lms.begin(), lms.end(), DescendingBy{&order});
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    return lms;
}

TermOrder family_order(const LadderInstance& inst, OrderKind kind) { return TermOrder::of_kind(kind, inst.shape()); }

bool order_matches_family(Family f, OrderKind kind) { return kind == default_order(f); }

} // namespace lgb
