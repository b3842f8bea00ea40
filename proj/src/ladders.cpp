#include "lgb/ladders.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lgb {

namespace {

std::string cell_str(const Cell& c)
{
    return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

bool square_family(Family f) { return f == Family::Pfaffian || f == Family::Symmetric; }

// Cells of one region of a (non-maxminors) instance.
void add_region(const LadderInstance& inst, const Cell& p, CellSet& out)
{
    auto [a, b] = p;
    switch (inst.family) {
    case Family::MaxMinors:
        break;
    case Family::Pfaffian:
        for (int i = std::max(a, 1); i <= std::min(b, inst.n); ++i)
            for (int j = std::max(a, 1); j <= std::min(b, inst.n); ++j) out.emplace(i, j);
        break;
    case Family::Symmetric:
        for (int i = 1; i <= std::min(a, inst.n); ++i)
            for (int j = i; j <= std::min(b, inst.n); ++j) out.emplace(i, j);
        break;
    case Family::OneSided:
        for (int i = 1; i <= std::min(a, inst.m); ++i)
            for (int j = std::max(b, 1); j <= inst.n; ++j) out.emplace(i, j);
        break;
    }
}

// Staircase condition: i < h, j > k, (i,j),(h,k) in L imply (i,k),(h,j) in L.
std::optional<Diagnostic> check_staircase(const CellSet& L)
{
    if (L.size() > 2500) return std::nullopt; // built from regions; holds by construction
    std::vector<Cell> v(L.begin(), L.end());
    for (const auto& [i, j] : v)
        for (const auto& [h, k] : v) {
            if (!(i < h && j > k)) continue;
            if (!L.count({i, k}) || !L.count({h, j}))
                return Diagnostic{"staircase condition", "cells " + cell_str({i, j}) + " and " + cell_str({h, k})};
        }
    return std::nullopt;
}

std::optional<Diagnostic> common_checks(const LadderInstance& inst, const char* point_word)
{
    if (inst.n < 1 || inst.n > 255 || inst.m < 1 || inst.m > 255)
        return Diagnostic{"matrix size", "dimensions must lie in [1, 255]"};
    if (square_family(inst.family) && inst.m != inst.n)
        return Diagnostic{"matrix size", "family needs a square matrix"};
    if (inst.points.empty()) return Diagnostic{std::string("no ") + point_word, ""};
    if (inst.points.size() != inst.t.size())
        return Diagnostic{"size vector", "t has " + std::to_string(inst.t.size()) + " entries for " +
                                             std::to_string(inst.points.size()) + " " + point_word};
    for (std::size_t k = 0; k < inst.t.size(); ++k)
        if (inst.t[k] < 1) return Diagnostic{"size vector", "t_" + std::to_string(k + 1) + " must be positive"};
    for (std::size_t k = 0; k < inst.points.size(); ++k)
        for (std::size_t l = k + 1; l < inst.points.size(); ++l)
            if (inst.points[k] == inst.points[l])
                return Diagnostic{inst.family == Family::Pfaffian ? "coincident upper corners"
                                                                  : "coincident distinguished points",
                                  cell_str(inst.points[k])};
    return std::nullopt;
}

std::optional<Diagnostic> validate_pfaffian(const LadderInstance& inst)
{
    if (auto d = common_checks(inst, "upper corners")) return d;
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [a, b] = inst.points[k];
        if (a < 1 || b > inst.n || a >= b)
            return Diagnostic{"upper corner", cell_str(inst.points[k]) + " needs 1 <= a < b <= n"};
        if (k > 0 && (a < inst.points[k - 1].first || b < inst.points[k - 1].second))
            return Diagnostic{"corner order", "corners must satisfy a_1 <= ... <= a_s and b_1 <= ... <= b_s"};
    }
    CellSet L = cells(inst);
    for (const auto& p : inst.points)
        if (L.count({p.first - 1, p.second + 1}))
            return Diagnostic{"upper corner not on the border", cell_str(p)};
    for (const auto& [i, j] : L)
        if (!L.count({j, i})) return Diagnostic{"not symmetric", cell_str({i, j})};
    return check_staircase(L);
}

std::optional<Diagnostic> validate_symmetric(const LadderInstance& inst)
{
    if (auto d = common_checks(inst, "distinguished points")) return d;
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [v, w] = inst.points[k];
        if (v < 1 || w > inst.n || v > w)
            return Diagnostic{"distinguished point", cell_str(inst.points[k]) + " needs 1 <= v <= w <= n"};
        if (k > 0 && (v < inst.points[k - 1].first || w > inst.points[k - 1].second))
            return Diagnostic{"point order", "points must satisfy v_1 <= ... <= v_s and w_1 >= ... >= w_s"};
    }
    CellSet L = cells(inst);
    for (const auto& [v, w] : inst.points)
        if (L.count({v + 1, w + 1})) return Diagnostic{"point not on the lower border", cell_str({v, w})};
    // L+ must be closed towards the top left inside i <= j
    for (const auto& [i, j] : L) {
        if (i > 1 && !L.count({i - 1, j})) return Diagnostic{"not a ladder", "cell " + cell_str({i - 1, j}) + " missing"};
        if (j > i && !L.count({i, j - 1})) return Diagnostic{"not a ladder", "cell " + cell_str({i, j - 1}) + " missing"};
    }
    return std::nullopt;
}

std::optional<Diagnostic> validate_onesided(const LadderInstance& inst)
{
    if (auto d = common_checks(inst, "distinguished points")) return d;
    if (inst.m > inst.n) return Diagnostic{"matrix size", "one-sided ladders need m <= n"};
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [a, b] = inst.points[k];
        if (a < 1 || a > inst.m || b < 1 || b > inst.n)
            return Diagnostic{"distinguished point", cell_str(inst.points[k]) + " outside the matrix"};
        if (k > 0 && (a < inst.points[k - 1].first || b < inst.points[k - 1].second))
            return Diagnostic{"point order", "points must satisfy a_1 <= ... <= a_s and b_1 <= ... <= b_s"};
    }
    CellSet L = cells(inst);
    if (!L.count({1, inst.n}))
        return Diagnostic{"corner cell", "(1,n) must belong to the ladder"};
    for (const auto& [a, b] : inst.points)
        if (L.count({a + 1, b - 1})) return Diagnostic{"point not on the lower border", cell_str({a, b})};
    if (auto d = check_staircase(L)) return d;
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        auto [a, b] = inst.points[k];
        const int bound = std::min(a, inst.n - b + 1);
        if (inst.t[k] > bound)
            return Diagnostic{"size bound", "t_" + std::to_string(k + 1) + " = " + std::to_string(inst.t[k]) +
                                                " exceeds min{a_k, n-b_k+1} = " + std::to_string(bound)};
        if (k == 0) continue;
        auto [pa, pb] = inst.points[k - 1];
        const int dt = inst.t[k] - inst.t[k - 1];
        if (!(pb - b < dt && dt < a - pa))
            return Diagnostic{"size gap", "need b_{k-1}-b_k < t_k-t_{k-1} < a_k-a_{k-1} at k = " +
                                              std::to_string(k + 1)};
    }
    return std::nullopt;
}

// A region that contributes no generator of its size.
bool region_empty(const LadderInstance& inst, const Cell& p, int t)
{
    auto [a, b] = p;
    switch (inst.family) {
    case Family::MaxMinors: return false;
    case Family::Pfaffian: return a < 1 || b > inst.n || 2 * t > b - a + 1;
    case Family::Symmetric: return a < 1 || b < 1 || t > std::min(a, b);
    case Family::OneSided: return a < 1 || b > inst.n || b < 1 || a > inst.m || t > std::min(a, inst.n - b + 1);
    }
    return false;
}

// Points in family order (the comparators put the first region first).
bool before(Family f, const Cell& x, const Cell& y)
{
    if (f == Family::Symmetric) return x.first != y.first ? x.first < y.first : x.second > y.second;
    return x < y;
}

// Is region j (later) or i (earlier) implied by the other? Returns 2 to drop
// j, 1 to drop i, 0 otherwise. Rules only apply to monotone pairs.
int redundancy(Family f, const Cell& pi, int ti, const Cell& pj, int tj)
{
    switch (f) {
    case Family::OneSided:
    case Family::Pfaffian: {
        if (pj.first < pi.first || pj.second < pi.second) return 0;
        const int row_gap = pj.first - pi.first, col_gap = pj.second - pi.second;
        if (f == Family::OneSided) {
            if (tj - ti >= row_gap) return 2;
            if (ti - tj >= col_gap) return 1;
        } else {
            if (tj - ti >= col_gap) return 2;
            if (ti - tj >= row_gap) return 1;
        }
        return 0;
    }
    case Family::Symmetric: {
        if (pj.first < pi.first || pj.second > pi.second) return 0;
        if (tj - ti >= pj.first - pi.first) return 2;
        if (ti - tj >= pi.second - pj.second) return 1;
        return 0;
    }
    case Family::MaxMinors: return 0;
    }
    return 0;
}

} // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::MaxMinors: return "maxminors";
    case Family::Pfaffian: return "pfaffian";
    case Family::Symmetric: return "symmetric";
    case Family::OneSided: return "onesided";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    if (s == "maxminors") return Family::MaxMinors;
    if (s == "pfaffian") return Family::Pfaffian;
    if (s == "symmetric") return Family::Symmetric;
    if (s == "onesided") return Family::OneSided;
    if (s == "twosided") throw OutOfScope("two-sided ladders are out of scope");
    throw std::invalid_argument("unknown family '" + s + "'");
}

LadderInstance LadderInstance::maxminors(int m, int n) { return {Family::MaxMinors, m, n, {}, {m}}; }

LadderInstance LadderInstance::pfaffian(int n, std::vector<Cell> corners, std::vector<int> t)
{
    return {Family::Pfaffian, n, n, std::move(corners), std::move(t)};
}

LadderInstance LadderInstance::symmetric(int n, std::vector<Cell> points, std::vector<int> t)
{
    return {Family::Symmetric, n, n, std::move(points), std::move(t)};
}

LadderInstance LadderInstance::onesided(int m, int n, std::vector<Cell> points, std::vector<int> t)
{
    return {Family::OneSided, m, n, std::move(points), std::move(t)};
}

MatrixShape LadderInstance::shape() const
{
    switch (family) {
    case Family::Pfaffian: return {MatrixShape::Kind::SkewSymmetric, n, n};
    case Family::Symmetric: return {MatrixShape::Kind::Symmetric, n, n};
    default: return {MatrixShape::Kind::Generic, m, n};
    }
}

std::string LadderInstance::key() const
{
    std::ostringstream os;
    os << lgb::to_string(family) << ' ';
    if (square_family(family)) os << "n=" << n;
    else os << m << 'x' << n;
    if (family == Family::MaxMinors) return os.str();
    os << " [";
    for (std::size_t k = 0; k < points.size(); ++k) os << (k ? "," : "") << cell_str(points[k]);
    os << "] t=(";
    for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
    os << ')';
    return os.str();
}

std::optional<Diagnostic> validate(const LadderInstance& inst)
{
    switch (inst.family) {
    case Family::MaxMinors:
        if (inst.m < 1 || inst.n < 1 || inst.m > 255 || inst.n > 255)
            return Diagnostic{"matrix size", "dimensions must lie in [1, 255]"};
        if (!inst.points.empty()) return Diagnostic{"maximal minors", "takes no points"};
        if (inst.t != std::vector<int>{inst.m}) return Diagnostic{"maximal minors", "t must equal (m)"};
        return std::nullopt;
    case Family::Pfaffian: return validate_pfaffian(inst);
    case Family::Symmetric: return validate_symmetric(inst);
    case Family::OneSided: return validate_onesided(inst);
    }
    return Diagnostic{"family", "unknown"};
}

void require_valid(const LadderInstance& inst)
{
    if (auto d = validate(inst)) throw InvalidLadder(*d);
}

CellSet cells(const LadderInstance& inst)
{
    CellSet out;
    if (inst.family == Family::MaxMinors) {
        for (int i = 1; i <= inst.m; ++i)
            for (int j = 1; j <= inst.n; ++j) out.emplace(i, j);
        return out;
    }
    for (const auto& p : inst.points) add_region(inst, p, out);
    return out;
}

std::vector<Var> ladder_variables(const LadderInstance& inst)
{
    std::vector<Var> vs;
    for (const auto& [i, j] : cells(inst)) {
        if (inst.family == Family::Pfaffian && i >= j) continue;
        vs.push_back(make_var(i, j));
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::size_t variable_count(const LadderInstance& inst) { return ladder_variables(inst).size(); }

LadderInstance normalize(const LadderInstance& inst, std::vector<std::string>* notes)
{
    if (inst.family == Family::MaxMinors) return inst;
    struct Region {
        Cell p;
        int t;
    };
    std::vector<Region> rs;
    for (std::size_t k = 0; k < inst.points.size() && k < inst.t.size(); ++k) {
        Cell p = inst.points[k];
        if (inst.family == Family::Symmetric && p.first > p.second) p.first = p.second;
        if (region_empty(inst, p, inst.t[k])) {
            if (notes) notes->push_back("dropped " + cell_str(inst.points[k]) + " (no generators of size " +
                                        std::to_string(inst.t[k]) + ")");
            continue;
        }
        rs.push_back({p, inst.t[k]});
    }
    std::stable_sort(rs.begin(), rs.end(),
                     [&](const Region& x, const Region& y) { return before(inst.family, x.p, y.p); });
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < rs.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < rs.size() && !changed; ++j) {
                int r = redundancy(inst.family, rs[i].p, rs[i].t, rs[j].p, rs[j].t);
                if (r == 0) continue;
                std::size_t drop = r == 2 ? j : i;
                if (notes)
                    notes->push_back("dropped " + cell_str(rs[drop].p) + " (implied by " +
                                     cell_str(rs[r == 2 ? i : j].p) + ")");
                rs.erase(rs.begin() + static_cast<std::ptrdiff_t>(drop));
                changed = true;
            }
    }
    LadderInstance out = inst;
    out.points.clear();
    out.t.clear();
    for (const auto& r : rs) {
        out.points.push_back(r.p);
        out.t.push_back(r.t);
    }
    return out;
}

CellSet tilde(const LadderInstance& inst)
{
    if (inst.family != Family::MaxMinors && inst.points.empty()) return {}; // zero ideal
    require_valid(inst);
    CellSet out;
    if (inst.family == Family::MaxMinors) {
        for (int j = inst.m; j <= inst.n; ++j) out.emplace(1, j);
        return out;
    }
    const LadderInstance norm = normalize(inst);
    for (std::size_t k = 0; k < norm.points.size(); ++k) {
        auto [a, b] = norm.points[k];
        const int s = norm.t[k] - 1;
        Cell shifted = inst.family == Family::Pfaffian    ? Cell{a + s, b - s}
                       : inst.family == Family::Symmetric ? Cell{a - s, b - s}
                                                          : Cell{a - s, b + s};
        if (shifted.first < 1 || shifted.second < 1 || shifted.second > inst.n)
            throw InvalidLadder(Diagnostic{"shift out of bounds", cell_str(norm.points[k])});
        add_region(norm, shifted, out);
    }
    return out;
}

int height_formula(const LadderInstance& inst)
{
    const CellSet T = tilde(inst);
    if (inst.family != Family::Pfaffian) return static_cast<int>(T.size());
    return static_cast<int>(std::count_if(T.begin(), T.end(), [](const Cell& c) { return c.first < c.second; }));
}

bool is_terminal(const LadderInstance& inst)
{
    if (inst.family == Family::MaxMinors) return inst.m <= 1 || inst.m > inst.n;
    const LadderInstance norm = normalize(inst);
    if (norm.points.empty()) return true;
    if (std::all_of(norm.t.begin(), norm.t.end(), [](int t) { return t == 1; })) return true;
    return variable_count(norm) <= 1;
}

std::optional<SplitResult> recursion_split(const LadderInstance& inst)
{
    if (inst.family != Family::MaxMinors && inst.points.empty()) return std::nullopt;
    require_valid(inst);
    if (is_terminal(inst)) return std::nullopt;
    if (inst.family == Family::MaxMinors) {
        SplitResult r{LadderInstance::maxminors(inst.m - 1, inst.n - 1), LadderInstance::maxminors(inst.m, inst.n - 1),
                      {inst.m, inst.n}, 0, {}, {}, {}};
        r.reduced_raw = r.reduced;
        r.middle_raw = r.middle;
        return r;
    }

    const LadderInstance L = normalize(inst);
    const std::size_t k = static_cast<std::size_t>(std::max_element(L.t.begin(), L.t.end()) - L.t.begin());
    auto [a, b] = L.points[k];
    const int t = L.t[k];

    std::vector<Cell> reduced_pts, middle_pts;
    std::vector<int> reduced_t, middle_t;
    for (std::size_t i = 0; i < L.points.size(); ++i) {
        if (i != k) {
            reduced_pts.push_back(L.points[i]);
            reduced_t.push_back(L.t[i]);
            middle_pts.push_back(L.points[i]);
            middle_t.push_back(L.t[i]);
            continue;
        }
        Cell lp, m1, m2;
        switch (L.family) {
        case Family::Pfaffian:
            lp = {a + 1, b - 1}, m1 = {a, b - 1}, m2 = {a + 1, b};
            break;
        case Family::Symmetric:
            lp = {a - 1, b - 1}, m1 = {a - 1, b}, m2 = {a, b - 1};
            break;
        default:
            lp = {a - 1, b + 1}, m1 = {a - 1, b}, m2 = {a, b + 1};
            break;
        }
        reduced_pts.push_back(lp);
        reduced_t.push_back(t - 1);
        middle_pts.push_back(m1);
        middle_t.push_back(t);
        middle_pts.push_back(m2);
        middle_t.push_back(t);
    }

    SplitResult r{L, L, {a, b}, k, {}, {}, {}};
    r.reduced.points = std::move(reduced_pts);
    r.reduced.t = std::move(reduced_t);
    r.middle.points = std::move(middle_pts);
    r.middle.t = std::move(middle_t);
    r.reduced_raw = r.reduced;
    r.middle_raw = r.middle;
    r.reduced = normalize(r.reduced, &r.notes);
    r.middle = normalize(r.middle, &r.notes);
    for (const auto* part : {&r.reduced, &r.middle}) {
        if (part->points.empty()) continue; // zero ideal
        if (auto d = validate(*part)) {
            d->condition = "split normalization failure (" + d->condition + ")";
            d->detail += " in " + part->key();
            throw InvalidLadder(*d);
        }
    }
    return r;
}

OrderKind default_order(Family f)
{
    return (f == Family::Pfaffian || f == Family::OneSided) ? OrderKind::AntiDiagonal : OrderKind::Diagonal;
}

} // namespace lgb
