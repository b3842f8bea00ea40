#include "lgb/term_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgb {

std::string to_string(OrderKind k)
{
    switch (k) {
    case OrderKind::Diagonal: return "diag";
    case OrderKind::AntiDiagonal: return "antidiag";
    case OrderKind::Custom: return "custom";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string& s)
{
    if (s == "diag" || s == "diagonal") return OrderKind::Diagonal;
    if (s == "antidiag" || s == "anti-diagonal" || s == "antidiagonal") return OrderKind::AntiDiagonal;
    throw std::invalid_argument("unknown term order '" + s + "' (expected diag|antidiag)");
}

TermOrder TermOrder::lex(std::vector<Var> largest_first, OrderKind kind, MatrixShape shape)
{
    auto rank = std::make_shared<std::vector<int>>(1 << 16, -1);
    const int n = static_cast<int>(largest_first.size());
    for (int k = 0; k < n; ++k) {
        auto& r = (*rank)[largest_first[k]];
        if (r >= 0) throw std::invalid_argument("TermOrder: repeated variable " + var_name(largest_first[k]));
        r = n - k;
    }
    TermOrder o;
    o.kind_ = kind;
    o.shape_ = shape;
    o.vars_ = std::move(largest_first);
    o.rank_ = std::move(rank);
    return o;
}

TermOrder TermOrder::diagonal(const MatrixShape& shape)
{
    return lex(shape.variables(), OrderKind::Diagonal, shape);
}

TermOrder TermOrder::antidiagonal(const MatrixShape& shape)
{
    std::vector<Var> vs;
    for (int i = 1; i <= shape.rows; ++i) {
        int first = 1;
        if (shape.kind == MatrixShape::Kind::Symmetric) first = i;
        if (shape.kind == MatrixShape::Kind::SkewSymmetric) first = i + 1;
        for (int j = shape.cols; j >= first; --j) vs.push_back(make_var(i, j));
    }
    return lex(std::move(vs), OrderKind::AntiDiagonal, shape);
}

TermOrder TermOrder::of_kind(OrderKind kind, const MatrixShape& shape)
{
    if (kind == OrderKind::Diagonal) return diagonal(shape);
    if (kind == OrderKind::AntiDiagonal) return antidiagonal(shape);
    throw std::invalid_argument("TermOrder::of_kind: custom orders need an explicit ranking");
}

TermOrder TermOrder::with_auxiliary(Var aux) const
{
    auto vs = vars_;
    vs.push_back(aux);
    return lex(std::move(vs), kind_, shape_);
}

int TermOrder::rank(Var v) const
{
    int r = (*rank_)[v];
    if (r < 0) throw std::out_of_range("TermOrder: unknown variable " + var_name(v));
    return r;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const
{
    const auto& x = a.entries();
    const auto& y = b.entries();
    const auto& rk = *rank_;
    int best = -1;
    std::strong_ordering result = std::strong_ordering::equal;
    auto consider = [&](Var v, std::uint32_t ea, std::uint32_t eb) {
        int r = rk[v];
        if (r < 0) throw std::out_of_range("TermOrder: unknown variable " + var_name(v));
        if (ea != eb && r > best) {
            best = r;
            result = ea <=> eb;
        }
    };
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            consider(x[i].first, x[i].second, 0);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            consider(y[j].first, 0, y[j].second);
            ++j;
        } else {
            consider(x[i].first, x[i].second, y[j].second);
            ++i;
            ++j;
        }
    }
    return result;
}

} // namespace lgb
