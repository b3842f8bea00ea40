#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "lgb/monomial.hpp"
#include "lgb/shape.hpp"

namespace lgb {

enum class OrderKind { Diagonal, AntiDiagonal, Custom };

std::string to_string(OrderKind k);
OrderKind parse_order_kind(const std::string& s);

/// Lexicographic term order given by a ranking of the variables.
///
/// diagonal():     row-major, left to right, top row largest.
/// antidiagonal(): row-major with the columns of each row reversed.
/// Both realize their kind for every square submatrix (tested, not assumed).
class TermOrder {
public:
    static TermOrder diagonal(const MatrixShape& shape);
    static TermOrder antidiagonal(const MatrixShape& shape);
    static TermOrder of_kind(OrderKind kind, const MatrixShape& shape);
    /// Lex order with `largest_first[0]` the largest variable.
    static TermOrder lex(std::vector<Var> largest_first, OrderKind kind = OrderKind::Custom,
                         MatrixShape shape = {});

    /// Same order extended by a variable smaller than all others.
    TermOrder with_auxiliary(Var aux) const;

    OrderKind kind() const { return kind_; }
    const MatrixShape& shape() const { return shape_; }
    /// Variables, largest first.
    const std::vector<Var>& variables() const { return vars_; }
    bool knows(Var v) const { return (*rank_)[v] >= 0; }
    /// Larger rank = larger variable. Throws std::out_of_range for unknown ids.
    int rank(Var v) const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    TermOrder() = default;

    OrderKind kind_ = OrderKind::Custom;
    MatrixShape shape_;
    std::vector<Var> vars_;
    std::shared_ptr<const std::vector<int>> rank_;
};

/// compare() as a free function.
inline std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b)
{
    return order.compare(a, b);
}

/// Strict weak ordering that sorts monomials in decreasing term order.
struct DescendingBy {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

} // namespace lgb
