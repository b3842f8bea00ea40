#include "lgb/matrix_vars.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace lgb {

namespace {

void check_indices(const MatrixShape& shape, const std::vector<int>& idx, bool rows, const char* what)
{
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const int bound = rows ? shape.rows : shape.cols;
        if (idx[k] < 1 || idx[k] > bound) throw std::out_of_range(std::string(what) + ": index out of bounds");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing");
    }
}

std::vector<int> without(const std::vector<int>& v, std::size_t pos)
{
    std::vector<int> out;
    out.reserve(v.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != pos) out.push_back(v[k]);
    return out;
}

class MinorExpander {
public:
    explicit MinorExpander(const MatrixShape& shape) : shape_(shape) {}

    const Polynomial<Rational>& det(const std::vector<int>& rows, const std::vector<int>& cols)
    {
        auto key = std::make_pair(rows, cols);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Polynomial<Rational> r;
        if (rows.empty()) {
            r = Polynomial<Rational>(Monomial{}, Rational(1));
        } else {
            const auto sub_rows = without(rows, 0);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto e = entry(shape_, rows[0], cols[c]);
                if (e.is_zero()) continue;
                int sign = e.sign * (c % 2 == 0 ? 1 : -1);
                const auto& cof = det(sub_rows, without(cols, c));
                r += cof.scaled(Rational(sign), Monomial(e.var));
            }
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

private:
    const MatrixShape& shape_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial<Rational>> memo_;
};

class PfaffianExpander {
public:
    explicit PfaffianExpander(const MatrixShape& shape) : shape_(shape) {}

    const Polynomial<Rational>& pf(const std::vector<int>& idx)
    {
        if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
        Polynomial<Rational> r;
        if (idx.empty()) {
            r = Polynomial<Rational>(Monomial{}, Rational(1));
        } else {
            // positions are 0-based here, so (-1)^j with j 1-based becomes (-1)^(p+1)
            for (std::size_t p = 1; p < idx.size(); ++p) {
                auto e = entry(shape_, idx[0], idx[p]);
                auto rest = without(without(idx, p), 0);
                int sign = e.sign * (p % 2 == 1 ? 1 : -1);
                r += pf(rest).scaled(Rational(sign), Monomial(e.var));
            }
        }
        return memo_.emplace(idx, std::move(r)).first->second;
    }

private:
    const MatrixShape& shape_;
    std::map<std::vector<int>, Polynomial<Rational>> memo_;
};

} // namespace

Polynomial<Rational> MatrixEntry::to_polynomial() const
{
    if (sign == 0) return {};
    return Polynomial<Rational>(Monomial(var), Rational(sign));
}

MatrixEntry entry(const MatrixShape& shape, int i, int j)
{
    if (!shape.in_bounds(i, j))
        throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                                shape.to_string());
    MatrixEntry e{i, j, 1, 0};
    switch (shape.kind) {
    case MatrixShape::Kind::Generic:
        e.var = make_var(i, j);
        break;
    case MatrixShape::Kind::Symmetric:
        e.var = make_var(std::min(i, j), std::max(i, j));
        break;
    case MatrixShape::Kind::SkewSymmetric:
        if (i == j) {
            e.sign = 0;
        } else {
            e.var = make_var(std::min(i, j), std::max(i, j));
            e.sign = i < j ? 1 : -1;
        }
        break;
    }
    return e;
}

Polynomial<Rational> minor(const MatrixShape& shape, const std::vector<int>& rows, const std::vector<int>& cols)
{
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("minor: need equally many rows and columns, at least one");
    check_indices(shape, rows, true, "minor");
    check_indices(shape, cols, false, "minor");
    MinorExpander ex(shape);
    return ex.det(rows, cols);
}

Polynomial<Rational> pfaffian(const MatrixShape& shape, const std::vector<int>& indices)
{
    if (shape.kind != MatrixShape::Kind::SkewSymmetric)
        throw std::invalid_argument("pfaffian: requires a skew-symmetric shape");
    if (indices.empty() || indices.size() % 2 != 0)
        throw std::invalid_argument("pfaffian: needs a nonempty even number of indices");
    check_indices(shape, indices, true, "pfaffian");
    PfaffianExpander ex(shape);
    return ex.pf(indices);
}

} // namespace lgb
