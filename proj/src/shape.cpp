#include "lgb/shape.hpp"

#include <stdexcept>

namespace lgb {

namespace {
constexpr int kMaxDim = 255;

void check_dim(int n, const char* what)
{
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument(std::string(what) + ": dimension must lie in [1, 255]");
}
} // namespace

MatrixShape MatrixShape::generic(int m, int n)
{
    check_dim(m, "generic shape");
    check_dim(n, "generic shape");
    if (m > n) throw std::invalid_argument("generic shape: requires m <= n");
    return {Kind::Generic, m, n};
}

MatrixShape MatrixShape::symmetric(int n)
{
    check_dim(n, "symmetric shape");
    return {Kind::Symmetric, n, n};
}

MatrixShape MatrixShape::skew(int n)
{
    check_dim(n, "skew-symmetric shape");
    return {Kind::SkewSymmetric, n, n};
}

std::vector<Var> MatrixShape::variables() const
{
    std::vector<Var> vs;
    for (int i = 1; i <= rows; ++i) {
        int first = 1;
        if (kind == Kind::Symmetric) first = i;
        if (kind == Kind::SkewSymmetric) first = i + 1;
        for (int j = first; j <= cols; ++j) vs.push_back(make_var(i, j));
    }
    return vs;
}

std::string MatrixShape::to_string() const
{
    switch (kind) {
    case Kind::Generic: return "generic " + std::to_string(rows) + "x" + std::to_string(cols);
    case Kind::Symmetric: return "symmetric " + std::to_string(rows);
    case Kind::SkewSymmetric: return "skew " + std::to_string(rows);
    }
    return "?";
}

} // namespace lgb
