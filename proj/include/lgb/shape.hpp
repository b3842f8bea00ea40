#pragma once

#include <string>
#include <vector>

#include "lgb/monomial.hpp"

namespace lgb {

/// The matrix of indeterminates an instance lives in.
struct MatrixShape {
    enum class Kind { Generic, Symmetric, SkewSymmetric };

    Kind kind = Kind::Generic;
    int rows = 0;
    int cols = 0;

    /// m x n generic matrix, m <= n.
    static MatrixShape generic(int m, int n);
    static MatrixShape symmetric(int n);
    static MatrixShape skew(int n);

    bool in_bounds(int i, int j) const { return i >= 1 && j >= 1 && i <= rows && j <= cols; }
    /// Variables of K[X] in row-major order: all (i,j) for generic shapes,
    /// i <= j for symmetric and i < j for skew-symmetric shapes.
    std::vector<Var> variables() const;
    std::string to_string() const;

    friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

} // namespace lgb
