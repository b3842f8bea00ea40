#pragma once

#include <vector>

#include "lgb/field.hpp"
#include "lgb/polynomial.hpp"
#include "lgb/shape.hpp"

namespace lgb {

/// Position (i,j) of a matrix resolved to its stored variable.
struct MatrixEntry {
    int row = 0;
    int col = 0;
    /// +1, -1, or 0 for the skew-symmetric diagonal.
    int sign = 0;
    /// Stored representative; meaningless when sign == 0.
    Var var = 0;

    bool is_zero() const { return sign == 0; }
    Polynomial<Rational> to_polynomial() const;
};

/// Resolves (i,j): symmetric shapes store i <= j, skew shapes i < j with
/// x_ji = -x_ij and x_ii = 0. Throws std::out_of_range outside the shape.
MatrixEntry entry(const MatrixShape& shape, int i, int j);

/// Determinant of the submatrix on `rows` x `cols` by memoized cofactor
/// expansion along the first row.
Polynomial<Rational> minor(const MatrixShape& shape, const std::vector<int>& rows, const std::vector<int>& cols);

/// Pfaffian of the principal skew submatrix on `indices`, expanded along
/// the first index; pf(i,j) = x_ij.
Polynomial<Rational> pfaffian(const MatrixShape& shape, const std::vector<int>& indices);

} // namespace lgb
