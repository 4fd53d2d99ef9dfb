#pragma once

#include <cstddef>
#include <string_view>

#include "edgetangent/scalar.hpp"
#include "edgetangent/simplex.hpp"
#include "edgetangent/square_matrix.hpp"

namespace edgetangent {

/// The structured matrices whose determinants give the edge-inradius,
/// circumradius and volume. Bordered kinds put the 0/1 border at row and
/// column 0.
enum class StructuredMatrixKind { A, A1, D, D1, CayleyMenger };

std::string_view to_string(StructuredMatrixKind kind);

/// A and D have order n+1; A1, D1 and the Cayley-Menger matrix have order n+2.
std::size_t structured_order(StructuredMatrixKind kind, int n);

/// A(i,i) = -2 x_i^2, A(i,j) = 2 x_i x_j.
SquareMatrix build_A(const BalloonRadii& radii);

/// [[0, 1 ... 1], [1, m], ..., [1, m]]: order grows by one.
SquareMatrix build_bordered(const SquareMatrix& m);

/// D(i,j) = (x_i + x_j)^2 off the diagonal, 0 on it.
SquareMatrix build_D(const BalloonRadii& radii);

/// Bordered matrix of squared edge lengths.
SquareMatrix build_cayley_menger(const EdgeLengthMatrix& edges);

/// Any of the kinds above for a circumscriptible simplex.
SquareMatrix build_structured(StructuredMatrixKind kind, const BalloonRadii& radii);

/// |A| = (-1)^n (n-1) 2^(2n+1) (prod x_i)^2.
Scalar det_A_closed(const BalloonRadii& radii);

/// A^{-1}(i,i) = (2-n) / ((4n-4) x_i^2), A^{-1}(i,j) = 1 / ((4n-4) x_i x_j).
SquareMatrix inverse_A_closed(const BalloonRadii& radii);

/// |D| = (-1)^n 2^(2n-3)/(n-1) (prod x_i)^2 (X1^2 - X2 X3).
Scalar det_D_closed(const BalloonRadii& radii);
Scalar det_D_closed(const BalloonRadii& radii, const SymmetricSums& sums);

/// (prod x_i)^2, shared by the closed determinant and volume formulas.
Scalar product_sq(const BalloonRadii& radii);

}  // namespace edgetangent
