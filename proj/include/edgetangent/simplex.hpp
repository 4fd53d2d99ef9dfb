#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgetangent/scalar.hpp"
#include "edgetangent/square_matrix.hpp"

namespace edgetangent {

/*
 * Balloon radii x_0..x_n of a circumscriptible n-simplex: positive numbers
 * with a_ij = x_i + x_j. The dimension is n = x.size() - 1 and must be >= 2
 * (the closed formulas divide by n - 1).
 */
class BalloonRadii {
public:
    /// Throws InvalidRadii on n < 2, a non-positive radius or mixed backends.
    explicit BalloonRadii(std::vector<Scalar> x);

    int dimension() const noexcept { return static_cast<int>(x_.size()) - 1; }
    std::size_t size() const noexcept { return x_.size(); }
    Backend backend() const noexcept { return x_.front().backend(); }

    std::span<const Scalar> values() const noexcept { return x_; }
    const Scalar& operator[](std::size_t i) const { return x_[i]; }

    BalloonRadii to_backend(Backend backend) const;

    friend bool operator==(const BalloonRadii&, const BalloonRadii&) = default;

private:
    std::vector<Scalar> x_;
};

/// Symmetric (n+1)x(n+1) matrix of edge lengths with zero diagonal and
/// positive off-diagonal entries. n >= 1 so that facets of triangles fit.
class EdgeLengthMatrix {
public:
    /// Throws InvalidEdges when symmetry, the zero diagonal or positivity fail.
    /// Float symmetry is checked bit-for-bit.
    explicit EdgeLengthMatrix(SquareMatrix a);

    int dimension() const noexcept { return static_cast<int>(a_.order()) - 1; }
    Backend backend() const noexcept { return a_.backend(); }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
    const SquareMatrix& matrix() const noexcept { return a_; }

    /// Entry-wise squares a_ij^2.
    SquareMatrix squared() const;

    /// Edge matrix of the facet opposite vertex `omitted`.
    EdgeLengthMatrix facet(std::size_t omitted) const;

    EdgeLengthMatrix to_backend(Backend backend) const;

private:
    SquareMatrix a_;
};

/// M, N, P, Q are the power sums of x and 1/x; X1..X3 are the combinations
/// the circumradius and edge-inradius formulas are written in.
struct SymmetricSums {
    int n = 0;
    Scalar M;   // sum x_i
    Scalar N;   // sum x_i^2
    Scalar P;   // sum 1/x_i
    Scalar Q;   // sum 1/x_i^2
    Scalar X1;  // M P - (n-1)(n-3)
    Scalar X2;  // P^2 - (n-1) Q
    Scalar X3;  // M^2 - (n-1) N
};

/// a_ij = x_i + x_j.
EdgeLengthMatrix edges_from_radii(const BalloonRadii& radii);

/// Recovers x_i = (n * sum_{j != i} a_ij - sum_{i<j} a_ij) / (n (n-1)) and
/// checks that it reproduces every edge (exactly, or within `tol` for
/// floats) and that every x_i > 0. Throws NotCircumscriptible naming the
/// first mismatched edge or the first non-positive radius.
BalloonRadii radii_from_edges(const EdgeLengthMatrix& edges, const Tolerance& tol = {});

SymmetricSums symmetric_sums(const BalloonRadii& radii);

struct Realizability {
    bool realizable = false;
    Scalar margin;  // P^2 - (n-1) Q
};

/// Strict sign test on the margin; a zero margin is not realizable.
Realizability is_realizable(const BalloonRadii& radii);
Realizability is_realizable(const SymmetricSums& sums);

}  // namespace edgetangent
