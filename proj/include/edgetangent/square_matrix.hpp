#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgetangent/scalar.hpp"

namespace edgetangent {

/// Dense square matrix of Scalars, row-major, all entries in one backend.
class SquareMatrix {
public:
    /// Throws OrderMismatch if entries.size() != order*order (or order == 0),
    /// BackendMismatch if the entries mix backends.
    SquareMatrix(std::size_t order, std::vector<Scalar> entries);

    static SquareMatrix identity(std::size_t order, Backend backend);
    static SquareMatrix zeros(std::size_t order, Backend backend);
    static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Exact integer matrix, mostly for tests and small fixtures.
    static SquareMatrix from_integers(const std::vector<std::vector<long>>& rows,
                                      Backend backend = Backend::exact);

    std::size_t order() const noexcept { return order_; }
    Backend backend() const noexcept { return backend_; }

    const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }
    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * order_, order_}; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    SquareMatrix to_backend(Backend backend) const;

    /// Structural (exact) equality.
    friend bool operator==(const SquareMatrix& lhs, const SquareMatrix& rhs);

private:
    std::size_t order_;
    Backend backend_;
    std::vector<Scalar> entries_;
};

/// Diagnostics collected while computing a determinant.
struct DeterminantStats {
    /// Largest bit length of any integer met during fraction-free elimination
    /// (exact backend); 53 for the floating backend.
    std::size_t max_bits = 0;
};

/// Exact backend: fraction-free (Bareiss) elimination after clearing row
/// denominators, so every division is an exact integer division.
/// Floating backend: LU with partial pivoting.
Scalar determinant(const SquareMatrix& m, DeterminantStats* stats = nullptr);

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace edgetangent
