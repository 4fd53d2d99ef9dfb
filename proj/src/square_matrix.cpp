#include "edgetangent/square_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "edgetangent/errors.hpp"

namespace edgetangent {

namespace {

Scalar bareiss_determinant(const SquareMatrix& m, DeterminantStats* stats) {
    const std::size_t n = m.order();

    // Scale each row by the lcm of its denominators; det(m) = det(scaled) / prod(lcm).
    std::vector<mpz_class> a(n * n);
    mpz_class row_scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (const Scalar& s : m.row(i)) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.rational().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(i, j).rational();
            a[i * n + j] = q.get_num() * (lcm / q.get_den());
        }
        row_scale_product *= lcm;
    }

    std::size_t max_bits = 0;
    auto track = [&](const mpz_class& z) { max_bits = std::max(max_bits, mpz_sizeinbase(z.get_mpz_t(), 2)); };
    std::for_each(a.begin(), a.end(), track);

    int sign = 1;
    mpz_class previous_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) {
                if (stats) stats->max_bits = max_bits;
                return Scalar::exact(0);
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            sign = -sign;
        }
        const mpz_class& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class& target = a[i * n + j];
                target = target * pivot - a[i * n + k] * a[k * n + j];
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous_pivot.get_mpz_t());
                track(target);
            }
            a[i * n + k] = 0;
        }
        previous_pivot = pivot;
    }
    if (stats) stats->max_bits = max_bits;

    mpq_class det(a[n * n - 1] * sign, row_scale_product);
    det.canonicalize();
    return Scalar::exact(std::move(det));
}

Scalar lu_determinant(const SquareMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.entries()[i].to_double();

    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::fabs(a[i * n + k]) > std::fabs(a[pivot_row * n + k])) pivot_row = i;
        }
        if (a[pivot_row * n + k] == 0.0) {
            return Scalar::floating(0.0);
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot_row * n + j]);
            det = -det;
        }
        const double pivot = a[k * n + k];
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = a[i * n + k] / pivot;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
        }
    }
    return Scalar::floating(det);
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t order, std::vector<Scalar> entries)
    : order_(order), backend_(Backend::exact), entries_(std::move(entries)) {
    if (order_ == 0) {
        throw OrderMismatch("matrix order must be positive");
    }
    if (entries_.size() != order_ * order_) {
        throw OrderMismatch("matrix of order " + std::to_string(order_) + " needs " +
                            std::to_string(order_ * order_) + " entries, got " + std::to_string(entries_.size()));
    }
    backend_ = entries_.front().backend();
    for (const Scalar& s : entries_) {
        if (s.backend() != backend_) {
            throw BackendMismatch("matrix entries mix exact and float backends");
        }
    }
}

SquareMatrix SquareMatrix::identity(std::size_t order, Backend backend) {
    std::vector<Scalar> entries(order * order, Scalar::of(0, backend));
    for (std::size_t i = 0; i < order; ++i) entries[i * order + i] = Scalar::of(1, backend);
    return SquareMatrix(order, std::move(entries));
}

SquareMatrix SquareMatrix::zeros(std::size_t order, Backend backend) {
    return SquareMatrix(order, std::vector<Scalar>(order * order, Scalar::of(0, backend)));
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.size()) {
            throw OrderMismatch("rows of a square matrix must all have length " + std::to_string(rows.size()));
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return SquareMatrix(rows.size(), std::move(entries));
}

SquareMatrix SquareMatrix::from_integers(const std::vector<std::vector<long>>& rows, Backend backend) {
    std::vector<std::vector<Scalar>> scalars;
    for (const auto& r : rows) {
        auto& out = scalars.emplace_back();
        for (long v : r) out.push_back(Scalar::of(v, backend));
    }
    return from_rows(scalars);
}

SquareMatrix SquareMatrix::to_backend(Backend backend) const {
    std::vector<Scalar> converted;
    converted.reserve(entries_.size());
    for (const Scalar& s : entries_) converted.push_back(s.to_backend(backend));
    return SquareMatrix(order_, std::move(converted));
}

bool operator==(const SquareMatrix& lhs, const SquareMatrix& rhs) {
    return lhs.order_ == rhs.order_ && lhs.backend_ == rhs.backend_ && lhs.entries_ == rhs.entries_;
}

Scalar determinant(const SquareMatrix& m, DeterminantStats* stats) {
    if (m.backend() == Backend::exact) {
        return bareiss_determinant(m, stats);
    }
    if (stats) stats->max_bits = 53;
    return lu_determinant(m);
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("mat_mul order mismatch: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
    if (a.backend() != b.backend()) {
        throw BackendMismatch("mat_mul backend mismatch");
    }
    const std::size_t n = a.order();
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar sum = Scalar::of(0, a.backend());
            for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
            out.push_back(std::move(sum));
        }
    }
    return SquareMatrix(n, std::move(out));
}

}  // namespace edgetangent
