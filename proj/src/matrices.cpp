#include "edgetangent/matrices.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace edgetangent {

namespace {

Scalar power_of_two(unsigned exponent, Backend b) {
    return Scalar::of(2, b).pow(exponent);
}

Scalar signed_unit(int n, Backend b) {
    return Scalar::of(n % 2 == 0 ? 1 : -1, b);
}

}  // namespace

std::string_view to_string(StructuredMatrixKind kind) {
    switch (kind) {
        case StructuredMatrixKind::A: return "A";
        case StructuredMatrixKind::A1: return "A1";
        case StructuredMatrixKind::D: return "D";
        case StructuredMatrixKind::D1: return "D1";
        case StructuredMatrixKind::CayleyMenger: return "CayleyMenger";
    }
    throw std::logic_error("unknown matrix kind");
}

std::size_t structured_order(StructuredMatrixKind kind, int n) {
    const auto base = static_cast<std::size_t>(n) + 1;
    return (kind == StructuredMatrixKind::A || kind == StructuredMatrixKind::D) ? base : base + 1;
}

SquareMatrix build_A(const BalloonRadii& radii) {
    const std::size_t order = radii.size();
    const Scalar two = Scalar::of(2, radii.backend());
    std::vector<Scalar> a;
    a.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            Scalar v = two * radii[i] * radii[j];
            a.push_back(i == j ? -v : std::move(v));
        }
    }
    return SquareMatrix(order, std::move(a));
}

SquareMatrix build_bordered(const SquareMatrix& m) {
    const std::size_t order = m.order() + 1;
    const Scalar one = Scalar::of(1, m.backend());
    std::vector<Scalar> out;
    out.reserve(order * order);
    out.push_back(Scalar::of(0, m.backend()));
    for (std::size_t j = 1; j < order; ++j) out.push_back(one);
    for (std::size_t i = 1; i < order; ++i) {
        out.push_back(one);
        for (const Scalar& s : m.row(i - 1)) out.push_back(s);
    }
    return SquareMatrix(order, std::move(out));
}

SquareMatrix build_D(const BalloonRadii& radii) {
    return edges_from_radii(radii).squared();
}

SquareMatrix build_cayley_menger(const EdgeLengthMatrix& edges) {
    return build_bordered(edges.squared());
}

SquareMatrix build_structured(StructuredMatrixKind kind, const BalloonRadii& radii) {
    switch (kind) {
        case StructuredMatrixKind::A: return build_A(radii);
        case StructuredMatrixKind::A1: return build_bordered(build_A(radii));
        case StructuredMatrixKind::D: return build_D(radii);
        case StructuredMatrixKind::D1: return build_bordered(build_D(radii));
        case StructuredMatrixKind::CayleyMenger: return build_cayley_menger(edges_from_radii(radii));
    }
    throw std::logic_error("unknown matrix kind");
}

Scalar product_sq(const BalloonRadii& radii) {
    Scalar prod = Scalar::of(1, radii.backend());
    for (const Scalar& x : radii.values()) prod *= x;
    return prod * prod;
}

Scalar det_A_closed(const BalloonRadii& radii) {
    const int n = radii.dimension();
    const Backend b = radii.backend();
    return signed_unit(n, b) * Scalar::of(n - 1, b) * power_of_two(static_cast<unsigned>(2 * n + 1), b) *
           product_sq(radii);
}

SquareMatrix inverse_A_closed(const BalloonRadii& radii) {
    const int n = radii.dimension();
    const Backend b = radii.backend();
    const std::size_t order = radii.size();
    const Scalar denom = Scalar::of(4 * n - 4, b);
    const Scalar diag_coeff = Scalar::of(2 - n, b);
    const Scalar one = Scalar::of(1, b);
    std::vector<Scalar> inv;
    inv.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            const Scalar coeff = i == j ? diag_coeff : one;
            inv.push_back(coeff / (denom * radii[i] * radii[j]));
        }
    }
    return SquareMatrix(order, std::move(inv));
}

Scalar det_D_closed(const BalloonRadii& radii, const SymmetricSums& s) {
    const int n = radii.dimension();
    const Backend b = radii.backend();
    // 2^(2n-3)/(n-1); n >= 2 keeps the exponent non-negative.
    const Scalar lead = signed_unit(n, b) * power_of_two(static_cast<unsigned>(2 * n - 3), b) / Scalar::of(n - 1, b);
    return lead * product_sq(radii) * (s.X1 * s.X1 - s.X2 * s.X3);
}

Scalar det_D_closed(const BalloonRadii& radii) {
    return det_D_closed(radii, symmetric_sums(radii));
}

}  // namespace edgetangent
