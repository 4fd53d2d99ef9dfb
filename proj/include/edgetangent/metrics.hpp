#pragma once

#include <optional>
#include <string_view>

#include "edgetangent/scalar.hpp"
#include "edgetangent/simplex.hpp"

namespace edgetangent {

// Closed-form routes (from the symmetric sums of the balloon radii).

/// rho^2 = 2(n-1) / X2. Throws NotRealizable when X2 <= 0.
Scalar edge_inradius_sq_closed(const SymmetricSums& sums);

/// R^2 = (X1^2 - X2 X3) / (8 (n-1) X2). Throws NotRealizable when X2 <= 0.
Scalar circumradius_sq_closed(const SymmetricSums& sums);

/// (R/rho)^2 = (X1^2 - X2 X3) / (16 (n-1)^2).
Scalar ratio_R_rho_sq(const SymmetricSums& sums);

/// V^2 = 2^n (n-1) (prod x_i)^2 / ((n!)^2 rho^2).
Scalar volume_sq_from_radii(const BalloonRadii& radii, const Scalar& rho_sq);

// Determinant-quotient routes.

/// rho^2 = -|A| / (2 |A1|). Throws DegenerateBorder when |A1| = 0.
Scalar edge_inradius_sq_det(const BalloonRadii& radii);

/// R^2 = -|D| / (2 |D1|). Throws DegenerateBorder when |D1| = 0.
Scalar circumradius_sq_det(const BalloonRadii& radii);

// Edge-length routes; these need no balloon radii.

/// V^2 = (-1)^(n+1) |CM| / (2^n (n!)^2). Zero for flat configurations,
/// negative when the edge set is not realizable.
Scalar volume_sq_cm(const EdgeLengthMatrix& edges);

/// R^2 = (-1)^n |a_ij^2| / (2^(n+1) (n!)^2 V^2). Throws DegenerateSimplex when V^2 <= 0.
Scalar circumradius_sq_vol(const EdgeLengthMatrix& edges);

/// r = n V / sum_i F_i with F_i the (n-1)-volume of facet i. Always returns a
/// floating scalar; determinants are evaluated in the edges' backend first.
Scalar inradius(const EdgeLengthMatrix& edges);

/// |OG|^2 = R^2 - sum_{i<j} a_ij^2 / (n+1)^2. A negative result throws
/// NegativeOG (beyond `tol` for floats; small float negatives clamp to 0).
Scalar og_distance_sq(const Scalar& R_sq, const EdgeLengthMatrix& edges, const Tolerance& tol = {});

/// True when V^2 is zero (exact) or, for floats, at most tol.absolute times its
/// Hadamard bound min_i prod_{j != i} a_ij^2 / (n!)^2.
bool volume_is_degenerate(const Scalar& V_sq, const EdgeLengthMatrix& edges, const Tolerance& tol = {});

enum class Route { closed, determinant, both_agree, disagree };

std::string_view to_string(Route route);

/// One metric computed along up to three independent routes. `closed` is
/// always present and is the reported value.
struct RoutedValue {
    Scalar closed;
    std::optional<Scalar> determinant;
    std::optional<Scalar> volume;
    Route route = Route::closed;
    /// Largest relative disagreement between the available routes.
    double delta = 0.0;

    const Scalar& value() const noexcept { return closed; }
};

struct SimplexMetrics {
    int n = 0;
    Backend backend = Backend::exact;
    RoutedValue rho_sq;
    RoutedValue R_sq;
    RoutedValue V_sq;
    RoutedValue og_sq;
    Scalar ratio_R_rho_sq;
    std::optional<Scalar> inradius;  // floating backend

    bool routes_agree() const noexcept;
    double max_route_delta() const noexcept;
};

struct MetricsOptions {
    bool determinant_routes = true;
    bool with_inradius = true;
    Tolerance tolerance;
};

/// Every metric of the simplex with balloon radii `radii`. Throws
/// NotRealizable when P^2 - (n-1) Q <= 0.
SimplexMetrics compute_metrics(const BalloonRadii& radii, const MetricsOptions& options = {});

}  // namespace edgetangent
