#include "edgetangent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "edgetangent/errors.hpp"
#include "edgetangent/matrices.hpp"
#include "edgetangent/square_matrix.hpp"

namespace edgetangent {

namespace {

Scalar factorial_sq(int n, Backend b) {
    Scalar f = Scalar::of(1, b);
    for (int k = 2; k <= n; ++k) f *= Scalar::of(k, b);
    return f * f;
}

Scalar pow2(int exponent, Backend b) {
    return Scalar::of(2, b).pow(static_cast<unsigned>(exponent));
}

void require_realizable(const SymmetricSums& s) {
    if (s.X2.sign() <= 0) {
        throw NotRealizable("P^2 - (n-1)Q = " + s.X2.to_string() + " is not positive; no non-degenerate simplex",
                            s.X2.to_string());
    }
}

Scalar bordered_quotient(const SquareMatrix& inner, const char* name) {
    const Scalar inner_det = determinant(inner);
    const Scalar border_det = determinant(build_bordered(inner));
    if (border_det.is_zero()) {
        throw DegenerateBorder(std::string("bordered determinant of ") + name + " vanishes");
    }
    return -inner_det / (Scalar::of(2, inner.backend()) * border_det);
}

Scalar sum_sq_edges(const EdgeLengthMatrix& edges) {
    const auto order = static_cast<std::size_t>(edges.dimension()) + 1;
    Scalar sum = Scalar::of(0, edges.backend());
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) sum += edges(i, j) * edges(i, j);
    }
    return sum;
}

bool agree(const Scalar& a, const Scalar& b, double scale, const Tolerance& tol) {
    if (a.is_exact()) return a == b;
    const double bound = std::max(tol.absolute, tol.relative * scale);
    return std::fabs(a.to_double() - b.to_double()) <= bound;
}

// `scale` is the magnitude disagreements are measured against.
void settle_routes(RoutedValue& v, double scale, const Tolerance& tol) {
    bool all_agree = true;
    bool any_other = false;
    for (const auto* other : {&v.determinant, &v.volume}) {
        if (!other->has_value()) continue;
        any_other = true;
        if (!agree(v.closed, **other, scale, tol)) all_agree = false;
        double d = v.closed.is_exact() ? relative_difference(v.closed, **other)
                                       : std::fabs(v.closed.to_double() - (*other)->to_double()) /
                                             std::max(scale, tol.absolute);
        v.delta = std::max(v.delta, d);
    }
    if (!any_other) {
        v.route = Route::closed;
    } else {
        v.route = all_agree ? Route::both_agree : Route::disagree;
    }
}

}  // namespace

Scalar edge_inradius_sq_closed(const SymmetricSums& s) {
    require_realizable(s);
    return Scalar::of(2 * (s.n - 1), s.X2.backend()) / s.X2;
}

Scalar circumradius_sq_closed(const SymmetricSums& s) {
    require_realizable(s);
    const Backend b = s.X2.backend();
    return (s.X1 * s.X1 - s.X2 * s.X3) / (Scalar::of(8 * (s.n - 1), b) * s.X2);
}

Scalar ratio_R_rho_sq(const SymmetricSums& s) {
    const long nm1 = s.n - 1;
    return (s.X1 * s.X1 - s.X2 * s.X3) / Scalar::of(16 * nm1 * nm1, s.X1.backend());
}

Scalar volume_sq_from_radii(const BalloonRadii& radii, const Scalar& rho_sq) {
    const int n = radii.dimension();
    const Backend b = radii.backend();
    if (rho_sq.sign() <= 0) {
        throw DomainError("volume from balloon radii needs rho^2 > 0, got " + rho_sq.to_string());
    }
    return pow2(n, b) * Scalar::of(n - 1, b) * product_sq(radii) / (factorial_sq(n, b) * rho_sq);
}

Scalar edge_inradius_sq_det(const BalloonRadii& radii) {
    return bordered_quotient(build_A(radii), "A");
}

Scalar circumradius_sq_det(const BalloonRadii& radii) {
    return bordered_quotient(build_D(radii), "D");
}

// With CM the bordered squared-distance matrix (D1 for balloon radii),
//   (n!)^2 V^2 R^2 = (-1)^n |D| / 2^(n+1)   and   R^2 = -|D| / (2 |CM|).
// Dividing the first by the second eliminates |D| and R:
//   (n!)^2 V^2 = (-1)^(n+1) |CM| / 2^n.
Scalar volume_sq_cm(const EdgeLengthMatrix& edges) {
    const int n = edges.dimension();
    const Backend b = edges.backend();
    const Scalar cm = determinant(build_bordered(edges.squared()));
    const Scalar sign = Scalar::of(n % 2 == 0 ? -1 : 1, b);
    return sign * cm / (pow2(n, b) * factorial_sq(n, b));
}

Scalar circumradius_sq_vol(const EdgeLengthMatrix& edges) {
    const int n = edges.dimension();
    const Backend b = edges.backend();
    const Scalar V_sq = volume_sq_cm(edges);
    if (volume_is_degenerate(V_sq, edges)) {
        throw DegenerateSimplex("squared volume " + V_sq.to_string() + " is not positive");
    }
    const Scalar sign = Scalar::of(n % 2 == 0 ? 1 : -1, b);
    const Scalar d = determinant(edges.squared());
    return sign * d / (pow2(n + 1, b) * factorial_sq(n, b) * V_sq);
}

bool volume_is_degenerate(const Scalar& V_sq, const EdgeLengthMatrix& edges, const Tolerance& tol) {
    if (V_sq.is_exact()) {
        return V_sq.sign() <= 0;
    }
    // Hadamard: (n!)^2 V^2 = det(Gram at vertex i) <= prod_{j != i} a_ij^2 for
    // every anchor i. The smallest bound makes V^2 / scale a thinness
    // measure in (0, 1].
    const int n = edges.dimension();
    const auto order = static_cast<std::size_t>(n) + 1;
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < order; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < order; ++j) {
            if (j != i) prod *= edges(i, j).to_double() * edges(i, j).to_double();
        }
        bound = std::min(bound, prod);
    }
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double scale = bound / (fact * fact);
    return V_sq.to_double() <= tol.absolute * scale;
}

Scalar inradius(const EdgeLengthMatrix& edges) {
    const int n = edges.dimension();
    if (n < 2) {
        throw InvalidEdges("inradius needs n >= 2");
    }
    const Scalar V_sq = volume_sq_cm(edges);
    if (volume_is_degenerate(V_sq, edges)) {
        throw DegenerateSimplex("squared volume " + V_sq.to_string() + " is not positive");
    }
    double facet_sum = 0.0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        const EdgeLengthMatrix facet = edges.facet(i);
        const Scalar F_sq = volume_sq_cm(facet);
        if (volume_is_degenerate(F_sq, facet)) {
            throw DegenerateSimplex("facet " + std::to_string(i) + " has non-positive squared volume " +
                                    F_sq.to_string());
        }
        facet_sum += std::sqrt(F_sq.to_double());
    }
    return Scalar::floating(n * std::sqrt(V_sq.to_double()) / facet_sum);
}

Scalar og_distance_sq(const Scalar& R_sq, const EdgeLengthMatrix& edges, const Tolerance& tol) {
    const Backend b = edges.backend();
    const auto np1 = static_cast<long>(edges.dimension()) + 1;
    const Scalar spread = sum_sq_edges(edges) / Scalar::of(np1 * np1, b);
    Scalar og = R_sq - spread;
    if (og.sign() >= 0) {
        return og;
    }
    if (!og.is_exact()) {
        const double bound =
            std::max(tol.absolute, tol.relative * std::max(std::fabs(R_sq.to_double()), spread.to_double()));
        if (-og.to_double() <= bound) {
            return Scalar::floating(0.0);
        }
    }
    throw NegativeOG("|OG|^2 = " + og.to_string() + " < 0; R^2 is inconsistent with the edges");
}

std::string_view to_string(Route route) {
    switch (route) {
        case Route::closed: return "closed";
        case Route::determinant: return "determinant";
        case Route::both_agree: return "both-agree";
        case Route::disagree: return "disagree";
    }
    throw std::logic_error("unknown route");
}

bool SimplexMetrics::routes_agree() const noexcept {
    for (const RoutedValue* v : {&rho_sq, &R_sq, &V_sq, &og_sq}) {
        if (v->route == Route::disagree) return false;
    }
    return true;
}

double SimplexMetrics::max_route_delta() const noexcept {
    return std::max({rho_sq.delta, R_sq.delta, V_sq.delta, og_sq.delta});
}

SimplexMetrics compute_metrics(const BalloonRadii& radii, const MetricsOptions& options) {
    const SymmetricSums sums = symmetric_sums(radii);
    require_realizable(sums);
    const EdgeLengthMatrix edges = edges_from_radii(radii);
    const Tolerance& tol = options.tolerance;

    SimplexMetrics m;
    m.n = radii.dimension();
    m.backend = radii.backend();
    m.rho_sq.closed = edge_inradius_sq_closed(sums);
    m.R_sq.closed = circumradius_sq_closed(sums);
    m.V_sq.closed = volume_sq_from_radii(radii, m.rho_sq.closed);
    m.og_sq.closed = og_distance_sq(m.R_sq.closed, edges, tol);
    m.ratio_R_rho_sq = ratio_R_rho_sq(sums);

    if (options.determinant_routes) {
        m.rho_sq.determinant = edge_inradius_sq_det(radii);
        m.R_sq.determinant = circumradius_sq_det(radii);
        m.R_sq.volume = circumradius_sq_vol(edges);
        m.V_sq.determinant = volume_sq_cm(edges);
        m.og_sq.determinant = og_distance_sq(*m.R_sq.determinant, edges, tol);
    }
    const double R_scale = std::fabs(m.R_sq.closed.to_double());
    settle_routes(m.rho_sq, std::fabs(m.rho_sq.closed.to_double()), tol);
    settle_routes(m.R_sq, R_scale, tol);
    settle_routes(m.V_sq, std::fabs(m.V_sq.closed.to_double()), tol);
    // |OG|^2 is a difference of O(R^2) terms; its error is measured against R^2.
    settle_routes(m.og_sq, R_scale, tol);

    if (options.with_inradius) {
        m.inradius = inradius(edges);
    }
    return m;
}

}  // namespace edgetangent
