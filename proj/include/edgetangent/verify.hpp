#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgetangent/metrics.hpp"
#include "edgetangent/scalar.hpp"
#include "edgetangent/simplex.hpp"

namespace edgetangent {

// ---------------------------------------------------------------------------
// Inequality chain

/*
 * Slacks of the inequality chain for one simplex:
 *
 *   0 <= R^2 - 2n/(n-1) rho^2 <= (n+1)^2 |OG|^2        (slack_left, slack_right)
 *   R >= sqrt(2n/(n-1)) rho >= n r                     (slack_euler, slack_rho_r)
 *   X1^2 - X2 X3 >= 32 n (n-1)                          (ratio_floor)
 *
 * Every slack is non-negative on a valid instance. `violations` lists each
 * negative slack with its exact value.
 */
struct InstanceReport {
    BalloonRadii radii;
    SymmetricSums sums;
    SimplexMetrics metrics;
    Scalar slack_left;
    Scalar slack_right;
    double slack_euler = 0.0;   // R - n r
    double slack_rho_r = 0.0;   // sqrt(2n/(n-1)) rho - n r
    Scalar ratio_floor;         // X1^2 - X2 X3 - 32 n (n-1)
    double oracle_delta = 0.0;  // worst relative disagreement across routes
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

struct ChainOptions {
    /// Evaluate the determinant and Cayley-Menger routes as well.
    bool determinant_routes = true;
    Tolerance tolerance;
};

/// Throws NotRealizable for non-realizable radii.
InstanceReport check_chain(const BalloonRadii& radii, const ChainOptions& options = {});

/// One intermediate bound of the inequality proof, as "larger side minus
/// smaller side"; it must be >= 0.
struct BoundCheck {
    std::string name;
    Scalar slack;
    double scale = 1.0;  // magnitude of the compared sides, for float tolerances
};

/*
 * Intermediate bounds behind the inequality chain:
 *   power_mean_N      N - M^2/(n+1)
 *   power_mean_Q      Q - P^2/(n+1)
 *   cauchy_MP         M P - (n+1)^2
 *   sums_product_cap  4 M^2 P^2/(n+1)^2 - X3 X2
 *   ratio_floor       X1^2 - X2 X3 - 32 n (n-1)
 *   mp_quadratic      (n^2+5n-26)(MP - c)^2 - 4(3n-10)^2 (n+1)^4/(n^2+5n-26),
 *                     c = (n+2)(n-3)(n+1)^2/(n^2+5n-26); only for n >= 4
 *   og_reduction      n(n+2) X1^2 + 32n(n-1) - [(n^2+10n-8) M^2 - (n-1)(n-2)(n-4) N] X2
 * og_reduction >= 0 is the upper half of the chain rewritten in the sums.
 */
struct ProofBounds {
    int n = 0;
    std::vector<BoundCheck> bounds;

    /// Slack of the named bound; nullptr when absent (mp_quadratic for n < 4).
    const Scalar* slack(std::string_view name) const;

    /// Names of bounds that fail (exactly, or beyond `tol` relative to scale for floats).
    std::vector<std::string> failures(const Tolerance& tol = {}) const;
    bool all_hold(const Tolerance& tol = {}) const { return failures(tol).empty(); }
};

ProofBounds check_proof_bounds(const SymmetricSums& sums);

// ---------------------------------------------------------------------------
// Coordinate embedding oracle

/// n+1 points in R^n, vertex 0 at the origin. Row i holds vertex i.
struct PointConfiguration {
    int n = 0;
    std::vector<std::vector<double>> points;

    double distance(std::size_t i, std::size_t j) const;
};

/// Builds the Gram matrix G_ij = (a_0i^2 + a_0j^2 - a_ij^2)/2 (i, j >= 1) and
/// takes its Cholesky factor as coordinates. Throws NotEmbeddable when G is
/// not positive definite (pivot below tolerance times the edge scale).
PointConfiguration embed(const EdgeLengthMatrix& edges, const Tolerance& tol = {});

struct CircumData {
    double R_sq = 0.0;
    double og_sq = 0.0;
};

/// Circumcenter from 2 p_i . c = |p_i|^2 (p_0 = 0), centroid as the mean.
/// Throws DegenerateSimplex on a singular system.
CircumData circumdata_embedded(const PointConfiguration& points);

// ---------------------------------------------------------------------------
// Instance generation

enum class Profile { uniform, log_uniform, near_boundary };

std::string_view to_string(Profile profile);
Profile parse_profile(std::string_view name);

struct SampledRadii {
    BalloonRadii radii;
    std::uint64_t rejections = 0;
};

/// Deterministic in (n, seed, profile). Radii are rationals with small
/// denominators (converted to double for the floating backend):
///   uniform       x_i in [1/2, 2]
///   log_uniform   log x_i uniform, x_i in [1/10, 10]
///   near_boundary x_0 solved so that P^2 - (n-1)Q lands in (0, 1/100); n >= 3
/// Throws SamplingBudgetExhausted after 10^6 draws.
SampledRadii random_radii(int n, std::uint64_t seed, Profile profile, Backend backend = Backend::exact);

/// Seed of instance `index` of dimension `n` within a campaign.
std::uint64_t instance_seed(std::uint64_t campaign_seed, int n, std::uint64_t index);

// ---------------------------------------------------------------------------
// Backend comparison

struct BackendComparison {
    double max_deviation = 0.0;
    std::string worst_quantity;
    bool ill_conditioned = false;
};

/// Closed-form metrics in both backends; deviation is relative, except for
/// |OG|^2 which is measured against R^2.
BackendComparison compare_backends(const BalloonRadii& radii, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Campaigns

struct CampaignConfig {
    int n_min = 2;
    int n_max = 8;
    std::size_t count = 1000;
    std::uint64_t seed = 42;
    Profile profile = Profile::uniform;
    Backend backend = Backend::exact;
    unsigned workers = 1;
    /// Determinant routes and the embedding oracle on every instance.
    bool oracles = true;
    Tolerance tolerance;
};

/// Extreme value of a slack across a campaign, kept with its instance.
struct SlackExtreme {
    std::string value;  // exact text for rationals
    double approx = 0.0;
    std::size_t index = 0;
    std::vector<std::string> radii;
};

struct DimensionSummary {
    int n = 0;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::size_t proof_bound_failures = 0;
    std::size_t route_disagreements = 0;
    std::size_t ill_conditioned = 0;
    std::size_t embedding_failures = 0;
    std::uint64_t rejections = 0;
    SlackExtreme min_slack_left;
    SlackExtreme min_slack_right;
    SlackExtreme min_ratio_floor;
    double min_slack_euler = 0.0;
    double min_slack_rho_r = 0.0;
    double worst_oracle_delta = 0.0;
    double worst_embedding_delta = 0.0;
    double worst_backend_deviation = 0.0;
    std::vector<std::string> violation_details;
};

struct CampaignSummary {
    CampaignConfig config;
    std::vector<DimensionSummary> dimensions;

    std::size_t total_violations() const noexcept;
};

/// Runs check_chain, check_proof_bounds, backend comparison and (optionally)
/// the oracles on `count` instances per dimension. Results depend only on
/// the configuration, never on the worker count.
CampaignSummary run_campaign(const CampaignConfig& config);

}  // namespace edgetangent
