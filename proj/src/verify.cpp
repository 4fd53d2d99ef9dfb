#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "edgetangent/errors.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent {

namespace {

// Negative beyond tolerance: strictly negative for rationals, below
// -relative*scale for doubles.
bool violates(const Scalar& slack, double scale, const Tolerance& tol) {
    if (slack.is_exact()) return slack.sign() < 0;
    return slack.to_double() < -tol.relative * scale;
}

std::string radii_text(const BalloonRadii& radii) {
    std::string out = "(";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (i) out += ", ";
        out += radii[i].to_string();
    }
    return out + ")";
}

}  // namespace

InstanceReport check_chain(const BalloonRadii& radii, const ChainOptions& options) {
    const Tolerance& tol = options.tolerance;
    const int n = radii.dimension();
    const Backend b = radii.backend();

    SymmetricSums sums = symmetric_sums(radii);
    SimplexMetrics metrics = compute_metrics(radii, {options.determinant_routes, false, tol});

    const Scalar k = Scalar::of(2 * n, n - 1, b);
    const Scalar& R_sq = metrics.R_sq.value();
    const Scalar& rho_sq = metrics.rho_sq.value();
    Scalar slack_left = R_sq - k * rho_sq;
    Scalar slack_right = Scalar::of((n + 1) * (n + 1), b) * metrics.og_sq.value() - slack_left;
    Scalar ratio_floor = sums.X1 * sums.X1 - sums.X2 * sums.X3 - Scalar::of(32 * n * (n - 1), b);

    // The inradius needs square roots, so the Euler-type slacks are always doubles.
    Scalar r;
    try {
        r = inradius(edges_from_radii(radii.to_backend(Backend::floating)));
    } catch (const DegenerateSimplex&) {
        // Too thin for double-precision determinants; exact ones still see it.
        if (b != Backend::exact) throw;
        r = inradius(edges_from_radii(radii));
    }
    metrics.inradius = r;
    const double R = std::sqrt(R_sq.to_double());
    const double rho = std::sqrt(rho_sq.to_double());
    const double nr = n * r.to_double();

    InstanceReport report{radii, sums, metrics, slack_left, slack_right, R - nr,
                          std::sqrt(k.to_double()) * rho - nr, ratio_floor, metrics.max_route_delta(), {}};

    const double scale = std::fabs(R_sq.to_double());
    auto flag = [&](const char* name, const std::string& value) {
        report.violations.push_back(std::string(name) + " = " + value + " < 0 at radii " + radii_text(radii) +
                                    " (R^2 = " + R_sq.to_string() + ", rho^2 = " + rho_sq.to_string() +
                                    ", |OG|^2 = " + metrics.og_sq.value().to_string() + ")");
    };
    if (violates(report.slack_left, scale, tol)) flag("slack_left", report.slack_left.to_string());
    if (violates(report.slack_right, scale, tol)) flag("slack_right", report.slack_right.to_string());
    if (report.slack_euler < -tol.relative * R) flag("slack_euler", std::to_string(report.slack_euler));
    if (report.slack_rho_r < -tol.relative * R) flag("slack_rho_r", std::to_string(report.slack_rho_r));
    if (violates(report.ratio_floor, std::fabs((sums.X1 * sums.X1).to_double()), tol)) {
        flag("ratio_floor", report.ratio_floor.to_string());
    }
    // In the float backend a route disagreement is a precision symptom, not a
    // counterexample; the campaign counts it separately.
    if (b == Backend::exact && !metrics.routes_agree()) {
        report.violations.push_back("route disagreement at radii " + radii_text(radii) + " (max delta " +
                                    std::to_string(metrics.max_route_delta()) + ")");
    }
    return report;
}

const Scalar* ProofBounds::slack(std::string_view name) const {
    for (const BoundCheck& b : bounds) {
        if (b.name == name) return &b.slack;
    }
    return nullptr;
}

std::vector<std::string> ProofBounds::failures(const Tolerance& tol) const {
    std::vector<std::string> failed;
    for (const BoundCheck& b : bounds) {
        if (violates(b.slack, b.scale, tol)) failed.push_back(b.name);
    }
    return failed;
}

ProofBounds check_proof_bounds(const SymmetricSums& s) {
    const int n = s.n;
    const Backend b = s.M.backend();
    auto c = [b](long v) { return Scalar::of(v, b); };
    auto mag = [](const Scalar& v) { return std::fabs(v.to_double()); };

    const Scalar np1 = c(n + 1);
    const Scalar MP = s.M * s.P;
    const Scalar M2 = s.M * s.M;
    const Scalar P2 = s.P * s.P;
    const Scalar X1sq = s.X1 * s.X1;
    const Scalar X2X3 = s.X2 * s.X3;

    ProofBounds pb;
    pb.n = n;
    pb.bounds.push_back({"power_mean_N", s.N - M2 / np1, mag(s.N)});
    pb.bounds.push_back({"power_mean_Q", s.Q - P2 / np1, mag(s.Q)});
    pb.bounds.push_back({"cauchy_MP", MP - np1 * np1, mag(MP)});

    const Scalar cap = c(4) * M2 * P2 / (np1 * np1);
    pb.bounds.push_back({"sums_product_cap", cap - X2X3, std::max(mag(cap), mag(X2X3))});
    pb.bounds.push_back({"ratio_floor", X1sq - X2X3 - c(32L * n * (n - 1)), std::max(mag(X1sq), mag(X2X3))});

    if (n >= 4) {
        const long lead = static_cast<long>(n) * n + 5L * n - 26;
        const Scalar np1_sq = np1 * np1;
        const Scalar center = c(static_cast<long>(n + 2) * (n - 3)) * np1_sq / c(lead);
        const Scalar shifted = MP - center;
        const Scalar first = c(lead) * shifted * shifted;
        const Scalar second = c(4L * (3 * n - 10) * (3 * n - 10)) * np1_sq * np1_sq / c(lead);
        pb.bounds.push_back({"mp_quadratic", first - second, std::max(mag(first), mag(second))});
    }

    const Scalar lhs = c(static_cast<long>(n) * (n + 2)) * X1sq + c(32L * n * (n - 1));
    const Scalar bracket = c(static_cast<long>(n) * n + 10L * n - 8) * M2 -
                           c(static_cast<long>(n - 1) * (n - 2) * (n - 4)) * s.N;
    const Scalar rhs = bracket * s.X2;
    pb.bounds.push_back({"og_reduction", lhs - rhs, std::max(mag(lhs), mag(rhs))});
    return pb;
}

BackendComparison compare_backends(const BalloonRadii& radii, const Tolerance& tol) {
    const MetricsOptions closed_only{false, false, tol};
    const SimplexMetrics exact = compute_metrics(radii.to_backend(Backend::exact), closed_only);
    BackendComparison cmp;
    std::optional<SimplexMetrics> maybe_approx;
    try {
        maybe_approx = compute_metrics(radii.to_backend(Backend::floating), closed_only);
    } catch (const Error& e) {
        // Rounding pushed the float instance across the boundary; count it
        // as a total loss of relative accuracy.
        cmp.max_deviation = 1.0;
        cmp.worst_quantity = e.what();
        cmp.ill_conditioned = true;
        return cmp;
    }
    const SimplexMetrics& approx = *maybe_approx;
    auto consider = [&](const char* name, const Scalar& e, const Scalar& f, double scale) {
        const double ev = e.to_double();
        const double d = scale == 0.0 ? 0.0 : std::fabs(ev - f.to_double()) / scale;
        if (d > cmp.max_deviation || cmp.worst_quantity.empty()) {
            cmp.max_deviation = std::max(cmp.max_deviation, d);
            cmp.worst_quantity = name;
        }
    };
    auto rel_scale = [](const Scalar& e, const Scalar& f) {
        return std::max(std::fabs(e.to_double()), std::fabs(f.to_double()));
    };
    consider("rho_sq", exact.rho_sq.value(), approx.rho_sq.value(), rel_scale(exact.rho_sq.value(), approx.rho_sq.value()));
    consider("R_sq", exact.R_sq.value(), approx.R_sq.value(), rel_scale(exact.R_sq.value(), approx.R_sq.value()));
    consider("V_sq", exact.V_sq.value(), approx.V_sq.value(), rel_scale(exact.V_sq.value(), approx.V_sq.value()));
    consider("ratio_R_rho_sq", exact.ratio_R_rho_sq, approx.ratio_R_rho_sq,
             rel_scale(exact.ratio_R_rho_sq, approx.ratio_R_rho_sq));
    consider("og_sq", exact.og_sq.value(), approx.og_sq.value(), std::fabs(exact.R_sq.value().to_double()));
    cmp.ill_conditioned = cmp.max_deviation > tol.relative;
    return cmp;
}

}  // namespace edgetangent
