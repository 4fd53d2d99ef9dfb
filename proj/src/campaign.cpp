#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "edgetangent/errors.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent {

namespace {

constexpr std::size_t kMaxViolationDetails = 100;

struct InstanceOutcome {
    std::optional<InstanceReport> report;
    std::uint64_t rejections = 0;
    std::vector<std::string> bound_failures;
    BackendComparison backend;
    bool embedding_failed = false;
    double embedding_delta = 0.0;
    std::exception_ptr error;
};

InstanceOutcome run_instance(const CampaignConfig& config, int n, std::size_t index) {
    InstanceOutcome out;
    try {
        const SampledRadii sample =
            random_radii(n, instance_seed(config.seed, n, index), config.profile, config.backend);
        out.rejections = sample.rejections;
        out.backend = compare_backends(sample.radii, config.tolerance);
        // Sampled radii are realizable in exact arithmetic, so a float domain
        // error is a precision failure. Such instances, like those
        // compare_backends flags, cannot certify or refute anything and are
        // only counted as ill-conditioned.
        const bool is_float = config.backend == Backend::floating;
        const bool unreliable = is_float && out.backend.ill_conditioned;
        try {
            out.report = check_chain(sample.radii, {config.oracles, config.tolerance});
        } catch (const Error&) {
            if (!is_float) throw;
            out.backend.ill_conditioned = true;
            return out;
        }
        if (unreliable) {
            out.report->violations.clear();
        } else {
            out.bound_failures = check_proof_bounds(out.report->sums).failures(config.tolerance);
        }

        if (config.oracles) {
            try {
                const auto float_radii = sample.radii.to_backend(Backend::floating);
                const CircumData cd = circumdata_embedded(embed(edges_from_radii(float_radii), config.tolerance));
                const double R_sq = out.report->metrics.R_sq.value().to_double();
                const double og_sq = out.report->metrics.og_sq.value().to_double();
                out.embedding_delta =
                    std::max(relative_difference(cd.R_sq, R_sq), std::fabs(cd.og_sq - og_sq) / R_sq);
            } catch (const NotEmbeddable&) {
                out.embedding_failed = true;
            } catch (const DegenerateSimplex&) {
                out.embedding_failed = true;
            }
        }
    } catch (...) {
        out.error = std::current_exception();
    }
    return out;
}

std::vector<std::string> radii_strings(const BalloonRadii& radii) {
    std::vector<std::string> out;
    for (const Scalar& x : radii.values()) out.push_back(x.to_string());
    return out;
}

void track_min(SlackExtreme& extreme, std::optional<Scalar>& best, const Scalar& value, std::size_t index,
               const BalloonRadii& radii) {
    if (best && !(value < *best)) return;
    best = value;
    extreme.value = value.to_string();
    extreme.approx = value.to_double();
    extreme.index = index;
    extreme.radii = radii_strings(radii);
}

DimensionSummary summarize(int n, std::vector<InstanceOutcome>& outcomes) {
    DimensionSummary s;
    s.n = n;
    std::optional<Scalar> best_left, best_right, best_floor;
    bool first = true;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        InstanceOutcome& o = outcomes[i];
        if (o.error) std::rethrow_exception(o.error);
        ++s.instances;
        s.rejections += o.rejections;
        if (o.backend.ill_conditioned) ++s.ill_conditioned;
        s.worst_backend_deviation = std::max(s.worst_backend_deviation, o.backend.max_deviation);
        if (!o.report) continue;
        const InstanceReport& r = *o.report;

        const bool violated = !r.violations.empty() || !o.bound_failures.empty();
        if (violated) {
            ++s.violations;
            for (const std::string& v : r.violations) {
                if (s.violation_details.size() < kMaxViolationDetails) s.violation_details.push_back(v);
            }
            for (const std::string& b : o.bound_failures) {
                if (s.violation_details.size() < kMaxViolationDetails) {
                    s.violation_details.push_back("proof bound " + b + " fails at instance " + std::to_string(i));
                }
            }
        }
        if (!o.bound_failures.empty()) ++s.proof_bound_failures;
        if (!r.metrics.routes_agree()) ++s.route_disagreements;
        if (o.embedding_failed) ++s.embedding_failures;

        track_min(s.min_slack_left, best_left, r.slack_left, i, r.radii);
        track_min(s.min_slack_right, best_right, r.slack_right, i, r.radii);
        track_min(s.min_ratio_floor, best_floor, r.ratio_floor, i, r.radii);
        if (first) {
            s.min_slack_euler = r.slack_euler;
            s.min_slack_rho_r = r.slack_rho_r;
            first = false;
        } else {
            s.min_slack_euler = std::min(s.min_slack_euler, r.slack_euler);
            s.min_slack_rho_r = std::min(s.min_slack_rho_r, r.slack_rho_r);
        }
        s.worst_oracle_delta = std::max(s.worst_oracle_delta, r.oracle_delta);
        s.worst_embedding_delta = std::max(s.worst_embedding_delta, o.embedding_delta);
    }
    return s;
}

}  // namespace

std::size_t CampaignSummary::total_violations() const noexcept {
    std::size_t total = 0;
    for (const DimensionSummary& d : dimensions) total += d.violations;
    return total;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
    if (config.n_min < 2 || config.n_max < config.n_min) {
        throw std::invalid_argument("campaign dimension range must satisfy 2 <= n_min <= n_max");
    }
    if (config.count == 0) {
        throw std::invalid_argument("campaign count must be at least 1");
    }
    CampaignSummary summary;
    summary.config = config;
    const unsigned workers = std::max(1U, config.workers);

    for (int n = config.n_min; n <= config.n_max; ++n) {
        std::vector<InstanceOutcome> outcomes(config.count);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next.fetch_add(1); i < config.count; i = next.fetch_add(1)) {
                outcomes[i] = run_instance(config, n, i);
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }
        // Reduction runs in index order, so the summary is independent of scheduling.
        summary.dimensions.push_back(summarize(n, outcomes));
    }
    return summary;
}

}  // namespace edgetangent
