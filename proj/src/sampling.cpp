#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "edgetangent/errors.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent {

namespace {

constexpr std::uint64_t kDrawBudget = 1'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// SplitMix64 stream. Hand-rolled distributions keep draws identical across
// standard libraries.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    long integer(long lo, long hi) {
        __extension__ using wide = unsigned __int128;
        const auto span = static_cast<wide>(hi - lo + 1);
        return lo + static_cast<long>((static_cast<wide>(next()) * span) >> 64);
    }

private:
    std::uint64_t state_;
};

Scalar rational_in(Stream& rng, double value, long min_den, long max_den, double lo, double hi) {
    const long q = rng.integer(min_den, max_den);
    const auto p_min = static_cast<long>(std::ceil(lo * static_cast<double>(q)));
    const auto p_max = static_cast<long>(std::floor(hi * static_cast<double>(q)));
    long p = std::lround(value * static_cast<double>(q));
    p = std::clamp(p, p_min, p_max);
    return Scalar::exact(p, q);
}

Scalar draw_radius(Stream& rng, Profile profile) {
    if (profile == Profile::log_uniform) {
        const double v = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
        return rational_in(rng, v, 10, 100, 0.1, 10.0);
    }
    return rational_in(rng, rng.uniform(0.5, 2.0), 1, 60, 0.5, 2.0);
}

}  // namespace

std::string_view to_string(Profile profile) {
    switch (profile) {
        case Profile::uniform: return "uniform";
        case Profile::log_uniform: return "log-uniform";
        case Profile::near_boundary: return "near-boundary";
    }
    throw std::logic_error("unknown profile");
}

Profile parse_profile(std::string_view name) {
    if (name == "uniform") return Profile::uniform;
    if (name == "log-uniform") return Profile::log_uniform;
    if (name == "near-boundary") return Profile::near_boundary;
    throw ParseError("unknown profile '" + std::string(name) + "'");
}

std::uint64_t instance_seed(std::uint64_t campaign_seed, int n, std::uint64_t index) {
    std::uint64_t h = splitmix64(campaign_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    return splitmix64(h ^ index);
}

SampledRadii random_radii(int n, std::uint64_t seed, Profile profile, Backend backend) {
    if (n < 2) {
        throw std::invalid_argument("random_radii needs n >= 2");
    }
    if (profile == Profile::near_boundary && n < 3) {
        throw std::invalid_argument("near-boundary sampling needs n >= 3: every positive triple is realizable");
    }
    Stream rng(seed);
    const auto count = static_cast<std::size_t>(n) + 1;
    const Scalar margin_cap = Scalar::exact(1, 100);

    for (std::uint64_t draw = 0; draw < kDrawBudget; ++draw) {
        std::vector<Scalar> x(count);
        const std::size_t first_free = profile == Profile::near_boundary ? 1 : 0;
        for (std::size_t i = first_free; i < count; ++i) {
            x[i] = draw_radius(rng, profile == Profile::near_boundary ? Profile::uniform : profile);
        }

        if (profile == Profile::near_boundary) {
            // margin(t) = -(n-2) t^2 + 2 P' t + P'^2 - (n-1) Q' with t = 1/x_0 and
            // P', Q' the sums over the other radii. Step inside the larger root t*
            // by delta; the margin there is about 2 S delta with S = sqrt(disc).
            double p_rest = 0.0;
            double q_rest = 0.0;
            for (std::size_t i = 1; i < count; ++i) {
                const double inv = 1.0 / x[i].to_double();
                p_rest += inv;
                q_rest += inv * inv;
            }
            const double disc = (n - 1) * (p_rest * p_rest - (n - 2) * q_rest);
            // Log-uniform over seven decades so the float backend meets genuinely
            // ill-conditioned instances near the small end.
            const double target = std::pow(10.0, rng.uniform(-9.0, -2.0));
            if (disc <= 0.0) continue;
            const double s = std::sqrt(disc);
            const double t = (p_rest + s) / (n - 2) - target / (2.0 * s);
            const double x0 = 1.0 / t;
            constexpr double kGrid = 0x1.0p60;
            x[0] = Scalar::exact(mpq_class(mpz_class(static_cast<long>(std::llround(x0 * kGrid))), mpz_class(1) << 60));
            if (x[0].sign() <= 0) continue;
            const BalloonRadii radii(std::move(x));
            const Realizability r = is_realizable(radii);
            if (!r.realizable || !(r.margin < margin_cap)) continue;
            return {radii.to_backend(backend), draw};
        }

        BalloonRadii radii(std::move(x));
        if (!is_realizable(radii).realizable) continue;
        return {radii.to_backend(backend), draw};
    }
    throw SamplingBudgetExhausted("no realizable radii after " + std::to_string(kDrawBudget) + " draws (n=" +
                                  std::to_string(n) + ", profile " + std::string(to_string(profile)) + ")");
}

}  // namespace edgetangent
