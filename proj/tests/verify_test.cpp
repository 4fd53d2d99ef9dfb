#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "edgetangent/errors.hpp"
#include "edgetangent/verify.hpp"
#include "oracles.hpp"

using namespace edgetangent;
using oracle::q;

namespace {

EdgeLengthMatrix triangle_345(Backend backend = Backend::exact) {
    return EdgeLengthMatrix(SquareMatrix::from_integers({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}}, backend));
}

// Smallest eigenvalue of the Gram matrix anchored at vertex 0, via Eigen.
double smallest_gram_eigenvalue(const EdgeLengthMatrix& e) {
    const int n = e.dimension();
    Eigen::MatrixXd g(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            double a0i = e(0, i).to_double(), a0j = e(0, j).to_double(), aij = e(i, j).to_double();
            g(i - 1, j - 1) = (a0i * a0i + a0j * a0j - aij * aij) / 2;
        }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff();
}

}  // namespace

TEST(CheckChain, TriangleExample) {
    auto rep = check_chain(oracle::radii({1, 2, 3}));
    EXPECT_EQ(rep.slack_left, q(9, 4));
    EXPECT_EQ(rep.slack_right, q(4));
    EXPECT_EQ(rep.ratio_floor, q(36));
    EXPECT_TRUE(rep.ok());
    // R = 5/2, n r = 2, sqrt(4) rho = 2.
    EXPECT_NEAR(rep.slack_euler, 0.5, 1e-12);
    EXPECT_NEAR(rep.slack_rho_r, 0.0, 1e-12);
}

TEST(CheckChain, EqualRadiiAttainEquality) {
    for (int n = 2; n <= 8; ++n) {
        auto rep = check_chain(oracle::equal_radii(n, 7, 4));
        EXPECT_EQ(rep.slack_left, q(0)) << n;
        EXPECT_EQ(rep.slack_right, q(0)) << n;
        EXPECT_EQ(rep.ratio_floor, q(0)) << n;
        EXPECT_NEAR(rep.slack_euler, 0.0, 1e-9) << n;
        EXPECT_TRUE(rep.ok());
    }
}

TEST(CheckChain, NonRealizableThrows) {
    EXPECT_THROW(check_chain(BalloonRadii({q(1, 10), q(1), q(1), q(1)})), NotRealizable);
}

TEST(CheckChainProperty, SlacksVanishOnlyAtEqualRadii) {
    std::mt19937_64 rng(51);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            auto x = oracle::random_realizable(rng, n);
            bool all_equal = std::all_of(x.begin(), x.end(), [&](const mpq_class& v) { return v == x[0]; });
            auto rep = check_chain(oracle::to_radii(x), {false, {}});
            EXPECT_TRUE(rep.ok());
            EXPECT_GE(rep.slack_left.sign(), 0);
            EXPECT_GE(rep.slack_right.sign(), 0);
            EXPECT_EQ(rep.slack_left.is_zero(), all_equal);
            EXPECT_EQ(rep.slack_right.is_zero(), all_equal);
        }
}

TEST(ProofBounds, TriangleExample) {
    auto b = check_proof_bounds(symmetric_sums(oracle::radii({1, 2, 3})));
    ASSERT_NE(b.slack("ratio_floor"), nullptr);
    EXPECT_EQ(*b.slack("ratio_floor"), q(36));
    EXPECT_EQ(b.slack("mp_quadratic"), nullptr);
    EXPECT_TRUE(b.all_hold());
}

TEST(ProofBounds, EqualRadiiAreTight) {
    for (int n = 2; n <= 8; ++n) {
        auto b = check_proof_bounds(symmetric_sums(oracle::equal_radii(n)));
        EXPECT_EQ(*b.slack("power_mean_N"), q(0));
        EXPECT_EQ(*b.slack("power_mean_Q"), q(0));
        EXPECT_EQ(*b.slack("cauchy_MP"), q(0));
        EXPECT_EQ(*b.slack("ratio_floor"), q(0));
        EXPECT_EQ(*b.slack("og_reduction"), q(0));
        EXPECT_EQ(b.slack("mp_quadratic") != nullptr, n >= 4);
    }
}

TEST(ProofBoundsProperty, HoldOnRandomRealizableRadii) {
    std::mt19937_64 rng(52);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            auto b = check_proof_bounds(symmetric_sums(oracle::to_radii(oracle::random_realizable(rng, n))));
            EXPECT_TRUE(b.all_hold()) << "n=" << n << " failing " << (b.failures().empty() ? "" : b.failures()[0]);
        }
}

TEST(Embed, TriangleDistances) {
    auto p = embed(triangle_345());
    EXPECT_EQ(p.n, 2);
    EXPECT_NEAR(p.distance(0, 1), 3.0, 1e-12);
    EXPECT_NEAR(p.distance(0, 2), 4.0, 1e-12);
    EXPECT_NEAR(p.distance(1, 2), 5.0, 1e-12);
    for (double c : p.points[0]) EXPECT_EQ(c, 0.0);
}

TEST(Embed, RegularTetrahedron) {
    auto p = embed(edges_from_radii(oracle::equal_radii(3)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(p.distance(i, j), 2.0, 1e-12);
}

TEST(Embed, BoundaryAndBeyondAreNotEmbeddable) {
    const double eps = (2.0 * std::sqrt(3.0) - 3.0) / 3.0;
    auto boundary = edges_from_radii(BalloonRadii(
        {Scalar::floating(eps), Scalar::floating(1.0), Scalar::floating(1.0), Scalar::floating(1.0)}));
    EXPECT_LT(std::abs(smallest_gram_eigenvalue(boundary)), 1e-9);
    EXPECT_THROW(embed(boundary), NotEmbeddable);
    EXPECT_THROW(embed(edges_from_radii(BalloonRadii({q(1, 10), q(1), q(1), q(1)}))), NotEmbeddable);
}

TEST(CircumdataEmbedded, Examples) {
    auto c = circumdata_embedded(embed(triangle_345()));
    EXPECT_NEAR(c.R_sq, 6.25, 1e-12);
    EXPECT_NEAR(c.og_sq, 25.0 / 36.0, 1e-12);
    for (int n = 2; n <= 7; ++n)
        EXPECT_NEAR(circumdata_embedded(embed(edges_from_radii(oracle::equal_radii(n)))).og_sq, 0.0, 1e-12);
}

TEST(CircumdataEmbedded, MatchesFormulaRoutes) {
    auto r = oracle::radii({1, 1, 1, 2});
    auto m = compute_metrics(r);
    auto c = circumdata_embedded(embed(edges_from_radii(r)));
    EXPECT_NEAR(c.R_sq, m.R_sq.value().to_double(), 1e-9 * c.R_sq);
    EXPECT_NEAR(c.og_sq, m.og_sq.value().to_double(), 1e-9 * c.R_sq);
}

TEST(EmbedProperty, EmbeddabilityMatchesMarginTest) {
    std::mt19937_64 rng(53);
    int realizable = 0, rejected = 0;
    for (int n = 3; n <= 6; ++n)
        for (int trial = 0; trial < 400; ++trial) {
            auto r = oracle::to_radii(oracle::random_rationals(rng, n + 1));
            auto real = is_realizable(r);
            // Skip the thin shell where the float Gram test and the exact margin
            // may legitimately disagree.
            double scale = symmetric_sums(r).P.to_double();
            if (std::abs(real.margin.to_double()) < 1e-6 * scale * scale) continue;
            bool embedded = true;
            try {
                embed(edges_from_radii(r));
            } catch (const NotEmbeddable&) {
                embedded = false;
            }
            EXPECT_EQ(embedded, real.realizable) << "n=" << n;
            (real.realizable ? realizable : rejected)++;
        }
    EXPECT_GT(realizable, 0);
    EXPECT_GT(rejected, 0);
}

TEST(RandomRadii, DeterministicPerSeed) {
    auto a = random_radii(3, 7, Profile::uniform);
    auto b = random_radii(3, 7, Profile::uniform);
    EXPECT_EQ(a.radii, b.radii);
    EXPECT_EQ(a.rejections, b.rejections);
    EXPECT_FALSE(random_radii(3, 8, Profile::uniform).radii == a.radii);
}

TEST(RandomRadii, ProfilesStayInRange) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto u = random_radii(4, seed, Profile::uniform).radii;
        auto l = random_radii(4, seed, Profile::log_uniform).radii;
        for (std::size_t i = 0; i < u.size(); ++i) {
            EXPECT_GE(u[i], q(1, 2));
            EXPECT_LE(u[i], q(2));
            EXPECT_GE(l[i], q(1, 10));
            EXPECT_LE(l[i], q(10));
        }
        EXPECT_TRUE(is_realizable(u).realizable);
        EXPECT_TRUE(is_realizable(l).realizable);
    }
}

TEST(RandomRadii, TrianglesNeverReject) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) EXPECT_EQ(random_radii(2, seed, Profile::uniform).rejections, 0u);
}

TEST(RandomRadii, NearBoundaryMarginIsSmallAndPositive) {
    for (int n = 3; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto m = is_realizable(random_radii(n, seed, Profile::near_boundary).radii).margin;
            EXPECT_GT(m, q(0));
            EXPECT_LT(m, q(1, 100));
        }
    EXPECT_THROW(random_radii(2, 1, Profile::near_boundary), std::invalid_argument);
}

TEST(RandomRadii, FloatBackendMatchesExactDraw) {
    auto e = random_radii(5, 9, Profile::log_uniform, Backend::exact).radii;
    auto f = random_radii(5, 9, Profile::log_uniform, Backend::floating).radii;
    EXPECT_EQ(e.to_backend(Backend::floating), f);
}

TEST(Profile, NamesRoundTrip) {
    for (auto p : {Profile::uniform, Profile::log_uniform, Profile::near_boundary})
        EXPECT_EQ(parse_profile(to_string(p)), p);
    EXPECT_THROW(parse_profile("gaussian"), Error);
}

TEST(CompareBackends, SmallIntegersAreExact) {
    auto c = compare_backends(oracle::radii({1, 2, 3}));
    EXPECT_LT(c.max_deviation, 1e-15);
    EXPECT_FALSE(c.ill_conditioned);
}

TEST(CompareBackends, UniformInstancesAreWellConditioned) {
    for (int n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed)
            EXPECT_LT(compare_backends(random_radii(n, seed, Profile::uniform).radii).max_deviation, 1e-9);
}

TEST(Campaign, SmallRunIsCleanAndReproducible) {
    CampaignConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 5;
    cfg.count = 50;
    cfg.seed = 3;
    auto a = run_campaign(cfg);
    cfg.workers = 4;
    auto b = run_campaign(cfg);
    ASSERT_EQ(a.dimensions.size(), 4u);
    EXPECT_EQ(a.total_violations(), 0u);
    for (std::size_t k = 0; k < a.dimensions.size(); ++k) {
        const auto& da = a.dimensions[k];
        const auto& db = b.dimensions[k];
        EXPECT_EQ(da.instances, 50u);
        EXPECT_EQ(da.proof_bound_failures, 0u);
        EXPECT_EQ(da.route_disagreements, 0u);
        EXPECT_EQ(da.min_slack_left.value, db.min_slack_left.value);
        EXPECT_EQ(da.min_slack_right.index, db.min_slack_right.index);
        EXPECT_EQ(da.worst_embedding_delta, db.worst_embedding_delta);
        EXPECT_LT(da.worst_embedding_delta, 1e-9);
    }
}

TEST(Campaign, NearBoundaryFlagsIllConditionedInstances) {
    CampaignConfig cfg;
    cfg.n_min = cfg.n_max = 3;
    cfg.count = 200;
    cfg.profile = Profile::near_boundary;
    auto s = run_campaign(cfg);
    EXPECT_EQ(s.total_violations(), 0u);
    EXPECT_GT(s.dimensions[0].ill_conditioned, 0u);
}
