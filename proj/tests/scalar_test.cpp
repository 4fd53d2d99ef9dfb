#include <gtest/gtest.h>

#include <random>

#include "edgetangent/errors.hpp"
#include "edgetangent/scalar.hpp"
#include "oracles.hpp"

using namespace edgetangent;
using oracle::q;

TEST(Scalar, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(Scalar::parse("6/4", Backend::exact).to_string(), "3/2");
    EXPECT_EQ(Scalar::parse("-12", Backend::exact).to_string(), "-12");
    EXPECT_EQ(Scalar::parse("0.1", Backend::exact), q(1, 10));
    EXPECT_EQ(Scalar::parse("1e-3", Backend::exact), q(1, 1000));
    EXPECT_EQ(Scalar::parse("2.5E2", Backend::exact), q(250));
    EXPECT_DOUBLE_EQ(Scalar::parse("0.25", Backend::floating).to_double(), 0.25);
    EXPECT_DOUBLE_EQ(Scalar::parse("1/3", Backend::floating).to_double(), 1.0 / 3.0);
}

TEST(Scalar, RejectsMalformedText) {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1"})
        EXPECT_THROW(Scalar::parse(bad, Backend::exact), Error) << bad;
    EXPECT_THROW(Scalar::parse("nan", Backend::floating), Error);
}

TEST(Scalar, ExactValuesAreCanonical) {
    EXPECT_EQ(q(4, -6).to_string(), "-2/3");
    EXPECT_EQ(q(0, 5).to_string(), "0");
    EXPECT_EQ((q(1, 6) + q(1, 3)).to_string(), "1/2");
}

TEST(Scalar, MixedBackendsThrow) {
    const Scalar a = q(1), b = Scalar::floating(1.0);
    EXPECT_THROW(a + b, BackendMismatch);
    EXPECT_THROW((void)(a == b), BackendMismatch);
    EXPECT_THROW((void)(a < b), BackendMismatch);
    EXPECT_THROW(b.rational(), BackendMismatch);
}

TEST(Scalar, DivisionByZeroThrowsInBothBackends) {
    EXPECT_THROW(q(1) / q(0), DivisionByZero);
    EXPECT_THROW(Scalar::floating(1.0) / Scalar::floating(0.0), DivisionByZero);
}

TEST(Scalar, NonFiniteFloatResultsThrow) {
    EXPECT_THROW(Scalar::floating(1e308) * Scalar::floating(1e308), NonFiniteResult);
    EXPECT_THROW(Scalar::floating(std::nan("")), NonFiniteResult);
}

TEST(Scalar, SquareRoot) {
    EXPECT_EQ(sqrt(Scalar::floating(0.0)).to_double(), 0.0);
    EXPECT_EQ(sqrt(q(25, 4).to_backend(Backend::floating)).to_double(), 2.5);
    EXPECT_NEAR(sqrt(q(3, 2).to_backend(Backend::floating)).to_double(), 1.2247448713915890, 1e-15);
    // Regular tetrahedron, edge 2: R = a sqrt(3/8).
    EXPECT_NEAR(sqrt(q(3, 2).to_backend(Backend::floating)).to_double(), 2.0 * std::sqrt(3.0 / 8.0), 1e-15);
    EXPECT_THROW(sqrt(q(4)), DomainError);
    EXPECT_THROW(sqrt(Scalar::floating(-1.0)), DomainError);
}

TEST(Scalar, ConversionRoundTrips) {
    EXPECT_EQ(q(1, 3).to_double(), 1.0 / 3.0);
    EXPECT_EQ(Scalar::floating(0.1).to_backend(Backend::exact).to_backend(Backend::floating).to_double(), 0.1);
    EXPECT_EQ(Scalar::floating(0.5).to_backend(Backend::exact), q(1, 2));
}

TEST(Scalar, PowSignAbs) {
    EXPECT_EQ(q(-2, 3).pow(3), q(-8, 27));
    EXPECT_EQ(q(7).pow(0), q(1));
    EXPECT_EQ(q(-2, 3).abs(), q(2, 3));
    EXPECT_EQ(q(-2, 3).sign(), -1);
    EXPECT_TRUE(q(0).is_zero());
}

TEST(Scalar, ApproxEqual) {
    const Tolerance tol{1e-9, 1e-12};
    EXPECT_TRUE(approx_equal(Scalar::floating(1.0), Scalar::floating(1.0 + 1e-12), tol));
    EXPECT_FALSE(approx_equal(Scalar::floating(1.0), Scalar::floating(1.0 + 1e-6), tol));
    EXPECT_FALSE(approx_equal(q(1, 3), q(333333333, 1000000000), tol));
}

TEST(ScalarProperty, FieldAxiomsHoldExactly) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto v = oracle::random_rationals(rng, 3);
        Scalar a = Scalar::exact(v[0]), b = Scalar::exact(-v[1]), c = Scalar::exact(v[2]);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(a - a, q(0));
    }
}

TEST(ScalarProperty, OrderingMatchesDoubles) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        auto v = oracle::random_rationals(rng, 2);
        Scalar a = Scalar::exact(v[0]), b = Scalar::exact(v[1]);
        if (v[0] == v[1]) continue;
        EXPECT_EQ(a < b, v[0].get_d() < v[1].get_d());
    }
}
