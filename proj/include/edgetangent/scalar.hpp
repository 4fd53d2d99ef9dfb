#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace edgetangent {

enum class Backend { exact, floating };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view name);

/// Comparison tolerance for the floating backend. The exact backend ignores it.
struct Tolerance {
    double relative = 1e-9;
    double absolute = 1e-12;
};

/*
 * Element of an ordered field, carried either as an exact rational (GMP mpq,
 * always canonical: positive denominator, lowest terms) or as an IEEE double.
 *
 * Binary operations require both operands to share a backend and throw
 * BackendMismatch otherwise. Floating operations that would yield NaN or an
 * infinity throw NonFiniteResult; division by zero throws DivisionByZero in
 * both backends.
 */
class Scalar {
public:
    using Rational = mpq_class;

    /// Exact zero.
    Scalar();

    static Scalar exact(long numerator, long denominator = 1);
    static Scalar exact(Rational value);
    static Scalar floating(double value);

    /// Integer or fraction p/q in the requested backend.
    static Scalar of(long numerator, Backend backend);
    static Scalar of(long numerator, long denominator, Backend backend);

    /// Parses "p/q", an integer, or a decimal ("0.25", "1e-3"). Decimals are
    /// converted exactly when the target is the exact backend.
    static Scalar parse(std::string_view text, Backend backend);

    Backend backend() const noexcept;
    bool is_exact() const noexcept { return backend() == Backend::exact; }

    /// Underlying rational; throws BackendMismatch for floating scalars.
    const Rational& rational() const;
    double to_double() const;

    /// Same value in another backend. Doubles convert to their exact binary rational.
    Scalar to_backend(Backend backend) const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }

    Scalar abs() const;
    Scalar pow(unsigned exponent) const;

    /// Max of numerator and denominator bit length; 53 for doubles.
    std::size_t bit_length() const;

    /// "p/q" (or "p" when the denominator is 1) for exact values; shortest
    /// round-trip decimal for doubles.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Value comparison; mixed backends throw.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend std::weak_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

private:
    explicit Scalar(std::variant<Rational, double> value);
    void check_same_backend(const Scalar& other, const char* op) const;

    std::variant<Rational, double> value_;
};

/// Non-negative square root; floating backend only.
Scalar sqrt(const Scalar& value);

/// Exact equality for rationals; |a-b| <= max(absolute, relative*max(|a|,|b|)) for doubles.
bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol = {});

/// |a-b| / max(|a|,|b|), zero when both vanish. Computed in double precision.
double relative_difference(double a, double b);
double relative_difference(const Scalar& a, const Scalar& b);

}  // namespace edgetangent
