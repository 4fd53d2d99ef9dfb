#include "edgetangent/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "edgetangent/errors.hpp"

namespace edgetangent {

namespace {

// Correctly rounded when numerator and denominator fit in 53 bits, which covers
// every generated instance; mpq_get_d (truncating) otherwise.
double rational_to_double(const mpq_class& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
        return num.get_d() / den.get_d();
    }
    return q.get_d();
}

mpq_class double_to_rational(double v) {
    if (!std::isfinite(v)) {
        throw NonFiniteResult("cannot convert a non-finite double to a rational");
    }
    mpq_class q(v);  // exact binary value
    q.canonicalize();
    return q;
}

double checked(double v, const char* op) {
    if (!std::isfinite(v)) {
        throw NonFiniteResult(std::string("floating ") + op + " produced a non-finite value");
    }
    return v;
}

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(digits), 10);
}

mpz_class parse_signed_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    mpz_class v = parse_integer(text, whole);
    return negative ? mpz_class(-v) : v;
}

// Decimal with optional fraction and exponent, converted exactly.
mpq_class parse_decimal(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        text = text.substr(0, e);
        mpz_class ez = parse_signed_integer(exp_text, whole);
        if (!ez.fits_slong_p() || abs(ez) > 4096) {
            throw ParseError("exponent out of range in '" + std::string(whole) + "'");
        }
        exponent = ez.get_si();
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw ParseError("malformed number '" + std::string(whole) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        digits = std::string(text);
    }
    mpz_class mantissa = parse_integer(digits, whole);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class q = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(Backend backend) {
    return backend == Backend::exact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") return Backend::exact;
    if (name == "float") return Backend::floating;
    throw ParseError("unknown backend '" + std::string(name) + "'");
}

Scalar::Scalar() : value_(Rational(0)) {}

Scalar::Scalar(std::variant<Rational, double> value) : value_(std::move(value)) {}

Scalar Scalar::exact(long numerator, long denominator) {
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::exact(Rational value) {
    if (value.get_den() == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value.canonicalize();
    return Scalar(std::move(value));
}

Scalar Scalar::floating(double value) {
    return Scalar(checked(value, "construction"));
}

Scalar Scalar::of(long numerator, Backend backend) {
    return of(numerator, 1, backend);
}

Scalar Scalar::of(long numerator, long denominator, Backend backend) {
    Scalar q = exact(numerator, denominator);
    return backend == Backend::exact ? q : q.to_backend(Backend::floating);
}

Scalar Scalar::parse(std::string_view text, Backend backend) {
    text = trim(text);
    if (text.empty()) {
        throw ParseError("empty number");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_signed_integer(trim(text.substr(0, slash)), text);
        mpz_class den = parse_signed_integer(trim(text.substr(slash + 1)), text);
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return exact(Rational(num, den)).to_backend(backend);
    }
    if (backend == Backend::floating) {
        double v = 0.0;
        const char* first = text.data();
        if (text.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw ParseError("malformed number '" + std::string(text) + "'");
        }
        return floating(v);
    }
    return exact(parse_decimal(text));
}

Backend Scalar::backend() const noexcept {
    return std::holds_alternative<Rational>(value_) ? Backend::exact : Backend::floating;
}

const Scalar::Rational& Scalar::rational() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        return *q;
    }
    throw BackendMismatch("rational() called on a floating scalar");
}

double Scalar::to_double() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        return rational_to_double(*q);
    }
    return std::get<double>(value_);
}

Scalar Scalar::to_backend(Backend target) const {
    if (target == backend()) {
        return *this;
    }
    if (target == Backend::floating) {
        return floating(to_double());
    }
    return Scalar(double_to_rational(std::get<double>(value_)));
}

int Scalar::sign() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        return sgn(*q);
    }
    double d = std::get<double>(value_);
    return (d > 0.0) - (d < 0.0);
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

Scalar Scalar::pow(unsigned exponent) const {
    Scalar result = of(1, backend());
    Scalar base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::size_t Scalar::bit_length() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        return std::max(mpz_sizeinbase(q->get_num_mpz_t(), 2), mpz_sizeinbase(q->get_den_mpz_t(), 2));
    }
    return 53;
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        if (q->get_den() == 1) {
            return q->get_num().get_str();
        }
        return q->get_str();
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
    return std::string(buf, ptr);
}

void Scalar::check_same_backend(const Scalar& other, const char* op) const {
    if (value_.index() != other.value_.index()) {
        throw BackendMismatch(std::string("mixed exact/float operands in ") + op);
    }
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<Rational>(&value_)) {
        return Scalar(Rational(-*q));
    }
    return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_backend(rhs, "addition");
    if (auto* q = std::get_if<Rational>(&value_)) {
        *q += std::get<Rational>(rhs.value_);
    } else {
        auto& d = std::get<double>(value_);
        d = checked(d + std::get<double>(rhs.value_), "addition");
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_backend(rhs, "subtraction");
    if (auto* q = std::get_if<Rational>(&value_)) {
        *q -= std::get<Rational>(rhs.value_);
    } else {
        auto& d = std::get<double>(value_);
        d = checked(d - std::get<double>(rhs.value_), "subtraction");
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_backend(rhs, "multiplication");
    if (auto* q = std::get_if<Rational>(&value_)) {
        *q *= std::get<Rational>(rhs.value_);
    } else {
        auto& d = std::get<double>(value_);
        d = checked(d * std::get<double>(rhs.value_), "multiplication");
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_backend(rhs, "division");
    if (rhs.is_zero()) {
        throw DivisionByZero("division by zero");
    }
    if (auto* q = std::get_if<Rational>(&value_)) {
        *q /= std::get<Rational>(rhs.value_);
    } else {
        auto& d = std::get<double>(value_);
        d = checked(d / std::get<double>(rhs.value_), "division");
    }
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    lhs.check_same_backend(rhs, "comparison");
    if (const auto* q = std::get_if<Scalar::Rational>(&lhs.value_)) {
        return *q == std::get<Scalar::Rational>(rhs.value_);
    }
    return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::weak_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
    lhs.check_same_backend(rhs, "comparison");
    if (const auto* q = std::get_if<Scalar::Rational>(&lhs.value_)) {
        int c = cmp(*q, std::get<Scalar::Rational>(rhs.value_));
        return c < 0 ? std::weak_ordering::less : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
    }
    double a = std::get<double>(lhs.value_);
    double b = std::get<double>(rhs.value_);
    return a < b ? std::weak_ordering::less : a > b ? std::weak_ordering::greater : std::weak_ordering::equivalent;
}

Scalar sqrt(const Scalar& value) {
    if (value.is_exact()) {
        throw DomainError("square roots are only available in the floating backend");
    }
    if (value.sign() < 0) {
        throw DomainError("square root of negative value " + value.to_string());
    }
    return Scalar::floating(std::sqrt(value.to_double()));
}

bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol) {
    if (a.backend() != b.backend()) {
        throw BackendMismatch("mixed exact/float operands in approx_equal");
    }
    if (a.is_exact()) {
        return a == b;
    }
    double x = a.to_double();
    double y = b.to_double();
    double bound = std::max(tol.absolute, tol.relative * std::max(std::fabs(x), std::fabs(y)));
    return std::fabs(x - y) <= bound;
}

double relative_difference(double a, double b) {
    double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) {
        return 0.0;
    }
    return std::fabs(a - b) / scale;
}

double relative_difference(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        const auto& x = a.rational();
        const auto& y = b.rational();
        mpq_class scale = std::max(mpq_class(::abs(x)), mpq_class(::abs(y)));
        if (scale == 0) {
            return 0.0;
        }
        mpq_class d = ::abs(mpq_class(x - y)) / scale;
        return rational_to_double(d);
    }
    return relative_difference(a.to_double(), b.to_double());
}

}  // namespace edgetangent
