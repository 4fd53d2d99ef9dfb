#include "edgetangent/simplex.hpp"

#include <string>
#include <utility>

#include "edgetangent/errors.hpp"

namespace edgetangent {

BalloonRadii::BalloonRadii(std::vector<Scalar> x) : x_(std::move(x)) {
    if (x_.size() < 3) {
        throw InvalidRadii("balloon radii need n >= 2, i.e. at least 3 values; got " + std::to_string(x_.size()));
    }
    const Backend b = x_.front().backend();
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i].backend() != b) {
            throw InvalidRadii("balloon radii mix exact and float backends");
        }
        if (x_[i].sign() <= 0) {
            throw InvalidRadii("balloon radius x" + std::to_string(i) + " = " + x_[i].to_string() +
                               " is not positive");
        }
    }
}

BalloonRadii BalloonRadii::to_backend(Backend backend) const {
    std::vector<Scalar> converted;
    converted.reserve(x_.size());
    for (const Scalar& s : x_) converted.push_back(s.to_backend(backend));
    return BalloonRadii(std::move(converted));
}

EdgeLengthMatrix::EdgeLengthMatrix(SquareMatrix a) : a_(std::move(a)) {
    const std::size_t order = a_.order();
    if (order < 2) {
        throw InvalidEdges("an edge matrix needs at least two vertices");
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (!a_(i, i).is_zero()) {
            throw InvalidEdges("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is " +
                               a_(i, i).to_string() + ", expected 0");
        }
        for (std::size_t j = i + 1; j < order; ++j) {
            if (!(a_(i, j) == a_(j, i))) {
                throw InvalidEdges("edge matrix is not symmetric at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
            }
            if (a_(i, j).sign() <= 0) {
                throw InvalidEdges("edge (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                   a_(i, j).to_string() + " is not positive");
            }
        }
    }
}

SquareMatrix EdgeLengthMatrix::squared() const {
    std::vector<Scalar> sq;
    sq.reserve(a_.entries().size());
    for (const Scalar& s : a_.entries()) sq.push_back(s * s);
    return SquareMatrix(a_.order(), std::move(sq));
}

EdgeLengthMatrix EdgeLengthMatrix::facet(std::size_t omitted) const {
    const std::size_t order = a_.order();
    std::vector<Scalar> sub;
    sub.reserve((order - 1) * (order - 1));
    for (std::size_t i = 0; i < order; ++i) {
        if (i == omitted) continue;
        for (std::size_t j = 0; j < order; ++j) {
            if (j == omitted) continue;
            sub.push_back(a_(i, j));
        }
    }
    return EdgeLengthMatrix(SquareMatrix(order - 1, std::move(sub)));
}

EdgeLengthMatrix EdgeLengthMatrix::to_backend(Backend backend) const {
    return EdgeLengthMatrix(a_.to_backend(backend));
}

EdgeLengthMatrix edges_from_radii(const BalloonRadii& radii) {
    const std::size_t order = radii.size();
    std::vector<Scalar> a;
    a.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            a.push_back(i == j ? Scalar::of(0, radii.backend()) : radii[i] + radii[j]);
        }
    }
    return EdgeLengthMatrix(SquareMatrix(order, std::move(a)));
}

BalloonRadii radii_from_edges(const EdgeLengthMatrix& edges, const Tolerance& tol) {
    const int n = edges.dimension();
    if (n < 2) {
        throw InvalidEdges("balloon radii are defined for n >= 2");
    }
    const Backend b = edges.backend();
    const std::size_t order = static_cast<std::size_t>(n) + 1;

    Scalar total = Scalar::of(0, b);
    std::vector<Scalar> row_sums(order, Scalar::of(0, b));
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            if (i == j) continue;
            row_sums[i] += edges(i, j);
            if (i < j) total += edges(i, j);
        }
    }

    const Scalar scale = Scalar::of(n * (n - 1), b);
    const Scalar nn = Scalar::of(n, b);
    std::vector<Scalar> x;
    x.reserve(order);
    for (std::size_t i = 0; i < order; ++i) x.push_back((nn * row_sums[i] - total) / scale);

    // x is overdetermined by the edges, so reconstruction is the circumscriptibility test.
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            const Scalar rebuilt = x[i] + x[j];
            if (!approx_equal(rebuilt, edges(i, j), tol)) {
                throw NotCircumscriptible("edge (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                              edges(i, j).to_string() + " but x" + std::to_string(i) + " + x" +
                                              std::to_string(j) + " = " + rebuilt.to_string(),
                                          i, j);
            }
        }
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (x[i].sign() <= 0) {
            throw NotCircumscriptible(
                "recovered balloon radius x" + std::to_string(i) + " = " + x[i].to_string() + " is not positive", i, i);
        }
    }
    return BalloonRadii(std::move(x));
}

SymmetricSums symmetric_sums(const BalloonRadii& radii) {
    const Backend b = radii.backend();
    const int n = radii.dimension();
    SymmetricSums s;
    s.n = n;
    s.M = s.N = s.P = s.Q = Scalar::of(0, b);
    const Scalar one = Scalar::of(1, b);
    for (const Scalar& x : radii.values()) {
        const Scalar inv = one / x;
        s.M += x;
        s.N += x * x;
        s.P += inv;
        s.Q += inv * inv;
    }
    const Scalar n_minus_1 = Scalar::of(n - 1, b);
    s.X1 = s.M * s.P - Scalar::of((n - 1) * (n - 3), b);
    s.X2 = s.P * s.P - n_minus_1 * s.Q;
    s.X3 = s.M * s.M - n_minus_1 * s.N;
    return s;
}

Realizability is_realizable(const SymmetricSums& sums) {
    return {sums.X2.sign() > 0, sums.X2};
}

Realizability is_realizable(const BalloonRadii& radii) {
    return is_realizable(symmetric_sums(radii));
}

}  // namespace edgetangent
