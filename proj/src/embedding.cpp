#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "edgetangent/errors.hpp"
#include "edgetangent/verify.hpp"

namespace edgetangent {

double PointConfiguration::distance(std::size_t i, std::size_t j) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double d = points[i][k] - points[j][k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

PointConfiguration embed(const EdgeLengthMatrix& edges, const Tolerance& tol) {
    const int n = edges.dimension();
    auto sq = [&](std::size_t i, std::size_t j) {
        const double a = edges(i, j).to_double();
        return a * a;
    };

    // Gram matrix of the edge vectors from vertex 0.
    Eigen::MatrixXd gram(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            gram(i - 1, j - 1) = 0.5 * (sq(0, i) + sq(0, j) - (i == j ? 0.0 : sq(i, j)));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double smallest = eig.eigenvalues().minCoeff();
    const double largest = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (!(smallest > tol.absolute * largest)) {
        throw NotEmbeddable("Gram matrix is not positive definite (smallest eigenvalue " + std::to_string(smallest) +
                                ")",
                            smallest);
    }

    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) {
        throw NotEmbeddable("Cholesky factorisation of the Gram matrix failed", smallest);
    }
    const Eigen::MatrixXd lower = llt.matrixL();

    PointConfiguration config;
    config.n = n;
    config.points.assign(static_cast<std::size_t>(n) + 1, std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= i; ++k) config.points[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(k)] = lower(i, k);
    }
    return config;
}

CircumData circumdata_embedded(const PointConfiguration& config) {
    const int n = config.n;
    Eigen::MatrixXd lhs(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = config.points[static_cast<std::size_t>(i) + 1];
        double norm_sq = 0.0;
        for (int k = 0; k < n; ++k) {
            lhs(i, k) = 2.0 * p[static_cast<std::size_t>(k)];
            norm_sq += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
        }
        rhs(i) = norm_sq;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);
    if (!lu.isInvertible()) {
        throw DegenerateSimplex("circumcenter system is singular");
    }
    const Eigen::VectorXd center = lu.solve(rhs);

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (const auto& p : config.points) {
        centroid += Eigen::Map<const Eigen::VectorXd>(p.data(), n);
    }
    centroid /= static_cast<double>(n + 1);

    return {center.squaredNorm(), (center - centroid).squaredNorm()};
}

}  // namespace edgetangent
