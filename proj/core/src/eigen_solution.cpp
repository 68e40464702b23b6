#include "gct/eigen_solution.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gct {

namespace {
constexpr double kCondLimit = 1e8;
constexpr double kImagTol = 1e-9;
constexpr double kInverseTol = 1e-8;
}  // namespace

std::optional<EigenSolution> eigen_solution(const Generator& g) {
  const int n = g.n;
  Eigen::MatrixXd a(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) a(k, j) = to_double(g.at(k, j));

  Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) return std::nullopt;

  const auto vals = solver.eigenvalues();
  const auto vecs = solver.eigenvectors();
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    if (std::abs(vals(i).imag()) > kImagTol * scale) return std::nullopt;
    for (int k = 0; k < n; ++k)
      if (std::abs(vecs(k, i).imag()) > kImagTol * scale) return std::nullopt;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return vals(i).real() > vals(j).real(); });

  EigenSolution es;
  es.v.resize(n, n);
  es.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    es.eigenvalues(i) = vals(order[i]).real();
    for (int k = 0; k < n; ++k) es.v(k, i) = vecs(k, order[i]).real();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(es.v);
  const double smin = svd.singularValues()(n - 1);
  if (smin <= 0) return std::nullopt;
  es.cond = svd.singularValues()(0) / smin;
  if (es.cond >= kCondLimit) return std::nullopt;

  es.c = es.v.fullPivLu().solve(Eigen::MatrixXd::Identity(n, n));
  if ((es.v * es.c - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > kInverseTol)
    return std::nullopt;
  return es;
}

Eigen::MatrixXd kernel_from_eigen(const EigenSolution& es, double t) {
  const int n = static_cast<int>(es.eigenvalues.size());
  Eigen::MatrixXd bar = es.c;
  for (int i = 0; i < n; ++i) bar.row(i) *= std::exp(es.eigenvalues(i) * t);
  return es.v * bar;
}

}  // namespace gct
