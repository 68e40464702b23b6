#include "gct/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace gct {

namespace {

constexpr double kTailBound = 1e-12;
// Above this Poisson mean the series start underflows; halve the time instead.
constexpr double kMaxMean = 350.0;

Eigen::MatrixXd generator_as_double(const Generator& g) {
  Eigen::MatrixXd a(g.n, g.n);
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j < g.n; ++j) a(k, j) = to_double(g.at(k, j));
  return a;
}

Eigen::MatrixXd uniformized_exp(const Generator& g, const Rational& t) {
  const int n = g.n;
  if (t == 0) return Eigen::MatrixXd::Identity(n, n);

  double lambda = 0;
  for (int j = 0; j < n; ++j) lambda = std::max(lambda, std::abs(to_double(g.at(j, j))));
  if (lambda == 0) return Eigen::MatrixXd::Identity(n, n);

  const double mean = lambda * to_double(t);
  if (mean > kMaxMean) {
    Eigen::MatrixXd half = uniformized_exp(g, t / 2);
    return half * half;
  }

  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) + generator_as_double(g) / lambda;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double weight = std::exp(-mean);  // Poisson(mean) at 0
  double covered = weight;
  Eigen::MatrixXd sum = weight * power;
  // Hard cap well past the mode; the tail test is the real stop.
  const long max_terms = static_cast<long>(mean + 40.0 * std::sqrt(mean + 10.0) + 60.0);
  for (long k = 1; k <= max_terms && 1.0 - covered > kTailBound; ++k) {
    power = p * power;
    weight *= mean / static_cast<double>(k);
    covered += weight;
    sum.noalias() += weight * power;
  }
  return sum;
}

}  // namespace

Kernel kernel_at(const Generator& g, const Rational& t) {
  if (t < 0) throw std::invalid_argument("kernel_at requires t >= 0");
  if (auto err = validate_generator(g)) throw std::invalid_argument("kernel_at: " + *err);
  return Kernel{uniformized_exp(g, t), t};
}

FinDist<int, double> kernel_column(const Eigen::MatrixXd& p, int j) {
  FinDist<int, double> d;
  for (int k = 0; k < p.rows(); ++k) d.add(k, p(k, j));
  return d;
}

std::optional<std::string> validate_kernel(const Eigen::MatrixXd& p, double eps_mass) {
  if (p.rows() != p.cols()) return "kernel is not square";
  for (int j = 0; j < p.cols(); ++j) {
    double sum = 0;
    for (int k = 0; k < p.rows(); ++k) {
      const double v = p(k, j);
      if (v < -eps_mass || v > 1.0 + eps_mass)
        return "entry (" + std::to_string(k) + "," + std::to_string(j) + ") = " +
               format_double(v) + " outside [0,1]";
      sum += v;
    }
    if (std::abs(sum - 1.0) > eps_mass)
      return "column " + std::to_string(j) + " sums to " + format_double(sum);
  }
  return std::nullopt;
}

}  // namespace gct
