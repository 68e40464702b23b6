#include "model_oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {
namespace {

// Two-state eigendata over (down, up): stationary column and the difference
// mode.  v1 * diag(0, -s) * c1 is the generator [[-mu, lam], [mu, -lam]].
Eigen::Matrix2d two_state_v(double lam, double mu) {
  Eigen::Matrix2d v;
  v << lam, 1, mu, -1;
  return v;
}

Eigen::Matrix2d two_state_c(double lam, double mu) {
  double s = lam + mu;
  Eigen::Matrix2d c;
  c << 1 / s, 1 / s, mu / s, -lam / s;
  return c;
}

Eigen::Matrix2d two_state_kernel(double lam, double mu, double t) {
  Eigen::Matrix2d p;
  p << 1 - up_given_down(lam, mu, t), 1 - up_given_up(lam, mu, t),
       up_given_down(lam, mu, t), up_given_up(lam, mu, t);
  return p;
}

// Model states (0, L, R, 2) against pair states (c1, c2), c = 0 down / 1 up,
// with pair index 2*c1 + c2: L = (1,0), R = (0,1).
constexpr int kPairIndex[4] = {0, 2, 1, 3};

}  // namespace

double up_given_up(double lam, double mu, double t) {
  double s = lam + mu;
  return (mu + lam * std::exp(-s * t)) / s;
}

double up_given_down(double lam, double mu, double t) {
  double s = lam + mu;
  return mu * (1 - std::exp(-s * t)) / s;
}

EigenData repairable4_eigendata(double lam, double mu) {
  double s = lam + mu;
  Eigen::Matrix2d v1 = two_state_v(lam, mu);
  Eigen::Matrix2d c1 = two_state_c(lam, mu);
  Eigen::Vector2d l1(0, -s);

  EigenData out;
  out.v = Eigen::MatrixXd(4, 4);
  out.c = Eigen::MatrixXd(4, 4);
  out.lambda = Eigen::VectorXd(4);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int e2 = 0; e2 < 2; ++e2) {
      int e = 2 * e1 + e2;
      out.lambda(e) = l1(e1) + l1(e2);
      for (int i = 0; i < 4; ++i) {
        int p = kPairIndex[i];
        out.v(i, e) = v1(p / 2, e1) * v1(p % 2, e2);
        out.c(e, i) = c1(e1, p / 2) * c1(e2, p % 2);
      }
    }
  return out;
}

EigenData repairable3_eigendata(double lam, double mu) {
  double s = lam + mu;
  EigenData out;
  out.lambda = Eigen::VectorXd(3);
  out.lambda << 0, -s, -2 * s;
  out.v = Eigen::MatrixXd(3, 3);
  out.v << lam * lam, lam, 1,
           2 * lam * mu, mu - lam, -2,
           mu * mu, -mu, 1;
  out.c = out.v.inverse();
  return out;
}

Eigen::MatrixXd repairable4_kernel(double lam, double mu, double t) {
  Eigen::Matrix2d p1 = two_state_kernel(lam, mu, t);
  Eigen::MatrixXd p(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int pi = kPairIndex[i], pj = kPairIndex[j];
      p(i, j) = p1(pi / 2, pj / 2) * p1(pi % 2, pj % 2);
    }
  return p;
}

Eigen::MatrixXd repairable3_kernel(double lam, double mu, double t) {
  double uu = up_given_up(lam, mu, t);
  double ud = up_given_down(lam, mu, t);
  Eigen::MatrixXd p(3, 3);
  // column: source 0 = both down
  p(0, 0) = (1 - ud) * (1 - ud);
  p(1, 0) = 2 * ud * (1 - ud);
  p(2, 0) = ud * ud;
  // source 1 = one of each
  p(0, 1) = (1 - uu) * (1 - ud);
  p(1, 1) = uu * (1 - ud) + ud * (1 - uu);
  p(2, 1) = uu * ud;
  // source 2 = both up
  p(0, 2) = (1 - uu) * (1 - uu);
  p(1, 2) = 2 * uu * (1 - uu);
  p(2, 2) = uu * uu;
  return p;
}

gct::FinDist<int, gct::Rational> cycle_walk_paths(int n, std::uint64_t steps, int start) {
  if (steps > 20) throw std::invalid_argument("path enumeration capped at 2^20");
  gct::FinDist<int, gct::Rational> out;
  gct::Rational w = gct::rat(1, std::int64_t(1) << steps);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << steps); ++bits) {
    int pos = start;
    for (std::uint64_t i = 0; i < steps; ++i)
      pos = ((bits >> i) & 1) ? (pos + 1) % n : (pos + n - 1) % n;
    out.add(pos, w);
  }
  return out;
}

}  // namespace oracle
